#pragma once

#include <stdexcept>
#include <string>

namespace adr {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad graph, unknown name, non-closed formula, bad maps.
class InputError : public Error {
public:
    using Error::Error;
};

/// A post-condition contains a construct the transformers cannot handle
/// (edge-absence literals, explicit negation or `false` leaves).
class FragmentError : public Error {
public:
    using Error::Error;
};

} // namespace adr
