#pragma once

#include "adr/dsl.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace adr::testing {

inline std::string fixture_path(const std::string &name) { return std::string(ADR_FIXTURES) + "/" + name; }

inline std::string read_fixture(const std::string &name)
{
    std::ifstream in(fixture_path(name), std::ios::binary);
    if (!in)
        throw std::runtime_error("missing fixture " + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline dsl::Document load_fixture(const std::string &name)
{
    auto r = dsl::parse(read_fixture(name));
    if (!r.ok())
        throw std::runtime_error(name + ": " + dsl::to_string(r.diagnostics.front()));
    return std::move(*r.document);
}

} // namespace adr::testing
