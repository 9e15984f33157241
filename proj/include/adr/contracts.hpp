#pragma once

#include "adr/formula.hpp"
#include "adr/graph.hpp"
#include "adr/logic.hpp"
#include "adr/wp.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace adr {

/// {pre} production {post} together with the maps relating the post's free
/// variables to R and the interface variables to LHS positions.
struct AssertedProduction {
    Formula pre = Formula::top();
    Production production;
    Formula post = Formula::top();
    NodeMap h;
    InterfaceVars zs;
};

/// Throws InputError when the maps or formulas are ill-formed.
void validate_asserted(const AssertedProduction &ap, const Alphabet &alphabet);

struct Counterexample {
    Graph before;
    std::optional<Match> match;
    std::optional<Graph> after;
};

struct Verdict {
    enum class Status { holds, fails, not_applicable };
    Status status = Status::holds;
    std::optional<Counterexample> counterexample;
    std::uint64_t graphs_checked = 0;

    bool holds() const { return status == Status::holds; }
};

std::string to_string(Verdict::Status s);

/// Reference semantics: every application of `p` to `g` satisfies `post`.
bool semantic_precondition_oracle(const Production &p, const Formula &post, const Graph &g,
                                  std::uint64_t seed = kDefaultSeed);

/// The first match whose application falsifies `post`, if any.
std::optional<Match> violating_match(const Production &p, const Formula &post, const Graph &g,
                                     std::uint64_t seed = kDefaultSeed);

/// Every enumerated graph satisfying `pre` passes the oracle for `post`.
Verdict check_triple(const Formula &pre, const Production &p, const Formula &post,
                     const Alphabet &alphabet, Bounds bounds);

/// Bounded check that the computed weakest pre-condition is sufficient.
Verdict check_soundness(const Production &p, const Formula &post, const NodeMap &h,
                        const InterfaceVars &zs, const Alphabet &alphabet, Bounds bounds,
                        const WpOptions &opts = {});

/// Bounded check that a valid pre-condition `psi` implies the computed
/// weakest pre-condition. `not_applicable` when {psi} p {post} is not valid
/// at the bound.
Verdict check_weakest(const Formula &psi, const Production &p, const Formula &post,
                      const NodeMap &h, const InterfaceVars &zs, const Alphabet &alphabet,
                      Bounds bounds, const WpOptions &opts = {});

Verdict check_validity(const AssertedProduction &ap, const Alphabet &alphabet, Bounds bounds);

} // namespace adr
