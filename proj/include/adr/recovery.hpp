#pragma once

#include "adr/contracts.hpp"

#include <optional>
#include <vector>

namespace adr {

/// An architectural style: productions with contracts plus a closed
/// invariant that conformant configurations satisfy.
struct Style {
    Alphabet alphabet;
    std::vector<AssertedProduction> productions;
    Formula invariant = Formula::top();
};

struct PlanStep {
    std::size_t production = 0;
    Match match;

    friend bool operator==(const PlanStep &, const PlanStep &) = default;
};

struct Plan {
    std::vector<PlanStep> steps;
    Graph final;
};

bool check_style(const Graph &g, const Style &s);

/// Pairs (production index, match) whose match targets an abstract edge
/// and whose host graph satisfies the production's weakest pre-condition.
/// Ordered by production index, then edge id.
std::vector<PlanStep> applicable_productions(const Graph &g, const Style &s,
                                             const WpOptions &opts = {});

/// Breadth-first search for the shortest, then lexicographically least,
/// sequence of gated applications leading to a conformant graph.
std::optional<Plan> recover(const Graph &g, const Style &s, int max_depth,
                            std::uint64_t seed = kDefaultSeed, const WpOptions &opts = {});

/// Re-executes the plan from `g`; throws InputError if a step does not apply.
Graph replay(const Graph &g, const Style &s, const Plan &plan, std::uint64_t seed = kDefaultSeed);

} // namespace adr
