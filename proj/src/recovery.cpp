#include "adr/recovery.hpp"

#include "adr/error.hpp"

namespace adr {

bool check_style(const Graph &g, const Style &s) { return satisfies(g, s.invariant); }

namespace {

std::vector<Formula> gates(const Style &s, const WpOptions &opts)
{
    std::vector<Formula> out;
    for (const auto &ap : s.productions)
        out.push_back(wpre(ap.production, ap.post, ap.h, ap.zs, opts));
    return out;
}

std::vector<PlanStep> applicable(const Graph &g, const Style &s, const std::vector<Formula> &pre)
{
    std::vector<PlanStep> out;
    for (std::size_t i = 0; i < s.productions.size(); ++i) {
        const auto &p = s.productions[i].production;
        const EdgeType *declared = s.alphabet.find(p.lhs_type.name);
        if (!declared || declared->kind != EdgeKind::abstract)
            continue;
        auto matches = find_matches(g, p);
        if (matches.empty() || !satisfies(g, pre[i]))
            continue;
        for (auto &m : matches)
            out.push_back({i, std::move(m)});
    }
    return out;
}

} // namespace

std::vector<PlanStep> applicable_productions(const Graph &g, const Style &s, const WpOptions &opts)
{
    return applicable(g, s, gates(s, opts));
}

std::optional<Plan> recover(const Graph &g, const Style &s, int max_depth, std::uint64_t seed,
                            const WpOptions &opts)
{
    if (check_style(g, s))
        return Plan{{}, g};
    const auto pre = gates(s, opts);

    // Levels are kept in lexicographic plan order, so the first conformant
    // graph found at a depth is the least plan of that length.
    std::vector<Plan> level{Plan{{}, g}};
    for (int depth = 1; depth <= max_depth; ++depth) {
        std::vector<Plan> next;
        for (const auto &plan : level) {
            for (const auto &step : applicable(plan.final, s, pre)) {
                Plan child{plan.steps, apply_production(plan.final, step.match,
                                                        s.productions[step.production].production, seed)};
                child.steps.push_back(step);
                if (check_style(child.final, s))
                    return child;
                next.push_back(std::move(child));
            }
        }
        level = std::move(next);
        if (level.empty())
            break;
    }
    return std::nullopt;
}

Graph replay(const Graph &g, const Style &s, const Plan &plan, std::uint64_t seed)
{
    Graph cur = g;
    for (const auto &step : plan.steps) {
        if (step.production >= s.productions.size())
            throw InputError("plan refers to unknown production " + std::to_string(step.production));
        cur = apply_production(cur, step.match, s.productions[step.production].production, seed);
    }
    return cur;
}

} // namespace adr
