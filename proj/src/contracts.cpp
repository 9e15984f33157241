#include "adr/contracts.hpp"

#include "adr/error.hpp"

namespace adr {

std::string to_string(Verdict::Status s)
{
    switch (s) {
    case Verdict::Status::holds:
        return "holds";
    case Verdict::Status::fails:
        return "fails";
    case Verdict::Status::not_applicable:
        return "not-applicable";
    }
    return "?";
}

void validate_asserted(const AssertedProduction &ap, const Alphabet &alphabet)
{
    validate_production(ap.production, alphabet);
    for (const Formula *f : {&ap.pre, &ap.post})
        if (auto e = well_formedness_error(*f, &alphabet); !e.empty())
            throw InputError(e);
    if (!is_closed(ap.pre))
        throw InputError("pre-condition must be closed");
    if (static_cast<int>(ap.zs.vars.size()) != ap.production.lhs_type.arity)
        throw InputError("interface variable count differs from the lhs arity");
    if (std::set<VarName>(ap.zs.vars.begin(), ap.zs.vars.end()).size() != ap.zs.vars.size())
        throw InputError("interface variables must be distinct");
    std::set<NodeId> targets;
    for (const auto &[x, n] : ap.h) {
        if (!ap.production.rhs.has_node(n))
            throw InputError("map sends '" + x + "' to '" + n.name + "', which is not a node of the rhs");
        if (!targets.insert(n).second)
            throw InputError("map is not injective at node '" + n.name + "'");
    }
}

std::optional<Match> violating_match(const Production &p, const Formula &post, const Graph &g,
                                     std::uint64_t seed)
{
    for (const auto &m : find_matches(g, p))
        if (!satisfies(apply_production(g, m, p, seed), post))
            return m;
    return std::nullopt;
}

bool semantic_precondition_oracle(const Production &p, const Formula &post, const Graph &g,
                                  std::uint64_t seed)
{
    return !violating_match(p, post, g, seed).has_value();
}

Verdict check_triple(const Formula &pre, const Production &p, const Formula &post,
                     const Alphabet &alphabet, Bounds bounds)
{
    Verdict v;
    GraphEnumerator en(alphabet, bounds);
    v.graphs_checked = en.for_each([&](const Graph &g) {
        if (!satisfies(g, pre))
            return true;
        if (auto m = violating_match(p, post, g)) {
            v.status = Verdict::Status::fails;
            v.counterexample = Counterexample{g, *m, apply_production(g, *m, p)};
            return false;
        }
        return true;
    });
    return v;
}

Verdict check_soundness(const Production &p, const Formula &post, const NodeMap &h,
                        const InterfaceVars &zs, const Alphabet &alphabet, Bounds bounds,
                        const WpOptions &opts)
{
    return check_triple(wpre(p, post, h, zs, opts), p, post, alphabet, bounds);
}

Verdict check_weakest(const Formula &psi, const Production &p, const Formula &post,
                      const NodeMap &h, const InterfaceVars &zs, const Alphabet &alphabet,
                      Bounds bounds, const WpOptions &opts)
{
    Verdict valid = check_triple(psi, p, post, alphabet, bounds);
    if (!valid.holds()) {
        valid.status = Verdict::Status::not_applicable;
        return valid;
    }
    const Formula pre = wpre(p, post, h, zs, opts);
    Verdict v;
    GraphEnumerator en(alphabet, bounds);
    v.graphs_checked = en.for_each([&](const Graph &g) {
        if (satisfies(g, psi) && !satisfies(g, pre)) {
            v.status = Verdict::Status::fails;
            v.counterexample = Counterexample{g, std::nullopt, std::nullopt};
            return false;
        }
        return true;
    });
    return v;
}

Verdict check_validity(const AssertedProduction &ap, const Alphabet &alphabet, Bounds bounds)
{
    return check_triple(ap.pre, ap.production, ap.post, alphabet, bounds);
}

} // namespace adr
