#include "adr/wp.hpp"

#include "adr/error.hpp"
#include "adr/logic.hpp"

#include <algorithm>

namespace adr {

const Binding *Environment::find(const VarName &x) const
{
    auto it = bindings_.find(x);
    return it == bindings_.end() ? nullptr : &it->second;
}

Environment Environment::extend(Quant q, const EdgeType &d, const std::vector<VarName> &vars,
                                const std::vector<NodeId> &nodes) const
{
    if (vars.size() != nodes.size())
        throw InputError("environment extension: variable/node count mismatch");
    Environment out = *this;
    for (std::size_t j = 0; j < vars.size(); ++j)
        if (!out.bindings_.emplace(vars[j], Binding{q, d, nodes[j]}).second)
            throw InputError("variable '" + vars[j] + "' is bound twice");
    return out;
}

std::set<NodeId> Environment::nodes() const
{
    std::set<NodeId> out;
    for (const auto &[_, b] : bindings_)
        out.insert(b.node);
    return out;
}

InterfaceVars InterfaceVars::canonical(int arity)
{
    InterfaceVars out;
    for (int j = 1; j <= arity; ++j)
        out.vars.push_back("z" + std::to_string(j));
    return out;
}

std::optional<std::size_t> InterfaceVars::position_of(const VarName &z) const
{
    auto it = std::find(vars.begin(), vars.end(), z);
    if (it == vars.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - vars.begin());
}

// ---------------------------------------------------------------------------
// Auxiliary case analysis

namespace {

bool enabled(const WpOptions &opts, Mutant m) { return opts.mutant != m; }

struct Side {
    const Binding *b;
    bool internal, interface, outside;
};

Side classify(const Production &p, const Binding *b)
{
    if (!b)
        return {nullptr, false, false, false};
    const bool in_r = p.rhs.has_node(b->node);
    const bool iface = in_r && p.is_interface(b->node);
    return {b, in_r && !iface, iface, !in_r};
}

bool is_forall(const Side &s) { return s.b && s.b->quant == Quant::forall; }
bool is_exists(const Side &s) { return s.b && s.b->quant == Quant::exists; }

} // namespace

FwpCase fwp_case(const Production &p, const VarName &x1, const VarName &x2, const Environment &env,
                 const WpOptions &opts)
{
    const Side a = classify(p, env.find(x1));
    const Side b = classify(p, env.find(x2));

    // Each condition is tried with (x1, x2) and then (x2, x1), in order.
    auto same_node = [](const Side &l, const Side &r) { return l.b && r.b && l.b->node == r.b->node; };

    if (enabled(opts, Mutant::drop_exists_internal_top) && is_exists(a) && is_exists(b) &&
        same_node(a, b) && a.internal)
        return FwpCase::top();

    auto internal_vs_outside = [](const Side &l, const Side &r) {
        return is_forall(l) && l.internal && is_exists(r) && (r.outside || r.interface);
    };
    if (enabled(opts, Mutant::drop_internal_vs_outside) &&
        (internal_vs_outside(a, b) || internal_vs_outside(b, a)))
        return FwpCase::bot();

    auto distinct_internals = [&](const Side &l, const Side &r) {
        return is_forall(l) && l.internal && r.b && r.internal && !same_node(l, r);
    };
    if (enabled(opts, Mutant::drop_distinct_internals) &&
        (distinct_internals(a, b) || distinct_internals(b, a)))
        return FwpCase::bot();

    auto internal_vs_external = [](const Side &l, const Side &r) {
        return is_forall(l) && l.internal && is_forall(r) && r.outside;
    };
    if (enabled(opts, Mutant::drop_edge_absent)) {
        if (internal_vs_external(a, b))
            return FwpCase::edge_absent(b.b->type);
        if (internal_vs_external(b, a))
            return FwpCase::edge_absent(a.b->type);
    }

    if (enabled(opts, Mutant::drop_same_internal) && is_forall(a) && is_forall(b) &&
        same_node(a, b) && a.internal)
        return FwpCase::same_internal(a.b->type, b.b->type);

    return FwpCase::deferred();
}

// ---------------------------------------------------------------------------
// Quantifier assignments

std::vector<NodeId> external_nodes(const Production &p, const Environment &env, int n)
{
    const auto used = env.nodes();
    std::vector<NodeId> out;
    for (int k = 1; static_cast<int>(out.size()) < n; ++k) {
        NodeId v("v" + std::to_string(k));
        if (!p.rhs.has_node(v) && !used.count(v))
            out.push_back(std::move(v));
    }
    return out;
}

std::vector<std::vector<NodeId>> choose_assignments(const Production &p, const EdgeType &d,
                                                     const std::vector<NodeId> &externals,
                                                     const WpOptions &opts)
{
    std::vector<NodeId> candidates(p.rhs.nodes().begin(), p.rhs.nodes().end());
    candidates.insert(candidates.end(), externals.begin(), externals.end());

    const bool r_has_type = p.rhs.has_edge_of_type(d.name);
    std::set<std::vector<NodeId>> r_tuples;
    for (const auto &e : p.rhs.edges())
        if (e.type.name == d.name)
            r_tuples.insert(e.attachment);

    auto touches_internal = [&](const std::vector<NodeId> &t) {
        return std::any_of(t.begin(), t.end(), [&](const NodeId &n) { return p.is_internal(n); });
    };
    auto keep = [&](const std::vector<NodeId> &t) {
        if (!touches_internal(t))
            return true;
        if (opts.enumeration == Enumeration::feasible)
            return r_tuples.count(t) != 0;
        return r_has_type || !enabled(opts, Mutant::drop_choose_condition);
    };

    std::vector<std::vector<NodeId>> out;
    const auto arity = static_cast<std::size_t>(d.arity);
    if (arity > 0 && candidates.empty())
        return out;
    std::vector<std::size_t> idx(arity, 0);
    for (;;) {
        std::vector<NodeId> tuple;
        tuple.reserve(arity);
        for (auto i : idx)
            tuple.push_back(candidates[i]);
        if (keep(tuple))
            out.push_back(std::move(tuple));
        std::size_t pos = arity;
        while (pos > 0 && idx[pos - 1] + 1 == candidates.size()) {
            idx[pos - 1] = 0;
            --pos;
        }
        if (pos == 0)
            break;
        ++idx[pos - 1];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Transformers

namespace {

[[noreturn]] void outside_fragment(const Formula &f)
{
    throw FragmentError("post-condition contains '" + to_string(f) +
                        "', which the transformers do not accept (allowed: =, !=, true, &, |, "
                        "forall, exists)");
}

} // namespace

Formula wdef(const Production &p, const Formula &psi, const Environment &env, const Formula &post,
             const WpOptions &opts)
{
    switch (post.kind()) {
    case FormulaKind::eq: {
        const auto c = fwp_case(p, post.lhs(), post.rhs(), env, opts);
        switch (c.tag) {
        case FwpCase::Tag::top:
            return Formula::top();
        case FwpCase::Tag::bot:
            return Formula::bot();
        case FwpCase::Tag::edge_absent:
            return Formula::no_edge(*c.d1);
        case FwpCase::Tag::same_internal:
            return Formula::no_edge2(*c.d1, *c.d2);
        case FwpCase::Tag::deferred:
            return psi;
        }
        break;
    }
    case FormulaKind::neq: {
        // Complement of the case analysis instantiated with (false, true, !psi).
        const auto c = fwp_case(p, post.lhs(), post.rhs(), env, opts);
        switch (c.tag) {
        case FwpCase::Tag::top:
            return Formula::bot();
        case FwpCase::Tag::bot:
            return Formula::top();
        case FwpCase::Tag::edge_absent:
            return Formula::top();
        case FwpCase::Tag::same_internal:
            return Formula::bot();
        case FwpCase::Tag::deferred:
            return psi;
        }
        break;
    }
    case FormulaKind::top:
        return Formula::top();
    case FormulaKind::conj:
    case FormulaKind::disj: {
        std::vector<Formula> cs;
        for (const auto &c : post.children())
            cs.push_back(wdef(p, psi, env, c, opts));
        return post.is(FormulaKind::conj) ? Formula::conj(std::move(cs)) : Formula::disj(std::move(cs));
    }
    case FormulaKind::forall:
    case FormulaKind::exists: {
        const Quant q = post.is(FormulaKind::forall) ? Quant::forall : Quant::exists;
        const auto externals = external_nodes(p, env, post.type().arity);
        std::vector<Formula> cs;
        for (const auto &u : choose_assignments(p, post.type(), externals, opts))
            cs.push_back(wdef(p, psi, env.extend(q, post.type(), post.vars(), u), post.body(), opts));
        return simplify(q == Quant::forall ? Formula::conj(std::move(cs)) : Formula::disj(std::move(cs)));
    }
    default:
        outside_fragment(post);
    }
    outside_fragment(post);
}

VarName translate_var(const VarName &x, const NodeMap &h, const Production &p, const InterfaceVars &zs)
{
    auto it = h.find(x);
    if (it == h.end())
        return x;
    auto pos = p.interface_position(it->second);
    if (!pos || *pos >= zs.vars.size())
        return x;
    return zs.vars[*pos];
}

Formula wp_transform(const Production &p, const InterfaceVars &zs, const NodeMap &h,
                     const Environment &env, const Formula &post, const WpOptions &opts)
{
    switch (post.kind()) {
    case FormulaKind::eq:
    case FormulaKind::neq: {
        const bool equality = post.is(FormulaKind::eq);
        const auto y1 = translate_var(post.lhs(), h, p, zs);
        const auto y2 = translate_var(post.rhs(), h, p, zs);
        const auto c = fwp_case(p, post.lhs(), post.rhs(), env, opts);
        switch (c.tag) {
        case FwpCase::Tag::top:
            return equality ? Formula::top() : Formula::bot();
        case FwpCase::Tag::bot:
            return equality ? Formula::bot() : Formula::top();
        case FwpCase::Tag::edge_absent:
            return equality ? Formula::no_edge(*c.d1) : Formula::neq(y1, y2);
        case FwpCase::Tag::same_internal:
            return equality ? Formula::no_edge2(*c.d1, *c.d2) : Formula::bot();
        case FwpCase::Tag::deferred:
            return equality ? Formula::eq(y1, y2) : Formula::neq(y1, y2);
        }
        break;
    }
    case FormulaKind::top:
        return Formula::top();
    case FormulaKind::conj:
    case FormulaKind::disj: {
        std::vector<Formula> cs;
        for (const auto &c : post.children())
            cs.push_back(wp_transform(p, zs, h, env, c, opts));
        return post.is(FormulaKind::conj) ? Formula::conj(std::move(cs)) : Formula::disj(std::move(cs));
    }
    case FormulaKind::forall: {
        const auto externals = external_nodes(p, env, post.type().arity);
        std::vector<Formula> cs;
        for (const auto &u : choose_assignments(p, post.type(), externals, opts)) {
            auto inner = env.extend(Quant::forall, post.type(), post.vars(), u);
            cs.push_back(Formula::forall(post.type(), post.vars(),
                                         wp_transform(p, zs, h, inner, post.body(), opts)));
        }
        return simplify(Formula::conj(std::move(cs)));
    }
    case FormulaKind::exists: {
        const auto externals = external_nodes(p, env, post.type().arity);
        std::vector<Formula> cs;
        for (const auto &u : choose_assignments(p, post.type(), externals, opts)) {
            auto inner = env.extend(Quant::exists, post.type(), post.vars(), u);
            cs.push_back(Formula::exists(post.type(), post.vars(),
                                         wp_transform(p, zs, h, inner, post.body(), opts)));
            if (enabled(opts, Mutant::drop_exists_witness))
                cs.push_back(wdef(p, Formula::bot(), inner, post.body(), opts));
        }
        return simplify(Formula::disj(std::move(cs)));
    }
    default:
        outside_fragment(post);
    }
    outside_fragment(post);
}

namespace {

void check_fragment(const Formula &f)
{
    switch (f.kind()) {
    case FormulaKind::bot:
    case FormulaKind::no_edge:
    case FormulaKind::no_edge2:
    case FormulaKind::negation:
        outside_fragment(f);
    default:
        for (const auto &c : f.children())
            check_fragment(c);
    }
}

void check_maps(const Production &p, const Formula &post, const NodeMap &h, const InterfaceVars &zs)
{
    if (static_cast<int>(zs.vars.size()) != p.lhs_type.arity)
        throw InputError("interface variables: expected " + std::to_string(p.lhs_type.arity) +
                         ", got " + std::to_string(zs.vars.size()));
    std::set<VarName> zseen(zs.vars.begin(), zs.vars.end());
    if (zseen.size() != zs.vars.size())
        throw InputError("interface variables must be pairwise distinct");
    std::set<NodeId> image;
    for (const auto &[x, n] : h) {
        if (!p.rhs.has_node(n))
            throw InputError("node map sends '" + x + "' outside the rhs");
        if (!image.insert(n).second)
            throw InputError("node map is not injective (node '" + n.name + "')");
    }
    for (const auto &x : free_vars(post))
        if (!h.count(x))
            throw InputError("node map does not cover free variable '" + x + "'");
}

} // namespace

WpResult wpre_parts(const Production &p, const Formula &post, const NodeMap &h,
                    const InterfaceVars &zs, const WpOptions &opts)
{
    if (!is_closed(post))
        throw InputError("post-condition must be closed");
    if (auto e = well_formedness_error(post); !e.empty())
        throw InputError("post-condition: " + e);
    check_maps(p, post, h, zs);
    const Formula normal = nnf(post);
    check_fragment(normal);

    WpResult r{Formula::top(), Formula::top(), Formula::top()};
    r.definite = simplify(wdef(p, Formula::top(), Environment{}, normal, opts));
    r.pulled = simplify(wp_transform(p, zs, h, Environment{}, normal, opts));
    r.pre = simplify(Formula::conj({r.definite, r.pulled}));
    return r;
}

Formula wpre(const Production &p, const Formula &post, const NodeMap &h, const InterfaceVars &zs,
             const WpOptions &opts)
{
    return wpre_parts(p, post, h, zs, opts).pre;
}

} // namespace adr
