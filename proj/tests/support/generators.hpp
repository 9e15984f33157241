#pragma once

// Random instances for property tests and the acceptance suite.

#include "adr/dsl.hpp"
#include "adr/formula.hpp"
#include "adr/graph.hpp"

#include <random>
#include <string>
#include <vector>

namespace adr::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng &rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool coin(Rng &rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

template <class T>
const T &pick(Rng &rng, const std::vector<T> &xs)
{
    return xs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(xs.size()) - 1))];
}

/// 1 to `max_types` types named A, B, C, ... with arity 0..2 (0 rare).
/// The first type is abstract.
inline Alphabet random_alphabet(Rng &rng, int max_types = 3)
{
    Alphabet a;
    const int n = uniform(rng, 1, max_types);
    for (int i = 0; i < n; ++i) {
        int arity = coin(rng, 0.1) ? 0 : uniform(rng, 1, 2);
        a.add({std::string(1, static_cast<char>('A' + i)), arity,
               i == 0 ? EdgeKind::abstract : EdgeKind::concrete});
    }
    return a;
}

/// Production over the alphabet: interface u1..um, up to `max_internal`
/// internal nodes i1.., up to `max_edges` RHS edges r1..
inline Production random_production(Rng &rng, const Alphabet &alphabet, int max_internal = 2,
                                    int max_edges = 2)
{
    const auto types = alphabet.types();
    Production p;
    p.lhs_type = pick(rng, types);
    std::vector<NodeId> nodes;
    for (int j = 1; j <= p.lhs_type.arity; ++j) {
        NodeId n("u" + std::to_string(j));
        p.interface.push_back(n);
        p.rhs.add_node(n);
        nodes.push_back(n);
    }
    const int internal = uniform(rng, 0, max_internal);
    for (int j = 1; j <= internal; ++j) {
        NodeId n("i" + std::to_string(j));
        p.rhs.add_node(n);
        nodes.push_back(n);
    }
    const int edges = uniform(rng, 0, max_edges);
    for (int k = 1; k <= edges; ++k) {
        const auto &t = pick(rng, types);
        if (t.arity > 0 && nodes.empty())
            continue;
        Edge e{"r" + std::to_string(k), t, {}};
        for (int j = 0; j < t.arity; ++j)
            e.attachment.push_back(pick(rng, nodes));
        p.rhs.add_edge(std::move(e));
    }
    return p;
}

/// Closed formulas. `full` additionally draws edge-absence literals,
/// `false` and explicit negation; otherwise the result is an NNF formula in
/// the fragment the transformers accept.
class FormulaSampler {
public:
    FormulaSampler(const Alphabet &alphabet, bool full) : types_(alphabet.types()), full_(full) {}

    Formula closed(Rng &rng, int depth)
    {
        counter_ = 0;
        std::vector<VarName> scope;
        return gen(rng, depth, scope);
    }

private:
    Formula atom(Rng &rng, const std::vector<VarName> &scope)
    {
        const int roll = uniform(rng, 0, 9);
        if (full_ && roll == 0)
            return Formula::no_edge(pick(rng, types_));
        if (full_ && roll == 1)
            return Formula::no_edge2(pick(rng, types_), pick(rng, types_));
        if (full_ && roll == 2)
            return Formula::bot();
        if (scope.empty() || roll == 3)
            return Formula::top();
        const auto &x = pick(rng, scope);
        const auto &y = pick(rng, scope);
        return coin(rng) ? Formula::eq(x, y) : Formula::neq(x, y);
    }

    Formula gen(Rng &rng, int depth, std::vector<VarName> &scope)
    {
        if (depth == 0 || coin(rng, 0.2))
            return atom(rng, scope);
        const int roll = uniform(rng, 0, full_ ? 6 : 5);
        if (roll <= 1) {
            std::vector<Formula> cs;
            cs.push_back(gen(rng, depth - 1, scope));
            cs.push_back(gen(rng, depth - 1, scope));
            return roll == 0 ? Formula::conj(std::move(cs)) : Formula::disj(std::move(cs));
        }
        if (roll == 6)
            return Formula::negation(gen(rng, depth - 1, scope));
        const auto &t = pick(rng, types_);
        std::vector<VarName> vars;
        for (int j = 0; j < t.arity; ++j)
            vars.push_back("x" + std::to_string(++counter_));
        const std::size_t mark = scope.size();
        scope.insert(scope.end(), vars.begin(), vars.end());
        Formula body = gen(rng, depth - 1, scope);
        scope.resize(mark);
        return roll <= 3 ? Formula::forall(t, std::move(vars), std::move(body))
                         : Formula::exists(t, std::move(vars), std::move(body));
    }

    std::vector<EdgeType> types_;
    bool full_;
    int counter_ = 0;
};

inline Graph random_graph(Rng &rng, const Alphabet &alphabet, int max_nodes, int max_edges)
{
    Graph g;
    const int n = uniform(rng, 0, max_nodes);
    std::vector<NodeId> nodes;
    for (int i = 1; i <= n; ++i) {
        nodes.emplace_back("n" + std::to_string(i));
        g.add_node(nodes.back());
    }
    const auto types = alphabet.types();
    const int m = uniform(rng, 0, max_edges);
    for (int k = 1; k <= m; ++k) {
        const auto &t = pick(rng, types);
        if (t.arity > 0 && nodes.empty())
            continue;
        Edge e{"e" + std::to_string(k), t, {}};
        for (int j = 0; j < t.arity; ++j)
            e.attachment.push_back(pick(rng, nodes));
        g.add_edge(std::move(e));
    }
    return g;
}

/// Consistent renaming of every node, for isomorphism checks.
inline Graph rename_nodes(const Graph &g, Rng &rng)
{
    std::vector<NodeId> old(g.nodes().begin(), g.nodes().end());
    std::vector<NodeId> fresh;
    for (std::size_t i = 0; i < old.size(); ++i)
        fresh.emplace_back("m" + std::to_string(i));
    std::shuffle(fresh.begin(), fresh.end(), rng);
    std::map<NodeId, NodeId> ren;
    for (std::size_t i = 0; i < old.size(); ++i)
        ren[old[i]] = fresh[i];
    Graph out;
    for (const auto &n : old)
        out.add_node(ren[n]);
    for (const auto &e : g.edges()) {
        Edge c{e.id, e.type, {}};
        for (const auto &n : e.attachment)
            c.attachment.push_back(ren[n]);
        out.add_edge(std::move(c));
    }
    return out;
}

/// A random, valid document exercising every section kind.
inline dsl::Document random_document(Rng &rng)
{
    dsl::Document doc;
    doc.types = random_alphabet(rng);
    FormulaSampler sampler(doc.types, true);
    const int graphs = uniform(rng, 0, 2);
    for (int i = 0; i < graphs; ++i)
        doc.graphs["g" + std::to_string(i)] = random_graph(rng, doc.types, 3, 3);
    const int prods = uniform(rng, 0, 2);
    for (int i = 0; i < prods; ++i)
        doc.productions["p" + std::to_string(i)] = random_production(rng, doc.types);
    const int formulas = uniform(rng, 0, 3);
    for (int i = 0; i < formulas; ++i)
        doc.formulas["f" + std::to_string(i)] = sampler.closed(rng, 3);
    std::vector<std::string> asserted;
    for (const auto &[name, p] : doc.productions) {
        if (coin(rng, 0.3))
            continue;
        dsl::AssertedDecl a;
        a.production = name;
        a.value.production = p;
        a.value.pre = sampler.closed(rng, 2);
        a.value.post = sampler.closed(rng, 2);
        a.value.zs = InterfaceVars::canonical(p.lhs_type.arity);
        auto aname = "a_" + name;
        doc.asserted[aname] = std::move(a);
        asserted.push_back(aname);
    }
    if (coin(rng)) {
        dsl::StyleDecl s;
        s.invariant = sampler.closed(rng, 2);
        for (const auto &a : asserted)
            s.rules.push_back(a);
        doc.styles["s"] = std::move(s);
    }
    return doc;
}

} // namespace adr::testing
