#include "adr/json_export.hpp"

namespace adr::json {

using nlohmann::json;

namespace {

json match(const Match &m)
{
    json nodes = json::array();
    for (const auto &n : m.node_map)
        nodes.push_back(n.name);
    return {{"edge", m.edge_id}, {"nodes", nodes}};
}

const char *kind_name(EdgeKind k) { return k == EdgeKind::abstract ? "abstract" : "concrete"; }

} // namespace

json formula(const Formula &f)
{
    switch (f.kind()) {
    case FormulaKind::top:
        return {{"op", "true"}};
    case FormulaKind::bot:
        return {{"op", "false"}};
    case FormulaKind::eq:
        return {{"op", "eq"}, {"lhs", f.lhs()}, {"rhs", f.rhs()}};
    case FormulaKind::neq:
        return {{"op", "neq"}, {"lhs", f.lhs()}, {"rhs", f.rhs()}};
    case FormulaKind::no_edge:
        return {{"op", "no"}, {"types", json::array({f.type().name})}};
    case FormulaKind::no_edge2:
        return {{"op", "no"}, {"types", json::array({f.type().name, f.type2().name})}};
    case FormulaKind::negation:
        return {{"op", "not"}, {"arg", formula(f.body())}};
    case FormulaKind::conj:
    case FormulaKind::disj: {
        json args = json::array();
        for (const auto &c : f.children())
            args.push_back(formula(c));
        return {{"op", f.is(FormulaKind::conj) ? "and" : "or"}, {"args", args}};
    }
    case FormulaKind::forall:
    case FormulaKind::exists:
        return {{"op", f.is(FormulaKind::forall) ? "forall" : "exists"},
                {"type", f.type().name},
                {"vars", f.vars()},
                {"body", formula(f.body())}};
    }
    return nullptr;
}

json graph(const Graph &g)
{
    json nodes = json::array();
    for (const auto &n : g.nodes())
        nodes.push_back(n.name);
    json edges = json::array();
    for (const auto &e : g.edges()) {
        json att = json::array();
        for (const auto &n : e.attachment)
            att.push_back(n.name);
        edges.push_back({{"id", e.id}, {"type", e.type.name}, {"attachment", att}});
    }
    return {{"nodes", nodes}, {"edges", edges}};
}

json production(const Production &p)
{
    json iface = json::array();
    for (const auto &n : p.interface)
        iface.push_back(n.name);
    return {{"lhs", p.lhs_type.name}, {"interface", iface}, {"rhs", graph(p.rhs)}};
}

json document(const dsl::Document &doc)
{
    json out;
    out["types"] = json::array();
    for (const auto &t : doc.types.types())
        out["types"].push_back({{"name", t.name}, {"arity", t.arity}, {"kind", kind_name(t.kind)}});
    out["graphs"] = json::object();
    for (const auto &[name, g] : doc.graphs)
        out["graphs"][name] = graph(g);
    out["productions"] = json::object();
    for (const auto &[name, p] : doc.productions)
        out["productions"][name] = production(p);
    out["formulas"] = json::object();
    for (const auto &[name, f] : doc.formulas)
        out["formulas"][name] = formula(f);
    out["asserted"] = json::object();
    for (const auto &[name, a] : doc.asserted) {
        json h = json::object();
        for (const auto &[x, n] : a.value.h)
            h[x] = n.name;
        out["asserted"][name] = {{"production", a.production},
                                 {"pre", formula(a.value.pre)},
                                 {"post", formula(a.value.post)},
                                 {"zvars", a.value.zs.vars},
                                 {"map", h}};
    }
    out["styles"] = json::object();
    for (const auto &[name, s] : doc.styles)
        out["styles"][name] = {{"invariant", formula(s.invariant)}, {"rules", s.rules}};
    return out;
}

json verdict(const Verdict &v)
{
    json out = {{"status", to_string(v.status)}, {"graphs_checked", v.graphs_checked}};
    if (v.counterexample) {
        json cex = {{"before", graph(v.counterexample->before)}};
        if (v.counterexample->match)
            cex["match"] = match(*v.counterexample->match);
        if (v.counterexample->after)
            cex["after"] = graph(*v.counterexample->after);
        out["counterexample"] = cex;
    }
    return out;
}

json plan(const Plan &p)
{
    json steps = json::array();
    for (const auto &s : p.steps)
        steps.push_back({{"production", s.production}, {"match", match(s.match)}});
    return {{"steps", steps}, {"final", graph(p.final)}};
}

} // namespace adr::json
