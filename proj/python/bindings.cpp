// Python bindings. Every entry point takes DSL text plus declaration names
// and returns JSON text; the Python package decodes it.

#include "adr/contracts.hpp"
#include "adr/dsl.hpp"
#include "adr/error.hpp"
#include "adr/json_export.hpp"
#include "adr/logic.hpp"
#include "adr/recovery.hpp"
#include "adr/wp.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

adr::dsl::Document load(const std::string &text)
{
    auto r = adr::dsl::parse(text);
    if (!r.ok()) {
        std::string msg;
        for (const auto &d : r.diagnostics)
            msg += (msg.empty() ? "" : "\n") + adr::dsl::to_string(d);
        throw adr::InputError(msg);
    }
    return std::move(*r.document);
}

std::string parse_document(const std::string &text) { return adr::json::document(load(text)).dump(); }

std::string format_document(const std::string &text) { return adr::dsl::serialize(load(text)); }

std::string wp(const std::string &text, const std::string &production, const std::string &formula,
               const std::string &mode)
{
    if (mode != "literal" && mode != "feasible")
        throw adr::InputError("mode must be 'literal' or 'feasible'");
    const auto doc = load(text);
    const auto &p = doc.production(production);
    adr::WpOptions opts;
    opts.enumeration = mode == "feasible" ? adr::Enumeration::feasible : adr::Enumeration::literal;
    const auto r = adr::wpre_parts(p, doc.formula(formula), {}, adr::InterfaceVars::canonical(p.lhs_type.arity), opts);
    nlohmann::json out = {{"production", production},
                          {"formula", formula},
                          {"mode", mode},
                          {"wpre", adr::json::formula(r.pre)},
                          {"text", adr::dsl::serialize(r.pre)},
                          {"definite", adr::json::formula(r.definite)},
                          {"pulled", adr::json::formula(r.pulled)}};
    return out.dump();
}

std::string check(const std::string &text, const std::string &asserted, const std::string &theorem,
                  int max_nodes, int max_edges)
{
    const auto doc = load(text);
    const auto &a = doc.asserted_production(asserted).value;
    adr::validate_asserted(a, doc.types);
    const adr::Bounds b{max_nodes, max_edges};
    adr::Verdict v;
    if (theorem == "soundness")
        v = adr::check_soundness(a.production, a.post, a.h, a.zs, doc.types, b);
    else if (theorem == "weakest")
        v = adr::check_weakest(a.pre, a.production, a.post, a.h, a.zs, doc.types, b);
    else if (theorem == "validity")
        v = adr::check_validity(a, doc.types, b);
    else
        throw adr::InputError("theorem must be soundness, weakest or validity");
    auto out = adr::json::verdict(v);
    out["theorem"] = theorem;
    return out.dump();
}

std::string apply(const std::string &text, const std::string &graph, const std::string &production,
                  const std::string &at, std::uint64_t seed)
{
    const auto doc = load(text);
    const auto &g = doc.graph(graph);
    const auto &p = doc.production(production);
    const adr::Edge *e = g.find_edge(at);
    if (!e || e->type.name != p.lhs_type.name)
        throw adr::InputError("edge '" + at + "' is not a match of '" + production + "'");
    return adr::json::graph(adr::apply_production(g, {e->id, e->attachment}, p, seed)).dump();
}

std::string recover(const std::string &text, const std::string &graph, const std::string &style,
                    int max_depth, std::uint64_t seed)
{
    const auto doc = load(text);
    const auto plan = adr::recover(doc.graph(graph), doc.style(style), max_depth, seed);
    if (!plan)
        return nlohmann::json{{"status", "not-found"}}.dump();
    auto out = adr::json::plan(*plan);
    out["status"] = "found";
    const auto &rules = doc.styles.at(style).rules;
    for (auto &s : out["steps"])
        s["rule"] = rules.at(s["production"].get<std::size_t>());
    return out.dump();
}

bool equivalent(const std::string &text, const std::string &f1, const std::string &f2, int max_nodes,
                int max_edges)
{
    const auto doc = load(text);
    const auto &a = doc.formula(f1);
    const auto &b = doc.formula(f2);
    if (!adr::is_closed(a) || !adr::is_closed(b))
        throw adr::InputError("equivalence needs closed formulas");
    return adr::equivalent(a, b, doc.types, {max_nodes, max_edges});
}

std::uint64_t count_graphs(const std::vector<std::pair<std::string, int>> &types, int max_nodes, int max_edges)
{
    adr::Alphabet a;
    for (const auto &[name, arity] : types)
        a.add({name, arity, adr::EdgeKind::concrete});
    adr::GraphEnumerator gen(a, {max_nodes, max_edges});
    return gen.for_each([](const adr::Graph &) { return true; });
}

} // namespace

PYBIND11_MODULE(_adr, m)
{
    m.doc() = "Contracts and weakest pre-conditions for typed hypergraph rewriting";

    static py::exception<adr::Error> error(m, "AdrError", PyExc_ValueError);
    static py::exception<adr::FragmentError> fragment(m, "FragmentError", error.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const adr::FragmentError &e) {
            fragment(e.what());
        } catch (const adr::Error &e) {
            error(e.what());
        }
    });

    m.def("parse_document", &parse_document, py::arg("text"));
    m.def("format_document", &format_document, py::arg("text"));
    m.def("wp", &wp, py::arg("text"), py::arg("production"), py::arg("formula"), py::arg("mode") = "literal");
    m.def("check", &check, py::arg("text"), py::arg("asserted"), py::arg("theorem") = "soundness",
          py::arg("max_nodes") = 3, py::arg("max_edges") = 3);
    m.def("apply", &apply, py::arg("text"), py::arg("graph"), py::arg("production"), py::arg("at"),
          py::arg("seed") = adr::kDefaultSeed);
    m.def("recover", &recover, py::arg("text"), py::arg("graph"), py::arg("style"), py::arg("max_depth") = 3,
          py::arg("seed") = adr::kDefaultSeed);
    m.def("equivalent", &equivalent, py::arg("text"), py::arg("first"), py::arg("second"),
          py::arg("max_nodes") = 3, py::arg("max_edges") = 3);
    m.def("count_graphs", &count_graphs, py::arg("types"), py::arg("max_nodes"), py::arg("max_edges"));
}
