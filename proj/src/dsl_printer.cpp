#include "adr/dsl.hpp"

#include "adr/error.hpp"

#include <sstream>

namespace adr::dsl {

namespace {

void print_graph_body(std::ostream &os, const Graph &g, const std::string &indent)
{
    os << "{\n";
    for (const auto &n : g.nodes())
        os << indent << "  node " << n.name << ";\n";
    for (const auto &e : g.edges()) {
        os << indent << "  edge " << e.id << ": " << e.type.name << '(';
        for (std::size_t j = 0; j < e.attachment.size(); ++j)
            os << (j ? ", " : "") << e.attachment[j].name;
        os << ");\n";
    }
    os << indent << "}";
}

void separate(std::ostream &os, bool &first)
{
    if (!first)
        os << '\n';
    first = false;
}

} // namespace

std::string serialize(const Formula &f) { return adr::to_string(f); }

std::string serialize(const Graph &g, const std::string &name)
{
    std::ostringstream os;
    os << "graph " << name << ' ';
    print_graph_body(os, g, "");
    os << '\n';
    return os.str();
}

std::string serialize(const Document &doc)
{
    std::ostringstream os;
    bool first = true;
    if (!doc.types.empty()) {
        separate(os, first);
        for (const auto &t : doc.types.types())
            os << "type " << t.name << '/' << t.arity
               << (t.kind == EdgeKind::abstract ? " abstract" : "") << ";\n";
    }
    for (const auto &[name, g] : doc.graphs) {
        separate(os, first);
        os << serialize(g, name);
    }
    for (const auto &[name, p] : doc.productions) {
        separate(os, first);
        os << "production " << name << " {\n";
        os << "  lhs " << p.lhs_type.name << ";\n";
        os << "  interface";
        for (std::size_t j = 0; j < p.interface.size(); ++j)
            os << (j ? ", " : " ") << p.interface[j].name;
        os << ";\n  rhs ";
        print_graph_body(os, p.rhs, "  ");
        os << "\n}\n";
    }
    if (!doc.formulas.empty()) {
        separate(os, first);
        for (const auto &[name, f] : doc.formulas)
            os << "formula " << name << " = " << serialize(f) << ";\n";
    }
    for (const auto &[name, a] : doc.asserted) {
        separate(os, first);
        os << "asserted " << name << " {\n";
        os << "  production " << a.production << ";\n";
        os << "  pre " << serialize(a.value.pre) << ";\n";
        os << "  post " << serialize(a.value.post) << ";\n";
        os << "  zvars";
        for (std::size_t j = 0; j < a.value.zs.vars.size(); ++j)
            os << (j ? ", " : " ") << a.value.zs.vars[j];
        os << ";\n";
        for (const auto &[x, n] : a.value.h)
            os << "  map " << x << " -> " << n.name << ";\n";
        os << "}\n";
    }
    for (const auto &[name, s] : doc.styles) {
        separate(os, first);
        os << "style " << name << " {\n";
        os << "  invariant " << serialize(s.invariant) << ";\n";
        for (const auto &r : s.rules)
            os << "  rule " << r << ";\n";
        os << "}\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Lookups

const Graph &Document::graph(const std::string &name) const
{
    auto it = graphs.find(name);
    if (it == graphs.end())
        throw InputError("no graph named '" + name + "'");
    return it->second;
}

const Production &Document::production(const std::string &name) const
{
    auto it = productions.find(name);
    if (it == productions.end())
        throw InputError("no production named '" + name + "'");
    return it->second;
}

const Formula &Document::formula(const std::string &name) const
{
    auto it = formulas.find(name);
    if (it == formulas.end())
        throw InputError("no formula named '" + name + "'");
    return it->second;
}

const AssertedDecl &Document::asserted_production(const std::string &name) const
{
    auto it = asserted.find(name);
    if (it == asserted.end())
        throw InputError("no asserted production named '" + name + "'");
    return it->second;
}

Style Document::style(const std::string &name) const
{
    auto it = styles.find(name);
    if (it == styles.end())
        throw InputError("no style named '" + name + "'");
    Style s;
    s.alphabet = types;
    s.invariant = it->second.invariant;
    for (const auto &r : it->second.rules)
        s.productions.push_back(asserted_production(r).value);
    return s;
}

} // namespace adr::dsl
