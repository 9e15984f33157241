#include "adr/formula.hpp"

#include "adr/error.hpp"

#include <algorithm>
#include <sstream>

namespace adr {

namespace {

std::shared_ptr<Formula::Node> make(FormulaKind k)
{
    auto n = std::make_shared<Formula::Node>();
    n->kind = k;
    return n;
}

std::strong_ordering compare_types(const EdgeType &a, const EdgeType &b)
{
    if (auto c = a.name <=> b.name; c != 0)
        return c;
    return a.arity <=> b.arity;
}

} // namespace

Formula::Formula() : node_(make(FormulaKind::top)) {}

Formula Formula::top() { return Formula(make(FormulaKind::top)); }
Formula Formula::bot() { return Formula(make(FormulaKind::bot)); }

Formula Formula::eq(VarName x1, VarName x2)
{
    auto n = make(FormulaKind::eq);
    n->x1 = std::move(x1);
    n->x2 = std::move(x2);
    return Formula(std::move(n));
}

Formula Formula::neq(VarName x1, VarName x2)
{
    auto n = make(FormulaKind::neq);
    n->x1 = std::move(x1);
    n->x2 = std::move(x2);
    return Formula(std::move(n));
}

Formula Formula::no_edge(EdgeType d)
{
    auto n = make(FormulaKind::no_edge);
    n->type = std::move(d);
    return Formula(std::move(n));
}

Formula Formula::no_edge2(EdgeType d1, EdgeType d2)
{
    auto n = make(FormulaKind::no_edge2);
    n->type = std::move(d1);
    n->type2 = std::move(d2);
    return Formula(std::move(n));
}

Formula Formula::negation(Formula f)
{
    auto n = make(FormulaKind::negation);
    n->children.push_back(std::move(f));
    return Formula(std::move(n));
}

Formula Formula::conj(std::vector<Formula> children)
{
    auto n = make(FormulaKind::conj);
    n->children = std::move(children);
    return Formula(std::move(n));
}

Formula Formula::disj(std::vector<Formula> children)
{
    auto n = make(FormulaKind::disj);
    n->children = std::move(children);
    return Formula(std::move(n));
}

Formula Formula::forall(EdgeType d, std::vector<VarName> vars, Formula body)
{
    auto n = make(FormulaKind::forall);
    n->type = std::move(d);
    n->vars = std::move(vars);
    n->children.push_back(std::move(body));
    return Formula(std::move(n));
}

Formula Formula::exists(EdgeType d, std::vector<VarName> vars, Formula body)
{
    auto n = make(FormulaKind::exists);
    n->type = std::move(d);
    n->vars = std::move(vars);
    n->children.push_back(std::move(body));
    return Formula(std::move(n));
}

FormulaKind Formula::kind() const { return node_->kind; }
const VarName &Formula::lhs() const { return node_->x1; }
const VarName &Formula::rhs() const { return node_->x2; }
const EdgeType &Formula::type() const { return node_->type; }
const EdgeType &Formula::type2() const { return node_->type2; }
const std::vector<VarName> &Formula::vars() const { return node_->vars; }
const std::vector<Formula> &Formula::children() const { return node_->children; }
const Formula &Formula::body() const { return node_->children.front(); }

bool Formula::is_atom() const
{
    switch (kind()) {
    case FormulaKind::top:
    case FormulaKind::bot:
    case FormulaKind::eq:
    case FormulaKind::neq:
    case FormulaKind::no_edge:
    case FormulaKind::no_edge2:
        return true;
    default:
        return false;
    }
}

std::size_t Formula::size() const
{
    std::size_t n = 1;
    for (const auto &c : children())
        n += c.size();
    return n;
}

std::strong_ordering compare(const Formula &a, const Formula &b)
{
    if (a.node_ == b.node_)
        return std::strong_ordering::equal;
    const auto &x = *a.node_;
    const auto &y = *b.node_;
    if (auto c = x.kind <=> y.kind; c != 0)
        return c;
    switch (x.kind) {
    case FormulaKind::eq:
    case FormulaKind::neq:
        if (auto c = x.x1 <=> y.x1; c != 0)
            return c;
        return x.x2 <=> y.x2;
    case FormulaKind::no_edge:
        return compare_types(x.type, y.type);
    case FormulaKind::no_edge2:
        if (auto c = compare_types(x.type, y.type); c != 0)
            return c;
        return compare_types(x.type2, y.type2);
    case FormulaKind::forall:
    case FormulaKind::exists:
        if (auto c = compare_types(x.type, y.type); c != 0)
            return c;
        if (auto c = x.vars <=> y.vars; c != 0)
            return c;
        break;
    default:
        break;
    }
    const auto &xs = x.children;
    const auto &ys = y.children;
    for (std::size_t i = 0; i < xs.size() && i < ys.size(); ++i)
        if (auto c = compare(xs[i], ys[i]); c != 0)
            return c;
    return xs.size() <=> ys.size();
}

namespace {

void collect_free(const Formula &f, std::set<VarName> &bound, std::set<VarName> &out)
{
    switch (f.kind()) {
    case FormulaKind::eq:
    case FormulaKind::neq:
        if (!bound.count(f.lhs()))
            out.insert(f.lhs());
        if (!bound.count(f.rhs()))
            out.insert(f.rhs());
        return;
    case FormulaKind::forall:
    case FormulaKind::exists: {
        std::vector<VarName> added;
        for (const auto &v : f.vars())
            if (bound.insert(v).second)
                added.push_back(v);
        collect_free(f.body(), bound, out);
        for (const auto &v : added)
            bound.erase(v);
        return;
    }
    default:
        for (const auto &c : f.children())
            collect_free(c, bound, out);
    }
}

void collect_all(const Formula &f, std::set<VarName> &out)
{
    if (f.is(FormulaKind::eq) || f.is(FormulaKind::neq)) {
        out.insert(f.lhs());
        out.insert(f.rhs());
    }
    for (const auto &v : f.vars())
        out.insert(v);
    for (const auto &c : f.children())
        collect_all(c, out);
}

std::string check_wf(const Formula &f, const Alphabet *alphabet, std::set<VarName> &scope,
                     const std::set<VarName> &free)
{
    auto check_type = [&](const EdgeType &t) -> std::string {
        if (!alphabet)
            return {};
        const EdgeType *d = alphabet->find(t.name);
        if (!d)
            return "unknown edge type '" + t.name + "'";
        if (d->arity != t.arity)
            return "edge type '" + t.name + "' used with arity " + std::to_string(t.arity) +
                   ", declared " + std::to_string(d->arity);
        return {};
    };
    switch (f.kind()) {
    case FormulaKind::no_edge:
        return check_type(f.type());
    case FormulaKind::no_edge2: {
        auto e = check_type(f.type());
        return e.empty() ? check_type(f.type2()) : e;
    }
    case FormulaKind::forall:
    case FormulaKind::exists: {
        if (auto e = check_type(f.type()); !e.empty())
            return e;
        if (static_cast<int>(f.vars().size()) != f.type().arity)
            return "quantifier over " + f.type().name + " binds " +
                   std::to_string(f.vars().size()) + " variables, arity is " +
                   std::to_string(f.type().arity);
        std::set<VarName> local;
        for (const auto &v : f.vars()) {
            if (!local.insert(v).second)
                return "variable '" + v + "' bound twice by one quantifier";
            if (scope.count(v))
                return "variable '" + v + "' rebound inside its own scope";
            if (free.count(v))
                return "bound variable '" + v + "' also occurs free";
        }
        for (const auto &v : f.vars())
            scope.insert(v);
        auto e = check_wf(f.body(), alphabet, scope, free);
        for (const auto &v : f.vars())
            scope.erase(v);
        return e;
    }
    default:
        for (const auto &c : f.children())
            if (auto e = check_wf(c, alphabet, scope, free); !e.empty())
                return e;
        return {};
    }
}

bool nnf_shape(const Formula &f)
{
    if (f.is(FormulaKind::negation))
        return false;
    return std::all_of(f.children().begin(), f.children().end(), nnf_shape);
}

// Printing. Conj/Disj children that are not atoms are parenthesized;
// quantifier bodies are parenthesized only when they are Conj/Disj.
void print(std::ostream &os, const Formula &f);

void print_operand(std::ostream &os, const Formula &f)
{
    if (f.is_atom()) {
        print(os, f);
    } else {
        os << '(';
        print(os, f);
        os << ')';
    }
}

void print(std::ostream &os, const Formula &f)
{
    switch (f.kind()) {
    case FormulaKind::top:
        os << "true";
        return;
    case FormulaKind::bot:
        os << "false";
        return;
    case FormulaKind::eq:
        os << f.lhs() << " = " << f.rhs();
        return;
    case FormulaKind::neq:
        os << f.lhs() << " != " << f.rhs();
        return;
    case FormulaKind::no_edge:
        os << "no " << f.type().name;
        return;
    case FormulaKind::no_edge2:
        os << "no " << f.type().name << "," << f.type2().name;
        return;
    case FormulaKind::negation:
        os << '!';
        print_operand(os, f.body());
        return;
    case FormulaKind::conj:
    case FormulaKind::disj: {
        if (f.children().empty()) {
            os << (f.is(FormulaKind::conj) ? "true" : "false");
            return;
        }
        const char *sep = f.is(FormulaKind::conj) ? " & " : " | ";
        for (std::size_t i = 0; i < f.children().size(); ++i) {
            if (i)
                os << sep;
            print_operand(os, f.children()[i]);
        }
        return;
    }
    case FormulaKind::forall:
    case FormulaKind::exists: {
        os << (f.is(FormulaKind::forall) ? "forall " : "exists ") << f.type().name << '(';
        for (std::size_t i = 0; i < f.vars().size(); ++i)
            os << (i ? "," : "") << f.vars()[i];
        os << "). ";
        if (f.body().is(FormulaKind::conj) || f.body().is(FormulaKind::disj)) {
            os << '(';
            print(os, f.body());
            os << ')';
        } else {
            print(os, f.body());
        }
        return;
    }
    }
}

} // namespace

std::set<VarName> free_vars(const Formula &f)
{
    std::set<VarName> bound, out;
    collect_free(f, bound, out);
    return out;
}

std::set<VarName> all_vars(const Formula &f)
{
    std::set<VarName> out;
    collect_all(f, out);
    return out;
}

std::string well_formedness_error(const Formula &f, const Alphabet *alphabet)
{
    std::set<VarName> scope;
    return check_wf(f, alphabet, scope, free_vars(f));
}

bool is_nnf_shape(const Formula &f) { return nnf_shape(f); }

std::string to_string(const Formula &f)
{
    std::ostringstream os;
    print(os, f);
    return os.str();
}

} // namespace adr
