#pragma once

#include "adr/graph.hpp"

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace adr {

using VarName = std::string;

enum class FormulaKind {
    // The enumerator order is the canonical ordering used by simplify.
    top,
    bot,
    no_edge,
    no_edge2,
    eq,
    neq,
    conj,
    disj,
    forall,
    exists,
    negation,
};

/// Immutable formula of the graph logic. Cheap to copy: nodes are shared.
class Formula {
public:
    struct Node;

    /// `true`.
    Formula();

    static Formula top();
    static Formula bot();
    static Formula eq(VarName x1, VarName x2);
    static Formula neq(VarName x1, VarName x2);
    static Formula no_edge(EdgeType d);
    static Formula no_edge2(EdgeType d1, EdgeType d2);
    static Formula negation(Formula f);
    static Formula conj(std::vector<Formula> children);
    static Formula disj(std::vector<Formula> children);
    static Formula forall(EdgeType d, std::vector<VarName> vars, Formula body);
    static Formula exists(EdgeType d, std::vector<VarName> vars, Formula body);

    FormulaKind kind() const;
    /// Eq / Neq operands.
    const VarName &lhs() const;
    const VarName &rhs() const;
    /// Quantifier or NoEdge type; NoEdge2 keeps its second type in type2().
    const EdgeType &type() const;
    const EdgeType &type2() const;
    const std::vector<VarName> &vars() const;
    /// Conj/Disj children; the single child of Not or a quantifier body.
    const std::vector<Formula> &children() const;
    const Formula &body() const;

    bool is(FormulaKind k) const { return kind() == k; }
    bool is_atom() const;
    bool is_quantifier() const { return is(FormulaKind::forall) || is(FormulaKind::exists); }

    /// Total order: kind first, then payload, then children lexicographically.
    friend std::strong_ordering compare(const Formula &a, const Formula &b);
    friend bool operator==(const Formula &a, const Formula &b) { return compare(a, b) == 0; }
    friend bool operator<(const Formula &a, const Formula &b) { return compare(a, b) < 0; }

    std::size_t size() const;

private:
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct Formula::Node {
    FormulaKind kind;
    VarName x1, x2;
    EdgeType type, type2;
    std::vector<VarName> vars;
    std::vector<Formula> children;
};

std::set<VarName> free_vars(const Formula &f);
inline bool is_closed(const Formula &f) { return free_vars(f).empty(); }

/// Every variable occurring anywhere in the formula, bound or free.
std::set<VarName> all_vars(const Formula &f);

/// Checks quantifier arities against the alphabet (when non-null), that a
/// quantifier does not bind a variable twice or rebind one bound by an
/// enclosing quantifier, and that no bound name is also free. Returns the
/// first problem found, or an empty string.
std::string well_formedness_error(const Formula &f, const Alphabet *alphabet = nullptr);

/// True if the formula contains no Not and no Bot except as a leaf.
bool is_nnf_shape(const Formula &f);

/// Debug rendering in the concrete DSL syntax (same as the serializer).
std::string to_string(const Formula &f);

} // namespace adr
