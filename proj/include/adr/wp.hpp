#pragma once

#include "adr/formula.hpp"
#include "adr/graph.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace adr {

enum class Quant { forall, exists };

/// What the environment records for a quantified variable.
struct Binding {
    Quant quant;
    EdgeType type;
    NodeId node;

    friend bool operator==(const Binding &, const Binding &) = default;
};

/// Partial map from variables to (quantifier, edge type, node).
class Environment {
public:
    Environment() = default;

    const Binding *find(const VarName &x) const;
    /// Returns a copy with the variables bound componentwise to `nodes`.
    /// Throws InputError if a variable is already bound.
    Environment extend(Quant q, const EdgeType &d, const std::vector<VarName> &vars,
                       const std::vector<NodeId> &nodes) const;
    /// Nodes used by the bindings, for picking external representatives.
    std::set<NodeId> nodes() const;
    const std::map<VarName, Binding> &bindings() const { return bindings_; }

    friend bool operator==(const Environment &, const Environment &) = default;

private:
    std::map<VarName, Binding> bindings_;
};

/// Outcome of the auxiliary case analysis on an equality x1 = x2.
/// `edge_absent` carries D for the "one internal, one external" case,
/// `same_internal` carries (D, D') for two universals on one internal node,
/// `deferred` is the otherwise branch.
struct FwpCase {
    enum class Tag { top, bot, edge_absent, same_internal, deferred };
    Tag tag = Tag::deferred;
    std::optional<EdgeType> d1;
    std::optional<EdgeType> d2;

    static FwpCase top() { return {Tag::top, {}, {}}; }
    static FwpCase bot() { return {Tag::bot, {}, {}}; }
    static FwpCase edge_absent(EdgeType d) { return {Tag::edge_absent, std::move(d), {}}; }
    static FwpCase same_internal(EdgeType d, EdgeType d2) { return {Tag::same_internal, std::move(d), std::move(d2)}; }
    static FwpCase deferred() { return {}; }

    friend bool operator==(const FwpCase &, const FwpCase &) = default;
};

/// How quantifier clauses pick node tuples.
///   literal:  every tuple over nodes(R) + externals, dropping tuples with
///             internal nodes when R has no edge of the quantified type.
///   feasible: attachment tuples of R's edges of that type, plus every tuple
///             without internal nodes.
enum class Enumeration { literal, feasible };

/// Seeded faults for mutation testing of the test suites. `none` in normal
/// use; each other value disables one piece of the algorithm.
enum class Mutant {
    none,
    drop_exists_internal_top,    // both existential on one internal node -> true
    drop_internal_vs_outside,    // universal internal vs existential outside/interface -> false
    drop_distinct_internals,     // universal internal vs different internal -> false
    drop_edge_absent,            // universal internal vs universal outside -> no D
    drop_same_internal,          // two universals on one internal node -> no D,D'
    drop_exists_witness,         // the R-only disjunct of the existential clause
    drop_choose_condition,       // keep internal nodes even when R lacks the type
};

struct WpOptions {
    Enumeration enumeration = Enumeration::literal;
    Mutant mutant = Mutant::none;
};

/// Maps interface variables z1..zm to positions of the LHS edge.
/// `vars[j]` is the variable assigned to position j.
struct InterfaceVars {
    std::vector<VarName> vars;

    /// z1..zm.
    static InterfaceVars canonical(int arity);
    std::optional<std::size_t> position_of(const VarName &z) const;
};

/// Assignment of free post-condition variables to RHS nodes.
using NodeMap = std::map<VarName, NodeId>;

FwpCase fwp_case(const Production &p, const VarName &x1, const VarName &x2, const Environment &env,
                 const WpOptions &opts = {});

/// `n` fresh representative names, v1, v2, ... skipping names used by R or
/// by the environment.
std::vector<NodeId> external_nodes(const Production &p, const Environment &env, int n);

std::vector<std::vector<NodeId>> choose_assignments(const Production &p, const EdgeType &d,
                                                     const std::vector<NodeId> &externals,
                                                     const WpOptions &opts = {});

/// The transformer that asks whether R alone guarantees the post-condition.
/// `psi` is the formula returned in the deferred case.
Formula wdef(const Production &p, const Formula &psi, const Environment &env, const Formula &post,
             const WpOptions &opts = {});

VarName translate_var(const VarName &x, const NodeMap &h, const Production &p,
                      const InterfaceVars &zs);

/// The transformer that pulls the post-condition back to the host graph.
Formula wp_transform(const Production &p, const InterfaceVars &zs, const NodeMap &h,
                     const Environment &env, const Formula &post, const WpOptions &opts = {});

struct WpResult {
    Formula definite;  // wdef part
    Formula pulled;    // wp_transform part
    Formula pre;       // simplify(definite & pulled)
};

/// Weakest pre-condition of `p` for the closed post-condition `post`.
/// Throws InputError on a non-closed post or ill-formed maps, FragmentError
/// when the post (after negation normal form) is outside the fragment.
WpResult wpre_parts(const Production &p, const Formula &post, const NodeMap &h,
                    const InterfaceVars &zs, const WpOptions &opts = {});
Formula wpre(const Production &p, const Formula &post, const NodeMap &h, const InterfaceVars &zs,
             const WpOptions &opts = {});
inline Formula wpre(const Production &p, const Formula &post, const WpOptions &opts = {})
{
    return wpre(p, post, {}, InterfaceVars::canonical(p.lhs_type.arity), opts);
}

} // namespace adr
