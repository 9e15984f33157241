#pragma once

#include "adr/formula.hpp"
#include "adr/graph.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>

namespace adr {

using Assignment = std::map<VarName, NodeId>;

/// Negation normal form. Throws InputError if `f` is not closed.
/// Negated edge-absence literals become existentials over fresh variables.
Formula nnf(const Formula &f);

/// Negation pushed to the leaves without the closedness requirement; used
/// internally where the negated formula has free variables.
Formula push_negation(const Formula &f);

/// Satisfaction of `f` by `g` under `h`. Quantifiers range over the
/// attachment tuples of same-typed edges. Throws InputError on a free
/// variable that `h` does not cover.
bool satisfies(const Graph &g, const Assignment &h, const Formula &f);
inline bool satisfies(const Graph &g, const Formula &f) { return satisfies(g, {}, f); }

struct Bounds {
    int max_nodes = 3;
    int max_edges = 3;
};

/// Every graph with node set {n1..nk}, k <= max_nodes, and at most
/// max_edges edges over the alphabet, parallel edges included, each exactly
/// once. Order: by node count, then edge count, then edge placement
/// multiset in lexicographic order. The enumeration is restartable.
class GraphEnumerator {
public:
    GraphEnumerator(const Alphabet &alphabet, Bounds bounds);

    /// The next graph, or nullopt when exhausted.
    std::optional<Graph> next();
    void reset();

    /// Invokes `fn` on every graph; stops early when `fn` returns false.
    /// Returns the number of graphs visited.
    std::uint64_t for_each(const std::function<bool(const Graph &)> &fn);

private:
    struct Placement {
        EdgeType type;
        std::vector<NodeId> attachment;
    };
    void start_node_count(int k);
    bool advance_multiset();
    Graph build() const;

    std::vector<EdgeType> types_;
    Bounds bounds_;
    int nodes_ = 0;
    std::vector<Placement> placements_;
    std::vector<std::size_t> chosen_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<Graph> enumerate_graphs(const Alphabet &alphabet, Bounds bounds);

/// A graph in the bounded universe on which the two closed formulas
/// disagree, or nullopt when they agree everywhere.
std::optional<Graph> distinguishing_graph(const Formula &a, const Formula &b,
                                          const Alphabet &alphabet, Bounds bounds);

bool equivalent(const Formula &a, const Formula &b, const Alphabet &alphabet, Bounds bounds);

/// Normalizes a formula to a canonical shape. Rules, applied to a fixed
/// point: unit and zero elements of conjunction/disjunction, flattening,
/// duplicate removal, canonical child order, one-child connectives
/// collapsed, `forall` distributed over conjunction and `exists` over
/// disjunction, `forall _. true` -> true and `exists _. false` -> false.
Formula simplify(const Formula &f);

} // namespace adr
