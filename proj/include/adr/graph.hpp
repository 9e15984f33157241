#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace adr {

enum class EdgeKind { concrete, abstract };

/// A symbol of the ranked alphabet. Two types are the same type when their
/// names agree; the arity and kind travel with the name for convenience.
struct EdgeType {
    std::string name;
    int arity = 0;
    EdgeKind kind = EdgeKind::concrete;

    friend bool operator==(const EdgeType &, const EdgeType &) = default;
};

/// Edge types keyed by name.
class Alphabet {
public:
    Alphabet() = default;
    Alphabet(std::initializer_list<EdgeType> types);

    /// Throws InputError on a duplicate name or negative arity.
    void add(EdgeType type);
    bool contains(const std::string &name) const { return types_.count(name) != 0; }
    const EdgeType &at(const std::string &name) const;
    const EdgeType *find(const std::string &name) const;

    /// Types in name order.
    std::vector<EdgeType> types() const;
    std::size_t size() const { return types_.size(); }
    bool empty() const { return types_.empty(); }

    friend bool operator==(const Alphabet &, const Alphabet &) = default;

private:
    std::map<std::string, EdgeType> types_;
};

struct NodeId {
    std::string name;

    NodeId() = default;
    NodeId(std::string n) : name(std::move(n)) {}
    NodeId(const char *n) : name(n) {}

    friend auto operator<=>(const NodeId &, const NodeId &) = default;
    friend bool operator==(const NodeId &, const NodeId &) = default;
};

struct Edge {
    std::string id;
    EdgeType type;
    std::vector<NodeId> attachment;

    friend bool operator==(const Edge &, const Edge &) = default;
};

/// A finite hypergraph. Nodes are kept sorted; edges are kept sorted by id.
/// The class does not enforce well-formedness on insertion so that invalid
/// graphs can be built and reported by validate_graph.
class Graph {
public:
    Graph() = default;

    void add_node(NodeId n) { nodes_.insert(std::move(n)); }
    /// Inserts or replaces the edge with the same id.
    void add_edge(Edge e);
    /// Returns false if no edge carries this id.
    bool remove_edge(const std::string &id);

    const std::set<NodeId> &nodes() const { return nodes_; }
    const std::vector<Edge> &edges() const { return edges_; }
    bool has_node(const NodeId &n) const { return nodes_.count(n) != 0; }
    const Edge *find_edge(const std::string &id) const;
    bool has_edge_of_type(const std::string &type_name) const;
    std::size_t count_edges_of_type(const std::string &type_name) const;

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    std::set<NodeId> nodes_;
    std::vector<Edge> edges_;
};

struct Violation {
    std::string message;
};

/// Checks the graph invariants and membership of every edge type in
/// `alphabet`. An empty result means the graph is valid.
std::vector<Violation> validate_graph(const Graph &g, const Alphabet &alphabet);

/// A refinement rule replacing a single `lhs_type` edge by `rhs`.
/// `interface[j]` is the RHS node glued to the j-th tentacle of the
/// replaced edge.
struct Production {
    EdgeType lhs_type;
    Graph rhs;
    std::vector<NodeId> interface;

    bool is_interface(const NodeId &n) const;
    /// Position of `n` in the interface, if any.
    std::optional<std::size_t> interface_position(const NodeId &n) const;
    bool is_internal(const NodeId &n) const { return rhs.has_node(n) && !is_interface(n); }
    std::vector<NodeId> internal_nodes() const;

    friend bool operator==(const Production &, const Production &) = default;
};

/// Throws InputError when the production is malformed (interface length,
/// repeated interface nodes, interface outside R, invalid R).
void validate_production(const Production &p, const Alphabet &alphabet);

struct Match {
    std::string edge_id;
    std::vector<NodeId> node_map;

    friend bool operator==(const Match &, const Match &) = default;
};

/// All edges of `g` typed `p.lhs_type`, in edge-id order.
std::vector<Match> find_matches(const Graph &g, const Production &p);

/// Generates names `<base>_<k>` with k counting up from the seed, skipping
/// names already taken. Two generators with the same seed over the same
/// taken-set produce the same names.
class FreshNames {
public:
    explicit FreshNames(std::uint64_t seed = 1) : counter_(seed) {}

    std::string next(const std::string &base, const std::set<std::string> &taken);

private:
    std::uint64_t counter_;
};

inline constexpr std::uint64_t kDefaultSeed = 1;

/// Hyperedge replacement of the matched edge by a copy of `p.rhs`.
/// Internal nodes and copied edges receive fresh names from a generator
/// seeded with `seed`. Throws InputError if `m` is not a match of `p` in `g`.
Graph apply_production(const Graph &g, const Match &m, const Production &p,
                       std::uint64_t seed = kDefaultSeed);

} // namespace adr
