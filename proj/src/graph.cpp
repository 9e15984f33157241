#include "adr/graph.hpp"

#include "adr/error.hpp"

#include <algorithm>

namespace adr {

Alphabet::Alphabet(std::initializer_list<EdgeType> types)
{
    for (const auto &t : types)
        add(t);
}

void Alphabet::add(EdgeType type)
{
    if (type.arity < 0)
        throw InputError("edge type '" + type.name + "' has negative arity");
    auto name = type.name;
    if (!types_.emplace(name, std::move(type)).second)
        throw InputError("duplicate edge type '" + name + "'");
}

const EdgeType &Alphabet::at(const std::string &name) const
{
    auto it = types_.find(name);
    if (it == types_.end())
        throw InputError("unknown edge type '" + name + "'");
    return it->second;
}

const EdgeType *Alphabet::find(const std::string &name) const
{
    auto it = types_.find(name);
    return it == types_.end() ? nullptr : &it->second;
}

std::vector<EdgeType> Alphabet::types() const
{
    std::vector<EdgeType> out;
    out.reserve(types_.size());
    for (const auto &[_, t] : types_)
        out.push_back(t);
    return out;
}

void Graph::add_edge(Edge e)
{
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e.id,
                               [](const Edge &a, const std::string &id) { return a.id < id; });
    if (it != edges_.end() && it->id == e.id)
        *it = std::move(e);
    else
        edges_.insert(it, std::move(e));
}

bool Graph::remove_edge(const std::string &id)
{
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge &a, const std::string &i) { return a.id < i; });
    if (it == edges_.end() || it->id != id)
        return false;
    edges_.erase(it);
    return true;
}

const Edge *Graph::find_edge(const std::string &id) const
{
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge &a, const std::string &i) { return a.id < i; });
    return (it != edges_.end() && it->id == id) ? &*it : nullptr;
}

bool Graph::has_edge_of_type(const std::string &type_name) const
{
    return std::any_of(edges_.begin(), edges_.end(),
                       [&](const Edge &e) { return e.type.name == type_name; });
}

std::size_t Graph::count_edges_of_type(const std::string &type_name) const
{
    return static_cast<std::size_t>(std::count_if(
        edges_.begin(), edges_.end(), [&](const Edge &e) { return e.type.name == type_name; }));
}

std::vector<Violation> validate_graph(const Graph &g, const Alphabet &alphabet)
{
    std::vector<Violation> out;
    for (const auto &e : g.edges()) {
        const EdgeType *declared = alphabet.find(e.type.name);
        if (!declared) {
            out.push_back({"edge '" + e.id + "': unknown edge type '" + e.type.name + "'"});
            continue;
        }
        if (static_cast<int>(e.attachment.size()) != declared->arity) {
            out.push_back({"edge '" + e.id + "': arity mismatch (type " + declared->name + "/" +
                           std::to_string(declared->arity) + ", " +
                           std::to_string(e.attachment.size()) + " attachment nodes)"});
        }
        for (const auto &n : e.attachment)
            if (!g.has_node(n))
                out.push_back({"edge '" + e.id + "': attachment node '" + n.name +
                               "' is not a node of the graph"});
    }
    return out;
}

bool Production::is_interface(const NodeId &n) const
{
    return std::find(interface.begin(), interface.end(), n) != interface.end();
}

std::optional<std::size_t> Production::interface_position(const NodeId &n) const
{
    auto it = std::find(interface.begin(), interface.end(), n);
    if (it == interface.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - interface.begin());
}

std::vector<NodeId> Production::internal_nodes() const
{
    std::vector<NodeId> out;
    for (const auto &n : rhs.nodes())
        if (!is_interface(n))
            out.push_back(n);
    return out;
}

void validate_production(const Production &p, const Alphabet &alphabet)
{
    if (static_cast<int>(p.interface.size()) != p.lhs_type.arity)
        throw InputError("production for '" + p.lhs_type.name + "': interface has " +
                         std::to_string(p.interface.size()) + " nodes, lhs arity is " +
                         std::to_string(p.lhs_type.arity));
    std::set<NodeId> seen;
    for (const auto &n : p.interface) {
        if (!seen.insert(n).second)
            throw InputError("interface node '" + n.name + "' repeated");
        if (!p.rhs.has_node(n))
            throw InputError("interface node '" + n.name + "' is not a node of the rhs");
    }
    auto violations = validate_graph(p.rhs, alphabet);
    if (!violations.empty())
        throw InputError("rhs: " + violations.front().message);
}

std::vector<Match> find_matches(const Graph &g, const Production &p)
{
    std::vector<Match> out;
    for (const auto &e : g.edges())
        if (e.type.name == p.lhs_type.name)
            out.push_back({e.id, e.attachment});
    return out;
}

std::string FreshNames::next(const std::string &base, const std::set<std::string> &taken)
{
    for (;;) {
        auto candidate = base + "_" + std::to_string(counter_++);
        if (!taken.count(candidate))
            return candidate;
    }
}

Graph apply_production(const Graph &g, const Match &m, const Production &p, std::uint64_t seed)
{
    const Edge *target = g.find_edge(m.edge_id);
    if (!target)
        throw InputError("match refers to unknown edge '" + m.edge_id + "'");
    if (target->type.name != p.lhs_type.name)
        throw InputError("edge '" + m.edge_id + "' has type " + target->type.name +
                         ", production expects " + p.lhs_type.name);
    if (!m.node_map.empty() && m.node_map != target->attachment)
        throw InputError("match node map disagrees with the attachment of '" + m.edge_id + "'");
    if (target->attachment.size() != p.interface.size())
        throw InputError("edge '" + m.edge_id + "' arity differs from the production interface");

    std::set<std::string> node_names;
    for (const auto &n : g.nodes())
        node_names.insert(n.name);
    std::set<std::string> edge_names;
    for (const auto &e : g.edges())
        edge_names.insert(e.id);

    FreshNames fresh(seed);
    std::map<NodeId, NodeId> image;
    for (std::size_t j = 0; j < p.interface.size(); ++j)
        image[p.interface[j]] = target->attachment[j];
    for (const auto &n : p.rhs.nodes()) {
        if (image.count(n))
            continue;
        auto name = fresh.next(n.name, node_names);
        node_names.insert(name);
        image[n] = NodeId(name);
    }

    Graph out = g;
    out.remove_edge(m.edge_id);
    edge_names.erase(m.edge_id);
    for (const auto &[_, n] : image)
        out.add_node(n);
    for (const auto &e : p.rhs.edges()) {
        Edge copy{fresh.next(e.id, edge_names), e.type, {}};
        edge_names.insert(copy.id);
        for (const auto &n : e.attachment)
            copy.attachment.push_back(image.at(n));
        out.add_edge(std::move(copy));
    }
    return out;
}

} // namespace adr
