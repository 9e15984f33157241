#include "adr/logic.hpp"

#include "adr/error.hpp"

#include <algorithm>
#include <unordered_map>

namespace adr {

// ---------------------------------------------------------------------------
// Negation normal form

namespace {

class NegationPusher {
public:
    explicit NegationPusher(std::set<VarName> taken) : taken_(std::move(taken)) {}

    Formula positive(const Formula &f)
    {
        switch (f.kind()) {
        case FormulaKind::negation:
            return negative(f.body());
        case FormulaKind::conj:
        case FormulaKind::disj: {
            std::vector<Formula> cs;
            for (const auto &c : f.children())
                cs.push_back(positive(c));
            return f.is(FormulaKind::conj) ? Formula::conj(std::move(cs))
                                           : Formula::disj(std::move(cs));
        }
        case FormulaKind::forall:
            return Formula::forall(f.type(), f.vars(), positive(f.body()));
        case FormulaKind::exists:
            return Formula::exists(f.type(), f.vars(), positive(f.body()));
        default:
            return f;
        }
    }

    Formula negative(const Formula &f)
    {
        switch (f.kind()) {
        case FormulaKind::top:
            return Formula::bot();
        case FormulaKind::bot:
            return Formula::top();
        case FormulaKind::eq:
            return Formula::neq(f.lhs(), f.rhs());
        case FormulaKind::neq:
            return Formula::eq(f.lhs(), f.rhs());
        case FormulaKind::negation:
            return positive(f.body());
        case FormulaKind::conj:
        case FormulaKind::disj: {
            std::vector<Formula> cs;
            for (const auto &c : f.children())
                cs.push_back(negative(c));
            return f.is(FormulaKind::conj) ? Formula::disj(std::move(cs))
                                           : Formula::conj(std::move(cs));
        }
        case FormulaKind::forall:
            return Formula::exists(f.type(), f.vars(), negative(f.body()));
        case FormulaKind::exists:
            return Formula::forall(f.type(), f.vars(), negative(f.body()));
        case FormulaKind::no_edge:
            return some_edge(f.type());
        case FormulaKind::no_edge2:
            return Formula::disj({some_edge(f.type()), some_edge(f.type2())});
        }
        return f;
    }

private:
    Formula some_edge(const EdgeType &d)
    {
        std::vector<VarName> vars;
        for (int j = 0; j < d.arity; ++j)
            vars.push_back(fresh());
        return Formula::exists(d, std::move(vars), Formula::top());
    }

    VarName fresh()
    {
        for (;;) {
            VarName v = "w" + std::to_string(++counter_);
            if (taken_.insert(v).second)
                return v;
        }
    }

    std::set<VarName> taken_;
    int counter_ = 0;
};

} // namespace

Formula push_negation(const Formula &f)
{
    NegationPusher pusher(all_vars(f));
    return pusher.positive(f);
}

Formula nnf(const Formula &f)
{
    auto free = free_vars(f);
    if (!free.empty())
        throw InputError("formula is not closed (free variable '" + *free.begin() + "')");
    return push_negation(f);
}

// ---------------------------------------------------------------------------
// Satisfaction

namespace {

class Evaluator {
public:
    Evaluator(const Graph &g, const Assignment &h) : h_(h)
    {
        for (const auto &e : g.edges())
            by_type_[e.type.name].push_back(&e.attachment);
    }

    bool eval(const Formula &f)
    {
        switch (f.kind()) {
        case FormulaKind::top:
            return true;
        case FormulaKind::bot:
            return false;
        case FormulaKind::eq:
            return lookup(f.lhs()) == lookup(f.rhs());
        case FormulaKind::neq:
            return lookup(f.lhs()) != lookup(f.rhs());
        case FormulaKind::no_edge:
            return !has(f.type().name);
        case FormulaKind::no_edge2:
            return !has(f.type().name) && !has(f.type2().name);
        case FormulaKind::negation:
            return !eval(f.body());
        case FormulaKind::conj:
            for (const auto &c : f.children())
                if (!eval(c))
                    return false;
            return true;
        case FormulaKind::disj:
            for (const auto &c : f.children())
                if (eval(c))
                    return true;
            return false;
        case FormulaKind::forall:
        case FormulaKind::exists: {
            const bool universal = f.is(FormulaKind::forall);
            auto it = by_type_.find(f.type().name);
            if (it == by_type_.end())
                return universal;
            for (const auto *att : it->second) {
                if (att->size() != f.vars().size())
                    throw InputError("quantifier over " + f.type().name +
                                     " binds the wrong number of variables");
                const std::size_t mark = stack_.size();
                for (std::size_t j = 0; j < att->size(); ++j)
                    stack_.emplace_back(&f.vars()[j], &(*att)[j]);
                const bool r = eval(f.body());
                stack_.resize(mark);
                if (r != universal)
                    return r;
            }
            return universal;
        }
        }
        return false;
    }

private:
    bool has(const std::string &type) const
    {
        auto it = by_type_.find(type);
        return it != by_type_.end() && !it->second.empty();
    }

    const NodeId &lookup(const VarName &x) const
    {
        for (auto it = stack_.rbegin(); it != stack_.rend(); ++it)
            if (*it->first == x)
                return *it->second;
        auto it = h_.find(x);
        if (it == h_.end())
            throw InputError("variable '" + x + "' is not assigned");
        return it->second;
    }

    const Assignment &h_;
    std::unordered_map<std::string, std::vector<const std::vector<NodeId> *>> by_type_;
    std::vector<std::pair<const VarName *, const NodeId *>> stack_;
};

} // namespace

bool satisfies(const Graph &g, const Assignment &h, const Formula &f)
{
    Evaluator ev(g, h);
    return ev.eval(f);
}

// ---------------------------------------------------------------------------
// Bounded enumeration

GraphEnumerator::GraphEnumerator(const Alphabet &alphabet, Bounds bounds)
    : types_(alphabet.types()), bounds_(bounds)
{
    if (bounds.max_nodes < 0 || bounds.max_edges < 0)
        throw InputError("enumeration bounds must be non-negative");
}

void GraphEnumerator::reset()
{
    started_ = false;
    done_ = false;
}

void GraphEnumerator::start_node_count(int k)
{
    nodes_ = k;
    placements_.clear();
    chosen_.clear();
    for (const auto &t : types_) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(t.arity), 0);
        if (t.arity > 0 && k == 0)
            continue;
        for (;;) {
            Placement p{t, {}};
            for (auto i : idx)
                p.attachment.emplace_back("n" + std::to_string(i + 1));
            placements_.push_back(std::move(p));
            int pos = t.arity - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 == static_cast<std::size_t>(k)) {
                idx[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0)
                break;
            ++idx[static_cast<std::size_t>(pos)];
        }
    }
}

bool GraphEnumerator::advance_multiset()
{
    const std::size_t p = placements_.size();
    for (std::size_t i = chosen_.size(); i-- > 0;) {
        if (chosen_[i] + 1 < p) {
            const std::size_t v = chosen_[i] + 1;
            for (std::size_t j = i; j < chosen_.size(); ++j)
                chosen_[j] = v;
            return true;
        }
    }
    if (p > 0 && static_cast<int>(chosen_.size()) < bounds_.max_edges) {
        chosen_.assign(chosen_.size() + 1, 0);
        return true;
    }
    return false;
}

Graph GraphEnumerator::build() const
{
    Graph g;
    for (int i = 1; i <= nodes_; ++i)
        g.add_node(NodeId("n" + std::to_string(i)));
    for (std::size_t j = 0; j < chosen_.size(); ++j) {
        const auto &pl = placements_[chosen_[j]];
        g.add_edge(Edge{"e" + std::to_string(j + 1), pl.type, pl.attachment});
    }
    return g;
}

std::optional<Graph> GraphEnumerator::next()
{
    if (done_)
        return std::nullopt;
    if (!started_) {
        started_ = true;
        start_node_count(0);
        return build();
    }
    if (!advance_multiset()) {
        if (nodes_ >= bounds_.max_nodes) {
            done_ = true;
            return std::nullopt;
        }
        start_node_count(nodes_ + 1);
    }
    return build();
}

std::uint64_t GraphEnumerator::for_each(const std::function<bool(const Graph &)> &fn)
{
    reset();
    std::uint64_t n = 0;
    while (auto g = next()) {
        ++n;
        if (!fn(*g))
            break;
    }
    return n;
}

std::vector<Graph> enumerate_graphs(const Alphabet &alphabet, Bounds bounds)
{
    std::vector<Graph> out;
    GraphEnumerator en(alphabet, bounds);
    while (auto g = en.next())
        out.push_back(std::move(*g));
    return out;
}

std::optional<Graph> distinguishing_graph(const Formula &a, const Formula &b,
                                          const Alphabet &alphabet, Bounds bounds)
{
    std::optional<Graph> witness;
    GraphEnumerator en(alphabet, bounds);
    en.for_each([&](const Graph &g) {
        if (satisfies(g, a) != satisfies(g, b)) {
            witness = g;
            return false;
        }
        return true;
    });
    return witness;
}

bool equivalent(const Formula &a, const Formula &b, const Alphabet &alphabet, Bounds bounds)
{
    return !distinguishing_graph(a, b, alphabet, bounds).has_value();
}

// ---------------------------------------------------------------------------
// Simplification

namespace {

Formula simp(const Formula &f);

Formula simp_connective(const Formula &f)
{
    const bool is_conj = f.is(FormulaKind::conj);
    const FormulaKind unit = is_conj ? FormulaKind::top : FormulaKind::bot;
    const FormulaKind zero = is_conj ? FormulaKind::bot : FormulaKind::top;

    std::vector<Formula> flat;
    for (const auto &c : f.children()) {
        Formula s = simp(c);
        if (s.is(f.kind()))
            flat.insert(flat.end(), s.children().begin(), s.children().end());
        else
            flat.push_back(std::move(s));
    }
    std::vector<Formula> kept;
    for (auto &c : flat) {
        if (c.is(zero))
            return c;
        if (!c.is(unit))
            kept.push_back(std::move(c));
    }
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    if (kept.empty())
        return is_conj ? Formula::top() : Formula::bot();
    if (kept.size() == 1)
        return kept.front();
    return is_conj ? Formula::conj(std::move(kept)) : Formula::disj(std::move(kept));
}

Formula simp_quantifier(const Formula &f)
{
    const bool universal = f.is(FormulaKind::forall);
    Formula body = simp(f.body());
    const FormulaKind absorbing = universal ? FormulaKind::top : FormulaKind::bot;
    const FormulaKind distributes = universal ? FormulaKind::conj : FormulaKind::disj;
    if (body.is(absorbing))
        return body;
    auto wrap = [&](Formula b) {
        return universal ? Formula::forall(f.type(), f.vars(), std::move(b))
                         : Formula::exists(f.type(), f.vars(), std::move(b));
    };
    if (body.is(distributes)) {
        std::vector<Formula> parts;
        for (const auto &c : body.children())
            parts.push_back(wrap(c));
        Formula spread = universal ? Formula::conj(std::move(parts)) : Formula::disj(std::move(parts));
        return simp_connective(spread);
    }
    return wrap(std::move(body));
}

Formula simp(const Formula &f)
{
    switch (f.kind()) {
    case FormulaKind::conj:
    case FormulaKind::disj:
        return simp_connective(f);
    case FormulaKind::forall:
    case FormulaKind::exists:
        return simp_quantifier(f);
    case FormulaKind::negation:
        return Formula::negation(simp(f.body()));
    default:
        return f;
    }
}

} // namespace

Formula simplify(const Formula &f)
{
    Formula cur = simp(f);
    for (;;) {
        Formula again = simp(cur);
        if (again == cur)
            return cur;
        cur = std::move(again);
    }
}

} // namespace adr
