#include "adr/error.hpp"
#include "adr/logic.hpp"
#include "support/generators.hpp"

#include <doctest.h>

#include <set>

using namespace adr;

namespace {

const EdgeType B{"B", 2};
const EdgeType C{"C", 1};

using F = Formula;

Graph with_edges(std::vector<Edge> edges)
{
    Graph g;
    for (auto &e : edges) {
        for (const auto &n : e.attachment)
            g.add_node(n);
        g.add_edge(std::move(e));
    }
    return g;
}

// Independent count of labeled graphs: for k nodes, choose a multiset of at
// most m placements out of P(k) = sum over types of k^arity.
std::uint64_t multisets(std::uint64_t n, int k)
{
    // C(n + k - 1, k)
    if (k == 0)
        return 1;
    if (n == 0)
        return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n + static_cast<std::uint64_t>(i) - 1) / static_cast<std::uint64_t>(i);
    return r;
}

std::uint64_t expected_count(const std::vector<int> &arities, int max_nodes, int max_edges)
{
    std::uint64_t total = 0;
    for (int k = 0; k <= max_nodes; ++k) {
        std::uint64_t placements = 0;
        for (int a : arities) {
            std::uint64_t p = 1;
            for (int j = 0; j < a; ++j)
                p *= static_cast<std::uint64_t>(k);
            placements += p;
        }
        for (int m = 0; m <= max_edges; ++m)
            total += multisets(placements, m);
    }
    return total;
}

} // namespace

TEST_CASE("free_vars")
{
    CHECK(free_vars(F::eq("x", "y")) == std::set<VarName>{"x", "y"});
    CHECK(free_vars(F::forall(B, {"x", "y"}, F::eq("x", "y"))).empty());
    CHECK(free_vars(F::forall(B, {"x", "y"}, F::eq("x", "z"))) == std::set<VarName>{"z"});
}

TEST_CASE("well-formedness")
{
    Alphabet a{B, C};
    CHECK(well_formedness_error(F::forall(B, {"x", "y"}, F::top()), &a).empty());
    CHECK_FALSE(well_formedness_error(F::forall(B, {"x"}, F::top()), &a).empty());
    CHECK_FALSE(well_formedness_error(F::forall(B, {"x", "x"}, F::top()), &a).empty());
    CHECK_FALSE(well_formedness_error(
                    F::forall(C, {"x"}, F::exists(C, {"x"}, F::top())), &a)
                    .empty());
    CHECK_FALSE(well_formedness_error(
                    F::conj({F::eq("x", "x"), F::forall(C, {"x"}, F::top())}), &a)
                    .empty());
    CHECK_FALSE(well_formedness_error(F::no_edge({"Q", 1}), &a).empty());
}

TEST_CASE("nnf")
{
    CHECK(nnf(F::negation(F::forall(B, {"x", "y"}, F::eq("x", "y")))) ==
          F::exists(B, {"x", "y"}, F::neq("x", "y")));
    const auto phi = F::forall(B, {"x", "y"}, F::disj({F::eq("x", "y"), F::top()}));
    CHECK(nnf(phi) == phi);
    CHECK(nnf(F::negation(F::top())) == F::bot());
    CHECK(nnf(F::negation(F::negation(F::bot()))) == F::bot());
    CHECK_THROWS_AS(nnf(F::eq("x", "x")), InputError);

    const auto not_c = nnf(F::negation(F::no_edge(C)));
    REQUIRE(not_c.is(FormulaKind::exists));
    CHECK(not_c.type().name == "C");
    CHECK(not_c.body() == F::top());
    CHECK(equivalent(not_c, F::exists(C, {"z"}, F::top()), Alphabet{C}, {3, 3}));

    const auto not_cb = nnf(F::negation(F::no_edge2(C, B)));
    CHECK(not_cb.is(FormulaKind::disj));
    CHECK(equivalent(not_cb, F::negation(F::no_edge2(C, B)), Alphabet{B, C}, {2, 2}));
    CHECK(is_nnf_shape(not_cb));
}

TEST_CASE("satisfies")
{
    const auto g = with_edges({{"c", C, {"n"}}});
    CHECK_FALSE(satisfies(g, F::no_edge(C)));
    CHECK(satisfies(g, F::forall(B, {"x", "y"}, F::bot())));
    CHECK_FALSE(satisfies(g, F::exists(B, {"x", "y"}, F::top())));
    CHECK(satisfies(g, F::exists(C, {"z"}, F::eq("z", "z"))));
    CHECK(satisfies(g, F::negation(F::no_edge2(B, C))));
    CHECK(satisfies(g, {{"x", "n"}, {"y", "n"}}, F::eq("x", "y")));
    CHECK_THROWS_AS(satisfies(g, F::eq("x", "y")), InputError);

    // The running example's pre-condition rejects any graph with a C edge.
    const auto golden = F::conj(
        {F::no_edge(C),
         F::forall(B, {"x", "y"}, F::forall(C, {"z"}, F::no_edge(C))),
         F::forall(B, {"x", "y"}, F::forall(C, {"z"}, F::eq("y", "z")))});
    CHECK_FALSE(satisfies(g, golden));
    CHECK(satisfies(with_edges({{"b", B, {"p", "q"}}}), golden));
}

TEST_CASE("enumeration counts match the closed form")
{
    CHECK(enumerate_graphs(Alphabet{C}, {1, 1}).size() == 3);
    CHECK(enumerate_graphs(Alphabet{B}, {2, 1}).size() == 8);
    CHECK(enumerate_graphs(Alphabet{B, C}, {0, 3}).size() == 1);

    struct Case {
        Alphabet a;
        std::vector<int> arities;
        Bounds b;
    };
    const std::vector<Case> cases{
        {Alphabet{C}, {1}, {1, 1}},
        {Alphabet{B}, {2}, {2, 1}},
        {Alphabet{B, C}, {2, 1}, {2, 2}},
        {Alphabet{{"N", 0}, C}, {0, 1}, {2, 3}},
        {Alphabet{B, C}, {2, 1}, {3, 3}},
    };
    for (const auto &c : cases) {
        GraphEnumerator gen(c.a, c.b);
        std::set<std::string> seen;
        std::uint64_t n = gen.for_each([&](const Graph &g) {
            std::string key = std::to_string(g.nodes().size()) + "|";
            std::vector<std::string> placements;
            for (const auto &e : g.edges()) {
                std::string p = e.type.name + "(";
                for (const auto &x : e.attachment)
                    p += x.name + ",";
                placements.push_back(p + ")");
            }
            std::sort(placements.begin(), placements.end());
            for (const auto &p : placements)
                key += p;
            seen.insert(key);
            return true;
        });
        CHECK(n == expected_count(c.arities, c.b.max_nodes, c.b.max_edges));
        CHECK(seen.size() == n);
    }
}

TEST_CASE("enumeration is restartable and can stop early")
{
    GraphEnumerator gen(Alphabet{B}, {2, 2});
    std::vector<Graph> first;
    while (auto g = gen.next())
        first.push_back(*g);
    gen.reset();
    std::vector<Graph> second;
    while (auto g = gen.next())
        second.push_back(*g);
    CHECK(first == second);
    CHECK(first.front() == Graph{});

    int visited = 0;
    CHECK(gen.for_each([&](const Graph &) { return ++visited < 5; }) == 5);
}

TEST_CASE("equivalent")
{
    Alphabet a{C};
    CHECK(equivalent(F::top(), F::conj({}), a, {2, 2}));
    CHECK(equivalent(F::no_edge(C), F::forall(C, {"z"}, F::neq("z", "z")), a, {3, 3}));
    CHECK_FALSE(equivalent(F::no_edge(C), F::top(), a, {1, 1}));
    auto w = distinguishing_graph(F::no_edge(C), F::top(), a, {1, 1});
    REQUIRE(w);
    CHECK(w->edges().size() == 1);
}

TEST_CASE("simplify")
{
    CHECK(simplify(F::conj({F::top(), F::no_edge(C), F::top()})) == F::no_edge(C));
    const auto x = F::forall(C, {"z"}, F::eq("z", "z"));
    CHECK(simplify(F::conj({x, x})) == simplify(x));
    CHECK(simplify(F::conj({})) == F::top());
    CHECK(simplify(F::disj({})) == F::bot());
    CHECK(simplify(F::disj({F::eq("a", "b"), F::top()})) == F::top());
    CHECK(simplify(F::conj({F::eq("a", "b"), F::bot()})) == F::bot());

    // The raw conjunction of the six wdef results of the running example.
    const auto raw = F::conj({F::conj({F::top(), F::no_edge(C)}), F::conj({F::top(), F::top()}),
                              F::conj({F::top(), F::top()})});
    CHECK(simplify(raw) == F::no_edge(C));

    CHECK(simplify(F::conj({F::no_edge(C), F::eq("a", "b")})) ==
          simplify(F::conj({F::eq("a", "b"), F::no_edge(C)})));
}

TEST_CASE("logic properties on random formulas")
{
    testing::Rng rng(77);
    for (int iter = 0; iter < 300; ++iter) {
        const auto alphabet = testing::random_alphabet(rng);
        testing::FormulaSampler sampler(alphabet, true);
        const auto phi = sampler.closed(rng, 3);
        CAPTURE(to_string(phi));
        CHECK(well_formedness_error(phi, &alphabet).empty());

        const auto n = nnf(phi);
        CHECK(is_nnf_shape(n));
        CHECK(is_closed(n));
        const auto s = simplify(n);
        CHECK(simplify(s) == s);
        CHECK(nnf(n) == n);

        for (int k = 0; k < 4; ++k) {
            const auto g = testing::random_graph(rng, alphabet, 3, 3);
            const bool v = satisfies(g, phi);
            CHECK(satisfies(g, n) == v);
            CHECK(satisfies(g, s) == v);
            CHECK(satisfies(testing::rename_nodes(g, rng), phi) == v);
        }
    }
}
