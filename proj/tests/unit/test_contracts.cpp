#include "adr/contracts.hpp"
#include "adr/error.hpp"

#include <doctest.h>

using namespace adr;
using F = Formula;

namespace {

const EdgeType A{"A", 1, EdgeKind::abstract};
const EdgeType B{"B", 2};
const EdgeType C{"C", 1};
const Alphabet kAlphabet{A, B, C};

Production example_production()
{
    Production p;
    p.lhs_type = A;
    p.rhs.add_node("u");
    p.rhs.add_node("u1");
    p.rhs.add_edge({"b", B, {"u1", "u"}});
    p.interface = {"u1"};
    return p;
}

F phi() { return F::forall(B, {"x", "y"}, F::forall(C, {"z"}, F::eq("y", "z"))); }

const auto kZs = InterfaceVars::canonical(1);

} // namespace

TEST_CASE("semantic oracle")
{
    const auto p = example_production();
    Graph none;
    none.add_node("n");
    CHECK(semantic_precondition_oracle(p, phi(), none));

    Graph with_c;
    with_c.add_node("n");
    with_c.add_node("m");
    with_c.add_edge({"a", A, {"n"}});
    with_c.add_edge({"c", C, {"m"}});
    CHECK_FALSE(semantic_precondition_oracle(p, phi(), with_c));
    auto m = violating_match(p, phi(), with_c);
    REQUIRE(m);
    CHECK(m->edge_id == "a");

    Graph single;
    single.add_node("n");
    single.add_edge({"a", A, {"n"}});
    CHECK(semantic_precondition_oracle(p, phi(), single));
    CHECK_FALSE(violating_match(p, phi(), single));
}

TEST_CASE("check_soundness")
{
    const auto p = example_production();
    auto v = check_soundness(p, phi(), {}, kZs, kAlphabet, {3, 3});
    CHECK(v.holds());
    CHECK(v.graphs_checked > 0);
    CHECK(check_soundness(p, F::top(), {}, kZs, kAlphabet, {2, 2}).holds());
}

TEST_CASE("a corrupted pre-condition is caught with a C-edge witness")
{
    const auto p = example_production();
    const auto corrupted =
        F::conj({F::forall(B, {"x", "y"}, F::forall(C, {"z"}, F::no_edge(C))),
                 F::forall(B, {"x", "y"}, F::forall(C, {"z"}, F::eq("y", "z")))});
    auto v = check_triple(corrupted, p, phi(), kAlphabet, {3, 3});
    REQUIRE(v.status == Verdict::Status::fails);
    REQUIRE(v.counterexample);
    CHECK(v.counterexample->before.has_edge_of_type("C"));
    CHECK(v.counterexample->match);
    CHECK(v.counterexample->after);
}

TEST_CASE("check_weakest")
{
    const auto p = example_production();
    CHECK(check_weakest(F::bot(), p, phi(), {}, kZs, kAlphabet, {3, 3}).holds());
    const auto pre = wpre(p, phi());
    CHECK(check_weakest(pre, p, phi(), {}, kZs, kAlphabet, {3, 3}).holds());
    CHECK(check_weakest(F::no_edge(C), p, phi(), {}, kZs, kAlphabet, {3, 3}).holds());
    // `true` is not a valid pre-condition here, so the implication is moot.
    CHECK(check_weakest(F::top(), p, phi(), {}, kZs, kAlphabet, {3, 3}).status ==
          Verdict::Status::not_applicable);
}

TEST_CASE("check_validity")
{
    const auto p = example_production();
    AssertedProduction ap{wpre(p, phi()), p, phi(), {}, kZs};
    CHECK(check_validity(ap, kAlphabet, {3, 3}).holds());

    ap.pre = F::top();
    ap.post = F::bot();
    auto v = check_validity(ap, kAlphabet, {1, 1});
    CHECK(v.status == Verdict::Status::fails);
    CHECK(v.counterexample);

    ap.pre = F::bot();
    CHECK(check_validity(ap, kAlphabet, {3, 3}).holds());
}

TEST_CASE("validate_asserted")
{
    const auto p = example_production();
    CHECK_NOTHROW(validate_asserted({F::top(), p, phi(), {}, kZs}, kAlphabet));
    CHECK_THROWS_AS(validate_asserted({F::top(), p, phi(), {}, InterfaceVars{{"z1", "z2"}}}, kAlphabet),
                    InputError);
    CHECK_THROWS_AS(validate_asserted({F::top(), p, F::eq("a", "b"), {{"a", "u"}, {"b", "u"}}, kZs},
                                      kAlphabet),
                    InputError);
    CHECK_THROWS_AS(validate_asserted({F::top(), p, F::eq("a", "a"), {{"a", "nowhere"}}, kZs},
                                      kAlphabet),
                    InputError);
}

TEST_CASE("verdict status names")
{
    CHECK(to_string(Verdict::Status::holds) == "holds");
    CHECK(to_string(Verdict::Status::fails) == "fails");
    CHECK(to_string(Verdict::Status::not_applicable) == "not-applicable");
}
