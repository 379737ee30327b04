#include <doctest.h>

#include "oracles.hpp"
#include "splice/error.hpp"
#include "splice/reduction.hpp"
#include "splice/text_format.hpp"
#include "splice/umap.hpp"

using namespace splice;

namespace {

GradedComplex cx(const std::string& text) { return parse_complex(text).x.complex; }

// tower(0) + step(3, 2): a at 0, b at 3, da = U^2 b.
const char* kStep = R"(complex step
gen x 0
gen a 0
gen b 3
d a -> b : U^2
)";

}  // namespace

TEST_CASE("UPoly arithmetic")
{
    auto u = UPoly::monomial(1);
    CHECK((u + u).is_zero());
    CHECK(u * u == UPoly::monomial(2));
    CHECK(UPoly::from_exponents({0, 2, 2, 3}) == UPoly::from_exponents({0, 3}));
    CHECK((UPoly::one() + u) * (UPoly::one() + u) == UPoly::from_exponents({0, 2}));
    CHECK(to_string(UPoly::from_exponents({3, 5})) == "U^3 + U^5");
    CHECK(to_string(UPoly()) == "0");
}

TEST_CASE("validate")
{
    CHECK(validate(cx("complex a\ngen x0 0\n")).empty());

    auto bad = validate(cx("complex b\ngen a 0\ngen b 1\nd a -> b : 1\n"));
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].kind == "homogeneity");

    CHECK(validate(cx("complex c\ngen a 0\ngen b -1\nd a -> b : 1\n")).empty());

    auto coset = validate(cx("complex d\ngen a 0\ngen b 1/2\n"));
    CHECK_FALSE(coset.empty());

    // ∂² = U ≠ 0
    auto sq = validate(cx("complex e\ngen a 0\ngen b -1\ngen c -2\nd a -> b : 1\nd b -> c : 1\n"));
    bool has_d2 = false;
    for (const auto& v : sq) has_d2 |= v.kind == "d^2";
    CHECK(has_d2);
}

TEST_CASE("reduce and d_invariant")
{
    auto rp3 = cx("complex rp3\ngen x 1/4\n");
    auto r = reduce(rp3);
    CHECK(r.normal_form.tower_grading == Rational(1, 4));
    CHECK(r.normal_form.steps.empty());
    CHECK(d_invariant(rp3) == Rational(1, 4));

    auto step = reduce(cx(kStep));
    CHECK(step.normal_form.tower_grading == 0);
    REQUIRE(step.normal_form.steps.size() == 1);
    CHECK(step.normal_form.steps[0] == Step{Rational(3), 2});
    CHECK(d_invariant(cx(kStep)) == 0);

    auto cancel = reduce(cx("complex c\ngen a 0\ngen b -1\ngen c 0\nd a -> b : 1\n"));
    CHECK(cancel.normal_form.tower_grading == 0);
    CHECK(cancel.normal_form.steps.empty());
    CHECK(cancel.decomposition.reduced.size() == 1);
    CHECK(cancel.decomposition.reduced.generator(0).id == "c");

    CHECK(d_invariant(cx("complex t\ngen x 0\n")) == 0);
}

TEST_CASE("reduce rejects rank other than one")
{
    CHECK_THROWS_AS(reduce(cx("complex two\ngen x 0\ngen y 2\n")), NotRankOne);
    CHECK_THROWS_AS(reduce(cx("complex none\ngen a 0\ngen b -1\nd a -> b : 1\n")), NotRankOne);
    CHECK_THROWS_AS(decompose(cx("complex bad\ngen a 0\ngen b 1\nd a -> b : 1\n")), InvalidInput);
}

TEST_CASE("reduction trace: every move is a homotopy equivalence")
{
    auto c = cx(R"(complex mixed
gen x 0
gen y 0
gen z -1
gen w 2
gen v 1
gen u 1
gen t 0
d x -> z : 1
d x -> u : U
d y -> z : 1
d w -> v : 1
d w -> u : 1
)");
    std::vector<ReductionStep> trace;
    auto dec = decompose(c, &trace);
    REQUIRE_FALSE(trace.empty());
    for (const auto& s : trace) {
        CAPTURE(s.description);
        CHECK(is_chain_map(s.before, s.after, s.f));
        CHECK(is_chain_map(s.after, s.before, s.g));
        CHECK(compose(s.f, s.g) == identity_map(s.after));
        CHECK(is_homotopy(s.before, s.before, s.h, compose(s.g, s.f), identity_map(s.before)));
    }
    CHECK(is_chain_map(c, dec.reduced, dec.to_reduced));
    CHECK(is_chain_map(dec.reduced, c, dec.from_reduced));
    CHECK(compose(dec.to_reduced, dec.from_reduced) == identity_map(dec.reduced));
    CHECK(is_homotopy(c, c, dec.homotopy, compose(dec.from_reduced, dec.to_reduced), identity_map(c)));
    CHECK(d_invariant(c) == *oracle::d_invariant(c));
}

TEST_CASE("normal form reconstruction")
{
    NormalForm nf{Rational(1, 4), {Step{Rational(13, 4), 2}, Step{Rational(5, 4), 1}}};
    auto c = from_normal_form(nf, "nf");
    CHECK(validate(c).empty());
    auto r = reduce(c);
    std::sort(nf.steps.begin(), nf.steps.end());
    CHECK(r.normal_form == nf);
}

TEST_CASE("tensor")
{
    auto step = cx(kStep);
    auto unit = GradedComplex::tower(0);
    auto t = tensor(unit, step);
    CHECK(t.size() == step.size());
    CHECK(reduce(t).normal_form == reduce(step).normal_form);
    CHECK(t.generator(1).id == "x⊗a");

    auto q = tensor(GradedComplex::tower(Rational(1, 4)), GradedComplex::tower(Rational(-1, 4)));
    CHECK(q.size() == 1);
    CHECK(q.grading(0) == 0);

    // tower ⊗ step twice, and step ⊗ step = one (3, 2) piece plus one (6, 2) piece.
    auto sq = tensor(step, step);
    CHECK(sq.size() == 9);
    CHECK(validate(sq).empty());
    auto nf = reduce(sq).normal_form;
    CHECK(nf.tower_grading == 0);
    std::vector<Step> expected{{Rational(3), 2}, {Rational(3), 2}, {Rational(3), 2}, {Rational(6), 2}};
    CHECK(nf.steps == expected);
    // Same graded homology as the normal form, modulo U^3.
    CHECK(oracle::homology_ranks(oracle::truncate(sq, 3)) ==
          oracle::homology_ranks(oracle::truncate(from_normal_form(nf), 3)));
}

TEST_CASE("dual")
{
    auto d = dual(GradedComplex::tower(Rational(1, 4)));
    CHECK(d.grading(0) == Rational(-1, 4));
    CHECK(d.generator(0).id == "x*");

    auto tref = cx("complex tr\ngen a 0\ngen b -1\ngen c -2\nd a -> b : 1\n");
    auto dd = dual(dual(tref));
    CHECK(dd.differential() == tref.differential());
    for (std::size_t i = 0; i < tref.size(); ++i) {
        CHECK(dd.grading(i) == tref.grading(i));
        CHECK(dd.generator(i).id == tref.generator(i).id + "**");
    }

    // a* at 0, b* at -3, ∂b* = U^2 a*: a step with top 0 and length 2.
    auto ds = dual(cx(kStep));
    CHECK(validate(ds).empty());
    auto nf = reduce(ds).normal_form;
    CHECK(nf.tower_grading == 0);
    REQUIRE(nf.steps.size() == 1);
    CHECK(nf.steps[0] == Step{Rational(0), 2});
}

TEST_CASE("forced exponents")
{
    CHECK(forced_exponent(Rational(3), Rational(0), Rational(-1)) == 2);
    CHECK_FALSE(forced_exponent(Rational(0), Rational(0), Rational(-1)).has_value());
    CHECK_FALSE(forced_exponent(Rational(-2), Rational(0), Rational(0)).has_value());
    CHECK(forced_exponent(Rational(1, 4), Rational(1, 4), Rational(0)) == 0);
}
