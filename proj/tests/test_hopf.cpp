#include "doctest.h"
#include "hopfdr/builtins.hpp"
#include "hopfdr/legs.hpp"

using namespace hopfdr;

namespace {

// P with right multiplication and the right adjoint coaction p -> p₂⊗S(p₁)p₃
YDModule adjoint_yd(const FinHopfAlgebra& p) {
    std::size_t d = p.dim();
    Legs ad(p.field(), {d});
    ad.apply(0, 1, p.comult_iter(2), {d, d, d});
    ad.apply(0, p.antipode());
    ad.permute({1, 0, 2});
    ad.apply(1, 2, p.mult(), {d});
    return make_yd(make_comodule(p, ad.take(), Side::right), make_module(p, p.mult(), Side::right));
}

Mat power(const Mat& a, int k) {
    Mat r = Mat::identity(a.field(), a.rows());
    for (int i = 0; i < k; ++i) r = r * a;
    return r;
}

}  // namespace

TEST_CASE("every builtin validates") {
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        auto p = builtin(name);
        CHECK(check_hopf_axioms(p.data()).empty());
    }
}

TEST_CASE("builtin examples") {
    auto kz2 = builtin("kZ2");
    CHECK(kz2.dim() == 2);
    CHECK(kz2.antipode().is_identity());

    auto fz2 = builtin("fZ2", Field::prime(2));
    CHECK(fz2.dim() == 2);
    CHECK(fz2.is_commutative());
    CHECK(fz2.is_cocommutative());

    auto t = builtin("taft3");
    CHECK(t.dim() == 9);
    CHECK(t.field().characteristic() == 7);
    CHECK(power(t.antipode(), 6).is_identity());
    for (int k = 1; k < 6; ++k) CHECK_FALSE(power(t.antipode(), k).is_identity());

    auto sw = sweedler(Field::rationals());
    CHECK_FALSE(sw.is_commutative());
    CHECK_FALSE(sw.is_cocommutative());
    // S(x) = -gx on the basis (1, g, x, gx)
    CHECK(sw.antipode().col(2).size() == 1);
    CHECK(sw.antipode().at(3, 2) == Field::rationals().from_int(-1));
    CHECK_THROWS_AS(sweedler(Field::prime(2)), Unavailable);
    CHECK_THROWS_AS(taft(3, Field::rationals()), Unavailable);
    CHECK_THROWS_AS(taft(3, Field::prime(5)), Unavailable);
}

TEST_CASE("axiom violations are named with witnesses") {
    Field q = Field::rationals();
    HopfData bad = sweedler(q).data();
    // S(x) = gx
    bad.antipode.set(3, 2, q.one());
    auto v = check_hopf_axioms(bad);
    REQUIRE_FALSE(v.empty());
    bool found = false;
    for (const auto& x : v)
        if (x.axiom.find("antipode") != std::string::npos && x.witness == 2) found = true;
    CHECK(found);
    CHECK_THROWS_AS(FinHopfAlgebra::validate(bad), InvalidHopfAlgebra);

    HopfData zero_counit = builtin("kZ2").data();
    zero_counit.counit = Mat(q, 1, 2);
    auto w = check_hopf_axioms(zero_counit);
    bool counit = false;
    for (const auto& x : w)
        if (x.axiom.find("counit") != std::string::npos) counit = true;
    CHECK(counit);
}

TEST_CASE("dual of dual is the original") {
    for (const char* name : {"sweedler", "fZ3", "taft3"}) {
        auto p = builtin(name);
        auto dd = dual_of(dual_of(p));
        CHECK(dd.mult() == p.mult());
        CHECK(dd.comult() == p.comult());
        CHECK(dd.antipode() == p.antipode());
        CHECK(dd.unit() == p.unit());
        CHECK(dd.counit() == p.counit());
    }
    // the dual of a group algebra is the function algebra
    auto d = dual_of(builtin("kZ3"));
    auto f = builtin("fZ3");
    CHECK(d.mult() == f.mult());
    CHECK(d.comult() == f.comult());
}

TEST_CASE("left integrals") {
    Field q = Field::rationals();
    auto kz2 = left_integral(builtin("kZ2"));
    CHECK(kz2.normalised);
    CHECK(*kz2.functional == Mat::from_ints(q, {{1, 0}}));

    auto fz2 = left_integral(builtin("fZ2"));
    CHECK(fz2.normalised);
    CHECK(*fz2.functional == Mat::from_dense(q, 1, 2, {q.from_ratio(1, 2), q.from_ratio(1, 2)}));

    auto sw = left_integral(builtin("sweedler"));
    CHECK(sw.exists);
    CHECK(sw.solutions.dim() == 1);
    CHECK_FALSE(sw.normalised);

    Field f2 = Field::prime(2);
    auto ff = left_integral(builtin("fZ2", f2));
    CHECK(ff.exists);
    CHECK_FALSE(ff.normalised);
    CHECK(*ff.functional == Mat::from_ints(f2, {{1, 1}}));
}

TEST_CASE("coinvariants") {
    Field q = Field::rationals();
    auto kz2 = builtin("kZ2");
    CHECK(coinvariants(trivial_comodule(kz2, 3, Side::left)).dim() == 3);
    CHECK(coinvariants(regular_comodule(kz2)) == Subspace(Mat::from_ints(q, {{1}, {0}})));

    auto ext = group_algebra_over_quotient(cyclic_group(4), kz2, {0, 1, 0, 1});
    CHECK(coinvariants(ext.coaction) == Subspace(Mat::from_ints(q, {{1, 0}, {0, 0}, {0, 1}, {0, 0}})));
}

TEST_CASE("braidings") {
    auto sw = builtin("sweedler");
    auto v = adjoint_yd(sw);
    Mat s = yd_braiding(v, v);
    std::size_t d = v.dim();
    Mat id = Mat::identity(sw.field(), d);
    CHECK(kron(s, id) * kron(id, s) * kron(s, id) == kron(id, s) * kron(s, id) * kron(id, s));
    CHECK((yd_braiding_inverse(v, v) * s).is_identity());

    // trivial coaction on W gives the flip
    auto fz3 = builtin("fZ3");
    auto triv = make_yd(trivial_comodule(fz3, 2, Side::right),
                        make_module(fz3, kron(Mat::identity(fz3.field(), 2), fz3.counit()), Side::right));
    auto reg = adjoint_yd(fz3);
    CHECK(yd_braiding(reg, triv) == flip(fz3.field(), 3, 2));
}

TEST_CASE("yd dual") {
    auto sw = builtin("sweedler");
    auto v = adjoint_yd(sw);
    auto dv = yd_dual(v);
    std::size_t d = v.dim(), dp = sw.dim();
    Field f = sw.field();
    Mat ev = evaluation(f, d);
    // ev((α⊗v)◁p) = ev(α⊗v)ε(p) with the tensor product action
    Legs act(f, {d, d, dp});
    act.apply(2, 1, sw.comult(), {dp, dp});
    act.permute({0, 2, 1, 3});
    act.apply(0, 2, dv.action.action, {d});
    act.apply(1, 2, v.action.action, {d});
    CHECK(ev * act.matrix() == kron(ev, sw.counit()));
    // ev(α₀⊗v₀)α₁v₁ = ev(α⊗v)1
    Legs co(f, {d, d});
    co.apply(0, 1, dv.coaction.coaction, {d, dp});
    co.apply(2, 1, v.coaction.coaction, {d, dp});
    co.permute({0, 2, 1, 3});
    co.apply(0, 2, ev, {});
    co.apply(0, 2, sw.mult(), {dp});
    CHECK(co.matrix() == sw.unit() * ev);

    auto ddv = yd_dual(dv);
    // V** is V with the action twisted by S^-2 and the coaction by S^2
    Mat sinv = sw.antipode_inverse();
    CHECK(ddv.action.action == v.action.action * kron(Mat::identity(f, d), sinv * sinv));
    CHECK(ddv.coaction.coaction == kron(Mat::identity(f, d), sw.antipode() * sw.antipode()) * v.coaction.coaction);
    CHECK(yd_braiding(ddv, ddv) == yd_braiding(v, v));
}

TEST_CASE("cleft extensions") {
    Field q = Field::rationals();
    auto kz2 = builtin("kZ2");
    auto ext = group_algebra_over_quotient(cyclic_group(4), kz2, {0, 1, 0, 1});
    // Φ(e) = 1, Φ(g) = t
    auto cd = cleft_extension(ext, Mat::from_ints(q, {{1, 0}, {0, 1}, {0, 0}, {0, 0}}));
    CHECK(cd.coinvariant_algebra.dim() == 2);
    CHECK(all_passed(cd.checks));
    CHECK((cd.theta * cd.theta_inverse).is_identity());

    auto reg = cleft_extension(regular_comodule_algebra(kz2), kz2.identity());
    CHECK(reg.coinvariant_algebra == Subspace(kz2.unit()));

    CHECK_THROWS_AS(cleft_extension(ext, Mat::from_ints(q, {{1, 0}, {0, 0}, {0, 0}, {0, 0}})), Unavailable);
}
