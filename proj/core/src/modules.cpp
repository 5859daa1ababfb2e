#include "hopfdr/hopf.hpp"
#include "hopfdr/legs.hpp"

namespace hopfdr {

namespace {

void expect_equal(const Mat& a, const Mat& b, const std::string& what) {
    if (auto j = first_difference(a, b)) throw InvariantViolation(what + " fails at basis input " + std::to_string(*j));
}

}  // namespace

Comodule make_comodule(const FinHopfAlgebra& p, Mat coaction, Side side) {
    std::size_t dp = p.dim();
    if (coaction.rows() % dp != 0 || coaction.rows() / dp != coaction.cols())
        throw ShapeError("coaction has shape " + shape_of(coaction));
    std::size_t n = coaction.cols();
    Mat id = Mat::identity(p.field(), n);
    Mat ip = p.identity();
    if (side == Side::left) {
        expect_equal(kron(p.comult(), id) * coaction, kron(ip, coaction) * coaction, "left coaction coassociativity");
        expect_equal(kron(p.counit(), id) * coaction, id, "left coaction counit law");
    } else {
        expect_equal(kron(coaction, ip) * coaction, kron(id, p.comult()) * coaction, "right coaction coassociativity");
        expect_equal(kron(id, p.counit()) * coaction, id, "right coaction counit law");
    }
    return {p, n, std::move(coaction), side};
}

Comodule trivial_comodule(const FinHopfAlgebra& p, std::size_t dim, Side side) {
    Mat id = Mat::identity(p.field(), dim);
    Mat c = side == Side::left ? kron(p.unit(), id) : kron(id, p.unit());
    return {p, dim, std::move(c), side};
}

Comodule regular_comodule(const FinHopfAlgebra& p) { return {p, p.dim(), p.comult(), Side::left}; }

ModuleAction make_module(const FinHopfAlgebra& p, Mat action, Side side) {
    std::size_t dp = p.dim();
    if (action.cols() % dp != 0 || action.cols() / dp != action.rows())
        throw ShapeError("action has shape " + shape_of(action));
    std::size_t n = action.rows();
    Mat id = Mat::identity(p.field(), n);
    Mat ip = p.identity();
    if (side == Side::left) {
        expect_equal(action * kron(p.mult(), id), action * kron(ip, action), "left action associativity");
        expect_equal(action * kron(p.unit(), id), id, "left action unit law");
    } else {
        expect_equal(action * kron(action, ip), action * kron(id, p.mult()), "right action associativity");
        expect_equal(action * kron(id, p.unit()), id, "right action unit law");
    }
    return {p, n, std::move(action), side};
}

YDModule make_yd(const Comodule& coaction, const ModuleAction& action) {
    if (coaction.side != Side::right || action.side != Side::right)
        throw Error("Yetter-Drinfeld modules here are right-right");
    if (coaction.dim != action.dim) throw ShapeError("YD coaction and action dimensions differ");
    const FinHopfAlgebra& p = coaction.algebra;
    std::size_t n = coaction.dim, dp = p.dim();
    Mat lhs = coaction.coaction * action.action;
    Legs r(p.field(), {n, dp});
    r.apply(1, 1, p.comult_iter(2), {dp, dp, dp});
    r.apply(0, 1, coaction.coaction, {n, dp});
    // [η0, η1, a1, a2, a3] -> [η0, a2, a1, η1, a3]
    r.permute({0, 3, 2, 1, 4});
    r.apply(0, 2, action.action, {n});
    r.apply(1, p.antipode());
    r.apply(1, 3, p.mult_iter(3), {dp});
    expect_equal(lhs, r.matrix(), "Yetter-Drinfeld condition");
    return {coaction, action};
}

Subspace coinvariants(const Comodule& c) {
    Mat id = Mat::identity(c.algebra.field(), c.dim);
    Mat triv = c.side == Side::left ? kron(c.algebra.unit(), id) : kron(id, c.algebra.unit());
    return kernel(c.coaction - triv);
}

std::optional<std::size_t> hopf_module_defect(const Comodule& c, const Mat& action) {
    const FinHopfAlgebra& p = c.algebra;
    std::size_t n = c.dim, dp = p.dim();
    Mat lhs = c.coaction * action;
    Legs r(p.field(), {dp, n});
    r.apply(0, 1, p.comult(), {dp, dp});
    r.apply(2, 1, c.coaction, {dp, n});
    r.permute({0, 2, 1, 3});
    r.apply(0, 2, p.mult(), {dp});
    r.apply(1, 2, action, {n});
    return first_difference(lhs, r.matrix());
}

Mat yd_braiding(const YDModule& v, const YDModule& w) {
    std::size_t dv = v.dim(), dw = w.dim(), dp = v.algebra().dim();
    Legs l(v.algebra().field(), {dv, dw});
    l.apply(1, 1, w.coaction.coaction, {dw, dp});
    l.permute({1, 0, 2});
    l.apply(1, 2, v.action.action, {dv});
    return l.take();
}

Mat yd_braiding_inverse(const YDModule& v, const YDModule& w) {
    const FinHopfAlgebra& p = v.algebra();
    std::size_t dv = v.dim(), dw = w.dim(), dp = p.dim();
    const Mat& sinv = p.antipode_inverse();
    Legs l(p.field(), {dw, dv});
    l.apply(0, 1, w.coaction.coaction, {dw, dp});
    l.apply(1, sinv);
    l.permute({2, 1, 0});
    l.apply(0, 2, v.action.action, {dv});
    return l.take();
}

YDModule yd_dual(const YDModule& v) {
    const FinHopfAlgebra& p = v.algebra();
    Field f = p.field();
    std::size_t n = v.dim(), dp = p.dim();
    Mat b = v.action.action * kron(Mat::identity(f, n), p.antipode_inverse());
    Mat act(f, n, n * dp);
    for (std::size_t jp = 0; jp < n * dp; ++jp) {
        std::size_t j = jp / dp, q = jp % dp;
        for (const auto& e : b.col(jp)) act.set(j, e.row * dp + q, e.value);
    }
    Mat c = kron(Mat::identity(f, n), p.antipode()) * v.coaction.coaction;
    Mat co(f, n * dp, n);
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& e : c.col(j)) {
            std::size_t i = e.row / dp, q = e.row % dp;
            co.set(j * dp + q, i, e.value);
        }
    Comodule dc = make_comodule(p, std::move(co), Side::right);
    ModuleAction da = make_module(p, std::move(act), Side::right);
    return make_yd(dc, da);
}

Mat evaluation(Field f, std::size_t dim) {
    Mat e(f, 1, dim * dim);
    for (std::size_t i = 0; i < dim; ++i) e.set(0, i * dim + i, f.one());
    return e;
}

IntegralResult left_integral(const FinHopfAlgebra& p) {
    Field f = p.field();
    std::size_t n = p.dim();
    // equations (p, j): Σ_i x_i Δ[(i,j),p] - x_p u_j = 0
    Mat eq(f, n * n, n);
    for (std::size_t q = 0; q < n; ++q) {
        for (const auto& e : p.comult().col(q)) {
            std::size_t i = e.row / n, j = e.row % n;
            Scalar cur = eq.at(q * n + j, i);
            eq.set(q * n + j, i, cur + e.value);
        }
        for (const auto& e : p.unit().col(0)) {
            Scalar cur = eq.at(q * n + e.row, q);
            eq.set(q * n + e.row, q, cur - e.value);
        }
    }
    IntegralResult r;
    r.solutions = kernel(eq);
    r.exists = r.solutions.dim() > 0;
    for (std::size_t k = 0; k < r.solutions.dim(); ++k) {
        Mat phi = r.solutions.basis().col_range(k, k + 1).transpose();
        Scalar at_one = (phi * p.unit()).at(0, 0);
        if (!at_one.is_zero()) {
            r.normalised = true;
            r.functional = phi.scaled(at_one.inverse());
            break;
        }
    }
    if (!r.functional && r.exists) r.functional = r.solutions.basis().col_range(0, 1).transpose();
    return r;
}

namespace {

// (P⊗F)⊗(P⊗F) -> P⊗F
Mat smash_mult(const FinHopfAlgebra& p, const Mat& fmult, std::size_t df) {
    std::size_t dp = p.dim();
    Legs l(p.field(), {dp, df, dp, df});
    l.permute({0, 2, 1, 3});
    l.apply(0, 2, p.mult(), {dp});
    l.apply(1, 2, fmult, {df});
    return l.take();
}

}  // namespace

ComoduleAlgebra make_comodule_algebra(std::size_t dim, std::vector<std::string> labels, Mat mult, Mat unit,
                                      Comodule coaction) {
    Field f = coaction.algebra.field();
    if (mult.rows() != dim || mult.cols() != dim * dim || unit.rows() != dim || unit.cols() != 1)
        throw ShapeError("comodule algebra tensors have the wrong shape");
    if (coaction.side != Side::left || coaction.dim != dim) throw ShapeError("comodule algebra needs a left coaction");
    Mat id = Mat::identity(f, dim);
    expect_equal(mult * kron(mult, id), mult * kron(id, mult), "comodule algebra associativity");
    expect_equal(mult * kron(unit, id), id, "comodule algebra left unit");
    expect_equal(mult * kron(id, unit), id, "comodule algebra right unit");
    const Mat& lam = coaction.coaction;
    expect_equal(lam * mult, smash_mult(coaction.algebra, mult, dim) * kron(lam, lam), "coaction is multiplicative");
    expect_equal(lam * unit, kron(coaction.algebra.unit(), unit), "coaction is unital");
    if (labels.size() != dim) {
        labels.clear();
        for (std::size_t i = 0; i < dim; ++i) labels.push_back("f" + std::to_string(i));
    }
    return {dim, std::move(labels), std::move(mult), std::move(unit), std::move(coaction)};
}

ComoduleAlgebra regular_comodule_algebra(const FinHopfAlgebra& p) {
    return make_comodule_algebra(p.dim(), p.labels(), p.mult(), p.unit(), regular_comodule(p));
}

CleftData cleft_extension(const ComoduleAlgebra& fa, const Mat& phi) {
    const FinHopfAlgebra& p = fa.coaction.algebra;
    Field f = p.field();
    std::size_t dp = p.dim(), df = fa.dim;
    if (phi.rows() != df || phi.cols() != dp) throw ShapeError("phi must map P to F");
    CleftData cd;
    cd.total = fa;
    cd.phi = phi;
    auto record = [&](const std::string& name, std::optional<std::size_t> witness) {
        cd.checks.push_back({name, witness ? Status::fail : Status::pass,
                             witness ? "first failing basis input " + std::to_string(*witness) : ""});
        if (witness) throw InvariantViolation(name + " fails at basis input " + std::to_string(*witness));
    };
    const Mat& lam = fa.coaction.coaction;
    record("phi(1) = 1", first_difference(phi * p.unit(), fa.unit));
    record("phi is left colinear", first_difference(lam * phi, kron(p.identity(), phi) * p.comult()));

    // X with Φ(p₁)X(p₂) = ε(p)1 = X(p₁)Φ(p₂); unknown index k*dp + b is X[k,b]
    Mat sys(f, 2 * df * dp, df * dp);
    Mat rhs(f, 2 * df * dp, 1);
    for (std::size_t q = 0; q < dp; ++q) {
        for (const auto& de : p.comult().col(q)) {
            std::size_t a = de.row / dp, b = de.row % dp;
            for (std::size_t k = 0; k < df; ++k) {
                Mat ek = Mat::unit_vector(f, df, k);
                Mat t1 = fa.mult * kron(phi.col_range(a, a + 1), ek);
                for (const auto& e : t1.col(0)) {
                    std::size_t row = e.row * dp + q, colx = k * dp + b;
                    sys.set(row, colx, sys.at(row, colx) + de.value * e.value);
                }
                Mat t2 = fa.mult * kron(ek, phi.col_range(b, b + 1));
                for (const auto& e : t2.col(0)) {
                    std::size_t row = df * dp + e.row * dp + q, colx = k * dp + a;
                    sys.set(row, colx, sys.at(row, colx) + de.value * e.value);
                }
            }
        }
        Scalar eps = p.counit().at(0, q);
        if (!eps.is_zero())
            for (const auto& e : fa.unit.col(0)) {
                rhs.set(e.row * dp + q, 0, eps * e.value);
                rhs.set(df * dp + e.row * dp + q, 0, eps * e.value);
            }
    }
    auto x = solve(sys, rhs);
    if (!x) throw Unavailable("not cleft: phi has no convolution inverse");
    cd.phi_inverse = Mat(f, df, dp);
    for (const auto& e : x->col(0)) cd.phi_inverse.set(e.row / dp, e.row % dp, e.value);
    cd.checks.push_back({"convolution inverse of phi", Status::pass, ""});

    cd.coinvariant_algebra = coinvariants(fa.coaction);
    const Mat& mb = cd.coinvariant_algebra.basis();
    std::size_t dm = mb.cols();
    Subspace pm(kron(p.identity(), mb));

    Legs th(f, {df});
    th.apply(0, 1, lam, {dp, df});
    th.apply(0, 1, p.comult(), {dp, dp});
    th.apply(1, cd.phi_inverse);
    th.apply(1, 2, fa.mult, {df});
    auto theta = pm.coordinates(th.matrix());
    if (!theta) throw InvariantViolation("theta does not land in P⊗M");
    cd.theta = std::move(*theta);
    cd.theta_inverse = fa.mult * kron(phi, mb);
    record("theta∘theta^-1 = id", first_difference(cd.theta * cd.theta_inverse, Mat::identity(f, dp * dm)));
    record("theta^-1∘theta = id", first_difference(cd.theta_inverse * cd.theta, Mat::identity(f, df)));

    // μ(p⊗f) = Φ(p f₋₂) Φ⁻¹(f₋₁) f₀
    Legs mu(f, {dp, df});
    mu.apply(1, 1, lam, {dp, df});
    mu.apply(1, 1, p.comult(), {dp, dp});
    mu.apply(0, 2, p.mult(), {dp});
    mu.apply(0, phi);
    mu.apply(1, cd.phi_inverse);
    mu.apply(0, 2, fa.mult, {df});
    mu.apply(0, 2, fa.mult, {df});
    cd.action = mu.take();
    record("mu is a left action", [&]() -> std::optional<std::size_t> {
        Mat id = Mat::identity(f, df);
        if (auto j = first_difference(cd.action * kron(p.mult(), id), cd.action * kron(p.identity(), cd.action)))
            return j;
        return first_difference(cd.action * kron(p.unit(), id), id);
    }());
    record("mu is a comodule map", hopf_module_defect(fa.coaction, cd.action));

    // (p⊗x)(q⊗y) = p₁q₁ ⊗ Φ⁻¹(p₂q₂)Φ(p₃)xΦ(q₃)y
    Legs tp(f, {dp, dm, dp, dm});
    tp.apply(1, mb);
    tp.apply(3, mb);
    tp.apply(2, 1, p.comult_iter(2), {dp, dp, dp});
    tp.apply(0, 1, p.comult_iter(2), {dp, dp, dp});
    // [p1,p2,p3,x,q1,q2,q3,y] -> [p1,q1,p2,q2,p3,x,q3,y]
    tp.permute({0, 4, 1, 5, 2, 3, 6, 7});
    tp.apply(0, 2, p.mult(), {dp});
    tp.apply(1, 2, p.mult(), {dp});
    tp.apply(1, cd.phi_inverse);
    tp.apply(2, phi);
    tp.apply(4, phi);
    for (int i = 0; i < 4; ++i) tp.apply(1, 2, fa.mult, {df});
    auto transported = pm.coordinates(tp.matrix());
    Mat direct = cd.theta * fa.mult * kron(cd.theta_inverse, cd.theta_inverse);
    record("transported product reproduces F", transported ? first_difference(*transported, direct) : std::optional<std::size_t>(0));
    return cd;
}

}  // namespace hopfdr
