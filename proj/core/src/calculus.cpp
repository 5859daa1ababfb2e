#include "hopfdr/calculus.hpp"

#include "hopfdr/legs.hpp"

namespace hopfdr {

Mat adjoint_right(const FinHopfAlgebra& p) {
    std::size_t d = p.dim();
    Legs ad(p.field(), {d});
    ad.apply(0, 1, p.comult_iter(2), {d, d, d});
    ad.apply(0, p.antipode());
    ad.permute({1, 0, 2});
    ad.apply(1, 2, p.mult(), {d});
    return ad.take();
}

Mat adjoint_left(const FinHopfAlgebra& p) {
    std::size_t d = p.dim();
    Legs ad(p.field(), {d});
    ad.apply(0, 1, p.comult_iter(2), {d, d, d});
    ad.apply(2, p.antipode());
    ad.permute({0, 2, 1});
    ad.apply(0, 2, p.mult(), {d});
    return ad.take();
}

namespace {

std::optional<std::size_t> first_outside(const Subspace& s, const Mat& vectors) {
    for (std::size_t j = 0; j < vectors.cols(); ++j)
        if (!s.contains(vectors.col(j))) return j;
    return std::nullopt;
}

}  // namespace

CheckList ideal_checks(const FinHopfAlgebra& p, const Mat& vectors) {
    CheckList out;
    if (vectors.rows() != p.dim()) throw ShapeError("ideal vectors must have " + std::to_string(p.dim()) + " rows");
    Subspace r = Subspace::span(vectors);
    const Mat& b = r.basis();
    std::size_t d = p.dim();

    Mat eps = p.counit() * vectors;
    std::optional<std::size_t> bad;
    for (std::size_t j = 0; j < eps.cols() && !bad; ++j)
        if (!eps.col(j).empty()) bad = j;
    out.push_back({"ideal inside ker ε", bad ? Status::fail : Status::pass,
                   bad ? "vector " + std::to_string(*bad) + " has nonzero counit" : ""});

    Mat products = p.mult() * kron(b, p.identity());
    auto w = first_outside(r, products);
    out.push_back({"right ideal", w ? Status::fail : Status::pass,
                   w ? "basis vector " + std::to_string(*w / d) + " times " + p.labels()[*w % d] + " leaves R" : ""});

    Subspace target = Subspace::span(kron(b, p.identity()));
    Mat ad = adjoint_right(p) * b;
    auto a = first_outside(target, ad);
    out.push_back({"Ad_R invariant", a ? Status::fail : Status::pass,
                   a ? "Ad_R of basis vector " + std::to_string(*a) + " is not in R⊗P" : ""});
    return out;
}

CalculusIdeal check_ideal(const FinHopfAlgebra& p, const Mat& vectors) {
    CheckList c = ideal_checks(p, vectors);
    std::string msg;
    for (const auto& x : c)
        if (x.status == Status::fail) msg += (msg.empty() ? "" : "; ") + x.name + " fails: " + x.detail;
    if (!msg.empty()) throw InvalidIdeal("invalid calculus ideal: " + msg, c);
    return {p, Subspace::span(vectors)};
}

CalculusIdeal zero_ideal(const FinHopfAlgebra& p) { return {p, Subspace::zero(p.field(), p.dim())}; }

CalculusIdeal counit_kernel_ideal(const FinHopfAlgebra& p) { return {p, kernel(p.counit())}; }

Mat ExteriorCalculus::wedge(std::size_t r, std::size_t s) const {
    return lambda.at(r + s).projection * kron(lambda.at(r).section, lambda.at(s).section);
}

Mat ExteriorCalculus::d_presentation() const {
    if (lambda.size() < 3) throw CapExceeded("d on L¹ needs Λ², degree cap is " + std::to_string(degree_cap));
    const FinHopfAlgebra& p = ideal.algebra;
    return -(lambda[2].projection * kron(varpi, varpi) * p.comult());
}

namespace {

// L^{⊗n}⊗P -> L^{⊗n}, v1⊗...⊗vn⊗p -> v1◁p₁⊗...⊗vn◁pₙ
Mat tensor_action(const YDModule& v, std::size_t n) {
    const FinHopfAlgebra& p = v.algebra();
    Field f = p.field();
    std::size_t m = v.dim(), d = p.dim();
    if (n == 0) return p.counit();
    std::vector<std::size_t> dims(n, m);
    dims.push_back(d);
    Legs l(f, dims);
    l.apply(n, 1, p.comult_iter(n - 1), std::vector<std::size_t>(n, d));
    std::vector<std::size_t> perm;
    for (std::size_t i = 0; i < n; ++i) {
        perm.push_back(i);
        perm.push_back(n + i);
    }
    l.permute(perm);
    for (std::size_t i = 0; i < n; ++i) l.apply(i, 2, v.action.action, {m});
    return l.take();
}

// L^{⊗n} -> L^{⊗n}⊗P, v1⊗...⊗vn -> v1₀⊗...⊗vn₀⊗v1₁...vn₁
Mat tensor_coaction(const YDModule& v, std::size_t n) {
    const FinHopfAlgebra& p = v.algebra();
    Field f = p.field();
    std::size_t m = v.dim(), d = p.dim();
    if (n == 0) return p.unit();
    Legs l(f, std::vector<std::size_t>(n, m));
    for (std::size_t i = 0; i < n; ++i) l.apply(2 * i, 1, v.coaction.coaction, {m, d});
    std::vector<std::size_t> perm;
    for (std::size_t i = 0; i < n; ++i) perm.push_back(2 * i);
    for (std::size_t i = 0; i < n; ++i) perm.push_back(2 * i + 1);
    l.permute(perm);
    l.apply(n, n, p.mult_iter(n), {d});
    return l.take();
}

std::size_t power(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

Mat braided_antisymmetrizer(const Mat& sigma, std::size_t dim, std::size_t n) {
    Field f = sigma.field();
    Mat a = Mat::identity(f, 1);
    for (std::size_t k = 1; k <= n; ++k) {
        // σ_i acts on slots i-1, i of V^{⊗k}, 1 <= i < k
        std::size_t amb = power(dim, k);
        Mat coset = Mat::identity(f, amb), word = Mat::identity(f, amb);
        for (std::size_t i = k - 1; i >= 1; --i) {
            Mat l = Mat::identity(f, power(dim, i - 1)), r = Mat::identity(f, power(dim, k - 1 - i));
            word = word * kron({&l, &sigma, &r});
            coset = (k - 1 - i) % 2 == 0 ? coset - word : coset + word;
        }
        a = kron(a, Mat::identity(f, dim)) * coset;
    }
    return a;
}

ExteriorCalculus build_exterior(const CalculusIdeal& ideal, std::size_t degree_cap, WedgeRelations relations) {
    if (degree_cap < 1) throw Error("degree cap must be at least 1");
    const FinHopfAlgebra& p = ideal.algebra;
    check_ideal(p, ideal.basis.basis());
    Field f = p.field();
    std::size_t dp = p.dim();

    ExteriorCalculus e;
    e.ideal = ideal;
    e.degree_cap = degree_cap;
    e.relations = relations;
    auto add = [&](std::string name, bool ok, std::string detail = "") {
        e.checks.push_back({std::move(name), ok ? Status::pass : Status::fail, std::move(detail)});
    };

    QuotientSpace l1q = quotient_space(dp, sum(ideal.basis, Subspace(p.unit())));
    e.varpi = l1q.projection;
    e.lift = (p.identity() - p.unit() * p.counit()) * l1q.section;
    std::size_t m = l1q.dim();

    Mat action = e.varpi * p.mult() * kron(e.lift, p.identity());
    Mat coaction = kron(e.varpi, p.identity()) * adjoint_right(p) * e.lift;
    e.l1 = make_yd(make_comodule(p, coaction, Side::right), make_module(p, action, Side::right));

    Mat id1 = Mat::identity(f, m);
    e.sigma = yd_braiding(e.l1, e.l1);
    Mat sm = e.sigma - Mat::identity(f, m * m);
    e.symmetric = kernel(sm);
    e.generalized_excess = kernel(sm * sm).dim() - e.symmetric.dim();
    if (f.characteristic() == 2)
        e.checks.push_back({"characteristic 2", Status::skipped,
                            "symmetric elements ker(σ-id) contain the antisymmetric ones for flip-like braidings"});
    if (m * m * m <= 4096)
        add("braid relation on L¹⊗L¹⊗L¹",
            kron(e.sigma, id1) * kron(id1, e.sigma) * kron(e.sigma, id1) ==
                kron(id1, e.sigma) * kron(e.sigma, id1) * kron(id1, e.sigma));
    add("σ is the identity on symmetric elements", e.sigma * e.symmetric.basis() == e.symmetric.basis());

    // Λ^n = L^{⊗n} / Σ L^{⊗i}⊗S⊗L^{⊗n-i-2}
    Subspace rel = Subspace::zero(f, 1);
    for (std::size_t n = 0; n <= degree_cap; ++n) {
        std::size_t amb = power(m, n);
        if (n <= 1) {
            rel = Subspace::zero(f, amb);
        } else if (e.lambda.back().dim() == 0) {
            rel = Subspace::full(f, amb);
        } else if (relations == WedgeRelations::antisymmetrizer) {
            rel = kernel(braided_antisymmetrizer(e.sigma, m, n));
        } else {
            Mat left = kron(rel.basis(), id1);
            Mat right = kron(Mat::identity(f, power(m, n - 2)), e.symmetric.basis());
            rel = Subspace::span(hstack({left, right}));
        }
        e.lambda.push_back(quotient_space(amb, rel));

        Mat act = tensor_action(e.l1, n);
        Mat co = tensor_coaction(e.l1, n);
        const QuotientSpace& q = e.lambda.back();
        Mat rel_act = q.projection * act * kron(rel.basis(), p.identity());
        Mat rel_co = kron(q.projection, p.identity()) * co * rel.basis();
        add("Λ^" + std::to_string(n) + " relations form a Yetter-Drinfeld submodule", rel_act.is_zero() && rel_co.is_zero());
        e.action.push_back(q.projection * act * kron(q.section, p.identity()));
        e.coaction.push_back(kron(q.projection, p.identity()) * co * q.section);
    }

    if (degree_cap >= 1) e.d.push_back(Mat(f, m, 1));
    if (degree_cap >= 2) {
        Mat pres = e.d_presentation();
        Mat killed = pres * hstack({p.unit(), ideal.basis.basis()});
        if (!killed.is_zero()) {
            std::size_t w = *first_difference(killed, Mat(f, killed.rows(), killed.cols()));
            throw InvariantViolation("d on L¹ is not well defined: the relation " +
                                     (w == 0 ? std::string("1") : "R basis vector " + std::to_string(w - 1)) +
                                     " has nonzero image in Λ²");
        }
        add("d on L¹ well defined on ker ε / R", true);
        Mat d1 = pres * e.lift;
        Mat sd1 = e.lambda[2].section * d1;
        for (std::size_t n = 1; n < degree_cap; ++n) {
            std::size_t amb = power(m, n);
            Mat dt(f, e.lambda[n + 1].dim(), amb);
            for (std::size_t i = 0; i < n; ++i) {
                Mat a = Mat::identity(f, power(m, i)), c = Mat::identity(f, power(m, n - 1 - i));
                Mat term = e.lambda[n + 1].projection * kron({&a, &sd1, &c});
                dt = i % 2 == 0 ? dt + term : dt - term;
            }
            Mat on_rel = dt * e.lambda[n].relations.basis();
            if (!on_rel.is_zero()) {
                std::size_t w = *first_difference(on_rel, Mat(f, on_rel.rows(), on_rel.cols()));
                throw InvariantViolation("d on Λ^" + std::to_string(n) + " is not well defined: relation " +
                                         std::to_string(w) + " maps outside the relations of Λ^" + std::to_string(n + 1));
            }
            e.d.push_back(dt * e.lambda[n].section);
        }
        for (std::size_t n = 0; n + 1 < degree_cap; ++n)
            add("d∘d = 0 on Λ^" + std::to_string(n), (e.d[n + 1] * e.d[n]).is_zero());
        for (std::size_t n = 0; n < degree_cap; ++n)
            add("d on Λ^" + std::to_string(n) + " is a right comodule map",
                e.coaction[n + 1] * e.d[n] == kron(e.d[n], p.identity()) * e.coaction[n]);
    }
    return e;
}

DGA build_omega(const ExteriorCalculus& ext) {
    const FinHopfAlgebra& p = ext.ideal.algebra;
    Field f = p.field();
    std::size_t dp = p.dim(), cap = ext.degree_cap;
    std::vector<std::size_t> dims;
    for (std::size_t n = 0; n <= cap; ++n) dims.push_back(dp * ext.dim(n));
    std::vector<Mat> d;
    for (std::size_t n = 0; n < cap; ++n) {
        Legs l(f, {dp, ext.dim(n)});
        l.apply(0, 1, p.comult(), {dp, dp});
        l.apply(1, ext.varpi);
        l.apply(1, 2, ext.wedge(1, n), {ext.dim(n + 1)});
        d.push_back(l.matrix() + kron(p.identity(), ext.d[n]));
    }
    auto product = [ext, p, f, dp](std::size_t r, std::size_t s) {
        Legs l(f, {dp, ext.dim(r), dp, ext.dim(s)});
        l.apply(2, 1, p.comult(), {dp, dp});
        l.permute({0, 2, 1, 3, 4});
        l.apply(0, 2, p.mult(), {dp});
        l.apply(1, 2, ext.action[r], {ext.dim(r)});
        l.apply(1, 2, ext.wedge(r, s), {ext.dim(r + s)});
        return l.take();
    };
    bool vanishes = ext.dim(cap) == 0;
    return DGA("bicovariant", algebra_of(p), std::move(dims), std::move(d), product, vanishes);
}

Mat omega_left_coaction(const ExteriorCalculus& ext, std::size_t n) {
    return kron(ext.ideal.algebra.comult(), Mat::identity(ext.field(), ext.dim(n)));
}

std::vector<Comodule> omega_left_comodules(const ExteriorCalculus& ext) {
    std::vector<Comodule> out;
    for (std::size_t n = 0; n <= ext.degree_cap; ++n)
        out.push_back(make_comodule(ext.ideal.algebra, omega_left_coaction(ext, n), Side::left));
    return out;
}

CheckList y_map_checks(const ExteriorCalculus& ext) {
    CheckList out;
    const FinHopfAlgebra& p = ext.ideal.algebra;
    Field f = p.field();
    std::size_t d = p.dim(), m = ext.l1_dim();

    Legs r(f, {d, d});
    r.apply(1, 1, p.comult(), {d, d});
    r.apply(0, 2, p.mult(), {d});
    Legs rinv(f, {d, d});
    rinv.apply(1, 1, p.comult(), {d, d});
    rinv.apply(1, p.antipode());
    rinv.apply(0, 2, p.mult(), {d});
    out.push_back({"r(a⊗b) = ab₁⊗b₂ is invertible", (rinv.matrix() * r.matrix()).is_identity() ? Status::pass : Status::fail, ""});

    Subspace kerm = kernel(p.mult());
    Mat y = kron(p.identity(), ext.varpi) * r.matrix();
    Mat n = rinv.matrix() * kron(p.identity(), ext.ideal.basis.basis());
    bool n_in = kerm.contains(n);
    std::size_t rk = rank(y * kerm.basis());
    bool bij = n_in && (y * n).is_zero() && rk == d * m && kerm.dim() - rank(n) == d * m;
    out.push_back({"Y: Ω¹ -> P⊗L¹ bijective", bij ? Status::pass : Status::fail,
                   "rank " + std::to_string(rk) + ", dim P⊗L¹ " + std::to_string(d * m)});

    // λ(a⊗b) = a₁b₁⊗a₂⊗b₂ on the universal forms, against Δ⊗id on P⊗L¹
    Legs lam(f, {d, d});
    lam.apply(0, 1, p.comult(), {d, d});
    lam.apply(2, 1, p.comult(), {d, d});
    lam.permute({0, 2, 1, 3});
    lam.apply(0, 2, p.mult(), {d});
    Mat lhs = kron(p.identity(), y) * lam.matrix() * kerm.basis();
    Mat rhs = kron(p.comult(), Mat::identity(f, m)) * y * kerm.basis();
    out.push_back({"Y intertwines the left coactions", lhs == rhs ? Status::pass : Status::fail, ""});
    return out;
}

}  // namespace hopfdr
