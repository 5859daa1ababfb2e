#include "hopfdr/hopf_lie.hpp"

#include "hopfdr/legs.hpp"

namespace hopfdr {

namespace {

std::size_t power(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= b;
    return r;
}

Mat reversal(Field f, std::size_t m, std::size_t n) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = n - 1 - i;
    return permutation_tensor(f, std::vector<std::size_t>(n, m), perm);
}

std::vector<QuotientSpace> wedge_powers(const Mat& sigma, std::size_t m, std::size_t cap, WedgeRelations relations) {
    Field f = sigma.field();
    Mat id1 = Mat::identity(f, m);
    Subspace symmetric = kernel(sigma - Mat::identity(f, m * m));
    std::vector<QuotientSpace> out;
    Subspace rel = Subspace::zero(f, 1);
    for (std::size_t n = 0; n <= cap; ++n) {
        std::size_t amb = power(m, n);
        if (n <= 1) {
            rel = Subspace::zero(f, amb);
        } else if (out.back().dim() == 0) {
            rel = Subspace::full(f, amb);
        } else if (relations == WedgeRelations::antisymmetrizer) {
            rel = kernel(braided_antisymmetrizer(sigma, m, n));
        } else {
            Mat left = kron(rel.basis(), id1);
            Mat right = kron(Mat::identity(f, power(m, n - 2)), symmetric.basis());
            rel = Subspace::span(hstack({left, right}));
        }
        out.push_back(quotient_space(amb, rel));
    }
    return out;
}

// the functional on Λ^n 𝔤 given by pairing with the unique lift of y that kills the 𝔤-relations
std::optional<Mat> annihilator_pairing(const QuotientSpace& wg, const QuotientSpace& wl, const Mat& rev) {
    Field f = rev.field();
    if (wg.dim() != wl.dim()) return std::nullopt;
    if (wg.dim() == 0) return Mat(f, 0, 0);
    Subspace ann = kernel(wg.relations.basis().transpose() * rev);
    if (ann.dim() != wl.dim()) return std::nullopt;
    auto inv = inverse(wl.projection * ann.basis());
    if (!inv) return std::nullopt;
    return wg.section.transpose() * rev * ann.basis() * *inv;
}

std::string witness(const Mat& m) {
    auto c = first_difference(m, Mat(m.field(), m.rows(), m.cols()));
    return c ? "column " + std::to_string(*c) : "";
}

}  // namespace

HopfLieAlgebra build_hopf_lie(const ExteriorCalculus& ext) {
    const FinHopfAlgebra& p = ext.ideal.algebra;
    Field f = p.field();
    std::size_t dp = p.dim(), m = ext.l1_dim(), cap = ext.degree_cap;
    const Mat& sinv = p.antipode_inverse();

    HopfLieAlgebra hl;
    hl.g = yd_dual(ext.l1);
    auto add = [&](std::string name, bool ok, std::string detail = "") {
        hl.checks.push_back({std::move(name), ok ? Status::pass : Status::fail, ok ? "" : std::move(detail)});
    };

    // Ω¹ -> L¹ with ψ_α = α∘psi the right-linear extension of α
    Legs ps(f, {dp, m});
    ps.apply(0, sinv);
    ps.permute({1, 0});
    ps.apply(0, 2, ext.l1.action.action, {m});
    Mat psi = ps.take();

    // α(d(ξ₋₁)) β(ξ₀)
    Legs t1(f, {dp, m});
    t1.apply(0, 1, p.comult(), {dp, dp});
    t1.apply(0, 1, p.comult(), {dp, dp});
    t1.apply(1, ext.varpi);
    t1.apply(0, 2, psi, {m});
    t1.apply(1, 2, psi, {m});

    // α(ξ₋₁ S(ξ₁).d(ξ₂)) β(ξ₀)
    Legs t2(f, {dp, m});
    t2.apply(0, 1, p.comult(), {dp, dp});
    t2.apply(1, 1, p.comult(), {dp, dp});
    t2.apply(3, 1, ext.l1.coaction.coaction, {m, dp});
    t2.permute({0, 1, 3, 2, 4});
    t2.apply(3, 2, p.mult(), {dp});
    t2.apply(3, 1, p.comult(), {dp, dp});
    t2.apply(3, p.antipode());
    t2.apply(4, 1, p.comult(), {dp, dp});
    t2.apply(5, ext.varpi);
    t2.permute({0, 3, 4, 5, 1, 2});
    t2.apply(0, 3, p.mult_iter(3), {dp});
    t2.apply(0, 2, psi, {m});
    t2.apply(1, 2, psi, {m});

    Mat b = t1.matrix() - t2.matrix();  // row (i,j) is [α^i, α^j] on Ω¹
    Mat b0 = b * kron(p.unit(), Mat::identity(f, m));
    Mat off = b - b0 * psi;
    if (!off.is_zero())
        throw InvariantViolation("bracket leaves the Hopf-Lie algebra: not right P-linear at Ω¹ basis " + witness(off));
    add("brackets are right P-linear", true);
    hl.bracket = b0.transpose();

    Mat fl = flip(f, m, m);
    Mat dtilde = -(kron(ext.varpi, ext.varpi) * p.comult());
    Mat braided = fl * (Mat::identity(f, m * m) - ext.sigma) * dtilde;
    Mat diff = b0 * ext.varpi - braided;
    add("bracket agrees with the braided evaluation of dξ", diff.is_zero(), "at P basis " + witness(diff));

    hl.sigma_g = yd_braiding(hl.g, hl.g);
    add("braiding on 𝔤 is dual to σ on L¹", hl.sigma_g == fl * ext.sigma.transpose() * fl);
    std::size_t kg = kernel(hl.sigma_g - Mat::identity(f, m * m)).dim();
    add("dim ker(σ_𝔤 - id) = dim ker(σ - id)", kg == ext.symmetric.dim(),
        std::to_string(kg) + " vs " + std::to_string(ext.symmetric.dim()));

    std::size_t wcap = std::max<std::size_t>(cap, 2);
    hl.wedge = wedge_powers(hl.sigma_g, m, wcap, ext.relations);
    for (std::size_t n = 0; n <= cap; ++n) {
        hl.pairing.push_back(reversal(f, m, n));
        hl.iota.push_back(annihilator_pairing(hl.wedge[n], ext.lambda[n], hl.pairing[n]));
        if (!hl.iota.back())
            hl.checks.push_back({"inside pairing identifies Λ^" + std::to_string(n) + "𝔤 with (Λ^" + std::to_string(n) + "L¹)*",
                                 Status::skipped, "braiding defect: the pairing is degenerate on wedge quotients"});
    }

    const QuotientSpace& w2 = hl.wedge[2];
    Mat on_rel = hl.bracket * w2.relations.basis();
    add("bracket vanishes on ker(σ_𝔤 - id)", on_rel.is_zero(), "relation " + witness(on_rel));

    Mat induced = w2.projection * (Mat::identity(f, m * m) - hl.sigma_g) * w2.section;
    auto inv = inverse(induced);
    if (!inv) {
        hl.t_defect = "braiding defect: (id-σ) singular on 𝔤∧𝔤";
        hl.checks.push_back({"T = [,]∘(id-σ)⁻¹", Status::skipped, hl.t_defect});
    } else {
        hl.t_map = hl.bracket * w2.section * *inv;
        if (cap >= 2 && hl.iota[2]) {
            Mat lhs = hl.t_map->transpose(), rhs = *hl.iota[2] * ext.d[1];
            add("T(α∧β)(ξ) = ev((α∧β)⊗dξ)", lhs == rhs, "at L¹ basis " + witness(lhs - rhs));
        }
    }
    return hl;
}

Mat t_map(const HopfLieAlgebra& hl) {
    if (!hl.t_map) throw Unavailable(hl.t_defect);
    return *hl.t_map;
}

namespace {

std::optional<CochainComplex> transpose_complex(const HopfLieAlgebra& hl, const ExteriorCalculus& ext) {
    std::size_t cap = ext.degree_cap;
    std::vector<Mat> inv;
    for (std::size_t n = 0; n <= cap; ++n) {
        if (!hl.iota[n]) return std::nullopt;
        inv.push_back(*inverse(*hl.iota[n]));
    }
    std::vector<std::size_t> dims;
    std::vector<Mat> d;
    for (std::size_t n = 0; n <= cap; ++n) dims.push_back(ext.dim(n));
    for (std::size_t n = 0; n < cap; ++n) d.push_back(*hl.iota[n + 1] * ext.d[n] * inv[n]);
    return make_complex(ext.field(), dims, d, ext.dim(cap) == 0);
}

}  // namespace

HLComplex hl_complex(const HopfLieAlgebra& hl, const ExteriorCalculus& ext, HLConstruction construction) {
    Field f = ext.field();
    std::size_t m = hl.dim(), cap = ext.degree_cap;
    auto tc = transpose_complex(hl, ext);
    HLComplex out;
    if (construction == HLConstruction::transpose) {
        if (!tc) throw Unavailable("braiding defect: the inside pairing is degenerate on wedge quotients");
        out.complex = *tc;
        return out;
    }
    Mat t = t_map(hl);
    Mat ttil = t * hl.wedge[2].projection;

    std::vector<Mat> d;
    std::optional<std::string> failure;
    for (std::size_t n = 0; n < cap && !failure; ++n) {
        Mat sum(f, power(m, n), power(m, n + 1));
        for (std::size_t i = 0; i < n; ++i) {
            Mat a = Mat::identity(f, power(m, i)), c = Mat::identity(f, power(m, n - 1 - i));
            Mat term = kron({&a, &ttil, &c});
            sum = (n - 1 - i) % 2 == 0 ? sum + term : sum - term;
        }
        Mat on_rel = hl.wedge[n].projection * sum * hl.wedge[n + 1].relations.basis();
        if (!on_rel.is_zero()) {
            failure = "dφ on K^" + std::to_string(n) + " does not annihilate Λ^" + std::to_string(n + 1) +
                      "𝔤 relation " + witness(on_rel);
            break;
        }
        d.push_back((hl.wedge[n].projection * sum * hl.wedge[n + 1].section).transpose());
    }
    out.checks.push_back({"explicit differential descends to wedge quotients", failure ? Status::fail : Status::pass,
                          failure.value_or("")});
    for (std::size_t n = 0; !failure && n + 1 < d.size(); ++n) {
        Mat dd = d[n + 1] * d[n];
        if (!dd.is_zero()) failure = "d∘d ≠ 0 on K^" + std::to_string(n) + " at " + witness(dd);
    }
    if (d.size() == cap)
        out.checks.push_back({"explicit differential squares to zero", failure ? Status::fail : Status::pass,
                              failure.value_or("")});

    if (failure) {
        if (!tc) throw InvariantViolation(*failure);
        out.complex = *tc;
        return out;
    }
    std::vector<std::size_t> dims;
    for (std::size_t n = 0; n <= cap; ++n) dims.push_back(hl.wedge[n].dim());
    out.construction = HLConstruction::explicit_T;
    out.complex = make_complex(f, dims, d, hl.wedge[cap].dim() == 0);
    if (tc) {
        for (std::size_t n = 0; n < cap; ++n) {
            bool same = out.complex.d[n] == tc->d[n];
            std::string name = "explicit and transpose differentials agree on K^" + std::to_string(n);
            if (same || n <= 1)
                out.checks.push_back({name, same ? Status::pass : Status::fail, same ? "" : witness(out.complex.d[n] - tc->d[n])});
            else
                out.checks.push_back({name, Status::skipped, "matrices differ; cohomology compared instead"});
        }
        auto he = cohomology(out.complex), ht = cohomology(*tc);
        out.checks.push_back({"explicit and transpose cohomology dimensions agree",
                              he.dims == ht.dims ? Status::pass : Status::fail, ""});
    }
    return out;
}

HLIsoReport hl_cohomology_iso_check(const HLComplex& hl, const ExteriorCalculus& ext) {
    DGA omega = build_omega(ext);
    CoinvariantSubcomplex sub = coinvariant_subcomplex(complex_of(omega), omega_left_comodules(ext));
    HLIsoReport r;
    r.hl_dims = cohomology(hl.complex).dims;
    r.invariant_dims = cohomology(sub.sub).dims;
    for (std::size_t n = 0; n < r.hl_dims.size(); ++n) {
        std::size_t other = n < r.invariant_dims.size() ? r.invariant_dims[n] : 0;
        if (r.hl_dims[n] != other)
            throw InvariantViolation("H_HL^" + std::to_string(n) + " has dimension " + std::to_string(r.hl_dims[n]) +
                                     " but invariant-form cohomology has " + std::to_string(other));
        r.checks.push_back({"H_HL = H(coP Ω) (degree " + std::to_string(n) + ")", Status::pass,
                            std::to_string(other)});
    }
    return r;
}

}  // namespace hopfdr
