#include <string>

#include "hopfdr/cohomology.hpp"
#include "hopfdr/legs.hpp"

namespace hopfdr {

namespace {

std::size_t power(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= b;
    return r;
}

void require_size(std::size_t entries, const std::string& what, std::size_t n) {
    if (entries > amitsur_entry_cap)
        throw CapExceeded(what + std::to_string(n) + " has " + std::to_string(entries) + " basis elements, above " +
                          std::to_string(amitsur_entry_cap));
}

std::vector<std::size_t> shape(std::size_t pdim, std::size_t legs, std::size_t fdim) {
    std::vector<std::size_t> s(legs, pdim);
    s.push_back(fdim);
    return s;
}

Check make_check(std::string name, bool ok, std::string detail = "") {
    return {std::move(name), ok ? Status::pass : Status::fail, std::move(detail)};
}

std::string deg(std::size_t n) { return " (degree " + std::to_string(n) + ")"; }

void require_left(const Comodule& f) {
    if (f.side != Side::left) throw ShapeError("Hopf cochains need a left comodule");
}

}  // namespace

Mat tensor_coaction(const Comodule& c, std::size_t k) {
    require_left(c);
    const auto& p = c.algebra;
    std::size_t pd = p.dim();
    Legs l(p.field(), shape(pd, k, c.dim));
    l.apply(k, 1, c.coaction, {pd, c.dim});
    for (std::size_t i = k; i-- > 0;) l.apply(i, 1, p.comult(), {pd, pd});
    // p1₁ p1₂ ... pk₁ pk₂ f₋₁ f₀ -> p1₁ ... pk₁ f₋₁ p1₂ ... pk₂ f₀
    std::vector<std::size_t> perm;
    for (std::size_t i = 0; i <= k; ++i) perm.push_back(2 * i);
    for (std::size_t i = 0; i < k; ++i) perm.push_back(2 * i + 1);
    perm.push_back(2 * k + 1);
    l.permute(perm);
    l.apply(0, k + 1, p.mult_iter(k + 1), {pd});
    return l.take();
}

Mat amitsur_d(const FinHopfAlgebra& p, std::size_t fdim, std::size_t n) {
    std::size_t pd = p.dim();
    Field f = p.field();
    Mat out(f, power(pd, n + 2) * fdim, power(pd, n + 1) * fdim);
    for (std::size_t i = 0; i <= n + 1; ++i) {
        Legs l(f, shape(pd, n + 1, fdim));
        l.apply(i, 0, p.unit(), {pd});
        out = i % 2 == 0 ? out + l.matrix() : out - l.matrix();
    }
    return out;
}

Mat amitsur_reduced_d(const Comodule& c, std::size_t n) {
    require_left(c);
    const auto& p = c.algebra;
    std::size_t pd = p.dim();
    Field f = p.field();
    Legs first(f, shape(pd, n, c.dim));
    first.apply(0, 0, p.unit(), {pd});
    Mat out = first.take();
    for (std::size_t i = 1; i <= n; ++i) {
        Legs l(f, shape(pd, n, c.dim));
        l.apply(i - 1, 1, p.comult(), {pd, pd});
        out = i % 2 == 0 ? out + l.matrix() : out - l.matrix();
    }
    Legs last(f, shape(pd, n, c.dim));
    last.apply(n, 1, c.coaction, {pd, c.dim});
    return n % 2 == 0 ? out - last.matrix() : out + last.matrix();
}

AmitsurComplex amitsur_complex(const Comodule& c, AmitsurVariant variant, std::size_t cap) {
    require_left(c);
    const auto& p = c.algebra;
    std::size_t pd = p.dim();
    Field f = p.field();
    AmitsurComplex out;
    out.variant = variant;
    std::vector<std::size_t> dims;
    std::vector<Mat> d;
    if (variant == AmitsurVariant::reduced) {
        for (std::size_t n = 0; n <= cap; ++n) {
            require_size(power(pd, n) * c.dim, "G^", n);
            dims.push_back(power(pd, n) * c.dim);
            if (n < cap) d.push_back(amitsur_reduced_d(c, n));
        }
        out.complex = make_complex(f, std::move(dims), std::move(d));
        return out;
    }
    std::vector<Comodule> co;
    for (std::size_t n = 0; n <= cap; ++n) {
        require_size(power(pd, n + 1) * c.dim, "D^", n);
        dims.push_back(power(pd, n + 1) * c.dim);
        if (n < cap) d.push_back(amitsur_d(p, c.dim, n));
        co.push_back({p, dims.back(), tensor_coaction(c, n + 1), Side::left});
    }
    auto sub = coinvariant_subcomplex(make_complex(f, std::move(dims), std::move(d)), co);
    out.complex = std::move(sub.sub);
    out.coinvariants = std::move(sub.coinvariants);
    return out;
}

ThetaIso theta_iso(const Comodule& c, std::size_t cap) {
    require_left(c);
    const auto& p = c.algebra;
    std::size_t pd = p.dim();
    Field f = p.field();
    Mat mult_s = p.mult() * kron(p.identity(), p.antipode());
    ThetaIso out;
    for (std::size_t n = 0; n <= cap; ++n) {
        require_size(power(pd, n + 1) * c.dim, "D^", n);
        Legs t(f, shape(pd, n, c.dim));
        t.apply(n, 1, c.coaction, {pd, c.dim});
        for (std::size_t i = n; i-- > 0;) t.apply(i, 1, p.comult(), {pd, pd});
        t.apply(0, p.antipode());
        for (std::size_t k = 1; k <= n; ++k) t.apply(k, 2, mult_s, {pd});
        out.theta.push_back(t.take());

        Legs u(f, shape(pd, n + 1, c.dim));
        u.apply(0, 1, p.counit(), {});
        for (std::size_t k = 1; k <= n; ++k) {
            u.apply(k, n - k + 1, tensor_coaction(c, n - k), shape(pd, n - k + 1, c.dim));
            u.apply(k - 1, 2, p.mult(), {pd});
        }
        out.theta_inverse.push_back(u.take());
    }
    for (std::size_t n = 0; n <= cap; ++n) {
        const Mat& t = out.theta[n];
        Mat lam = tensor_coaction(c, n + 1);
        out.checks.push_back(
            make_check("θ lands in coinvariants" + deg(n), lam * t == kron(p.unit(), Mat::identity(f, t.rows())) * t));
        out.checks.push_back(make_check("θ⁻¹∘θ = id" + deg(n), (out.theta_inverse[n] * t).is_identity()));
        Subspace co = coinvariants(Comodule{p, t.rows(), lam, Side::left});
        out.checks.push_back(
            make_check("θ∘θ⁻¹ = id on coinvariants" + deg(n), t * out.theta_inverse[n] * co.basis() == co.basis()));
        if (n < cap)
            out.checks.push_back(make_check("θ∘d̄ = d∘θ" + deg(n),
                                            out.theta[n + 1] * amitsur_reduced_d(c, n) == amitsur_d(p, c.dim, n) * t));
    }
    for (const auto& ch : out.checks)
        if (ch.status == Status::fail) throw InvariantViolation("theta: " + ch.name + " fails");
    return out;
}

HomotopyReport homotopy_check(const Comodule& c, const Mat& action, std::size_t cap) {
    require_left(c);
    const auto& p = c.algebra;
    std::size_t pd = p.dim();
    Field f = p.field();
    HomotopyReport out;
    if (action.rows() != c.dim || action.cols() != pd * c.dim)
        throw ShapeError("homotopy: action has shape " + shape_of(action));
    auto defect = hopf_module_defect(c, action);
    out.hopf_module = !defect;
    if (defect) {
        out.checks.push_back(make_check("Hopf module condition", false,
                                        "fails on " + p.tensor_label(*defect / c.dim, 1) + "⊗f" +
                                            std::to_string(*defect % c.dim)));
        return out;
    }
    out.checks.push_back(make_check("Hopf module condition", true));
    require_size(power(pd, cap + 1) * c.dim, "D^", cap);

    // h[k]: D^k -> D^{k-1}
    for (std::size_t k = 0; k <= cap; ++k) {
        Legs l(f, shape(pd, k + 1, c.dim));
        l.apply(k, 2, action, {c.dim});
        out.h.push_back(k % 2 == 0 ? l.take() : -l.take());
    }
    // d_{-1}: F -> D^0, f -> 1⊗f
    std::vector<Mat> d{kron(p.unit(), Mat::identity(f, c.dim))};
    for (std::size_t n = 0; n < cap; ++n) d.push_back(amitsur_d(p, c.dim, n));
    bool contracts = true, colinear = true;
    for (std::size_t k = 0; k < cap; ++k) {
        Mat s = d[k] * out.h[k] + out.h[k + 1] * d[k + 1];
        if (!s.is_identity()) contracts = false;
    }
    for (std::size_t k = 0; k <= cap; ++k) {
        Mat below = k == 0 ? c.coaction : tensor_coaction(c, k);
        if (!(below * out.h[k] == kron(p.identity(), out.h[k]) * tensor_coaction(c, k + 1))) colinear = false;
    }
    out.checks.push_back(make_check("dh + hd = id", contracts));
    out.checks.push_back(make_check("h is colinear", colinear));

    auto ac = amitsur_complex(c, AmitsurVariant::coinvariant, cap);
    auto h = cohomology(ac.complex);
    Subspace cof = coinvariants(c);
    for (std::size_t n = 0; n < cap; ++n) {
        out.dims.push_back(h.dims[n]);
        std::size_t expect = n == 0 ? cof.dim() : 0;
        out.checks.push_back(make_check("H_c vanishing pattern" + deg(n), h.dims[n] == expect,
                                        std::to_string(h.dims[n]) + " vs " + std::to_string(expect)));
    }
    Mat z0 = ac.coinvariants[0].basis() * h.cocycles[0].basis();
    Mat ones = kron(p.unit(), cof.basis());
    out.checks.push_back(make_check("H_c^0 = 1⊗coinvariants", Subspace::span(z0) == Subspace::span(ones)));
    return out;
}

}  // namespace hopfdr
