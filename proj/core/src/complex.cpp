#include "hopfdr/cohomology.hpp"

#include <string>

namespace hopfdr {

namespace {

std::string witness(const Mat& m) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m.col(j).empty()) return "column " + std::to_string(j);
    return "none";
}

// columns of x are tensors in P⊗C^n whose C^n components are cocycles; returns their images
// in P⊗H^n, rows ordered (basis of P, class)
Mat lift_classes(const CohomologyResult& h, std::size_t n, const Mat& x, std::size_t pdim) {
    Field f = x.field();
    std::size_t cdim = pdim ? x.rows() / pdim : 0;
    std::size_t hd = h.dims[n];
    std::vector<SparseVec> pieces;
    pieces.reserve(x.cols() * pdim);
    for (std::size_t j = 0; j < x.cols(); ++j) {
        std::vector<SparseVec> part(pdim);
        for (const auto& e : x.col(j)) part[e.row / cdim].push_back({static_cast<std::uint32_t>(e.row % cdim), e.value});
        for (auto& p : part) pieces.push_back(std::move(p));
    }
    Mat cls = h.classes(n, Mat::from_columns(f, cdim, std::move(pieces)));
    Mat out(f, pdim * hd, 0);
    for (std::size_t j = 0; j < x.cols(); ++j) {
        SparseVec v;
        for (std::size_t k = 0; k < pdim; ++k)
            for (const auto& e : cls.col(j * pdim + k))
                v.push_back({static_cast<std::uint32_t>(k * hd + e.row), e.value});
        out.push_col(std::move(v));
    }
    return out;
}

Check make_check(std::string name, bool ok, std::string detail = "") {
    return {std::move(name), ok ? Status::pass : Status::fail, std::move(detail)};
}

Check skipped(std::string name, std::string detail) { return {std::move(name), Status::skipped, std::move(detail)}; }

std::string deg(std::size_t n) { return " (degree " + std::to_string(n) + ")"; }

}  // namespace

CochainComplex make_complex(Field f, std::vector<std::size_t> dims, std::vector<Mat> d, bool vanishes_above_cap) {
    if (dims.empty()) throw ShapeError("complex: no degrees");
    if (d.size() + 1 != dims.size()) throw ShapeError("complex: need one differential per degree below the cap");
    for (std::size_t n = 0; n < d.size(); ++n) {
        if (d[n].rows() != dims[n + 1] || d[n].cols() != dims[n])
            throw ShapeError("complex: d" + std::to_string(n) + " has shape " + shape_of(d[n]));
        if (!(d[n].field() == f)) throw FieldMismatch("complex: differential over another field");
    }
    for (std::size_t n = 0; n + 1 < d.size(); ++n) {
        Mat dd = d[n + 1] * d[n];
        if (!dd.is_zero())
            throw InvariantViolation("complex: d∘d ≠ 0 on degree " + std::to_string(n) + ", " + witness(dd));
    }
    return {f, std::move(dims), std::move(d), vanishes_above_cap};
}

CochainComplex complex_of(const DGA& dga) {
    return make_complex(dga.field(), dga.dims(), dga.differentials(), dga.vanishes_above_cap());
}

CochainComplex zero_complex(Field f, std::size_t cap) {
    return make_complex(f, std::vector<std::size_t>(cap + 1, 0), std::vector<Mat>(cap, Mat(f, 0, 0)), true);
}

Mat induced_coaction(const CohomologyResult& h, std::size_t n, const Mat& coaction, std::size_t pdim) {
    return lift_classes(h, n, coaction * h.representatives.at(n), pdim);
}

Mat CohomologyResult::classes(std::size_t n, const Mat& cocycle_columns) const {
    const Mat& reps = representatives.at(n);
    Mat both = hstack({reps, boundaries[n].basis()});
    auto x = solve(both, cocycle_columns);
    if (!x) throw InvariantViolation("cohomology: vector is not a cocycle" + deg(n));
    std::vector<std::size_t> top(reps.cols());
    for (std::size_t i = 0; i < top.size(); ++i) top[i] = i;
    return x->select_rows(top);
}

CohomologyResult cohomology(const CochainComplex& c) {
    Field f = c.field;
    CohomologyResult r;
    for (std::size_t n = 0; n <= c.cap(); ++n) {
        Subspace z = n < c.cap() ? kernel(c.d[n]) : Subspace::full(f, c.dims[n]);
        Subspace b = n == 0 ? Subspace::zero(f, c.dims[0]) : image(c.d[n - 1]);
        Reducer red(f, c.dims[n]);
        for (const auto& v : b.basis().columns()) red.insert(v);
        Mat reps(f, c.dims[n], 0);
        for (const auto& v : z.basis().columns())
            if (red.insert(v)) reps.push_col(v);
        r.dims.push_back(reps.cols());
        r.representatives.push_back(std::move(reps));
        r.cocycles.push_back(std::move(z));
        r.boundaries.push_back(std::move(b));
        r.exact.push_back(c.exact_in(n));
    }
    return r;
}

ComplexMap make_complex_map(const CochainComplex& source, const CochainComplex& target, std::vector<Mat> components) {
    std::size_t top = std::min(source.cap(), target.cap());
    if (components.size() != top + 1) throw ShapeError("complex map: need one component per common degree");
    for (std::size_t n = 0; n <= top; ++n)
        if (components[n].rows() != target.dim(n) || components[n].cols() != source.dim(n))
            throw ShapeError("complex map: component " + std::to_string(n) + " has shape " + shape_of(components[n]));
    for (std::size_t n = 0; n < top; ++n) {
        Mat diff = components[n + 1] * source.d[n] - target.d[n] * components[n];
        if (!diff.is_zero())
            throw InvariantViolation("complex map does not commute with d" + deg(n) + ", " + witness(diff));
    }
    return {source, target, std::move(components)};
}

Mat induced_map(const ComplexMap& f, const CohomologyResult& hs, const CohomologyResult& ht, std::size_t n) {
    return ht.classes(n, f.components.at(n) * hs.representatives.at(n));
}

bool connectedness(const DGA& dga) { return cohomology(complex_of(dga)).dims.at(0) == 1; }

std::vector<Comodule> left_comodules(const FinHopfAlgebra& p, const std::vector<Mat>& coactions) {
    std::vector<Comodule> out;
    for (const auto& l : coactions) {
        if (l.rows() != p.dim() * l.cols()) throw ShapeError("coaction has shape " + shape_of(l));
        out.push_back({p, l.cols(), l, Side::left});
    }
    return out;
}

CoinvariantSubcomplex coinvariant_subcomplex(const CochainComplex& c, const std::vector<Comodule>& coactions) {
    if (coactions.size() < c.dims.size()) throw ShapeError("coinvariant subcomplex: need a coaction per degree");
    Field f = c.field;
    CoinvariantSubcomplex out;
    for (std::size_t n = 0; n <= c.cap(); ++n) {
        if (coactions[n].dim != c.dims[n] || coactions[n].side != Side::left)
            throw ShapeError("coinvariant subcomplex: coaction on degree " + std::to_string(n) + " does not fit");
        out.coinvariants.push_back(coinvariants(coactions[n]));
    }
    std::vector<Mat> d;
    for (std::size_t n = 0; n < c.cap(); ++n) {
        std::size_t pd = coactions[n].algebra.dim();
        Mat lhs = kron(Mat::identity(f, pd), c.d[n]) * coactions[n].coaction;
        Mat rhs = coactions[n + 1].coaction * c.d[n];
        if (!(lhs == rhs))
            throw InvariantViolation("coinvariant subcomplex: d is not colinear" + deg(n) + ", " +
                                     witness(lhs - rhs));
        auto x = out.coinvariants[n + 1].coordinates(c.d[n] * out.coinvariants[n].basis());
        if (!x) throw InvariantViolation("coinvariant subcomplex: d leaves the coinvariants" + deg(n));
        d.push_back(std::move(*x));
    }
    std::vector<std::size_t> dims;
    std::vector<Mat> incl;
    for (const auto& s : out.coinvariants) {
        dims.push_back(s.dim());
        incl.push_back(s.basis());
    }
    out.sub = make_complex(f, std::move(dims), std::move(d), c.vanishes_above_cap);
    out.inclusion = make_complex_map(out.sub, c, std::move(incl));
    return out;
}

AveragingReport invariant_forms_check(const FinHopfAlgebra& p, const DGA& omega_p, const CochainComplex& c,
                                      const std::vector<Comodule>& coactions) {
    Field f = c.field;
    AveragingReport r;
    auto ci = coinvariant_subcomplex(c, coactions);
    r.full = cohomology(c);
    r.invariant = cohomology(ci.sub);
    r.connected = connectedness(omega_p);
    auto integral = left_integral(p);
    r.normalised_integral = integral.normalised && integral.functional.has_value();

    std::size_t top = c.cap();
    for (std::size_t n = 0; n <= top; ++n) {
        r.induced_inclusion.push_back(induced_map(ci.inclusion, r.invariant, r.full, n));
        std::size_t hd = r.full.dims[n];
        Mat lt = lift_classes(r.full, n, coactions[n].coaction * r.full.representatives[n], p.dim());
        Mat fixed = lt - kron(p.unit(), Mat::identity(f, hd));
        r.coinvariant_classes.push_back(kernel(fixed));
    }

    if (r.normalised_integral) {
        const Mat& integ = *integral.functional;
        bool lands = true, retract = true, chain = true;
        for (std::size_t n = 0; n <= top; ++n) {
            Mat avg = kron(integ, Mat::identity(f, c.dims[n])) * coactions[n].coaction;
            auto x = ci.coinvariants[n].coordinates(avg);
            if (!x) {
                lands = false;
                x = Mat(f, ci.sub.dims[n], c.dims[n]);
            }
            if (!(*x * ci.coinvariants[n].basis()).is_identity()) retract = false;
            r.averaging.push_back(std::move(*x));
        }
        for (std::size_t n = 0; n < top; ++n)
            if (!(r.averaging[n + 1] * c.d[n] == ci.sub.d[n] * r.averaging[n])) chain = false;
        r.checks.push_back(make_check("normalised left integral", true));
        r.checks.push_back(make_check("averaging lands in coinvariants", lands));
        r.checks.push_back(make_check("averaging restricts to the identity on coinvariants", retract));
        r.checks.push_back(make_check("averaging is a cochain map", chain));
        if (lands && chain) {
            bool left_inverse = true;
            for (std::size_t n = 0; n <= top; ++n) {
                Mat hav = r.invariant.classes(n, r.averaging[n] * r.full.representatives[n]);
                if (!(hav * r.induced_inclusion[n]).is_identity()) left_inverse = false;
                r.induced_averaging.push_back(std::move(hav));
            }
            r.checks.push_back(make_check("H(averaging)∘H(i) = id", left_inverse));
        }
    } else {
        r.checks.push_back(skipped("normalised left integral", "no normalised left integral"));
        r.checks.push_back(skipped("averaging is a cochain map", "no normalised left integral"));
        r.checks.push_back(skipped("H(averaging)∘H(i) = id", "no normalised left integral"));
    }

    for (std::size_t n = 0; n <= top; ++n) {
        std::string sfx = deg(n);
        if (!r.full.exact[n] || !r.invariant.exact[n]) {
            r.checks.push_back(skipped("invariant cohomology" + sfx, "top degree of a truncated complex"));
            continue;
        }
        const Mat& hi = r.induced_inclusion[n];
        if (r.normalised_integral)
            r.checks.push_back(make_check("H(i) injective" + sfx, rank(hi) == r.invariant.dims[n]));
        Subspace im = image(hi);
        const Subspace& co = r.coinvariant_classes[n];
        bool inside = co.contains(im.basis());
        bool equal = inside && im.dim() == co.dim();
        r.checks.push_back(make_check("image of H(i) is coinvariant" + sfx, inside));
        std::string detail =
            "dim im H(i) = " + std::to_string(im.dim()) + ", dim coinvariant classes = " + std::to_string(co.dim());
        if (r.normalised_integral || equal)
            r.checks.push_back(make_check("image of H(i) = coinvariant classes" + sfx, equal, detail));
        else
            r.checks.push_back(skipped("image of H(i) = coinvariant classes" + sfx,
                                       detail + "; equality needs a normalised integral"));
        if (r.connected)
            r.checks.push_back(make_check("all classes coinvariant (connected)" + sfx, co.dim() == r.full.dims[n]));
        if (r.connected && r.normalised_integral)
            r.checks.push_back(make_check("invariant and full cohomology agree" + sfx,
                                          r.invariant.dims[n] == r.full.dims[n],
                                          std::to_string(r.invariant.dims[n]) + " vs " +
                                              std::to_string(r.full.dims[n])));
    }
    return r;
}

CohomologyCoaction coaction_on_cohomology(const std::vector<Mat>& lambda_bar, const DGA& omega_m,
                                          const DGA& omega_p) {
    Field f = omega_m.field();
    auto c = complex_of(omega_m);
    auto h = cohomology(c);
    std::size_t pd = omega_p.dim(0);
    bool connected = connectedness(omega_p);
    CohomologyCoaction out;
    if (lambda_bar.size() < c.dims.size()) throw ShapeError("coaction on cohomology: need λ̄ in every degree");
    for (std::size_t n = 0; n < c.cap(); ++n) {
        Mat lhs = kron(Mat::identity(f, pd), c.d[n]) * lambda_bar[n];
        out.checks.push_back(make_check("d is colinear" + deg(n), lhs == lambda_bar[n + 1] * c.d[n]));
    }
    if (!all_passed(out.checks)) return out;
    Mat dp = omega_p.cap() >= 1 ? omega_p.d(0) : Mat(f, 0, pd);
    Mat unit = omega_p.base().unit;
    for (std::size_t n = 0; n <= c.cap(); ++n) {
        Mat lt = lift_classes(h, n, lambda_bar[n] * h.representatives[n], pd);
        std::size_t hd = h.dims[n];
        if (h.exact[n]) {
            Mat into = kron(dp, Mat::identity(f, hd)) * lt;
            out.checks.push_back(make_check("coaction lands in ker d⊗H" + deg(n), into.is_zero()));
            if (connected)
                out.checks.push_back(
                    make_check("classes fixed by the coaction" + deg(n), lt == kron(unit, Mat::identity(f, hd))));
        } else {
            out.checks.push_back(skipped("coaction lands in ker d⊗H" + deg(n), "top degree of a truncated complex"));
        }
        out.coaction.push_back(std::move(lt));
    }
    return out;
}

KunnethReport kunneth_check(const DGA& nd, const DGA& md) {
    auto t = tensor_dga(nd, md);
    auto hn = cohomology(complex_of(nd));
    auto hm = cohomology(complex_of(md));
    auto ht = cohomology(complex_of(t.dga));
    KunnethReport r;
    for (std::size_t k = 0; k <= t.dga.cap(); ++k) {
        std::size_t conv = 0;
        bool exact = ht.exact[k];
        std::vector<Mat> blocks;
        for (std::size_t a = 0; a <= k; ++a) {
            conv += hn.dims[a] * hm.dims[k - a];
            exact = exact && hn.exact[a] && hm.exact[k - a];
            blocks.push_back(t.injection(k, a) * kron(hn.representatives[a], hm.representatives[k - a]));
        }
        r.product_dims.push_back(ht.dims[k]);
        r.convolution.push_back(conv);
        Mat cross = ht.classes(k, hstack(blocks));
        if (exact) {
            r.checks.push_back(make_check("Künneth dimensions" + deg(k), conv == ht.dims[k],
                                          std::to_string(ht.dims[k]) + " vs " + std::to_string(conv)));
            r.checks.push_back(make_check("cross product is an isomorphism" + deg(k),
                                          cross.rows() == cross.cols() && rank(cross) == cross.rows()));
        } else {
            r.checks.push_back(skipped("Künneth dimensions" + deg(k), "top degree of a truncated complex"));
        }
        r.cross.push_back(std::move(cross));
    }
    return r;
}

}  // namespace hopfdr
