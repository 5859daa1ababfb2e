#include "hopfdr/dga.hpp"

#include "block.hpp"
#include "hopfdr/legs.hpp"

namespace hopfdr {

Algebra algebra_of(const FinHopfAlgebra& p) { return {p.field(), p.dim(), p.labels(), p.mult(), p.unit()}; }

Algebra algebra_of(const ComoduleAlgebra& f) { return {f.mult.field(), f.dim, f.labels, f.mult, f.unit}; }

Algebra tensor_algebra(const Algebra& a, const Algebra& b) {
    Algebra t;
    t.field = a.field;
    t.dim = a.dim * b.dim;
    for (const auto& x : a.labels)
        for (const auto& y : b.labels) t.labels.push_back(x + "⊗" + y);
    t.mult = kron(a.mult, b.mult) * permutation_tensor(a.field, {a.dim, b.dim, a.dim, b.dim}, {0, 2, 1, 3});
    t.unit = kron(a.unit, b.unit);
    return t;
}

Algebra ground_algebra(Field f) { return {f, 1, {"1"}, Mat::identity(f, 1), Mat::identity(f, 1)}; }

CheckList algebra_checks(const Algebra& a) {
    CheckList out;
    Mat id = Mat::identity(a.field, a.dim);
    Mat lhs = a.mult * kron(a.mult, id), rhs = a.mult * kron(id, a.mult);
    auto w = first_difference(lhs, rhs);
    out.push_back({"algebra associative", w ? Status::fail : Status::pass, w ? "witness column " + std::to_string(*w) : ""});
    bool unital = a.mult * kron(a.unit, id) == id && a.mult * kron(id, a.unit) == id;
    out.push_back({"algebra unital", unital ? Status::pass : Status::fail, ""});
    return out;
}

DGA::DGA(std::string name, Algebra base, std::vector<std::size_t> dims, std::vector<Mat> d, ProductFn product,
         bool vanishes_above_cap)
    : s_(std::make_shared<State>()) {
    if (dims.empty()) throw ShapeError("DGA needs degree 0");
    if (d.size() + 1 != dims.size()) throw ShapeError("DGA: need one differential per degree below the cap");
    if (dims[0] != base.dim) throw ShapeError("DGA: degree 0 must be the base algebra");
    for (std::size_t n = 0; n < d.size(); ++n)
        if (d[n].cols() != dims[n] || d[n].rows() != dims[n + 1])
            throw ShapeError("DGA: differential " + std::to_string(n) + " has shape " + shape_of(d[n]));
    s_->name = std::move(name);
    s_->base = std::move(base);
    s_->dims = std::move(dims);
    s_->d = std::move(d);
    s_->product = std::move(product);
    s_->vanishes = vanishes_above_cap;
}

const Mat& DGA::d(std::size_t n) const {
    if (n >= s_->d.size()) throw CapExceeded("differential beyond degree cap " + std::to_string(cap()));
    return s_->d[n];
}

Mat DGA::product(std::size_t r, std::size_t s) const {
    if (r + s > cap()) throw CapExceeded("product lands beyond degree cap");
    {
        std::lock_guard<std::mutex> lock(s_->mu);
        auto it = s_->cache.find({r, s});
        if (it != s_->cache.end()) return it->second;
    }
    Mat m = s_->product(r, s);
    if (m.rows() != dim(r + s) || m.cols() != dim(r) * dim(s))
        throw ShapeError("DGA: product " + std::to_string(r) + "," + std::to_string(s) + " has shape " + shape_of(m));
    std::lock_guard<std::mutex> lock(s_->mu);
    s_->cache.emplace(std::make_pair(r, s), m);
    return m;
}

CheckList dga_checks(const DGA& dga, const DGAChecks& opts) {
    CheckList out;
    Field f = dga.field();
    std::size_t cap = dga.cap();
    auto add = [&](std::string name, bool ok, std::string detail = "") {
        out.push_back({std::move(name), ok ? Status::pass : Status::fail, std::move(detail)});
    };
    for (std::size_t n = 0; n + 1 < cap; ++n) {
        Mat dd = dga.d(n + 1) * dga.d(n);
        add("d∘d = 0 on degree " + std::to_string(n), dd.is_zero());
    }
    if (cap >= 1) add("d(1) = 0", (dga.d(0) * dga.base().unit).is_zero());

    for (std::size_t n = 0; n <= cap; ++n) {
        Mat left = dga.product(0, n) * kron(dga.base().unit, Mat::identity(f, dga.dim(n)));
        Mat right = dga.product(n, 0) * kron(Mat::identity(f, dga.dim(n)), dga.base().unit);
        add("unit acts trivially on degree " + std::to_string(n), left.is_identity() && right.is_identity());
    }

    for (std::size_t total = 0; total < cap; ++total)
        for (std::size_t r = 0; r <= total; ++r) {
            std::size_t s = total - r;
            std::string name = "graded Leibniz on degrees (" + std::to_string(r) + "," + std::to_string(s) + ")";
            std::size_t cost = std::max({dga.dim(r) * dga.dim(s), dga.dim(r + 1) * dga.dim(s), dga.dim(r) * dga.dim(s + 1)});
            if (cost > opts.leibniz_budget) {
                out.push_back({name, Status::skipped, "product tensor too large (" + std::to_string(cost) + " pairs)"});
                continue;
            }
            Mat ir = Mat::identity(f, dga.dim(r)), is = Mat::identity(f, dga.dim(s));
            Mat lhs = dga.d(total) * dga.product(r, s);
            Mat rhs = dga.product(r + 1, s) * kron(dga.d(r), is);
            Mat second = dga.product(r, s + 1) * kron(ir, dga.d(s));
            rhs = r % 2 == 0 ? rhs + second : rhs - second;
            auto w = first_difference(lhs, rhs);
            add(name, !w, w ? "witness pair " + std::to_string(*w / std::max<std::size_t>(dga.dim(s), 1)) + "," +
                                  std::to_string(*w % std::max<std::size_t>(dga.dim(s), 1))
                            : "");
        }

    if (cap >= 1) {
        Mat gen = dga.product(0, 1) * kron(Mat::identity(f, dga.dim(0)), dga.d(0));
        std::size_t rk = rank(gen);
        add("density: Ω¹ spanned by a·db", rk == dga.dim(1),
            "rank " + std::to_string(rk) + " of " + std::to_string(dga.dim(1)));
    }
    return out;
}

namespace {

QuotientSpace unit_quotient(const Algebra& a) { return quotient_space(a.dim, Subspace(a.unit)); }

// φ with φ(1) = 1 vanishing on the section image
Mat unit_functional(const Algebra& a, const QuotientSpace& q) {
    Field f = a.field;
    Mat rest = Mat::identity(f, a.dim) - q.section * q.projection;  // a -> φ(a)·1
    const auto& u = a.unit.col(0);
    if (u.empty()) throw Error("algebra unit is zero");
    std::size_t i0 = u.front().row;
    Scalar inv = u.front().value.inverse();
    Mat phi(f, 1, a.dim);
    for (std::size_t j = 0; j < a.dim; ++j) {
        auto v = lookup(rest.col(j), i0);
        if (v) phi.set(0, j, *v * inv);
    }
    return phi;
}

}  // namespace

DGA universal_calculus(const Algebra& a, std::size_t cap) {
    Field f = a.field;
    QuotientSpace q = unit_quotient(a);
    std::size_t bar = q.dim();
    std::vector<std::size_t> dims;
    std::size_t p = 1;
    for (std::size_t n = 0; n <= cap; ++n) {
        dims.push_back(a.dim * p);
        p *= bar;
    }
    Mat dgen = kron(a.unit, q.projection);  // a -> 1⊗ā
    std::vector<Mat> d;
    p = 1;
    for (std::size_t n = 0; n < cap; ++n) {
        d.push_back(kron(dgen, Mat::identity(f, p)));
        p *= bar;
    }

    // right multiplication Ω^r⊗A -> Ω^r, built recursively
    struct RightMult {
        std::mutex mu;
        std::vector<Mat> r;
    };
    auto rm = std::make_shared<RightMult>();
    rm->r.push_back(a.mult);
    Mat tail = q.projection * a.mult * kron(q.section, Mat::identity(f, a.dim));  // ā⊗b -> π(s(ā)b)
    auto right_mult = [rm, f, q, tail, dims](std::size_t r) {
        std::lock_guard<std::mutex> lock(rm->mu);
        while (rm->r.size() <= r) {
            std::size_t k = rm->r.size();
            Mat idprev = Mat::identity(f, dims[k - 1]);
            Mat first = kron(idprev, tail);
            Mat ia = Mat::identity(f, dims[0]);
            Mat second = kron(rm->r[k - 1], q.projection) * kron({&idprev, &q.section, &ia});
            rm->r.push_back(first - second);
        }
        return rm->r[r];
    };
    auto product = [right_mult, f, bar](std::size_t r, std::size_t s) {
        std::size_t p = 1;
        for (std::size_t i = 0; i < s; ++i) p *= bar;
        return kron(right_mult(r), Mat::identity(f, p));
    };
    return DGA("universal", a, std::move(dims), std::move(d), product, bar == 0);
}

Mat universal_homotopy(const Algebra& a, std::size_t n) {
    if (n == 0) throw ShapeError("homotopy starts in degree 1");
    Field f = a.field;
    QuotientSpace q = unit_quotient(a);
    Mat phi = unit_functional(a, q);
    std::size_t p = 1;
    for (std::size_t i = 1; i < n; ++i) p *= q.dim();
    Mat rest = Mat::identity(f, p);
    return kron({&phi, &q.section, &rest});
}

Mat TensorDGA::projection(std::size_t n, std::size_t r) const {
    Field f = dga.field();
    std::size_t size = left.dim(r) * right.dim(n - r);
    Mat p(f, size, dga.dim(n));
    for (std::size_t i = 0; i < size; ++i) p.set(i, offsets[n][r] + i, f.one());
    return p;
}

Mat TensorDGA::injection(std::size_t n, std::size_t r) const { return projection(n, r).transpose(); }

TensorDGA tensor_dga(const DGA& nd, const DGA& md) {
    if (!(nd.field() == md.field())) throw FieldMismatch("tensor_dga: factors over different fields");
    Field f = nd.field();
    std::size_t cap = std::min(nd.cap(), md.cap());
    TensorDGA t;
    t.left = nd;
    t.right = md;
    std::vector<std::size_t> dims;
    for (std::size_t n = 0; n <= cap; ++n) {
        std::vector<std::size_t> off;
        std::size_t total = 0;
        for (std::size_t r = 0; r <= n; ++r) {
            off.push_back(total);
            total += nd.dim(r) * md.dim(n - r);
        }
        t.offsets.push_back(off);
        dims.push_back(total);
    }
    std::vector<Mat> d;
    for (std::size_t n = 0; n < cap; ++n) {
        detail::BlockBuilder b(f, dims[n + 1], dims[n]);
        for (std::size_t r = 0; r <= n; ++r) {
            std::size_t s = n - r;
            Mat first = kron(nd.d(r), Mat::identity(f, md.dim(s)));
            b.add(first, t.offsets[n + 1][r + 1], t.offsets[n][r], f.one());
            Mat second = kron(Mat::identity(f, nd.dim(r)), md.d(s));
            b.add(second, t.offsets[n + 1][r], t.offsets[n][r], r % 2 == 0 ? f.one() : -f.one());
        }
        d.push_back(b.take());
    }
    auto offsets = t.offsets;
    auto product = [nd, md, offsets, dims, f](std::size_t r, std::size_t s) {
        // column (i, j) of Ω^r⊗Ω^s with i in block (a, r-a) and j in block (c, s-c)
        std::vector<SparseVec> cols(dims[r] * dims[s]);
        for (std::size_t a = 0; a <= r; ++a)
            for (std::size_t c = 0; c <= s; ++c) {
                std::size_t b = r - a, e = s - c;
                std::size_t na = nd.dim(a), mb = md.dim(b), nc = nd.dim(c), me = md.dim(e);
                if (na * mb == 0 || nc * me == 0) continue;
                Legs l(f, {na, mb, nc, me});
                l.permute({0, 2, 1, 3});
                l.apply(0, 2, nd.product(a, c), {nd.dim(a + c)});
                l.apply(1, 2, md.product(b, e), {md.dim(b + e)});
                const Mat& m = l.matrix();
                Scalar sign = (b * c) % 2 == 0 ? f.one() : -f.one();
                std::size_t ro = offsets[r + s][a + c];
                std::size_t left_size = mb, right_size = nc * me;
                for (std::size_t i = 0; i < na * left_size; ++i)
                    for (std::size_t j = 0; j < right_size; ++j) {
                        const SparseVec& src = m.col(i * right_size + j);
                        SparseVec v;
                        v.reserve(src.size());
                        for (const auto& x : src) v.push_back({static_cast<std::uint32_t>(x.row + ro), x.value * sign});
                        cols[(offsets[r][a] + i) * dims[s] + offsets[s][c] + j] = std::move(v);
                    }
            }
        return Mat::from_columns(f, dims[r + s], std::move(cols));
    };
    Algebra base = tensor_algebra(nd.base(), md.base());
    bool vanishes = nd.vanishes_above_cap() && md.vanishes_above_cap() && nd.cap() == md.cap();
    t.dga = DGA(nd.name() + "⊗" + md.name(), std::move(base), std::move(dims), std::move(d), product, vanishes);
    return t;
}

ExtendedCoaction extend_coaction(const Mat& lambda, const DGA& omega_m, const TensorDGA& omega_pm) {
    const DGA& t = omega_pm.dga;
    Field f = omega_m.field();
    std::size_t m = omega_m.dim(0);
    if (lambda.cols() != m || lambda.rows() != t.dim(0)) throw ShapeError("extend_coaction: λ has shape " + shape_of(lambda));
    std::size_t cap = std::min(omega_m.cap(), t.cap());
    ExtendedCoaction out;
    Mat g = Mat::identity(f, m), h = lambda;
    Mat dlam = cap >= 1 ? t.d(0) * lambda : Mat();
    std::size_t gens = m;
    for (std::size_t n = 0; n <= cap; ++n) {
        if (n > 0) {
            gens *= m;
            if (gens > 20000) throw CapExceeded("extend_coaction: " + std::to_string(gens) + " generators in degree " + std::to_string(n));
            g = omega_m.product(n - 1, 1) * kron(g, omega_m.d(0));
            h = t.product(n - 1, 1) * kron(h, dlam);
        }
        auto rki = rank_kernel_image(g);
        if (rki.rank != omega_m.dim(n)) {
            out.checks.push_back({"degree " + std::to_string(n) + " forms generated by a0·da1...dan", Status::fail,
                                  "rank " + std::to_string(rki.rank) + " of " + std::to_string(omega_m.dim(n))});
            throw Unavailable("coaction not differentiable for this calculus: degree " + std::to_string(n) +
                              " forms are not generated by a0·da1...dan");
        }
        Mat hk = h * rki.kernel.basis();
        if (!hk.is_zero()) {
            std::size_t w = *first_difference(hk, Mat(f, hk.rows(), hk.cols()));
            throw Unavailable("coaction not differentiable for this calculus: relation " +
                              std::to_string(w) + " in degree " + std::to_string(n) + " is not preserved");
        }
        out.checks.push_back({"λ_* well defined in degree " + std::to_string(n), Status::pass, ""});
        auto inv = inverse(g.select_cols(rki.pivot_columns));
        Mat ls = h.select_cols(rki.pivot_columns) * *inv;
        out.lambda_bar.push_back(omega_pm.projection(n, 0) * ls);
        out.lambda_star.push_back(std::move(ls));
    }
    for (std::size_t n = 0; n < cap; ++n) {
        bool ok = out.lambda_star[n + 1] * omega_m.d(n) == t.d(n) * out.lambda_star[n];
        out.checks.push_back({"λ_*∘d = d∘λ_* in degree " + std::to_string(n), ok ? Status::pass : Status::fail, ""});
    }
    return out;
}

}  // namespace hopfdr
