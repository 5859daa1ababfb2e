#include "hopfdr/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace hopfdr {

Reducer::Reducer(Field f, std::size_t ambient, bool track)
    : field_(f), ambient_(ambient), track_(track), pivot_of_(ambient, -1) {}

void Reducer::reduce(SparseVec& v, SparseVec* t) const {
    while (!v.empty()) {
        std::int64_t k = pivot_of_[v.back().row];
        if (k < 0) break;
        Scalar c = -v.back().value;
        axpy(v, c, reduced_[k]);
        if (t && track_) axpy(*t, c, tracking_[k]);
    }
}

bool Reducer::insert(SparseVec v, SparseVec t) {
    for (const auto& e : v)
        if (e.row >= ambient_) throw ShapeError("reducer: vector entry outside ambient space");
    reduce(v, &t);
    if (v.empty()) return false;
    Scalar inv = v.back().value.inverse();
    if (!inv.is_one()) {
        v = scaled(v, inv);
        if (track_) t = scaled(t, inv);
    }
    pivot_of_[v.back().row] = static_cast<std::int64_t>(reduced_.size());
    reduced_.push_back(std::move(v));
    if (track_) tracking_.push_back(std::move(t));
    return true;
}

std::vector<std::size_t> Reducer::pivots() const {
    std::vector<std::size_t> p;
    p.reserve(reduced_.size());
    for (const auto& r : reduced_) p.push_back(r.back().row);
    return p;
}

void Reducer::fully_reduce() {
    std::vector<std::size_t> order(reduced_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return reduced_[a].back().row < reduced_[b].back().row; });
    for (std::size_t k : order) {
        auto& r = reduced_[k];
        for (;;) {
            std::int64_t hit = -1;
            Scalar c = field_.zero();
            for (std::size_t i = r.size() - 1; i-- > 0;) {
                std::int64_t m = pivot_of_[r[i].row];
                if (m >= 0) {
                    hit = m;
                    c = -r[i].value;
                    break;
                }
            }
            if (hit < 0) break;
            axpy(r, c, reduced_[hit]);
            if (track_) axpy(tracking_[k], c, tracking_[hit]);
        }
    }
}

Subspace::Subspace(Mat basis) : basis_(std::move(basis)) {
    auto red = std::make_shared<Reducer>(basis_.field(), basis_.rows(), true);
    Scalar one = basis_.field().one();
    for (std::size_t j = 0; j < basis_.cols(); ++j) {
        if (!red->insert(basis_.col(j), SparseVec{{static_cast<std::uint32_t>(j), one}}))
            throw Error("subspace basis is linearly dependent (column " + std::to_string(j) + ")");
    }
    echelon_ = std::move(red);
}

Subspace Subspace::span(const Mat& vectors) { return rank_kernel_image(vectors).image; }

Subspace Subspace::zero(Field f, std::size_t ambient) { return Subspace(Mat(f, ambient, 0)); }

Subspace Subspace::full(Field f, std::size_t ambient) { return Subspace(Mat::identity(f, ambient)); }

bool Subspace::contains(const SparseVec& v) const {
    SparseVec w = v;
    echelon_->reduce(w, nullptr);
    return w.empty();
}

bool Subspace::contains(const Mat& vectors) const {
    if (vectors.rows() != ambient_dim()) throw ShapeError("contains: ambient mismatch");
    for (const auto& c : vectors.columns())
        if (!contains(c)) return false;
    return true;
}

std::optional<Mat> Subspace::coordinates(const Mat& vectors) const {
    if (vectors.rows() != ambient_dim()) throw ShapeError("coordinates: ambient mismatch");
    Mat out(field(), dim(), 0);
    Scalar m1 = -field().one();
    for (const auto& c : vectors.columns()) {
        SparseVec w = c, t;
        echelon_->reduce(w, &t);
        if (!w.empty()) return std::nullopt;
        out.push_col(scaled(t, m1));
    }
    return out;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_dim() == o.ambient_dim() && dim() == o.dim() && contains(o.basis_);
}

Subspace sum(const Subspace& a, const Subspace& b) { return Subspace::span(hstack({a.basis(), b.basis()})); }

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw ShapeError("intersect: ambient mismatch");
    Mat k = kernel(hstack({a.basis(), -b.basis()})).basis();
    std::vector<std::size_t> top(a.dim());
    std::iota(top.begin(), top.end(), 0);
    return Subspace(a.basis() * k.select_rows(top));
}

RankKernelImage rank_kernel_image(const Mat& m) {
    Field f = m.field();
    Reducer red(f, m.rows(), true);
    Mat ker(f, m.cols(), 0);
    std::vector<std::size_t> piv;
    Scalar one = f.one();
    for (std::size_t j = 0; j < m.cols(); ++j) {
        SparseVec v = m.col(j);
        SparseVec t{{static_cast<std::uint32_t>(j), one}};
        red.reduce(v, &t);
        if (v.empty()) {
            ker.push_col(std::move(t));
        } else {
            red.insert(std::move(v), std::move(t));
            piv.push_back(j);
        }
    }
    Subspace img(m.select_cols(piv));
    return {piv.size(), Subspace(std::move(ker)), std::move(img), std::move(piv)};
}

std::size_t rank(const Mat& m) {
    Reducer red(m.field(), m.rows());
    std::size_t r = 0;
    for (const auto& c : m.columns())
        if (red.insert(c)) ++r;
    return r;
}

Subspace kernel(const Mat& m) { return rank_kernel_image(m).kernel; }
Subspace image(const Mat& m) { return rank_kernel_image(m).image; }

std::optional<Mat> solve(const Mat& a, const Mat& b) {
    if (!(a.field() == b.field())) throw FieldMismatch("solve: field mismatch");
    if (a.rows() != b.rows()) throw ShapeError("solve: " + shape_of(a) + " against " + shape_of(b));
    Field f = a.field();
    Reducer red(f, a.rows(), true);
    Scalar one = f.one();
    for (std::size_t j = 0; j < a.cols(); ++j) red.insert(a.col(j), SparseVec{{static_cast<std::uint32_t>(j), one}});
    Mat x(f, a.cols(), 0);
    Scalar m1 = -one;
    for (const auto& c : b.columns()) {
        SparseVec w = c, t;
        red.reduce(w, &t);
        if (!w.empty()) return std::nullopt;
        x.push_col(scaled(t, m1));
    }
    return x;
}

std::optional<Mat> inverse(const Mat& a) {
    if (a.rows() != a.cols()) throw ShapeError("inverse of non-square " + shape_of(a));
    if (rank(a) != a.rows()) return std::nullopt;
    return solve(a, Mat::identity(a.field(), a.rows()));
}

QuotientSpace quotient_space(std::size_t ambient_dim, const Subspace& relations) {
    if (relations.ambient_dim() != ambient_dim) throw ShapeError("quotient_space: relation ambient mismatch");
    Field f = relations.field();
    Reducer red(f, ambient_dim);
    for (const auto& c : relations.basis().columns())
        if (!red.insert(c)) throw Error("quotient_space: dependent relation basis");
    red.fully_reduce();

    std::vector<std::int64_t> owner(ambient_dim, -1);
    for (std::size_t k = 0; k < red.rank(); ++k) owner[red.reduced()[k].back().row] = static_cast<std::int64_t>(k);
    QuotientSpace q;
    q.ambient_dim = ambient_dim;
    q.relations = relations;
    std::vector<std::int64_t> pos(ambient_dim, -1);
    for (std::size_t i = 0; i < ambient_dim; ++i)
        if (owner[i] < 0) {
            pos[i] = static_cast<std::int64_t>(q.complement.size());
            q.complement.push_back(i);
        }
    std::size_t qd = q.complement.size();
    q.projection = Mat(f, qd, ambient_dim);
    q.section = Mat(f, ambient_dim, qd);
    Scalar one = f.one();
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        SparseVec col;
        if (owner[i] < 0) {
            col.push_back({static_cast<std::uint32_t>(pos[i]), one});
            q.section.set_col(pos[i], SparseVec{{static_cast<std::uint32_t>(i), one}});
        } else {
            const auto& r = red.reduced()[owner[i]];
            for (std::size_t k = 0; k + 1 < r.size(); ++k)
                col.push_back({static_cast<std::uint32_t>(pos[r[k].row]), -r[k].value});
        }
        q.projection.set_col(i, std::move(col));
    }
    return q;
}

Mat kron(const Mat& a, const Mat& b) {
    if (!(a.field() == b.field())) throw FieldMismatch("kron: " + a.field().name() + " and " + b.field().name());
    Mat out(a.field(), a.rows() * b.rows(), 0);
    std::size_t rb = b.rows();
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t l = 0; l < b.cols(); ++l) {
            SparseVec c;
            c.reserve(a.col(j).size() * b.col(l).size());
            for (const auto& x : a.col(j))
                for (const auto& y : b.col(l))
                    c.push_back({static_cast<std::uint32_t>(x.row * rb + y.row), x.value * y.value});
            out.push_col(std::move(c));
        }
    return out;
}

Mat kron(std::initializer_list<const Mat*> factors) {
    if (factors.size() == 0) throw ShapeError("kron of nothing");
    auto it = factors.begin();
    Mat out = **it;
    for (++it; it != factors.end(); ++it) out = kron(out, **it);
    return out;
}

Mat kron_power(const Mat& a, std::size_t n) {
    Mat out = Mat::identity(a.field(), 1);
    for (std::size_t i = 0; i < n; ++i) out = kron(out, a);
    return out;
}

std::size_t product_of(const std::vector<std::size_t>& dims) {
    std::size_t n = 1;
    for (auto d : dims) n *= d;
    return n;
}

Mat permutation_tensor(Field f, const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm) {
    std::size_t k = dims.size();
    if (perm.size() != k) throw ShapeError("permutation length mismatch");
    std::vector<bool> seen(k, false);
    for (auto p : perm) {
        if (p >= k || seen[p]) throw ShapeError("not a permutation");
        seen[p] = true;
    }
    // stride of input slot s inside the output index
    std::vector<std::size_t> out_stride(k);
    std::size_t s = 1;
    for (std::size_t i = k; i-- > 0;) {
        out_stride[perm[i]] = s;
        s *= dims[perm[i]];
    }
    std::size_t n = product_of(dims);
    Mat m(f, n, 0);
    Scalar one = f.one();
    std::vector<std::size_t> digit(k, 0);
    for (std::size_t x = 0; x < n; ++x) {
        std::size_t y = 0;
        for (std::size_t i = 0; i < k; ++i) y += digit[i] * out_stride[i];
        m.push_col(SparseVec{{static_cast<std::uint32_t>(y), one}});
        for (std::size_t i = k; i-- > 0;) {
            if (++digit[i] < dims[i]) break;
            digit[i] = 0;
        }
    }
    return m;
}

Mat flip(Field f, std::size_t a, std::size_t b) { return permutation_tensor(f, {a, b}, {1, 0}); }

}  // namespace hopfdr
