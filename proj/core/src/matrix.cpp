#include "hopfdr/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "accumulator.hpp"

namespace hopfdr {

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x) {
    if (a.is_zero() || x.empty()) return;
    SparseVec out;
    out.reserve(y.size() + x.size());
    std::size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].row < x[j].row)) {
            out.push_back(std::move(y[i++]));
        } else if (i == y.size() || x[j].row < y[i].row) {
            out.push_back({x[j].row, a * x[j].value});
            ++j;
        } else {
            Scalar v = std::move(y[i].value);
            v.add_mul(a, x[j].value);
            if (!v.is_zero()) out.push_back({x[j].row, std::move(v)});
            ++i;
            ++j;
        }
    }
    y = std::move(out);
}

SparseVec scaled(const SparseVec& x, const Scalar& a) {
    SparseVec out;
    if (a.is_zero()) return out;
    out.reserve(x.size());
    for (const auto& e : x) out.push_back({e.row, e.value * a});
    return out;
}

std::optional<Scalar> lookup(const SparseVec& x, std::size_t row) {
    auto it = std::lower_bound(x.begin(), x.end(), row,
                               [](const Entry& e, std::size_t r) { return e.row < r; });
    if (it != x.end() && it->row == row) return it->value;
    return std::nullopt;
}

Mat::Mat(Field f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols) {}

Mat Mat::identity(Field f, std::size_t n) {
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.cols_[i].push_back({static_cast<std::uint32_t>(i), f.one()});
    return m;
}

Mat Mat::from_ints(Field f, const std::vector<std::vector<std::int64_t>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    Mat m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw ShapeError("ragged row list");
        for (std::size_t j = 0; j < c; ++j) {
            Scalar v = f.from_int(rows[i][j]);
            if (!v.is_zero()) m.cols_[j].push_back({static_cast<std::uint32_t>(i), std::move(v)});
        }
    }
    return m;
}

Mat Mat::from_dense(Field f, std::size_t rows, std::size_t cols, const std::vector<Scalar>& row_major) {
    if (row_major.size() != rows * cols) throw ShapeError("dense entry count does not match shape");
    Mat m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            const Scalar& v = row_major[i * cols + j];
            if (v.characteristic() != f.characteristic()) throw FieldMismatch("entry outside the declared field");
            if (!v.is_zero()) m.cols_[j].push_back({static_cast<std::uint32_t>(i), v});
        }
    return m;
}

Mat Mat::from_columns(Field f, std::size_t rows, std::vector<SparseVec> cols) {
    Mat m(f, rows, 0);
    m.cols_.reserve(cols.size());
    for (auto& c : cols) m.push_col(std::move(c));
    return m;
}

Mat Mat::unit_vector(Field f, std::size_t n, std::size_t i) {
    Mat m(f, n, 1);
    m.cols_[0].push_back({static_cast<std::uint32_t>(i), f.one()});
    return m;
}

void Mat::set_col(std::size_t j, SparseVec v) {
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].row >= rows_) throw ShapeError("column entry out of range");
        if (k && v[k - 1].row >= v[k].row) throw ShapeError("column entries not sorted");
        if (v[k].value.characteristic() != field_.characteristic()) throw FieldMismatch("column entry outside field");
    }
    std::erase_if(v, [](const Entry& e) { return e.value.is_zero(); });
    cols_.at(j) = std::move(v);
}

void Mat::push_col(SparseVec v) {
    cols_.emplace_back();
    set_col(cols_.size() - 1, std::move(v));
}

void Mat::set(std::size_t i, std::size_t j, const Scalar& v) {
    if (i >= rows_ || j >= cols()) throw ShapeError("index out of range");
    auto& c = cols_[j];
    auto it = std::lower_bound(c.begin(), c.end(), i, [](const Entry& e, std::size_t r) { return e.row < r; });
    if (it != c.end() && it->row == i) {
        if (v.is_zero())
            c.erase(it);
        else
            it->value = v;
    } else if (!v.is_zero()) {
        c.insert(it, {static_cast<std::uint32_t>(i), v});
    }
}

Scalar Mat::at(std::size_t i, std::size_t j) const {
    auto v = lookup(cols_.at(j), i);
    return v ? *v : field_.zero();
}

std::size_t Mat::nnz() const {
    std::size_t n = 0;
    for (const auto& c : cols_) n += c.size();
    return n;
}

bool Mat::is_zero() const {
    return std::all_of(cols_.begin(), cols_.end(), [](const SparseVec& c) { return c.empty(); });
}

bool Mat::is_identity() const {
    if (rows_ != cols()) return false;
    for (std::size_t j = 0; j < cols(); ++j) {
        const auto& c = cols_[j];
        if (c.size() != 1 || c[0].row != j || !c[0].value.is_one()) return false;
    }
    return true;
}

Mat Mat::transpose() const {
    Mat t(field_, cols(), rows_);
    for (std::size_t j = 0; j < cols(); ++j)
        for (const auto& e : cols_[j]) t.cols_[e.row].push_back({static_cast<std::uint32_t>(j), e.value});
    return t;
}

void Mat::require_field(const Mat& b, const char* op) const {
    if (!(field_ == b.field_)) {
        throw FieldMismatch(std::string(op) + ": matrices over " + field_.name() + " and " + b.field_.name());
    }
}

SparseVec Mat::apply(const SparseVec& x) const {
    detail::Accumulator acc(field_, rows_);
    for (const auto& e : x) {
        if (e.row >= cols()) throw ShapeError("apply: vector longer than matrix width");
        acc.add(e.value, cols_[e.row]);
    }
    return acc.take();
}

Mat Mat::operator*(const Mat& b) const {
    require_field(b, "multiply");
    if (cols() != b.rows_) throw ShapeError("multiply: " + shape_of(*this) + " times " + shape_of(b));
    Mat out(field_, rows_, b.cols());
    detail::Accumulator acc(field_, rows_);
    for (std::size_t j = 0; j < b.cols(); ++j) {
        for (const auto& e : b.cols_[j]) acc.add(e.value, cols_[e.row]);
        out.cols_[j] = acc.take();
    }
    return out;
}

Mat Mat::operator+(const Mat& b) const {
    require_field(b, "add");
    if (rows_ != b.rows_ || cols() != b.cols()) throw ShapeError("add: " + shape_of(*this) + " vs " + shape_of(b));
    Mat out = *this;
    Scalar one = field_.one();
    for (std::size_t j = 0; j < cols(); ++j) axpy(out.cols_[j], one, b.cols_[j]);
    return out;
}

Mat Mat::operator-(const Mat& b) const {
    require_field(b, "subtract");
    if (rows_ != b.rows_ || cols() != b.cols()) throw ShapeError("subtract: " + shape_of(*this) + " vs " + shape_of(b));
    Mat out = *this;
    Scalar m1 = -field_.one();
    for (std::size_t j = 0; j < cols(); ++j) axpy(out.cols_[j], m1, b.cols_[j]);
    return out;
}

Mat Mat::operator-() const { return scaled(-field_.one()); }

Mat Mat::scaled(const Scalar& a) const {
    Mat out(field_, rows_, cols());
    for (std::size_t j = 0; j < cols(); ++j) out.cols_[j] = hopfdr::scaled(cols_[j], a);
    return out;
}

Mat Mat::col_range(std::size_t begin, std::size_t end) const {
    if (begin > end || end > cols()) throw ShapeError("column range out of bounds");
    Mat out(field_, rows_, 0);
    out.cols_.assign(cols_.begin() + begin, cols_.begin() + end);
    return out;
}

Mat Mat::select_cols(const std::vector<std::size_t>& idx) const {
    Mat out(field_, rows_, 0);
    out.cols_.reserve(idx.size());
    for (auto j : idx) out.cols_.push_back(cols_.at(j));
    return out;
}

Mat Mat::select_rows(const std::vector<std::size_t>& idx) const {
    std::vector<std::int64_t> where(rows_, -1);
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] >= rows_) throw ShapeError("row index out of range");
        where[idx[k]] = static_cast<std::int64_t>(k);
    }
    bool monotone = std::is_sorted(idx.begin(), idx.end());
    Mat out(field_, idx.size(), cols());
    for (std::size_t j = 0; j < cols(); ++j) {
        auto& c = out.cols_[j];
        for (const auto& e : cols_[j])
            if (where[e.row] >= 0) c.push_back({static_cast<std::uint32_t>(where[e.row]), e.value});
        if (!monotone) std::sort(c.begin(), c.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
    }
    return out;
}

std::vector<Scalar> Mat::dense_col(std::size_t j) const {
    std::vector<Scalar> v(rows_, field_.zero());
    for (const auto& e : cols_.at(j)) v[e.row] = e.value;
    return v;
}

std::vector<std::vector<Scalar>> Mat::to_dense() const {
    std::vector<std::vector<Scalar>> d(rows_, std::vector<Scalar>(cols(), field_.zero()));
    for (std::size_t j = 0; j < cols(); ++j)
        for (const auto& e : cols_[j]) d[e.row][j] = e.value;
    return d;
}

std::string Mat::to_string() const {
    std::ostringstream os;
    auto d = to_dense();
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols(); ++j) os << (j ? ", " : "") << d[i][j];
        os << "]";
    }
    os << "]";
    return os.str();
}

static bool same_col(const SparseVec& a, const SparseVec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k].row != b[k].row || !(a[k].value == b[k].value)) return false;
    return true;
}

bool operator==(const Mat& a, const Mat& b) {
    a.require_field(b, "compare");
    if (a.rows_ != b.rows_ || a.cols() != b.cols()) return false;
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (!same_col(a.cols_[j], b.cols_[j])) return false;
    return true;
}

std::optional<std::size_t> first_difference(const Mat& a, const Mat& b) {
    a.require_field(b, "compare");
    if (a.rows_ != b.rows_ || a.cols() != b.cols()) throw ShapeError("compare: " + shape_of(a) + " vs " + shape_of(b));
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (!same_col(a.cols_[j], b.cols_[j])) return j;
    return std::nullopt;
}

Mat hstack(const std::vector<Mat>& blocks) {
    if (blocks.empty()) throw ShapeError("hstack of nothing");
    Mat out(blocks[0].field(), blocks[0].rows(), 0);
    for (const auto& b : blocks) {
        if (b.rows() != out.rows()) throw ShapeError("hstack row mismatch");
        if (!(b.field() == out.field())) throw FieldMismatch("hstack field mismatch");
        for (const auto& c : b.columns()) out.push_col(c);
    }
    return out;
}

Mat vstack(const std::vector<Mat>& blocks) {
    if (blocks.empty()) throw ShapeError("vstack of nothing");
    std::size_t rows = 0, cols = blocks[0].cols();
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw ShapeError("vstack column mismatch");
        if (!(b.field() == blocks[0].field())) throw FieldMismatch("vstack field mismatch");
        rows += b.rows();
    }
    std::vector<SparseVec> out(cols);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t j = 0; j < cols; ++j)
            for (const auto& e : b.col(j)) out[j].push_back({static_cast<std::uint32_t>(e.row + off), e.value});
        off += b.rows();
    }
    return Mat::from_columns(blocks[0].field(), rows, std::move(out));
}

Mat block_diag(const std::vector<Mat>& blocks) {
    if (blocks.empty()) throw ShapeError("block_diag of nothing");
    std::size_t rows = 0;
    for (const auto& b : blocks) rows += b.rows();
    std::vector<SparseVec> out;
    std::size_t off = 0;
    for (const auto& b : blocks) {
        if (!(b.field() == blocks[0].field())) throw FieldMismatch("block_diag field mismatch");
        for (const auto& c : b.columns()) {
            SparseVec s;
            s.reserve(c.size());
            for (const auto& e : c) s.push_back({static_cast<std::uint32_t>(e.row + off), e.value});
            out.push_back(std::move(s));
        }
        off += b.rows();
    }
    return Mat::from_columns(blocks[0].field(), rows, std::move(out));
}

std::string shape_of(const Mat& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace hopfdr
