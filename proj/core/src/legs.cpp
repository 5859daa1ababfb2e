#include "hopfdr/legs.hpp"

#include "accumulator.hpp"
#include "hopfdr/linalg.hpp"

namespace hopfdr {

namespace {

std::size_t checked_product(const std::vector<std::size_t>& dims) {
    std::size_t n = 1;
    for (auto d : dims) {
        if (d && n > (std::size_t{1} << 32) / d) throw ShapeError("tensor shape exceeds 2^32 entries");
        n *= d;
    }
    return n;
}

}  // namespace

Legs::Legs(Field f, std::vector<std::size_t> dims) : m_(Mat::identity(f, checked_product(dims))), dims_(std::move(dims)) {}

Legs::Legs(Mat m, std::vector<std::size_t> dims) : m_(std::move(m)), dims_(std::move(dims)) {
    if (checked_product(dims_) != m_.rows()) throw ShapeError("legs: shape does not match matrix rows");
}

Legs& Legs::apply(std::size_t slot, std::size_t count, const Mat& op, std::vector<std::size_t> out) {
    if (slot + count > dims_.size()) throw ShapeError("legs: slot range out of bounds");
    std::size_t left = 1, mid = 1, right = 1;
    for (std::size_t i = 0; i < slot; ++i) left *= dims_[i];
    for (std::size_t i = slot; i < slot + count; ++i) mid *= dims_[i];
    for (std::size_t i = slot + count; i < dims_.size(); ++i) right *= dims_[i];
    std::size_t od = checked_product(out);
    if (op.cols() != mid || op.rows() != od)
        throw ShapeError("legs: operator " + shape_of(op) + " does not fit slot size " + std::to_string(mid));
    if (!(op.field() == m_.field())) throw FieldMismatch("legs: operator field mismatch");

    std::vector<std::size_t> nd(dims_.begin(), dims_.begin() + slot);
    nd.insert(nd.end(), out.begin(), out.end());
    nd.insert(nd.end(), dims_.begin() + slot + count, dims_.end());
    std::size_t rows = checked_product(nd);

    Mat res(m_.field(), rows, 0);
    detail::Accumulator acc(m_.field(), rows);
    std::size_t block = mid * right;
    for (const auto& c : m_.columns()) {
        for (const auto& e : c) {
            std::size_t l = e.row / block, rem = e.row % block;
            std::size_t a = rem / right, r = rem % right;
            for (const auto& o : op.col(a))
                acc.add_one(static_cast<std::uint32_t>((l * od + o.row) * right + r), e.value * o.value);
        }
        res.push_col(acc.take());
    }
    m_ = std::move(res);
    dims_ = std::move(nd);
    return *this;
}

Legs& Legs::apply(std::size_t slot, const Mat& op) { return apply(slot, 1, op, {op.rows()}); }

Legs& Legs::permute(const std::vector<std::size_t>& perm) {
    std::size_t k = dims_.size();
    if (perm.size() != k) throw ShapeError("legs: permutation length mismatch");
    std::vector<std::size_t> in_stride(k), out_stride(k), nd(k);
    std::size_t s = 1;
    for (std::size_t i = k; i-- > 0;) {
        in_stride[i] = s;
        s *= dims_[i];
    }
    s = 1;
    for (std::size_t i = k; i-- > 0;) {
        nd[i] = dims_.at(perm[i]);
        out_stride[perm[i]] = s;
        s *= nd[i];
    }
    Mat res(m_.field(), m_.rows(), 0);
    for (const auto& c : m_.columns()) {
        SparseVec v;
        v.reserve(c.size());
        for (const auto& e : c) {
            std::size_t x = e.row, y = 0;
            for (std::size_t i = 0; i < k; ++i) {
                y += (x / in_stride[i]) * out_stride[i];
                x %= in_stride[i];
            }
            v.push_back({static_cast<std::uint32_t>(y), e.value});
        }
        std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
        res.push_col(std::move(v));
    }
    m_ = std::move(res);
    dims_ = std::move(nd);
    return *this;
}

}  // namespace hopfdr
