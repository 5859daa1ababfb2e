#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopfdr/scalar.hpp"

namespace hopfdr {

struct Entry {
    std::uint32_t row;
    Scalar value;
};

// sorted by row, no explicit zeros
using SparseVec = std::vector<Entry>;

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x);
SparseVec scaled(const SparseVec& x, const Scalar& a);
std::optional<Scalar> lookup(const SparseVec& x, std::size_t row);

// Exact matrix over a runtime field, stored by sparse columns.
class Mat {
public:
    Mat() = default;
    Mat(Field f, std::size_t rows, std::size_t cols);

    static Mat identity(Field f, std::size_t n);
    static Mat from_ints(Field f, const std::vector<std::vector<std::int64_t>>& rows);
    static Mat from_dense(Field f, std::size_t rows, std::size_t cols, const std::vector<Scalar>& row_major);
    static Mat from_columns(Field f, std::size_t rows, std::vector<SparseVec> cols);
    static Mat unit_vector(Field f, std::size_t n, std::size_t i);

    Field field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_.size(); }

    const SparseVec& col(std::size_t j) const { return cols_[j]; }
    const std::vector<SparseVec>& columns() const { return cols_; }
    void set_col(std::size_t j, SparseVec v);
    void push_col(SparseVec v);
    void set(std::size_t i, std::size_t j, const Scalar& v);

    Scalar at(std::size_t i, std::size_t j) const;
    std::size_t nnz() const;
    bool is_zero() const;
    bool is_identity() const;

    Mat transpose() const;
    SparseVec apply(const SparseVec& x) const;
    Mat operator*(const Mat& b) const;
    Mat operator+(const Mat& b) const;
    Mat operator-(const Mat& b) const;
    Mat operator-() const;
    Mat scaled(const Scalar& a) const;

    Mat col_range(std::size_t begin, std::size_t end) const;
    Mat select_cols(const std::vector<std::size_t>& idx) const;
    Mat select_rows(const std::vector<std::size_t>& idx) const;

    std::vector<Scalar> dense_col(std::size_t j) const;
    std::vector<std::vector<Scalar>> to_dense() const;
    std::string to_string() const;

    friend bool operator==(const Mat& a, const Mat& b);

    // first column where a and b differ, for witnesses
    friend std::optional<std::size_t> first_difference(const Mat& a, const Mat& b);

private:
    void require_field(const Mat& b, const char* op) const;

    Field field_;
    std::size_t rows_ = 0;
    std::vector<SparseVec> cols_;
};

Mat hstack(const std::vector<Mat>& blocks);
Mat vstack(const std::vector<Mat>& blocks);
Mat block_diag(const std::vector<Mat>& blocks);

std::string shape_of(const Mat& m);

}  // namespace hopfdr
