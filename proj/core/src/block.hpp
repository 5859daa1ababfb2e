#pragma once

#include "hopfdr/matrix.hpp"

namespace hopfdr::detail {

// Assembles a matrix from shifted, scaled blocks; overlapping blocks add.
class BlockBuilder {
public:
    BlockBuilder(Field f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols) {}

    void add(const Mat& block, std::size_t row_offset, std::size_t col_offset, const Scalar& scale) {
        if (row_offset + block.rows() > rows_ || col_offset + block.cols() > cols_.size())
            throw ShapeError("block " + shape_of(block) + " does not fit");
        for (std::size_t j = 0; j < block.cols(); ++j) {
            SparseVec shifted;
            shifted.reserve(block.col(j).size());
            for (const auto& e : block.col(j))
                shifted.push_back({static_cast<std::uint32_t>(e.row + row_offset), e.value});
            axpy(cols_[col_offset + j], scale, shifted);
        }
    }

    Mat take() { return Mat::from_columns(field_, rows_, std::move(cols_)); }

private:
    Field field_;
    std::size_t rows_;
    std::vector<SparseVec> cols_;
};

}  // namespace hopfdr::detail
