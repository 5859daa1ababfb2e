#pragma once

#include <cstddef>
#include <vector>

#include "hopfdr/matrix.hpp"

namespace hopfdr {

// Builds a linear map into a tensor product one Sweedler leg at a time. The rows of the
// held matrix are read as V_{d0}⊗...⊗V_{dk} in row-major order.
class Legs {
public:
    Legs(Field f, std::vector<std::size_t> dims);
    Legs(Mat m, std::vector<std::size_t> dims);

    // replace slots [slot, slot+count) by the output of op, which has tensor shape out
    Legs& apply(std::size_t slot, std::size_t count, const Mat& op, std::vector<std::size_t> out);
    // single slot to single slot
    Legs& apply(std::size_t slot, const Mat& op);
    // output slot i becomes old slot perm[i]
    Legs& permute(const std::vector<std::size_t>& perm);

    const Mat& matrix() const { return m_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    Mat take() { return std::move(m_); }

private:
    Mat m_;
    std::vector<std::size_t> dims_;
};

}  // namespace hopfdr
