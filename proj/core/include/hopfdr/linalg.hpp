#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "hopfdr/matrix.hpp"

namespace hopfdr {

// Incremental column echelon form. Each stored vector has a distinct pivot, its largest
// row index, normalised to 1. Optionally tracks every stored vector as a combination of
// the inputs that produced it.
class Reducer {
public:
    Reducer(Field f, std::size_t ambient, bool track = false);

    // Reduces v (and its tracking vector t) against the stored vectors. Returns true and
    // stores the result if v is independent of what is already stored.
    bool insert(SparseVec v, SparseVec t = {});

    // After the call, v holds the residual and t has absorbed the multiples subtracted.
    void reduce(SparseVec& v, SparseVec* t) const;

    std::size_t rank() const { return reduced_.size(); }
    std::size_t ambient() const { return ambient_; }
    const std::vector<SparseVec>& reduced() const { return reduced_; }
    const std::vector<SparseVec>& tracking() const { return tracking_; }
    std::vector<std::size_t> pivots() const;

    // Clears non-pivot rows against the other pivots, giving a reduced echelon basis.
    void fully_reduce();

private:
    Field field_;
    std::size_t ambient_;
    bool track_;
    std::vector<SparseVec> reduced_;
    std::vector<SparseVec> tracking_;
    std::vector<std::int64_t> pivot_of_;
};

class Subspace {
public:
    Subspace() = default;
    // columns must be independent
    explicit Subspace(Mat basis);

    static Subspace span(const Mat& vectors);
    static Subspace zero(Field f, std::size_t ambient);
    static Subspace full(Field f, std::size_t ambient);

    Field field() const { return basis_.field(); }
    std::size_t ambient_dim() const { return basis_.rows(); }
    std::size_t dim() const { return basis_.cols(); }
    const Mat& basis() const { return basis_; }

    bool contains(const Mat& vectors) const;
    bool contains(const SparseVec& v) const;
    // X with basis·X = vectors, or nullopt if some column lies outside
    std::optional<Mat> coordinates(const Mat& vectors) const;

    bool operator==(const Subspace& o) const;

private:
    Mat basis_;
    std::shared_ptr<const Reducer> echelon_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

struct RankKernelImage {
    std::size_t rank;
    Subspace kernel;
    Subspace image;
    std::vector<std::size_t> pivot_columns;
};

RankKernelImage rank_kernel_image(const Mat& m);
std::size_t rank(const Mat& m);
Subspace kernel(const Mat& m);
Subspace image(const Mat& m);

// X with a·X = b
std::optional<Mat> solve(const Mat& a, const Mat& b);
std::optional<Mat> inverse(const Mat& a);

struct QuotientSpace {
    std::size_t ambient_dim = 0;
    Subspace relations;
    Mat projection;  // ambient -> quotient coordinates
    Mat section;     // quotient -> ambient
    std::vector<std::size_t> complement;  // ambient indices spanning the section image

    std::size_t dim() const { return projection.rows(); }
};

QuotientSpace quotient_space(std::size_t ambient_dim, const Subspace& relations);

Mat kron(const Mat& a, const Mat& b);
Mat kron(std::initializer_list<const Mat*> factors);
Mat kron_power(const Mat& a, std::size_t n);

std::size_t product_of(const std::vector<std::size_t>& dims);

// V_{d0}⊗...⊗V_{dk} -> tensor with output slot i taken from input slot perm[i]
Mat permutation_tensor(Field f, const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm);
// the flip V_a⊗V_b -> V_b⊗V_a
Mat flip(Field f, std::size_t a, std::size_t b);

}  // namespace hopfdr
