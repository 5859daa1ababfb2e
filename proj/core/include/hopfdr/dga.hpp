#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hopfdr/check.hpp"
#include "hopfdr/hopf.hpp"

namespace hopfdr {

// A unital finite-dimensional algebra by structure constants.
struct Algebra {
    Field field;
    std::size_t dim = 0;
    std::vector<std::string> labels;
    Mat mult;  // dim x dim^2
    Mat unit;  // dim x 1
};

Algebra algebra_of(const FinHopfAlgebra& p);
Algebra algebra_of(const ComoduleAlgebra& f);
Algebra tensor_algebra(const Algebra& a, const Algebra& b);
Algebra ground_algebra(Field f);
// associativity and unit laws
CheckList algebra_checks(const Algebra& a);

// Differential graded algebra truncated at degree cap. Spaces 0..cap and differentials
// d_n for n < cap are stored; products Ω^r⊗Ω^s -> Ω^{r+s} are computed on request.
class DGA {
public:
    using ProductFn = std::function<Mat(std::size_t, std::size_t)>;

    DGA() = default;
    DGA(std::string name, Algebra base, std::vector<std::size_t> dims, std::vector<Mat> d, ProductFn product,
        bool vanishes_above_cap = false);

    const std::string& name() const { return s_->name; }
    Field field() const { return s_->base.field; }
    const Algebra& base() const { return s_->base; }
    std::size_t cap() const { return s_->dims.size() - 1; }
    std::size_t dim(std::size_t n) const { return n < s_->dims.size() ? s_->dims[n] : 0; }
    const std::vector<std::size_t>& dims() const { return s_->dims; }
    const Mat& d(std::size_t n) const;
    const std::vector<Mat>& differentials() const { return s_->d; }
    // true when Ω^n = 0 is known for every n > cap
    bool vanishes_above_cap() const { return s_->vanishes; }

    Mat product(std::size_t r, std::size_t s) const;

private:
    struct State {
        std::string name;
        Algebra base;
        std::vector<std::size_t> dims;
        std::vector<Mat> d;
        ProductFn product;
        bool vanishes = false;
        std::mutex mu;
        std::map<std::pair<std::size_t, std::size_t>, Mat> cache;
    };
    std::shared_ptr<State> s_;
};

struct DGAChecks {
    std::size_t leibniz_budget = 60000;  // basis pairs per bidegree; larger bidegrees are skipped
};

// d∘d = 0, graded Leibniz on basis pairs, Ω¹ density, d(1) = 0
CheckList dga_checks(const DGA& dga, const DGAChecks& opts = {});

// Ω_u^n = A⊗Ā^{⊗n}, Ā = A/k·1
DGA universal_calculus(const Algebra& a, std::size_t cap);

// the contracting homotopy of the universal calculus: h(a0⊗ā1⊗...⊗ān) = φ(a0) s(ā1)⊗ā2⊗...⊗ān,
// where s is the section of A -> Ā and φ is the functional with kernel the image of s and φ(1) = 1
Mat universal_homotopy(const Algebra& a, std::size_t n);

// Ω^n(N⊗M) = ⊕_r Ω^r N⊗Ω^{n-r} M with d⊗id + (-1)^r id⊗d and the Koszul product
struct TensorDGA {
    DGA dga;
    DGA left;
    DGA right;
    // offsets[n][r] is where Ω^r N⊗Ω^{n-r} M starts inside Ω^n
    std::vector<std::vector<std::size_t>> offsets;

    Mat projection(std::size_t n, std::size_t r) const;  // Π_r
    Mat injection(std::size_t n, std::size_t r) const;
};

TensorDGA tensor_dga(const DGA& n, const DGA& m);

// λ_* on generators a0 da1...dan -> λ(a0)dλ(a1)...dλ(an)
struct ExtendedCoaction {
    std::vector<Mat> lambda_star;  // Ω^n M -> Ω^n(P⊗M)
    std::vector<Mat> lambda_bar;   // Π_0 ∘ λ_*: Ω^n M -> P⊗Ω^n M
    CheckList checks;
};

// lambda: M -> P⊗M an algebra map; omega_pm must be tensor_dga(omega_p, omega_m).
// Throws Unavailable("coaction not differentiable for this calculus") with a witness.
ExtendedCoaction extend_coaction(const Mat& lambda, const DGA& omega_m, const TensorDGA& omega_pm);

}  // namespace hopfdr
