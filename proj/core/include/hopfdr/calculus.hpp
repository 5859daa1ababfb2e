#pragma once

#include <vector>

#include "hopfdr/dga.hpp"

namespace hopfdr {

// R ⊂ ker ε, a right ideal invariant under Ad_R(p) = p₂⊗S(p₁)p₃
struct CalculusIdeal {
    FinHopfAlgebra algebra;
    Subspace basis;
};

struct InvalidIdeal : InvariantViolation {
    InvalidIdeal(std::string msg, CheckList c) : InvariantViolation(std::move(msg)), checks(std::move(c)) {}
    CheckList checks;
};

// right adjoint coaction P -> P⊗P
Mat adjoint_right(const FinHopfAlgebra& p);
// left adjoint coaction p₁S(p₃)⊗p₂
Mat adjoint_left(const FinHopfAlgebra& p);

CheckList ideal_checks(const FinHopfAlgebra& p, const Mat& vectors);
// throws InvalidIdeal naming every failed condition
CalculusIdeal check_ideal(const FinHopfAlgebra& p, const Mat& vectors);
CalculusIdeal zero_ideal(const FinHopfAlgebra& p);
CalculusIdeal counit_kernel_ideal(const FinHopfAlgebra& p);

// symmetric: Λ^n relations generated by ker(σ - id) in adjacent slots.
// antisymmetrizer: Λ^n relations are the kernel of the braided antisymmetrizer A_n.
// Both give the same Λ²; they can differ from degree 3 on when σ - id is not semisimple at 1.
enum class WedgeRelations { symmetric, antisymmetrizer };

struct ExteriorCalculus {
    CalculusIdeal ideal;
    std::size_t degree_cap = 0;
    WedgeRelations relations = WedgeRelations::symmetric;

    Mat varpi;  // P -> L¹, p -> [p - ε(p)]
    Mat lift;   // L¹ -> ker ε
    YDModule l1;
    Mat sigma;  // L¹⊗L¹ -> L¹⊗L¹
    Subspace symmetric;                 // ker(σ - id)
    std::size_t generalized_excess = 0; // dim ker(σ - id)² - dim ker(σ - id)
    std::vector<QuotientSpace> lambda;  // Λ^n for n = 0..cap
    std::vector<Mat> d;                 // Λ^n -> Λ^{n+1} for n < cap
    std::vector<Mat> action;            // Λ^n⊗P -> Λ^n
    std::vector<Mat> coaction;          // Λ^n -> Λ^n⊗P
    CheckList checks;

    FinHopfAlgebra algebra() const { return ideal.algebra; }
    Field field() const { return ideal.algebra.field(); }
    std::size_t l1_dim() const { return varpi.rows(); }
    std::size_t dim(std::size_t n) const { return lambda.at(n).dim(); }
    // Λ^r⊗Λ^s -> Λ^{r+s}
    Mat wedge(std::size_t r, std::size_t s) const;
    // the map P -> Λ², p -> -π₂(ϖ⊗ϖ)Δ(p); d on L¹ is this on lifts
    Mat d_presentation() const;
};

// throws InvalidIdeal for a bad ideal and InvariantViolation when d is not well defined
ExteriorCalculus build_exterior(const CalculusIdeal& ideal, std::size_t degree_cap = 4,
                                WedgeRelations relations = WedgeRelations::symmetric);

// A_n = (A_{n-1}⊗id)(id - σ_{n-1} + σ_{n-1}σ_{n-2} - ...) on V^{⊗n}
Mat braided_antisymmetrizer(const Mat& sigma, std::size_t dim, std::size_t n);

// Ω^n P = P⊗Λ^n with (p⊗v)(q⊗w) = pq₁⊗(v◁q₂)∧w and d(p⊗v) = p₁⊗ϖ(p₂)∧v + p⊗dv
DGA build_omega(const ExteriorCalculus& ext);

// left coaction of P on Ω^n P: p⊗v -> p₁⊗p₂⊗v
Mat omega_left_coaction(const ExteriorCalculus& ext, std::size_t n);
std::vector<Comodule> omega_left_comodules(const ExteriorCalculus& ext);

// Y: Ω¹ -> P⊗L¹ as a bijection from ker m / r⁻¹(P⊗R), with r(a⊗b) = ab₁⊗b₂
CheckList y_map_checks(const ExteriorCalculus& ext);

}  // namespace hopfdr
