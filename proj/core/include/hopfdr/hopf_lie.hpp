#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfdr/calculus.hpp"
#include "hopfdr/cohomology.hpp"

namespace hopfdr {

// The Hopf-Lie algebra 𝔤 = (L¹)* of a bicovariant calculus, realised through yd_dual. The
// basis of 𝔤 is dual to the basis of L¹; α ∈ 𝔤 acts on Ω¹ = P⊗L¹ by q⊗w -> α(w◁S⁻¹(q)).
struct HopfLieAlgebra {
    YDModule g;
    Mat bracket;  // 𝔤⊗𝔤 -> 𝔤
    Mat sigma_g;  // braiding on 𝔤⊗𝔤
    // inside-out evaluation on 𝔤^{⊗n} × (L¹)^{⊗n}: ⟨x, y⟩ = xᵀ·pairing[n]·y, α_n meets ξ_1
    std::vector<Mat> pairing;
    std::vector<QuotientSpace> wedge;  // Λ^n 𝔤, same relation type as the calculus
    // Λ^n L¹ -> (Λ^n 𝔤)*, pairing section representatives of Λ^n 𝔤 with the lift of y that
    // kills the 𝔤-relations; absent when that pairing is degenerate
    std::vector<std::optional<Mat>> iota;
    std::optional<Mat> t_map;  // Λ²𝔤 -> 𝔤
    std::string t_defect;
    CheckList checks;

    std::size_t dim() const { return g.dim(); }
};

// throws Unavailable without S⁻¹ and InvariantViolation when a bracket leaves 𝔤
HopfLieAlgebra build_hopf_lie(const ExteriorCalculus& ext);

// throws Unavailable naming the braiding defect
Mat t_map(const HopfLieAlgebra& hl);

enum class HLConstruction { transpose, explicit_T };

struct HLComplex {
    HLConstruction construction = HLConstruction::transpose;
    CochainComplex complex;  // K^n = (Λ^n 𝔤)* in coordinates dual to the wedge basis
    CheckList checks;
};

// transpose: the complex of Λ•L¹ carried over by iota. explicit_T: the alternating sum of T on
// adjacent pairs; if it fails to descend to wedge quotients or to square to zero, the transpose
// complex is returned with the failing check. Throws Unavailable when iota is missing.
HLComplex hl_complex(const HopfLieAlgebra& hl, const ExteriorCalculus& ext, HLConstruction construction);

struct HLIsoReport {
    std::vector<std::size_t> hl_dims;
    std::vector<std::size_t> invariant_dims;  // H(coP Ω•P)
    CheckList checks;
};

// throws InvariantViolation on a dimension mismatch
HLIsoReport hl_cohomology_iso_check(const HLComplex& hl, const ExteriorCalculus& ext);

}  // namespace hopfdr
