#pragma once

#include <vector>

#include "hopfdr/cohomology.hpp"

namespace hopfdr {

// First-quadrant double complex C^{n,m}, 0 <= n <= n_cap, 0 <= m <= m_cap. Maps leaving the box
// are zero, so a truncated complex is a double complex in its own right.
struct DoubleComplex {
    Field field;
    std::size_t n_cap = 0;
    std::size_t m_cap = 0;
    std::vector<std::vector<std::size_t>> dims;  // [n][m]
    std::vector<std::vector<Mat>> d_prime;       // [n][m]: C^{n,m} -> C^{n+1,m}, n < n_cap
    std::vector<std::vector<Mat>> d_second;      // [n][m]: C^{n,m} -> C^{n,m+1}, m < m_cap
    // set when the box cuts off a larger complex in that direction
    bool n_truncated = false;
    bool m_truncated = false;

    std::size_t dim(std::size_t n, std::size_t m) const {
        return n <= n_cap && m <= m_cap ? dims[n][m] : 0;
    }
    std::size_t total_cap() const { return n_cap + m_cap; }
    // total degrees where the truncated and untruncated complexes have the same cohomology
    bool total_exact_in(std::size_t s) const {
        return (!n_truncated || s < n_cap) && (!m_truncated || s < m_cap);
    }
};

// checks d'd' = 0, d''d'' = 0 and d''d' + d'd'' = 0 exactly
DoubleComplex make_double_complex(Field f, std::vector<std::vector<std::size_t>> dims,
                                  std::vector<std::vector<Mat>> d_prime, std::vector<std::vector<Mat>> d_second,
                                  bool n_truncated = false, bool m_truncated = false);
DoubleComplex transpose(const DoubleComplex& dc);

struct TotalComplex {
    CochainComplex complex;
    std::vector<std::vector<std::size_t>> offsets;  // offsets[s][n]: where C^{n,s-n} starts in T^s
};

// T^s = ⊕ C^{n,s-n} ordered by n, d = d' + d''
TotalComplex total_complex(const DoubleComplex& dc);

// I filters by n and has E₂ = H(H(C, d''), d̄'); II filters by m and has E₂ = H(H(C, d'), d̄'').
enum class Filtration { I, II };

struct SpectralEntry {
    Subspace z;          // Z_r inside T^{n+m}
    Subspace b;          // Z_{r-1} one step deeper plus d Z_{r-1}; E_r = z / b
    Mat representatives;  // columns of z independent modulo b
};

struct SpectralPage {
    std::size_t r = 0;
    std::vector<std::vector<std::size_t>> dims;        // [n][m]
    std::vector<std::vector<SpectralEntry>> entries;   // [n][m]
    std::vector<std::vector<Mat>> differential;        // D_r out of (n,m), in representative coordinates
};

struct SpectralSequence {
    Filtration filtration = Filtration::I;
    std::vector<SpectralPage> pages;                    // r = 2, 3, ...
    std::vector<std::vector<std::size_t>> e2_iterated;  // E₂ from iterated cohomology
    std::vector<std::vector<std::size_t>> limit;        // E_∞
    CheckList checks;

    const SpectralPage& page(std::size_t r) const { return pages.at(r - 2); }
};

// pages r = 2 .. max(r_max, max(n_cap, m_cap) + 2); entries and representatives for filtration II
// live in the total complex of the transpose
SpectralSequence spectral_pages(const DoubleComplex& dc, Filtration filtration, std::size_t r_max = 2);

// Σ_i dim E_∞^{i,s-i} = dim H^s(T) for every total degree; throws InvariantViolation naming the
// first degree that fails
CheckList convergence_check(const SpectralSequence& ss, const CohomologyResult& total);

// Coefficients F^0 -> F^1 -> ... of left Hopf modules with colinear d̄.
struct HopfModuleComplex {
    std::vector<Comodule> coactions;
    std::vector<Mat> actions;  // P⊗F^m -> F^m
    std::vector<Mat> d;        // F^m -> F^{m+1}
    bool vanishes_above_cap = false;
};

// Ω•P with left multiplication and the coaction λ̄
HopfModuleComplex forms_as_hopf_modules(const FinHopfAlgebra& p, const DGA& omega, const std::vector<Mat>& lambda_bar);

struct VanEst {
    DoubleComplex dc;
    CheckList checks;
};

// C^{n,m} = P^{⊗n}⊗F^m, d' the reduced Hopf cochain differential, d'' = (-1)^n id⊗d̄.
// Throws InvariantViolation when some F^m is not a Hopf module or d̄ is not colinear.
VanEst van_est(const HopfModuleComplex& f, std::size_t n_cap);

struct VanEstReport {
    VanEst ve;
    SpectralSequence first;   // E₂ = H_c^n(P; H^m(F))
    SpectralSequence second;  // E₂ concentrated in n = 0, equal to H^m(coP F)
    CohomologyResult total;
    CohomologyResult invariant;  // H(coP F)
    std::vector<std::vector<std::size_t>> hopf_cochain_dims;  // H_c^n(P; H^m(F)) computed directly
    CheckList checks;
};

VanEstReport van_est_report(const HopfModuleComplex& f, std::size_t n_cap);

}  // namespace hopfdr
