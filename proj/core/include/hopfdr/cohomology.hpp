#pragma once

#include <optional>
#include <vector>

#include "hopfdr/calculus.hpp"
#include "hopfdr/dga.hpp"

namespace hopfdr {

// C^0 -> C^1 -> ... -> C^cap. d[n] is C^n -> C^{n+1}.
struct CochainComplex {
    Field field;
    std::vector<std::size_t> dims;
    std::vector<Mat> d;
    bool vanishes_above_cap = false;

    std::size_t cap() const { return dims.size() - 1; }
    std::size_t dim(std::size_t n) const { return n < dims.size() ? dims[n] : 0; }
    // d^cap is unknown unless the complex stops at cap
    bool exact_in(std::size_t n) const { return n < cap() || vanishes_above_cap; }
};

// checks shapes and d∘d = 0; throws InvariantViolation with the degree and a witness column
CochainComplex make_complex(Field f, std::vector<std::size_t> dims, std::vector<Mat> d,
                            bool vanishes_above_cap = false);
CochainComplex complex_of(const DGA& dga);
CochainComplex zero_complex(Field f, std::size_t cap);

struct CohomologyResult {
    std::vector<std::size_t> dims;
    std::vector<Mat> representatives;  // columns are cocycles, independent modulo boundaries
    std::vector<Subspace> cocycles;
    std::vector<Subspace> boundaries;
    // false for the top degree of a truncated complex, where dims is only an upper bound
    std::vector<bool> exact;

    // coordinates of cocycle columns in the representative basis; throws InvariantViolation
    // if a column is not a cocycle
    Mat classes(std::size_t n, const Mat& cocycle_columns) const;
};

CohomologyResult cohomology(const CochainComplex& c);

// a colinear coaction C^n -> P⊗C^n pushed down to H^n -> P⊗H^n in representative coordinates
Mat induced_coaction(const CohomologyResult& h, std::size_t n, const Mat& coaction, std::size_t pdim);

struct ComplexMap {
    CochainComplex source;
    CochainComplex target;
    std::vector<Mat> components;  // C^n -> C'^n
};

// checks f∘d = d'∘f in every degree both complexes have
ComplexMap make_complex_map(const CochainComplex& source, const CochainComplex& target, std::vector<Mat> components);
// H^n(source) -> H^n(target) in representative coordinates
Mat induced_map(const ComplexMap& f, const CohomologyResult& hs, const CohomologyResult& ht, std::size_t n);

// dim H^0 = 1
bool connectedness(const DGA& dga);

struct CoinvariantSubcomplex {
    CochainComplex sub;
    ComplexMap inclusion;
    std::vector<Subspace> coinvariants;
};

// per-degree left coactions C^n -> P⊗C^n; throws InvariantViolation when d is not colinear
CoinvariantSubcomplex coinvariant_subcomplex(const CochainComplex& c, const std::vector<Comodule>& coactions);
std::vector<Comodule> left_comodules(const FinHopfAlgebra& p, const std::vector<Mat>& coactions);

struct AveragingReport {
    bool normalised_integral = false;
    bool connected = false;
    std::vector<Mat> averaging;           // 𝕀: C^n -> coinvariant coordinates
    CohomologyResult full;                // H^n_dR(M)
    CohomologyResult invariant;           // H^n of the coinvariant subcomplex
    std::vector<Mat> induced_inclusion;   // H(i)
    std::vector<Mat> induced_averaging;   // H(𝕀)
    std::vector<Subspace> coinvariant_classes;  // coP(H^n) in representative coordinates
    CheckList checks;
};

// Compares invariant and full de Rham cohomology through i and the averaging map
// 𝕀 = (∫⊗id)λ̄ built from a normalised left integral. omega_p supplies connectedness of P.
AveragingReport invariant_forms_check(const FinHopfAlgebra& p, const DGA& omega_p, const CochainComplex& c,
                                      const std::vector<Comodule>& coactions);

struct CohomologyCoaction {
    std::vector<Mat> coaction;  // λ̃: H^n -> P⊗H^n in representative coordinates
    CheckList checks;
};

// λ̃[ω] = (id⊗[·])λ̄(ω). Checks the image lies in (ker d: P -> Ω¹P)⊗H^n and, for connected P,
// that every class is fixed.
CohomologyCoaction coaction_on_cohomology(const std::vector<Mat>& lambda_bar, const DGA& omega_m,
                                          const DGA& omega_p);

struct KunnethReport {
    std::vector<std::size_t> product_dims;  // H^n(N⊗M)
    std::vector<std::size_t> convolution;   // Σ_r dim H^r(N) dim H^{n-r}(M)
    std::vector<Mat> cross;                 // ⊕_r H^r(N)⊗H^{n-r}(M) -> H^n(N⊗M)
    CheckList checks;
};

KunnethReport kunneth_check(const DGA& n, const DGA& m);

// Hopf cochain complexes

inline constexpr std::size_t amitsur_entry_cap = 20000;

enum class AmitsurVariant { coinvariant, reduced };  // D and G

// tensor product left coaction P^{⊗k}⊗F -> P⊗P^{⊗k}⊗F
Mat tensor_coaction(const Comodule& f, std::size_t k);
// D^n = P^{⊗n+1}⊗F -> D^{n+1}, inserting units
Mat amitsur_d(const FinHopfAlgebra& p, std::size_t fdim, std::size_t n);
// G^n = P^{⊗n}⊗F -> G^{n+1}
Mat amitsur_reduced_d(const Comodule& f, std::size_t n);

struct AmitsurComplex {
    AmitsurVariant variant = AmitsurVariant::coinvariant;
    CochainComplex complex;
    std::vector<Subspace> coinvariants;  // D variant: coP D^n inside D^n
};

// throws CapExceeded when some degree up to cap has more than amitsur_entry_cap entries
AmitsurComplex amitsur_complex(const Comodule& f, AmitsurVariant variant, std::size_t cap);

struct ThetaIso {
    std::vector<Mat> theta;          // G^n -> D^n
    std::vector<Mat> theta_inverse;  // D^n -> G^n
    CheckList checks;
};

// θ(p1⊗...⊗pn⊗f) = S(p1₁)⊗p1₂S(p2₁)⊗...⊗pn₂S(f₋₁)⊗f₀; throws InvariantViolation naming the
// degree when an identity fails
ThetaIso theta_iso(const Comodule& f, std::size_t cap);

struct HomotopyReport {
    bool hopf_module = false;
    std::vector<Mat> h;  // h[k]: D^k -> D^{k-1}, with D^{-1} = F
    std::vector<std::size_t> dims;  // H_c^n for n < cap when the homotopy applies
    CheckList checks;
};

// action: P⊗F -> F. h(p0⊗...⊗p_{n+1}⊗f) = (-1)^{n+1} p0⊗...⊗pn⊗p_{n+1}·f
HomotopyReport homotopy_check(const Comodule& f, const Mat& action, std::size_t cap);

}  // namespace hopfdr
