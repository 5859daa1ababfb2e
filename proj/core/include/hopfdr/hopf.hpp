#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfdr/check.hpp"
#include "hopfdr/linalg.hpp"

namespace hopfdr {

// Raw structure tensors. mult column i*dim+j is e_i e_j; comult column i is Δ(e_i).
struct HopfData {
    Field field;
    std::size_t dim = 0;
    std::vector<std::string> labels;
    Mat mult;      // dim x dim^2
    Mat unit;      // dim x 1
    Mat comult;    // dim^2 x dim
    Mat counit;    // 1 x dim
    Mat antipode;  // dim x dim
};

struct AxiomViolation {
    std::string axiom;
    std::size_t witness;       // flattened basis index of the input tensor
    std::string witness_label;
};

// every axiom check_hopf_axioms tests, in order
const std::vector<std::string>& hopf_axiom_names();
std::vector<AxiomViolation> check_hopf_axioms(const HopfData& d);

struct InvalidHopfAlgebra : Error {
    InvalidHopfAlgebra(std::string msg, std::vector<AxiomViolation> v)
        : Error(std::move(msg)), violations(std::move(v)) {}
    std::vector<AxiomViolation> violations;
};

class FinHopfAlgebra {
public:
    FinHopfAlgebra() = default;

    // throws InvalidHopfAlgebra listing every violated axiom
    static FinHopfAlgebra validate(HopfData data, std::string name = "");

    const std::string& name() const { return s_->name; }
    Field field() const { return s_->data.field; }
    std::size_t dim() const { return s_->data.dim; }
    const std::vector<std::string>& labels() const { return s_->data.labels; }
    const HopfData& data() const { return s_->data; }

    const Mat& mult() const { return s_->data.mult; }
    const Mat& unit() const { return s_->data.unit; }
    const Mat& comult() const { return s_->data.comult; }
    const Mat& counit() const { return s_->data.counit; }
    const Mat& antipode() const { return s_->data.antipode; }

    bool has_antipode_inverse() const { return s_->antipode_inverse.has_value(); }
    // throws Unavailable when S is singular
    const Mat& antipode_inverse() const;

    // Δ^(n): P -> P^{⊗ n+1}, left nested; n = 0 is the identity
    Mat comult_iter(std::size_t n) const;
    // P^{⊗k} -> P; k = 0 is the unit
    Mat mult_iter(std::size_t k) const;
    // the multiplication of P⊗P
    Mat tensor_mult() const;

    Mat identity() const { return Mat::identity(field(), dim()); }
    SparseVec product(const SparseVec& a, const SparseVec& b) const;
    std::string tensor_label(std::size_t index, std::size_t legs) const;

    bool is_commutative() const;
    bool is_cocommutative() const;

private:
    struct State {
        std::string name;
        HopfData data;
        std::optional<Mat> antipode_inverse;
    };
    std::shared_ptr<const State> s_;
};

enum class Side { left, right };

struct Comodule {
    FinHopfAlgebra algebra;
    std::size_t dim = 0;
    Mat coaction;  // left: dim -> dim_P*dim, right: dim -> dim*dim_P
    Side side = Side::left;
};

// checks coassociativity and the counit law
Comodule make_comodule(const FinHopfAlgebra& p, Mat coaction, Side side);
Comodule trivial_comodule(const FinHopfAlgebra& p, std::size_t dim, Side side);
Comodule regular_comodule(const FinHopfAlgebra& p);

struct ModuleAction {
    FinHopfAlgebra algebra;
    std::size_t dim = 0;
    Mat action;  // left: dim_P*dim -> dim, right: dim*dim_P -> dim
    Side side = Side::left;
};

ModuleAction make_module(const FinHopfAlgebra& p, Mat action, Side side);

struct YDModule {
    Comodule coaction;    // right
    ModuleAction action;  // right
    std::size_t dim() const { return coaction.dim; }
    const FinHopfAlgebra& algebra() const { return coaction.algebra; }
};

// checks ρ(η◁a) = η₀◁a₂ ⊗ S(a₁)η₁a₃
YDModule make_yd(const Comodule& coaction, const ModuleAction& action);

Subspace coinvariants(const Comodule& c);

// left Hopf-module compatibility λ(μ(p⊗f)) = p₁f₋₁ ⊗ μ(p₂⊗f₀); returns the first failing column
std::optional<std::size_t> hopf_module_defect(const Comodule& c, const Mat& action);

Mat yd_braiding(const YDModule& v, const YDModule& w);
Mat yd_braiding_inverse(const YDModule& v, const YDModule& w);
YDModule yd_dual(const YDModule& v);
// V*⊗V -> k, pairing α^i with e_j
Mat evaluation(Field f, std::size_t dim);

struct IntegralResult {
    bool exists = false;
    bool normalised = false;
    Subspace solutions;                // columns are transposed functionals
    std::optional<Mat> functional;     // 1 x dim, normalised when possible
};

IntegralResult left_integral(const FinHopfAlgebra& p);

// An algebra F with a left P-coaction by algebra maps.
struct ComoduleAlgebra {
    std::size_t dim = 0;
    std::vector<std::string> labels;
    Mat mult;  // dim x dim^2
    Mat unit;  // dim x 1
    Comodule coaction;
};

ComoduleAlgebra make_comodule_algebra(std::size_t dim, std::vector<std::string> labels, Mat mult, Mat unit,
                                      Comodule coaction);
ComoduleAlgebra regular_comodule_algebra(const FinHopfAlgebra& p);

struct CleftData {
    ComoduleAlgebra total;
    Mat phi;            // P -> F
    Mat phi_inverse;    // P -> F
    Subspace coinvariant_algebra;  // M inside F
    Mat theta;          // F -> P⊗M (M in its basis coordinates)
    Mat theta_inverse;  // P⊗M -> F
    Mat action;         // μ: P⊗F -> F
    CheckList checks;
};

// throws Unavailable("not cleft") when Φ has no convolution inverse
CleftData cleft_extension(const ComoduleAlgebra& f, const Mat& phi);

}  // namespace hopfdr
