#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfdr/hopf.hpp"

namespace hopfdr {

// Finite group as a Cayley table; element 0 is the identity.
struct CayleyTable {
    std::vector<std::vector<std::size_t>> table;
    std::vector<std::string> labels;

    std::size_t order() const { return table.size(); }
    std::size_t inverse(std::size_t g) const;
};

CayleyTable cyclic_group(std::size_t n);
// checks closure, identity at 0, inverses and associativity
void validate_group(const CayleyTable& g);

FinHopfAlgebra group_algebra(const CayleyTable& g, Field f, std::string name = "");
FinHopfAlgebra function_algebra(const CayleyTable& g, Field f, std::string name = "");
// Taft algebra of dimension n^2 with basis g^i x^j at index j*n + i, xg = q gx,
// Δx = x⊗1 + g⊗x; q defaults to the smallest primitive n-th root in the field
FinHopfAlgebra taft(std::size_t n, Field f, std::optional<Scalar> q = std::nullopt, std::string name = "");
FinHopfAlgebra sweedler(Field f);
FinHopfAlgebra dual_of(const FinHopfAlgebra& h);

// kZ2 kZ3 kZ4 fZ2 fZ3 fZ4 sweedler taft3
std::vector<std::string> builtin_names();
Field builtin_default_field(const std::string& name);
FinHopfAlgebra builtin(const std::string& name, std::optional<Field> f = std::nullopt);

// named ideal bases (columns in P coordinates) shipped with a builtin, besides zero/full
std::vector<std::pair<std::string, Mat>> builtin_ideals(const std::string& name, const FinHopfAlgebra& p);

// kG coacted on by kH through a homomorphism G -> H: λ(t) = φ(t)⊗t
ComoduleAlgebra group_algebra_over_quotient(const CayleyTable& g, const FinHopfAlgebra& kh,
                                            const std::vector<std::size_t>& hom);

}  // namespace hopfdr
