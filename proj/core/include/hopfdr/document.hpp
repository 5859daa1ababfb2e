#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfdr/hopf.hpp"

namespace hopfdr {

// malformed or inconsistent input; the message names the line or field at fault
struct DocumentError : Error {
    using Error::Error;
};

inline constexpr const char* document_schema_version = "1";

// A Hopf algebra as exchanged on disk. mult triples [i, j, k, num, den] give the coefficient of
// e_k in e_i e_j; comult triples give the coefficient of e_j⊗e_k in Δ(e_i). Scalars are
// decimal-string numerator/denominator pairs.
struct AlgebraDocument {
    std::string name;
    HopfData data;
    std::vector<std::pair<std::string, Mat>> ideals;  // columns in P coordinates
};

// "Q" or "F<p>"
Field parse_field(const std::string& spec);

AlgebraDocument parse_document(const std::string& text);
std::string write_document(const AlgebraDocument& doc);
AlgebraDocument document_of(const FinHopfAlgebra& p, std::vector<std::pair<std::string, Mat>> ideals = {});

// "builtin:NAME" (shipped ideals included) or a file path. A field given for a file must match it.
AlgebraDocument load_document(const std::string& source, std::optional<Field> field = std::nullopt);

}  // namespace hopfdr
