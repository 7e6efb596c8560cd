#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopfdy/hopf.hpp"
#include "hopfdy/tensor.hpp"

namespace hopfdy {

using Json = nlohmann::ordered_json;

/// Malformed input text (as opposed to well-formed input failing an axiom).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kHopfFileVersion = 1;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// [[index, "p/q"], ...] by increasing index.
Json to_json(const SparseVector& v);
SparseVector vector_from_json(const Json& j, std::size_t dim);
/// [[row, col, "p/q"], ...] sorted by (row, col).
Json to_json(const SparseMatrix& m);
SparseMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);
/// [[[i_1, ..., i_d], "p/q"], ...] sorted lexicographically by multi-index.
Json to_json(const TensorElement& t);
/// Throws ParseError on malformed input or an index out of range.
TensorElement tensor_from_json(const Json& j, std::size_t dim, std::size_t degree);

/// [{"axiom", "witness", "detail"}, ...]
Json to_json(const Report& r);

/// HopfFile: {"format_version", "dim", "basis_labels", "mult": [[i, j, k, c]]
/// for e_i e_j ∋ c e_k, "unit", "comult": [[i, j, k, c]] for Δ(e_i) ∋ c e_j ⊗ e_k,
/// "counit", "antipode": [[row, col, c]]}.
Json hopf_to_json(const HopfAlgebra& h);
/// Parses only; axioms are not checked here.
HopfPtr hopf_from_json(const Json& j);

/// k x k matrix of rationals.
std::vector<std::vector<Rational>> lambda_from_json(const Json& j, int k);

/// Reads and parses a JSON file; ParseError if unreadable or malformed.
Json read_json_file(const std::string& path);

/// FNV-1a 64 of the compact serialization, as 16 hex digits.
std::string digest(const Json& j);
std::string digest_text(const std::string& text);

}  // namespace hopfdy
