#include "hopfdy/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hopfdy {

namespace {

Index index_from_json(const Json& j, std::size_t bound, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + ": index must be an integer");
  const auto v = j.get<long long>();
  if (v < 0 || static_cast<std::size_t>(v) >= bound) {
    throw ParseError(std::string(what) + ": index " + std::to_string(v) + " out of range");
  }
  return static_cast<Index>(v);
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

const Json& list(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
  return j;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  throw ParseError("rational must be a \"p/q\" string or an integer");
}

Json to_json(const SparseVector& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(Json::array({e.index, to_json(e.value)}));
  return out;
}

SparseVector vector_from_json(const Json& j, std::size_t dim) {
  VectorBuilder b;
  for (const auto& e : list(j, "vector")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("vector entry must be [index, value]");
    b.add(index_from_json(e[0], dim, "vector"), rational_from_json(e[1]));
  }
  return b.finish();
}

Json to_json(const SparseMatrix& m) {
  std::vector<SparseMatrix::Triplet> t;
  for (Index c = 0; c < m.cols(); ++c) {
    for (const auto& e : m.column(c)) t.push_back({e.index, c, e.value});
  }
  std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  Json out = Json::array();
  for (const auto& e : t) out.push_back(Json::array({e.row, e.col, to_json(e.value)}));
  return out;
}

SparseMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  std::vector<SparseMatrix::Triplet> t;
  for (const auto& e : list(j, "matrix")) {
    if (!e.is_array() || e.size() != 3) throw ParseError("matrix entry must be [row, col, value]");
    t.push_back({index_from_json(e[0], rows, "matrix row"), index_from_json(e[1], cols, "matrix col"),
                 rational_from_json(e[2])});
  }
  return SparseMatrix::from_triplets(rows, cols, t);
}

Json to_json(const TensorElement& t) {
  Json out = Json::array();
  for (const auto& [key, c] : t.terms()) {
    Json idx = Json::array();
    for (Index i : t.decode(key)) idx.push_back(i);
    out.push_back(Json::array({idx, to_json(c)}));
  }
  return out;
}

TensorElement tensor_from_json(const Json& j, std::size_t dim, std::size_t degree) {
  TensorElement t(dim, degree);
  for (const auto& e : list(j, "tensor")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_array()) {
      throw ParseError("tensor entry must be [[i_1, ..., i_d], value]");
    }
    if (e[0].size() != degree) {
      throw ParseError("tensor entry has " + std::to_string(e[0].size()) + " indices, expected " +
                       std::to_string(degree));
    }
    std::vector<Index> idx;
    for (const auto& i : e[0]) idx.push_back(index_from_json(i, dim, "tensor"));
    t += TensorElement::basis(dim, idx, rational_from_json(e[1]));
  }
  return t;
}

Json to_json(const Report& r) {
  Json out = Json::array();
  for (const auto& v : r) {
    Json w = Json::array();
    for (Index i : v.witness) w.push_back(i);
    out.push_back(Json{{"axiom", v.axiom}, {"witness", std::move(w)}, {"detail", v.detail}});
  }
  return out;
}

Json hopf_to_json(const HopfAlgebra& h) {
  const Algebra& a = h.algebra();
  const std::size_t n = h.dim();
  Json mult = Json::array(), comult = Json::array();
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (const auto& e : a.product(i, j)) mult.push_back(Json::array({i, j, e.index, to_json(e.value)}));
    }
  }
  for (Index i = 0; i < n; ++i) {
    for (const auto& e : h.coproduct(i)) {
      comult.push_back(Json::array({i, static_cast<Index>(e.index / n), static_cast<Index>(e.index % n),
                                    to_json(e.value)}));
    }
  }
  Json out;
  out["format_version"] = kHopfFileVersion;
  out["dim"] = n;
  out["basis_labels"] = a.labels();
  out["mult"] = std::move(mult);
  out["unit"] = to_json(a.unit());
  out["comult"] = std::move(comult);
  out["counit"] = to_json(h.counit());
  out["antipode"] = to_json(h.antipode());
  return out;
}

HopfPtr hopf_from_json(const Json& j) {
  try {
    const Json& ver = field(j, "format_version");
    if (!ver.is_number_integer() || ver.get<int>() != kHopfFileVersion) {
      throw ParseError("unsupported format_version");
    }
    const Json& dj = field(j, "dim");
    if (!dj.is_number_integer() || dj.get<long long>() <= 0 || dj.get<long long>() > 4096) {
      throw ParseError("dim must be an integer in [1, 4096]");
    }
    const std::size_t n = dj.get<std::size_t>();
    std::vector<std::string> labels;
    if (j.contains("basis_labels")) {
      for (const auto& l : list(j.at("basis_labels"), "basis_labels")) {
        if (!l.is_string()) throw ParseError("basis_labels must be strings");
        labels.push_back(l.get<std::string>());
      }
      if (labels.size() != n) throw ParseError("basis_labels has the wrong length");
    } else {
      for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    }
    std::vector<VectorBuilder> mb(n * n), cb(n);
    for (const auto& e : list(field(j, "mult"), "mult")) {
      if (!e.is_array() || e.size() != 4) throw ParseError("mult entry must be [i, j, k, value]");
      Index i = index_from_json(e[0], n, "mult"), jj = index_from_json(e[1], n, "mult");
      mb[i * n + jj].add(index_from_json(e[2], n, "mult"), rational_from_json(e[3]));
    }
    for (const auto& e : list(field(j, "comult"), "comult")) {
      if (!e.is_array() || e.size() != 4) throw ParseError("comult entry must be [i, j, k, value]");
      Index i = index_from_json(e[0], n, "comult");
      Index l = index_from_json(e[1], n, "comult"), r = index_from_json(e[2], n, "comult");
      cb[i].add(static_cast<Index>(l * n + r), rational_from_json(e[3]));
    }
    std::vector<SparseVector> mult, comult;
    for (auto& b : mb) mult.push_back(b.finish());
    for (auto& b : cb) comult.push_back(b.finish());
    SparseVector unit = vector_from_json(field(j, "unit"), n);
    SparseVector counit = vector_from_json(field(j, "counit"), n);
    SparseMatrix antipode = matrix_from_json(field(j, "antipode"), n, n);
    auto alg = std::make_shared<const Algebra>(std::move(labels), std::move(mult), std::move(unit));
    return std::make_shared<const HopfAlgebra>(alg, std::move(comult), std::move(counit), std::move(antipode));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

std::vector<std::vector<Rational>> lambda_from_json(const Json& j, int k) {
  const Json& rows = j.is_object() ? field(j, "lambda") : j;
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(k)) {
    throw ParseError("lambda must be a " + std::to_string(k) + "x" + std::to_string(k) + " matrix");
  }
  std::vector<std::vector<Rational>> out;
  for (const auto& r : rows) {
    if (!r.is_array() || r.size() != static_cast<std::size_t>(k)) throw ParseError("lambda row has the wrong length");
    std::vector<Rational> row;
    for (const auto& c : r) row.push_back(rational_from_json(c));
    out.push_back(std::move(row));
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string digest_text(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string digest(const Json& j) { return digest_text(j.dump()); }

}  // namespace hopfdy
