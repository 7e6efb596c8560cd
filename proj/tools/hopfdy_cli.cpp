// Command-line front end. Reports go to stdout as JSON; progress and timing
// go to stderr.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hopfdy/catalog.hpp"
#include "hopfdy/double.hpp"
#include "hopfdy/dycomplex.hpp"
#include "hopfdy/errors.hpp"
#include "hopfdy/exactlin.hpp"
#include "hopfdy/io.hpp"
#include "hopfdy/relext.hpp"
#include "hopfdy/rmatrix.hpp"

using namespace hopfdy;

namespace {

enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kInvalidAlgebra = 2,
  kInvalidR = 3,
  kUnsupportedDegree = 4,
  kBudget = 5,
  kInconsistent = 6,
};

/// Error carrying an exit code and optional structured details.
struct CliError {
  int code;
  std::string kind;
  std::string message;
  Json details = nullptr;
};

void progress(const std::string& msg) { std::cerr << "[hopfdy] " << msg << std::endl; }

struct Loaded {
  HopfPtr hopf;
  std::optional<CatalogKey> key;
  Json info;
};

Loaded load_hopf(const std::string& source, bool verify = true) {
  Loaded out;
  if (auto key = CatalogKey::parse(source)) {
    if (key->family == CatalogKey::Family::CPlus || key->family == CatalogKey::Family::CMinus) {
      throw CliError{kUsage, "usage", source + " names a module; a Hopf algebra is expected here"};
    }
    out.key = key;
    out.hopf = build_catalog_hopf(*key);
  } else {
    out.hopf = hopf_from_json(read_json_file(source));
  }
  out.info = Json{{"source", source}, {"digest", digest(hopf_to_json(*out.hopf))}, {"dim", out.hopf->dim()}};
  if (verify) {
    Report r = verify_hopf(*out.hopf);
    if (!r.empty()) {
      throw CliError{kInvalidAlgebra, "invalid_algebra", "Hopf axioms fail for " + source, to_json(r)};
    }
  }
  return out;
}

bool is_bk(const Loaded& l) { return l.key && l.key->family == CatalogKey::Family::Bk; }

struct RFlags {
  bool r0 = false;
  bool trivial = false;
  std::string file;
  std::string lambda;
};

/// Explicit flag if given; otherwise R₀ for bk and 1 ⊗ 1 for cyclic groups.
TensorElement resolve_r(const Loaded& h, const RFlags& f, Json& inputs) {
  const int given = int(f.r0) + int(f.trivial) + int(!f.file.empty()) + int(!f.lambda.empty());
  if (given > 1) throw CliError{kUsage, "usage", "give at most one of --r0, --trivial-r, --rmatrix, --lambda"};
  TensorElement r;
  std::string source;
  if (f.r0 || f.lambda.size() || (given == 0 && is_bk(h))) {
    if (!is_bk(h)) throw CliError{kUsage, "usage", "--r0 and --lambda need a bk:k algebra"};
    if (f.lambda.empty()) {
      r = bk_r0(h.key->param);
      source = "r0";
    } else {
      r = bk_r_lambda(h.key->param, lambda_from_json(read_json_file(f.lambda), h.key->param));
      source = "lambda:" + f.lambda;
    }
  } else if (f.trivial || (given == 0 && h.key && h.key->family == CatalogKey::Family::Cyclic)) {
    r = trivial_r(*h.hopf);
    source = "trivial";
  } else if (!f.file.empty()) {
    Json j = read_json_file(f.file);
    r = tensor_from_json(j.is_object() && j.contains("r") ? j.at("r") : j, h.hopf->dim(), 2);
    source = f.file;
  } else {
    throw CliError{kUsage, "usage", "no R-matrix given (use --r0, --trivial-r, --rmatrix or --lambda)"};
  }
  inputs["rmatrix"] = Json{{"source", source}, {"digest", digest(to_json(r))}};
  return r;
}

struct Sub {
  HopfPtr hopf;
  SparseMatrix iota;
};

/// Catalog inclusions bk:l ⊂ bk:k (x_i ↦ x_{k-l+i}) and cyclic:m ⊂ cyclic:n for m | n.
Sub resolve_sub(const Loaded& h, const std::string& key_text, Json& inputs) {
  auto key = CatalogKey::parse(key_text);
  if (!key || !h.key || key->family != h.key->family) {
    throw CliError{kUsage, "usage", "--sub must be a catalog key of the same family as the algebra"};
  }
  Sub s;
  s.hopf = build_catalog_hopf(*key);
  if (key->family == CatalogKey::Family::Bk) {
    if (key->param > h.key->param) throw CliError{kUsage, "usage", "--sub rank exceeds the algebra rank"};
    s.iota = bk::inclusion(key->param, h.key->param);
  } else if (key->family == CatalogKey::Family::Cyclic) {
    const int m = key->param, n = h.key->param;
    if (n % m != 0) throw CliError{kUsage, "usage", "cyclic:m embeds in cyclic:n only when m divides n"};
    std::vector<SparseMatrix::Triplet> t;
    for (int i = 0; i < m; ++i) t.push_back({static_cast<Index>(i * (n / m)), static_cast<Index>(i), 1});
    s.iota = SparseMatrix::from_triplets(n, m, t);
  } else {
    throw CliError{kUsage, "usage", "--sub must name a Hopf algebra"};
  }
  inputs["sub"] = Json{{"source", key_text}, {"digest", digest(hopf_to_json(*s.hopf))}};
  return s;
}

ResolutionKind resolution_kind(const std::string& s) {
  if (s == "bar") return ResolutionKind::Bar;
  if (s == "cover") return ResolutionKind::Cover;
  throw CliError{kUsage, "usage", "--resolution must be bar or cover"};
}

Json check_json(const ResolutionCheck& c) {
  return Json{{"complex", c.complex},       {"module_maps", c.module_maps},
              {"exact", c.exact},           {"b_linear_splitting", c.b_linear_splitting},
              {"homotopy", c.homotopy},     {"ok", c.ok()}};
}

Json dims_json(const std::vector<std::size_t>& v) { return Json(v); }

struct Options {
  std::string source;
  std::string sub;
  std::string resolution = "bar";
  std::string coeff = "trivial";
  std::string mu;
  std::size_t degree = 2;
  bool degree_given = false;
  bool dual = false;
  bool emit = false;
  RFlags r;
};

struct Output {
  Json inputs = Json::object();
  Json results = Json::object();
  Json consistency = Json::object();
};

// ------------------------------------------------------------- commands

int cmd_verify(const Options& o, Output& out) {
  auto key = CatalogKey::parse(o.source);
  if (key && (key->family == CatalogKey::Family::CPlus || key->family == CatalogKey::Family::CMinus)) {
    HopfPtr bk = build_bk(key->param);
    DoubleAlgebra d = drinfeld_double(bk);
    ModuleRep m = build_c_pm(*bk, d.hopf->algebra_ptr(), key->family == CatalogKey::Family::CPlus ? 1 : -1);
    Report r = verify_module(m);
    out.inputs["algebra"] = Json{{"source", o.source}};
    out.results = Json{{"kind", "module"}, {"over", "D(" + CatalogKey{CatalogKey::Family::Bk, key->param}.str() + ")"},
                       {"dim", m.dim}, {"valid", r.empty()}, {"violations", to_json(r)}};
    return r.empty() ? kOk : kInvalidAlgebra;
  }
  Loaded l = load_hopf(o.source, false);
  HopfPtr h = l.hopf;
  if (o.dual) h = std::make_shared<const HopfAlgebra>(dual_hopf(*h, false));
  out.inputs["algebra"] = l.info;
  Report r = verify_hopf(*h);
  out.results = Json{{"kind", o.dual ? "dual" : "hopf"}, {"dim", h->dim()}, {"valid", r.empty()},
                     {"violations", to_json(r)}};
  return r.empty() ? kOk : kInvalidAlgebra;
}

int cmd_double(const Options& o, Output& out) {
  Loaded l = load_hopf(o.source);
  out.inputs["algebra"] = l.info;
  progress("building the double");
  DoubleAlgebra d = drinfeld_double(l.hopf);
  Report r = verify_hopf(*d.hopf);
  const bool dual_ok = verify_algebra_map(d.dual_embedding()).empty();
  const bool base_ok = verify_hopf_map(*d.base, *d.hopf, d.base_embedding().matrix).empty();
  out.results = Json{{"dim", d.hopf->dim()},
                      {"valid", r.empty()},
                      {"violations", to_json(r)},
                      {"dual_embedding_algebra_map", dual_ok},
                      {"base_embedding_hopf_map", base_ok}};
  if (o.emit) out.results["hopf"] = hopf_to_json(*d.hopf);
  if (!r.empty()) return kInvalidAlgebra;
  return dual_ok && base_ok ? kOk : kInconsistent;
}

int cmd_rmatrix_check(const Options& o, Output& out) {
  Loaded l = load_hopf(o.source);
  out.inputs["algebra"] = l.info;
  TensorElement r = resolve_r(l, o.r, out.inputs);
  RMatrixReport rep = check_rmatrix(*l.hopf, r);
  out.results = Json{{"verified", rep.verified()},
                     {"violations", to_json(rep.all())},
                     {"r", to_json(r)},
                     {"inverse", rep.inverse ? to_json(*rep.inverse) : Json(nullptr)}};
  if (rep.inverse) {
    out.results["r_squared_is_unit"] = tensor_mul(l.hopf->algebra(), r, r) == tensor_unit(l.hopf->algebra(), 2);
  }
  return rep.verified() ? kOk : kInvalidR;
}

/// Runs check_rmatrix and converts a failure into exit code 3 with the report.
void require_r(const Loaded& l, const TensorElement& r) {
  RMatrixReport rep = check_rmatrix(*l.hopf, r);
  if (!rep.verified()) {
    Report all = rep.all();
    if (!rep.inverse) all.push_back(Violation{"invertibility", {}, "no inverse found"});
    throw CliError{kInvalidR, "invalid_rmatrix", "R-matrix axioms fail", to_json(all)};
  }
}

int cmd_rmatrix_tangent(const Options& o, Output& out) {
  Loaded l = load_hopf(o.source);
  out.inputs["algebra"] = l.info;
  TensorElement r = resolve_r(l, o.r, out.inputs);
  require_r(l, r);
  TangentBasis tb = tangent_space(*l.hopf, r);
  out.results["dim"] = tb.dim();
  const bool reference = is_bk(l) && (o.r.r0 || (!o.r.trivial && o.r.file.empty() && o.r.lambda.empty()));
  if (reference) {
    std::vector<SparseVector> mine, ref;
    for (const auto& t : tb.vectors) mine.push_back(t.flat());
    for (const auto& t : bk_reference_tangent_basis(l.key->param)) ref.push_back(t.flat());
    const std::size_t n = l.hopf->dim();
    out.results["span_matches_paper_basis"] = span_equal(mine, ref, n * n);
  }
  Json basis = Json::array();
  for (const auto& t : tb.vectors) basis.push_back(to_json(t));
  out.results["basis"] = std::move(basis);
  return kOk;
}

int cmd_rmatrix_family(const Options& o, Output& out) {
  Loaded l = load_hopf(o.source);
  out.inputs["algebra"] = l.info;
  if (!is_bk(l)) throw CliError{kUsage, "usage", "rmatrix family needs a bk:k algebra"};
  if (o.r.lambda.empty()) throw CliError{kUsage, "usage", "rmatrix family needs --lambda FILE"};
  const int k = l.key->param;
  auto lambda = lambda_from_json(read_json_file(o.r.lambda), k);
  TensorElement r = bk_r_lambda(k, lambda);
  out.inputs["lambda"] = Json{{"source", o.r.lambda}, {"digest", digest(to_json(r))}};
  RMatrixReport rep = check_rmatrix(*l.hopf, r);
  out.results = Json{{"verified", rep.verified()}, {"violations", to_json(rep.all())}, {"r_lambda", to_json(r)}};
  if (!rep.verified()) return kInvalidR;
  out.results["tangent_dim"] = tangent_space(*l.hopf, r).dim();
  int code = kOk;
  if (!o.mu.empty()) {
    auto mu = lambda_from_json(read_json_file(o.mu), k);
    std::vector<std::vector<Rational>> sum = lambda;
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) sum[i][j] = lambda[i][j] + mu[i][j];
    }
    const Algebra& a = l.hopf->algebra();
    TensorElement rhs = tensor_mul(a, tensor_mul(a, r, bk_r0(k)), bk_r_lambda(k, mu));
    const bool ok = bk_r_lambda(k, sum) == rhs;
    out.inputs["mu"] = Json{{"source", o.mu}};
    out.results["sum_identity"] = ok;
    if (!ok) code = kInconsistent;
  }
  return code;
}

int cmd_dy(const std::string& kind, const Options& o, Output& out) {
  Loaded l = load_hopf(o.source);
  out.inputs["algebra"] = l.info;
  std::optional<DYComplex> c;
  if (kind == "id") {
    c.emplace(DYComplex::identity(l.hopf));
  } else if (kind == "tensor") {
    TensorElement r = resolve_r(l, o.r, out.inputs);
    require_r(l, r);
    c.emplace(DYComplex::tensor_with_r(l.hopf, r));
  } else {
    if (o.sub.empty()) throw CliError{kUsage, "usage", "dy res needs --sub KEY"};
    Sub s = resolve_sub(l, o.sub, out.inputs);
    c.emplace(DYComplex::restriction(l.hopf, s.hopf, s.iota));
  }
  const std::size_t n = o.degree;
  progress("cohomology in degree " + std::to_string(n));
  CohomologyInfo info = c->cohomology(n);
  // δ δ = 0 on the basis of the previous cochain space.
  bool dd = true;
  if (n >= 1) {
    for (const auto& u : c->cochain_basis(n - 1)) {
      if (!c->differential(n, c->differential(n - 1, u)).is_zero()) dd = false;
    }
  }
  out.results = Json{{"complex", kind}, {"degree", n}, {"cochain_dim", info.cochain_dim},
                     {"rank_in", info.rank_in}, {"rank_out", info.rank_out}, {"dim", info.dim}};
  out.consistency = Json{{"modular_agree", info.modular_agree}, {"dd_zero", dd}, {"image_containment", true}};
  return info.modular_agree && dd ? kOk : kInconsistent;
}

int cmd_relext(const Options& o, Output& out) {
  Loaded l = load_hopf(o.source);
  out.inputs["algebra"] = l.info;
  const ResolutionKind kind = resolution_kind(o.resolution);
  const std::size_t n = o.degree;
  progress("building the double");
  DoubleAlgebra d = drinfeld_double(l.hopf);
  ModulePtr triv = LazyModule::from_rep(trivial_module(*d.hopf));
  std::optional<ResolventPair> pair;
  ModulePtr v, w;
  std::string pair_name = "(D(H), H)";
  if (o.coeff == "trivial") {
    pair = double_pair(d);
    v = w = triv;
  } else if (o.coeff == "restriction") {
    if (o.sub.empty()) throw CliError{kUsage, "usage", "--coeff restriction needs --sub KEY"};
    Sub s = resolve_sub(l, o.sub, out.inputs);
    pair = double_pair(d);
    v = triv;
    w = LazyModule::from_rep(coeff_restriction(d, *s.hopf, s.iota).module);
  } else if (o.coeff == "tensor") {
    TensorElement r = resolve_r(l, o.r, out.inputs);
    require_r(l, r);
    VerifiedRMatrix vr = require_rmatrix(*l.hopf, r);
    AlgebraPtr dd = tensor_algebra(d.hopf->algebra(), d.hopf->algebra());
    pair = double_tensor_pair(d, dd);
    pair_name = "(D(H)⊗D(H), H⊗H)";
    v = LazyModule::tensor(triv, triv, dd);
    w = LazyModule::from_rep(coeff_tensor_product(d, dd, vr).module);
  } else if (o.coeff == "cplus" || o.coeff == "cminus") {
    if (!is_bk(l)) throw CliError{kUsage, "usage", "--coeff cplus/cminus needs a bk:k algebra"};
    pair = double_pair(d);
    v = triv;
    w = LazyModule::from_rep(build_c_pm(*l.hopf, d.hopf->algebra_ptr(), o.coeff == "cplus" ? 1 : -1));
  } else {
    throw CliError{kUsage, "usage", "--coeff must be trivial, restriction, tensor, cplus or cminus"};
  }
  progress(to_string(kind) + " resolution to degree " + std::to_string(n));
  Resolution res = make_resolution(kind, *pair, v, n);
  progress("verifying the resolution");
  ResolutionCheck chk = verify_resolution(res, *pair);
  progress("relative Ext");
  ExtResult ext = relative_ext(res, *pair, *w);
  out.results = Json{{"pair", pair_name},
                     {"coefficient", o.coeff},
                     {"resolution", to_string(kind)},
                     {"term_dims", dims_json(res.term_dims())},
                     {"hom_dims", dims_json(ext.hom_dims)},
                     {"ranks", dims_json(ext.ranks)},
                     {"ext", dims_json(ext.dims)},
                     {"verification", check_json(chk)}};
  out.consistency = Json{{"modular_agree", ext.modular_agree}, {"resolution_verified", chk.ok()}};
  if (!chk.ok()) std::cerr << "[hopfdy] resolution check: " << chk.detail << "\n";
  return chk.ok() && ext.modular_agree ? kOk : kInconsistent;
}

int cmd_crosscheck(const std::string& which, const Options& o, Output& out) {
  Loaded l = load_hopf(o.source);
  out.inputs["algebra"] = l.info;
  if (which == "dimension-formula") {
    TensorElement r = resolve_r(l, o.r, out.inputs);
    require_r(l, r);
    DimensionFormulaCheck c = dimension_formula_check(l.hopf, r);
    out.results = Json{{"h2_tensor", c.h2_tensor}, {"h2_id", c.h2_id}, {"tangent_dim", c.tangent_dim},
                       {"consistent", c.consistent()}};
    return c.consistent() ? kOk : kInconsistent;
  }
  const ResolutionKind kind = resolution_kind(o.resolution);
  const std::size_t n = o.degree;
  if (which == "adjunction-tensor" || which == "adjunction-res") {
    AdjunctionCheck c;
    if (which == "adjunction-tensor") {
      TensorElement r = resolve_r(l, o.r, out.inputs);
      require_r(l, r);
      c = adjunction_check_tensor(l.hopf, r, n, kind);
    } else {
      if (o.sub.empty()) throw CliError{kUsage, "usage", "adjunction-res needs --sub KEY"};
      Sub s = resolve_sub(l, o.sub, out.inputs);
      c = adjunction_check_restriction(l.hopf, s.hopf, s.iota, n, kind);
    }
    out.results = Json{{"degree", n}, {"resolution", to_string(kind)}, {"lhs", c.cohomology}, {"rhs", c.ext},
                       {"equal", c.cohomology == c.ext}};
    out.consistency = Json{{"resolution_verified", c.resolution_verified}};
    return c.consistent() ? kOk : kInconsistent;
  }
  if (which == "kunneth") {
    DoubleAlgebra d = drinfeld_double(l.hopf);
    ResolventPair p = double_pair(d);
    AlgebraPtr dd = tensor_algebra(d.hopf->algebra(), d.hopf->algebra());
    ResolventPair ab = double_tensor_pair(d, dd);
    ModulePtr triv = LazyModule::from_rep(trivial_module(*d.hopf));
    KunnethCheck c = kunneth_check(p, triv, triv, p, triv, triv, ab, n, kind);
    out.results = Json{{"degree", n},
                       {"resolution", to_string(kind)},
                       {"lhs", c.direct},
                       {"rhs", c.product_sum},
                       {"equal", c.direct == c.product_sum},
                       {"factor_ext", dims_json(c.factor_a)},
                       {"tensor_resolution_ext", c.tensor_resolution_ext}};
    out.consistency = Json{{"tensor_resolution_verified", c.tensor_resolution_verified}};
    return c.consistent() ? kOk : kInconsistent;
  }
  throw CliError{kUsage, "usage", "unknown crosscheck " + which};
}

int cmd_catalog(const Options& o, Output& out) {
  if (o.source.empty()) {
    out.results["families"] = Json::array({
        Json{{"key", "cyclic:n"}, {"description", "group algebra of Z/n"}, {"dim", "n"}},
        Json{{"key", "bk:k"}, {"description", "exterior algebra on k generators bosonized by Z/2"}, {"dim", "2^(k+1)"}},
        Json{{"key", "cplus:k"}, {"description", "D(B_k)-module on the cyclic vector (1+h)/2"}, {"dim", "2^k"}},
        Json{{"key", "cminus:k"}, {"description", "D(B_k)-module on the cyclic vector (1-h)/2"}, {"dim", "2^k"}},
    });
    return kOk;
  }
  auto key = CatalogKey::parse(o.source);
  if (!key) throw CliError{kUsage, "usage", "unknown catalog key " + o.source};
  if (key->family == CatalogKey::Family::CPlus || key->family == CatalogKey::Family::CMinus) {
    HopfPtr bk = build_bk(key->param);
    DoubleAlgebra d = drinfeld_double(bk);
    ModuleRep m = build_c_pm(*bk, d.hopf->algebra_ptr(), key->family == CatalogKey::Family::CPlus ? 1 : -1);
    Json action = Json::array();
    for (Index a = 0; a < m.action.size(); ++a) {
      if (!m.action[a].is_zero()) action.push_back(Json{{"element", a}, {"matrix", to_json(m.action[a])}});
    }
    out.results = Json{{"key", key->str()}, {"dim", m.dim}, {"action", std::move(action)}};
    return kOk;
  }
  HopfPtr h = build_catalog_hopf(*key);
  out.results = Json{{"key", key->str()}, {"dim", h->dim()}, {"hopf", hopf_to_json(*h)}};
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with finite-dimensional Hopf algebras, Davydov-Yetter cohomology and relative Ext"};
  app.require_subcommand(1);
  Options o;
  std::string json_out;
  double max_seconds = 0;
  app.add_option("--json-out", json_out, "Also write the report to this file");
  app.add_option("--max-seconds", max_seconds, "Wall-clock budget (exit 5 when exceeded)");

  auto add_source = [&](CLI::App* c, bool required = true) {
    auto* opt = c->add_option("source", o.source, "Catalog key (cyclic:n, bk:k, cplus:k, cminus:k) or HopfFile path");
    if (required) opt->required();
  };
  auto add_r = [&](CLI::App* c) {
    c->add_flag("--r0", o.r.r0, "Use R0 on bk:k");
    c->add_flag("--trivial-r", o.r.trivial, "Use 1 ⊗ 1");
    c->add_option("--rmatrix", o.r.file, "R-matrix JSON file");
    c->add_option("--lambda", o.r.lambda, "k x k lambda matrix JSON file for R_lambda on bk:k");
  };
  auto add_degree = [&](CLI::App* c) {
    c->add_option("--degree", o.degree, "Cohomological degree")->check(CLI::Range(0, 16));
  };
  auto add_resolution = [&](CLI::App* c) {
    c->add_option("--resolution", o.resolution, "bar or cover")->check(CLI::IsMember({"bar", "cover"}));
  };

  auto* verify = app.add_subcommand("verify", "Check the Hopf (or module) axioms");
  add_source(verify);
  verify->add_flag("--dual", o.dual, "Check the dual Hopf algebra instead");

  auto* dbl = app.add_subcommand("double", "Build and check the Drinfeld double");
  add_source(dbl);
  dbl->add_flag("--emit", o.emit, "Include the double as a HopfFile");

  auto* rm = app.add_subcommand("rmatrix", "R-matrix tools");
  rm->require_subcommand(1);
  auto* rm_check = rm->add_subcommand("check", "Check the R-matrix axioms");
  auto* rm_tangent = rm->add_subcommand("tangent", "Tangent space of the R-matrix variety");
  auto* rm_family = rm->add_subcommand("family", "R_lambda on bk:k");
  for (auto* c : {rm_check, rm_tangent, rm_family}) {
    add_source(c);
    add_r(c);
  }
  rm_family->add_option("--mu", o.mu, "Second lambda file; checks R_(lambda+mu) = R_lambda R0 R_mu");

  auto* dy = app.add_subcommand("dy", "Davydov-Yetter cohomology");
  dy->require_subcommand(1);
  std::vector<CLI::App*> dy_cmds;
  for (const char* k : {"id", "tensor", "res"}) {
    auto* c = dy->add_subcommand(k, std::string("complex of kind ") + k);
    add_source(c);
    add_degree(c);
    add_r(c);
    c->add_option("--sub", o.sub, "Subalgebra catalog key for res");
    dy_cmds.push_back(c);
  }

  auto* relext = app.add_subcommand("relext", "Relative Ext of the trivial module");
  add_source(relext);
  add_degree(relext);
  add_resolution(relext);
  add_r(relext);
  relext->add_option("--coeff", o.coeff, "trivial, restriction, tensor, cplus or cminus");
  relext->add_option("--sub", o.sub, "Subalgebra catalog key for --coeff restriction");

  auto* cc = app.add_subcommand("crosscheck", "Compare independent computations");
  cc->require_subcommand(1);
  std::vector<CLI::App*> cc_cmds;
  for (const char* k : {"adjunction-tensor", "adjunction-res", "dimension-formula", "kunneth"}) {
    auto* c = cc->add_subcommand(k, k);
    add_source(c);
    add_degree(c);
    add_resolution(c);
    add_r(c);
    c->add_option("--sub", o.sub, "Subalgebra catalog key");
    cc_cmds.push_back(c);
  }

  auto* cat = app.add_subcommand("catalog", "List catalog families or print one entry");
  add_source(cat, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  Json report;
  std::vector<std::string> echo;
  for (int i = 1; i < argc; ++i) echo.emplace_back(argv[i]);
  report["command"] = echo;
  Output out;
  int code = kOk;
  const auto start = std::chrono::steady_clock::now();
  if (max_seconds > 0) set_deadline(max_seconds);
  try {
    if (verify->parsed()) {
      code = cmd_verify(o, out);
    } else if (dbl->parsed()) {
      code = cmd_double(o, out);
    } else if (rm_check->parsed()) {
      code = cmd_rmatrix_check(o, out);
    } else if (rm_tangent->parsed()) {
      code = cmd_rmatrix_tangent(o, out);
    } else if (rm_family->parsed()) {
      code = cmd_rmatrix_family(o, out);
    } else if (relext->parsed()) {
      code = cmd_relext(o, out);
    } else if (cat->parsed()) {
      code = cmd_catalog(o, out);
    } else {
      for (auto* c : dy_cmds) {
        if (c->parsed()) code = cmd_dy(c->get_name(), o, out);
      }
      for (auto* c : cc_cmds) {
        if (c->parsed()) code = cmd_crosscheck(c->get_name(), o, out);
      }
    }
  } catch (const CliError& e) {
    code = e.code;
    report["error"] = Json{{"kind", e.kind}, {"message", e.message}, {"details", e.details}};
  } catch (const ParseError& e) {
    code = kUsage;
    report["error"] = Json{{"kind", "parse"}, {"message", e.what()}};
  } catch (const InvalidStructure& e) {
    code = kInvalidAlgebra;
    report["error"] = Json{{"kind", "invalid_algebra"}, {"message", e.what()}};
  } catch (const InvalidRMatrix& e) {
    code = kInvalidR;
    report["error"] = Json{{"kind", "invalid_rmatrix"}, {"message", e.what()}};
  } catch (const UnsupportedDegree& e) {
    code = kUnsupportedDegree;
    report["error"] = Json{{"kind", "unsupported_degree"}, {"message", e.what()}};
  } catch (const BudgetExceeded& e) {
    code = kBudget;
    report["error"] = Json{{"kind", "budget_exceeded"}, {"message", e.what()}};
  } catch (const ConsistencyFailure& e) {
    code = kInconsistent;
    report["error"] = Json{{"kind", "consistency_failure"}, {"message", e.what()}};
  } catch (const std::invalid_argument& e) {
    code = kUsage;
    report["error"] = Json{{"kind", "usage"}, {"message", e.what()}};
  } catch (const std::exception& e) {
    code = kInconsistent;
    report["error"] = Json{{"kind", "internal"}, {"message", e.what()}};
  }
  out.consistency["modular_mismatches"] = modular_mismatch_count();
  if (modular_mismatch_count() != 0 && code == kOk) code = kInconsistent;
  report["inputs"] = std::move(out.inputs);
  report["results"] = std::move(out.results);
  report["consistency"] = std::move(out.consistency);
  report["exit_code"] = code;

  const std::string text = report.dump(2) + "\n";
  std::cout << text;
  if (!json_out.empty()) {
    std::ofstream f(json_out);
    if (!f) {
      std::cerr << "[hopfdy] cannot write " << json_out << "\n";
      return kUsage;
    }
    f << text;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::fprintf(stderr, "[hopfdy] done in %.3f s (exit %d)\n", secs, code);
  return code;
}
