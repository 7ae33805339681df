#include "report.hpp"

#include <cstdio>
#include <sstream>

namespace pencil::cli {

namespace {

Json header(const char* command) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

Json rat_vector(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(format_rat(x));
  return out;
}

Json grid(const RatMatrix& a) {
  Json rows = Json::array();
  for (int i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < a.cols(); ++j) row.push_back(format_rat(a(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json term_json(const Rank1Term& t) {
  Json j;
  j["u"] = rat_vector(t.u);
  j["v"] = rat_vector(t.v);
  j["w"] = Json::array({format_rat(t.w0), format_rat(t.w1)});
  return j;
}

Json complex_json(Complex z) {
  // 17 significant digits round-trip a double
  char re[40];
  char im[40];
  std::snprintf(re, sizeof re, "%.17g", z.real());
  std::snprintf(im, sizeof im, "%.17g", z.imag());
  return Json::array({std::string(re), std::string(im)});
}

Json complex_vector(const std::vector<Complex>& v) {
  Json out = Json::array();
  for (auto z : v) out.push_back(complex_json(z));
  return out;
}

Json int_vector(const std::vector<int>& v) { return Json(v); }

Json structure_json(const KroneckerStructure& s) {
  Json j;
  j["m"] = s.m;
  j["n"] = s.n;
  j["m_A"] = s.m_A;
  j["n_A"] = s.n_A;
  j["eps"] = int_vector(s.eps);
  j["eta"] = int_vector(s.eta);
  j["inf_degrees"] = int_vector(s.inf_degrees);
  Json fin = Json::array();
  for (const auto& f : s.finite_factors.factors) fin.push_back(f.to_string());
  j["finite_factors"] = fin;
  j["ell_E"] = s.ell_E();
  j["ell_F"] = s.ell_F();
  j["regular_size"] = s.regular_size();
  return j;
}

Json block_json(const BlockDescriptor& b) {
  Json j;
  j["kind"] = to_string(b.kind);
  switch (b.kind) {
    case BlockKind::A:
      j["rows"] = b.k;
      j["cols"] = b.l;
      break;
    case BlockKind::B:
      j["k"] = b.k;
      j["alpha"] = format_rat(b.alpha);
      break;
    case BlockKind::C:
      j["k"] = b.k;
      j["c"] = format_rat(b.c);
      j["s"] = format_rat(b.s);
      break;
    case BlockKind::Companion:
      j["k"] = b.k;
      j["divisor"] = b.poly.to_string();
      break;
    case BlockKind::Shifted:
      j["k"] = b.k;
      j["factor"] = b.poly.to_string();
      j["shift"] = format_rat(b.shift);
      break;
    default:
      j["k"] = b.k;
  }
  return j;
}

Rat parse_entry(const Json& e) {
  if (e.is_string()) return parse_rat(e.get<std::string>());
  if (e.is_number_integer()) return Rat(e.get<long>());
  throw DomainError("entries must be \"p/q\" strings or integers");
}

void check_schema(const Json& doc) {
  if (!doc.is_object()) throw DomainError("document must be a JSON object");
  if (doc.contains("schema") && doc["schema"] != kSchema) throw DomainError("unsupported schema");
  if (!doc.contains("m") || !doc.contains("n") || !doc.contains("slices")) throw DomainError("document needs m, n and slices");
  if (!doc["slices"].is_array() || doc["slices"].size() != 2) throw DomainError("slices must hold two grids");
}

template <typename F>
void each_entry(const Json& doc, F&& f) {
  const int m = doc["m"].get<int>();
  const int n = doc["n"].get<int>();
  if (m < 0 || n < 0) throw DomainError("negative dimensions");
  for (int s = 0; s < 2; ++s) {
    const Json& g = doc["slices"][s];
    if (!g.is_array() || static_cast<int>(g.size()) != m) throw DomainError("slice row count differs from m");
    for (int i = 0; i < m; ++i) {
      if (!g[i].is_array() || static_cast<int>(g[i].size()) != n) throw DomainError("slice row length differs from n");
      for (int j = 0; j < n; ++j) f(s, i, j, g[i][j]);
    }
  }
}

}  // namespace

Json tensor_document(const Pencil2& t, std::optional<Field> field) {
  Json j;
  j["schema"] = kSchema;
  j["m"] = t.m();
  j["n"] = t.n();
  j["slices"] = Json::array({grid(t.a()), grid(t.b())});
  if (field) j["field"] = to_string(*field);
  return j;
}

Pencil2 parse_tensor(const Json& doc) {
  check_schema(doc);
  const int m = doc["m"].get<int>();
  const int n = doc["n"].get<int>();
  RatMatrix a(m, n);
  RatMatrix b(m, n);
  each_entry(doc, [&](int s, int i, int j, const Json& e) { (s == 0 ? a : b)(i, j) = parse_entry(e); });
  return Pencil2(a, b);
}

std::optional<Field> document_field(const Json& doc) {
  if (!doc.contains("field")) return std::nullopt;
  const auto f = doc["field"].get<std::string>();
  if (f == "GF") return std::nullopt;
  return parse_field(f);
}

std::optional<int> document_q(const Json& doc) {
  if (!doc.contains("q")) return std::nullopt;
  return doc["q"].get<int>();
}

GFTensor parse_gf_tensor(const Json& doc, int q) {
  check_schema(doc);
  const int m = doc["m"].get<int>();
  const int n = doc["n"].get<int>();
  std::vector<int> a(m * n);
  std::vector<int> b(m * n);
  each_entry(doc, [&](int s, int i, int j, const Json& e) {
    const Rat r = parse_entry(e);
    if (r.get_den() != 1 || r < 0) throw DomainError("GF entries must be nonnegative integers");
    const Int v = r.get_num() % q;
    (s == 0 ? a : b)[i * n + j] = static_cast<int>(v.get_si());
  });
  return GFTensor(q, m, n, a, b);
}

Json gf_document(const GFTensor& t) {
  Json j;
  j["schema"] = kSchema;
  j["m"] = t.m;
  j["n"] = t.n;
  Json slices = Json::array();
  for (int s = 0; s < 2; ++s) {
    Json rows = Json::array();
    for (int i = 0; i < t.m; ++i) {
      Json row = Json::array();
      for (int k = 0; k < t.n; ++k) row.push_back(std::to_string(t.at(s, i, k)));
      rows.push_back(row);
    }
    slices.push_back(rows);
  }
  j["slices"] = slices;
  j["field"] = "GF";
  j["q"] = t.q;
  return j;
}

Json structure_report(const Pencil2& t) {
  Json j = header("structure");
  const auto s = kronecker_structure(t);
  j["structure"] = structure_json(s);
  Json blocks = Json::array();
  for (const auto& b : canonical_blocks(s)) blocks.push_back(block_json(b));
  j["blocks"] = blocks;
  j["normal_rank"] = normal_rank(t);
  return j;
}

Json rank_report(const Pencil2& t, Field field) {
  Json j = header("rank");
  const auto r = tensor_rank(t, field);
  j["field"] = to_string(field);
  j["m"] = t.m();
  j["n"] = t.n();
  j["rank"] = r.rank;
  j["alpha"] = r.alpha;
  Json c;
  c["m_A"] = r.components.m_A;
  c["n_A"] = r.components.n_A;
  c["ell_E"] = r.components.ell_E;
  c["ell_F"] = r.components.ell_F;
  c["p"] = r.components.p;
  j["components"] = c;
  j["max_rank"] = r.max_rank;
  j["is_max_rank"] = r.is_max_rank;
  j["classification"] = r.classification ? Json(to_string(*r.classification)) : Json(nullptr);
  return j;
}

Json maxrank_report(int m, int n) {
  if (m < 1 || n < 1) throw DomainError("maxrank needs positive dimensions");
  Json j = header("maxrank");
  j["m"] = m;
  j["n"] = n;
  j["max_rank"] = max_rank(m, n);
  const int lo = std::min(m, n);
  const int hi = std::max(m, n);
  if (hi <= 2 * lo) {
    const Pencil2 ex = m <= n ? maxrank_example(m, n) : maxrank_example(n, m).transpose();
    j["example"] = tensor_document(ex);
  }
  return j;
}

Json borderrank_report(const Pencil2& t, Field field) {
  Json j = header("borderrank");
  const auto r = border_rank(t, field);
  j["field"] = to_string(field);
  j["border_rank"] = r.value;
  j["reason"] = to_string(r.reason);
  return j;
}

Json correction_report(const Pencil2& t, Field field, BudgetMode mode) {
  Json j = header("correct");
  const auto plan = diagonalizing_correction(t, field, mode);
  j["field"] = to_string(field);
  j["mode"] = to_string(mode);
  j["term_count"] = plan.terms.size();
  j["pairs"] = plan.pairs;
  Json terms = Json::array();
  for (const auto& term : plan.terms) terms.push_back(term_json(term));
  j["terms"] = terms;
  j["corrected"] = tensor_document(plan.corrected);
  j["corrected_rank"] = plan.corrected_rank;
  Json cert;
  cert["diagonalizable"] = plan.certificate.diagonalizable;
  cert["block_minimal_lcm"] = plan.certificate.block_minimal_lcm.to_string();
  cert["lcm_squarefree"] = plan.certificate.lcm_squarefree;
  Json factors = Json::array();
  for (const auto& e : plan.certificate.factors) {
    Json f;
    f["factor"] = e.factor.to_string();
    f["squarefree"] = e.squarefree;
    if (e.real_roots >= 0) f["real_roots"] = e.real_roots;
    if (e.rational_roots >= 0) f["rational_roots"] = e.rational_roots;
    f["splits"] = e.splits;
    factors.push_back(f);
  }
  cert["factors"] = factors;
  cert["corrected_structure"] = structure_json(plan.certificate.corrected_structure);
  j["certificate"] = cert;
  return j;
}

Json decomposition_report(const Pencil2& t, Field field) {
  Json j = header("decompose");
  const auto d = decompose(t, field);
  j["field"] = to_string(field);
  j["mode"] = to_string(d.mode);
  j["rank"] = d.rank;
  j["diagonal_terms"] = d.diagonal_terms;
  j["correction_terms"] = d.correction_terms;
  Json terms = Json::array();
  if (d.mode == DecompositionMode::exact) {
    for (const auto& term : d.exact_terms) terms.push_back(term_json(term));
  } else {
    for (const auto& term : d.numeric_terms) {
      Json x;
      x["u"] = complex_vector(term.u);
      x["v"] = complex_vector(term.v);
      x["w"] = Json::array({complex_json(term.w0), complex_json(term.w1)});
      terms.push_back(x);
    }
  }
  j["terms"] = terms;
  const auto v = verify_decomposition(t, d);
  Json ver;
  ver["ok"] = v.ok;
  ver["residual"] = v.residual;
  ver["count_matches"] = v.count_matches;
  ver["terms_nonzero"] = v.terms_nonzero;
  ver["real_terms"] = v.real_terms;
  j["verification"] = ver;
  return j;
}

Json oracle_report(const GFTensor& t, std::optional<int> atmost, int threads) {
  Json j = header("oracle");
  j["q"] = t.q;
  j["m"] = t.m;
  j["n"] = t.n;
  std::vector<GFTerm> witness;
  if (atmost) {
    auto r = gf_rank_atmost(t, *atmost, threads);
    j["atmost"] = *atmost;
    j["result"] = r.found;
    witness = std::move(r.witness);
  } else {
    auto r = gf_rank(t, threads);
    j["rank"] = r.rank;
    j["lower_bound"] = r.lower_bound;
    witness = std::move(r.witness);
  }
  Json terms = Json::array();
  for (const auto& w : witness) {
    Json x;
    x["u"] = int_vector(w.u);
    x["v"] = int_vector(w.v);
    x["w"] = Json::array({w.w0, w.w1});
    terms.push_back(x);
  }
  j["witness"] = terms;
  return j;
}

Json equivalence_report(const Pencil2& x, const Pencil2& y) {
  Json j = header("equiv");
  j["equivalent"] = pencils_equivalent(x, y);
  j["first"] = structure_json(kronecker_structure(x));
  j["second"] = structure_json(kronecker_structure(y));
  return j;
}

namespace {

void render(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    const bool scalar_list =
        v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
    if (v.is_object()) {
      os << pad << it.key() << ":\n";
      render(os, v, indent + 2);
    } else if (v.is_array() && !scalar_list) {
      os << pad << it.key() << ":\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_object()) {
          os << pad << "  [" << i << "]\n";
          render(os, v[i], indent + 4);
        } else {
          os << pad << "  " << v[i].dump() << "\n";
        }
      }
    } else {
      os << pad << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream os;
  render(os, j, 0);
  return os.str();
}

}  // namespace pencil::cli
