#include "pencil/rank.hpp"

#include <algorithm>

namespace pencil {

int alpha_count(const InvariantFactors& m_factors, Field field) {
  int k = 0;
  for (const auto& f : m_factors.factors)
    if (!f.is_constant() && !splits_distinct_linear(f.monic(), field)) ++k;
  return k;
}

int alpha_count(const KroneckerStructure& s, Field field) {
  const auto finite = s.finite_factors.largest_first();
  const std::size_t len = std::max(finite.size(), s.inf_degrees.size());
  int k = 0;
  for (std::size_t i = 0; i < len; ++i) {
    const int a = i < s.inf_degrees.size() ? s.inf_degrees[i] : 0;
    const bool finite_ok = i >= finite.size() || splits_distinct_linear(finite[i], field);
    if (a >= 2 || !finite_ok) ++k;
  }
  return k;
}

int unit_pencil_rank(const RatMatrix& a, Field field) {
  if (!a.is_square()) throw DomainError("unit pencil needs a square matrix");
  return a.rows() + alpha_count(similarity_invariants(a), field);
}

int max_rank(int m, int n) {
  if (m < 1 || n < 1) throw DomainError("max_rank needs positive dimensions");
  return std::min({n + m / 2, m + n / 2, 2 * m, 2 * n});
}

RankReport rank_from_structure(const KroneckerStructure& s, Field field) {
  if (field == Field::Q && (s.ell_E() > 0 || s.ell_F() > 0)) {
    throw ScopeError("rank over Q is only available for pencils without E/F blocks");
  }
  RankReport r;
  r.field = field;
  r.alpha = alpha_count(s, field);
  r.components = {s.m_A, s.n_A, s.ell_E(), s.ell_F(), s.regular_size()};
  r.rank = r.alpha + s.m - s.m_A + s.ell_E();
  if (s.m >= 1 && s.n >= 1) {
    r.max_rank = max_rank(s.m, s.n);
    r.is_max_rank = r.rank == r.max_rank;
    if (r.rank > r.max_rank) throw InternalError("rank exceeds the maximal rank");
  }
  if (field != Field::Q) r.classification = classify_structure(s, field);
  return r;
}

RankReport tensor_rank(const Pencil2& t, Field field) {
  const KroneckerDecomposition kd = kronecker_decomposition(t, false);
  RankReport r = rank_from_structure(kd.structure, field);
  const int direct = alpha_count(similarity_invariants(kd.regular.m_mat), field);
  if (direct != r.alpha) throw InternalError("alpha from M disagrees with the structure");
  return r;
}

std::string to_string(BorderRankReason r) {
  switch (r) {
    case BorderRankReason::all_real_eigenvalues: return "all_real_eigenvalues";
    case BorderRankReason::nonreal_eigenvalue_present: return "nonreal_eigenvalue_present";
    case BorderRankReason::complex_field: return "complex_field";
  }
  return "?";
}

BorderRankReport border_rank(const Pencil2& t, Field field) {
  if (field == Field::Q) throw ScopeError("border rank is only available over R and C");
  if (t.m() != t.n()) throw ScopeError("border rank needs a square pencil");
  const int n = t.n();
  std::optional<RatMatrix> nmat;
  for (int d = 0; d <= n && !nmat; ++d) {
    RatMatrix cand = t.a() + t.b() * Rat(d);
    if (determinant(cand) != 0) nmat = std::move(cand);
  }
  if (!nmat) throw ScopeError("border rank needs a regular pencil");
  BorderRankReport r;
  r.field = field;
  r.value = n;
  if (field == Field::C) return r;
  const Poly sq = squarefree_part(characteristic_polynomial(inverse(*nmat) * t.b()));
  if (sturm_real_root_count(sq) == sq.degree()) {
    r.reason = BorderRankReason::all_real_eigenvalues;
  } else {
    r.reason = BorderRankReason::nonreal_eigenvalue_present;
    r.value = n + 1;
  }
  return r;
}

bool is_diagonalizable(const KroneckerStructure& s, Field field) {
  return s.ell_E() == 0 && s.ell_F() == 0 && alpha_count(s, field) == 0;
}

bool is_diagonalizable(const Pencil2& t, Field field) {
  return is_diagonalizable(kronecker_structure(t), field);
}

namespace {

// Regular part equals Y^(+k) for one 2x2x2 block Y (any k >= 0).
bool is_y_power(const std::vector<Poly>& finite, const std::vector<int>& inf, Field field) {
  if (finite.empty()) {
    return std::all_of(inf.begin(), inf.end(), [](int a) { return a == 2; });
  }
  if (!inf.empty()) return false;
  const Poly& q = finite.front();
  if (q.degree() != 2) return false;
  for (const auto& f : finite)
    if (!(f == q)) return false;
  const Rat disc = q.coeff(1) * q.coeff(1) - 4 * q.coeff(0);
  return disc == 0 || (disc < 0 && field == Field::R);
}

bool ones(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 1; });
}

// Finite chain with one elementary divisor (x - r) removed, if present.
std::optional<std::vector<Poly>> remove_linear_divisor(const std::vector<Poly>& chain, const Rat& r) {
  const Poly lin{-r, Rat(1)};
  std::vector<Poly> entries;
  std::vector<int> mult;
  for (const auto& f : chain) {
    const int mu = multiplicity(lin, f);
    entries.push_back(f / power(lin, mu));
    if (mu > 0) mult.push_back(mu);
  }
  if (mult.empty() || *std::min_element(mult.begin(), mult.end()) != 1) return std::nullopt;
  mult.erase(std::min_element(mult.begin(), mult.end()));
  for (int mu : mult) entries.push_back(power(lin, mu));
  return invariant_chain(entries).factors;
}

}  // namespace

bool matches_form(const KroneckerStructure& s, MaxRankForm form, Field field) {
  if (s.m_A != 0) return false;
  const bool n_even = s.n % 2 == 0;
  if ((form == MaxRankForm::even) != n_even) return false;
  const auto& fin = s.finite_factors.factors;
  const auto& inf = s.inf_degrees;
  const bool plain_rest = s.n_A == 0 && s.eta.empty();
  switch (form) {
    case MaxRankForm::even:
      return plain_rest && ones(s.eps) && is_y_power(fin, inf, field);
    case MaxRankForm::i:
      return s.n_A == 1 && s.eta.empty() && ones(s.eps) && is_y_power(fin, inf, field);
    case MaxRankForm::ii:
      return s.n_A == 0 && s.eta == std::vector<int>{1} && ones(s.eps) && is_y_power(fin, inf, field);
    case MaxRankForm::iii: {
      if (!plain_rest || !ones(s.eps) || fin.empty()) return false;
      auto roots = rational_roots(fin.back());
      roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
      for (const auto& r : roots) {
        const auto rest = remove_linear_divisor(fin, r);
        if (rest && is_y_power(*rest, inf, field)) return true;
      }
      // one rotation block plus an irrational real (x; 1): a squarefree
      // cubic with a single real root
      const Poly& top = fin.back();
      return field == Field::R && fin.size() == 1 && inf.empty() && top.degree() == 3 &&
             is_squarefree(top) && sturm_real_root_count(top) == 1;
    }
    case MaxRankForm::iv: {
      if (!plain_rest || !ones(s.eps) || inf.empty() || inf.back() != 1) return false;
      const std::vector<int> rest(inf.begin(), inf.end() - 1);
      return is_y_power(fin, rest, field);
    }
    case MaxRankForm::v: {
      if (!plain_rest || !ones(s.eps) || !inf.empty() || fin.empty()) return false;
      const Poly& top = fin.back();
      const auto roots = rational_roots(top);
      if (top.degree() != 3 || roots.size() != 3 || roots.front() != roots.back()) return false;
      const Poly sq = power(Poly{-roots.front(), Rat(1)}, 2);
      for (std::size_t i = 0; i + 1 < fin.size(); ++i)
        if (!(fin[i] == sq)) return false;
      return true;
    }
    case MaxRankForm::vi: {
      if (!plain_rest || !ones(s.eps) || !fin.empty() || inf.empty() || inf.front() != 3) return false;
      const std::vector<int> rest(inf.begin() + 1, inf.end());
      return std::all_of(rest.begin(), rest.end(), [](int a) { return a == 2; });
    }
    case MaxRankForm::vii: {
      if (!plain_rest || s.eps.empty() || s.eps.front() != 2) return false;
      const std::vector<int> tail(s.eps.begin() + 1, s.eps.end());
      return ones(tail) && is_y_power(fin, inf, field);
    }
  }
  return false;
}

std::optional<MaxRankForm> classify_structure(const KroneckerStructure& s, Field field) {
  if (s.m < 1 || s.m > s.n || s.n > 2 * s.m) return std::nullopt;
  const int alpha = alpha_count(s, field);
  const int rank = alpha + s.m - s.m_A + s.ell_E();
  if (rank != max_rank(s.m, s.n)) return std::nullopt;
  if (s.n % 2 == 0) return MaxRankForm::even;
  if (s.n_A == 1) return MaxRankForm::i;
  if (s.n_F() == 1) return MaxRankForm::ii;
  if (s.m_E() - s.ell_E() == 1) return MaxRankForm::vii;
  if (s.regular_size() - 2 * alpha == 1) {
    for (MaxRankForm f : {MaxRankForm::iii, MaxRankForm::iv, MaxRankForm::v, MaxRankForm::vi})
      if (matches_form(s, f, field)) return f;
  }
  throw InternalError("maximal-rank structure matches no listed form");
}

std::optional<MaxRankForm> classify_max_rank(const Pencil2& t, Field field) {
  return classify_structure(kronecker_structure(t), field);
}

}  // namespace pencil
