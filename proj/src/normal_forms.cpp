#include "pencil/normal_forms.hpp"

#include <algorithm>
#include <optional>

namespace pencil {

Poly InvariantFactors::product() const {
  Poly p = Poly::constant(Rat(1));
  for (const auto& f : factors) p *= f;
  return p;
}

int InvariantFactors::total_degree() const {
  int d = 0;
  for (const auto& f : factors) d += f.degree();
  return d;
}

bool InvariantFactors::divisibility_chain_holds() const {
  for (std::size_t i = 1; i < factors.size(); ++i)
    if (!divides(factors[i - 1], factors[i])) return false;
  return true;
}

InvariantFactors InvariantFactors::nontrivial() const {
  InvariantFactors out;
  for (const auto& f : factors)
    if (!f.is_constant() || f.is_zero()) out.factors.push_back(f);
  return out;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const Rat ca = a.coeff(i);
    const Rat cb = b.coeff(i);
    if (ca != cb) return ca < cb;
  }
  return false;
}

namespace {

class SmithWorker {
 public:
  SmithWorker(const PolyMatrix& p, bool track)
      : d_(p), track_(track), r_(p.rows()), c_(p.cols()) {
    if (track_) {
      u_ = PolyMatrix::identity(r_);
      uinv_ = PolyMatrix::identity(r_);
      v_ = PolyMatrix::identity(c_);
    }
  }

  SmithResult run() {
    const int n = std::min(r_, c_);
    for (int t = 0; t < n; ++t) {
      if (!reduce_pivot(t)) break;
    }
    SmithResult res;
    for (int t = 0; t < n; ++t) res.diagonal.factors.push_back(d_(t, t));
    res.left = std::move(u_);
    res.right = std::move(v_);
    res.left_inverse = std::move(uinv_);
    return res;
  }

 private:
  std::optional<std::pair<int, int>> min_degree_entry(int t) const {
    std::optional<std::pair<int, int>> best;
    int best_deg = 0;
    for (int i = t; i < r_; ++i)
      for (int j = t; j < c_; ++j) {
        const Poly& e = d_(i, j);
        if (e.is_zero()) continue;
        if (!best || e.degree() < best_deg) {
          best = {i, j};
          best_deg = e.degree();
        }
      }
    return best;
  }

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < c_; ++j) std::swap(d_(a, j), d_(b, j));
    if (!track_) return;
    for (int j = 0; j < r_; ++j) std::swap(u_(a, j), u_(b, j));
    for (int i = 0; i < r_; ++i) std::swap(uinv_(i, a), uinv_(i, b));
  }

  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < r_; ++i) std::swap(d_(i, a), d_(i, b));
    if (!track_) return;
    for (int i = 0; i < c_; ++i) std::swap(v_(i, a), v_(i, b));
  }

  // row_i += q * row_j
  void add_row(int i, int j, const Poly& q) {
    for (int k = 0; k < c_; ++k)
      if (!d_(j, k).is_zero()) d_(i, k) += q * d_(j, k);
    if (!track_) return;
    for (int k = 0; k < r_; ++k)
      if (!u_(j, k).is_zero()) u_(i, k) += q * u_(j, k);
    for (int k = 0; k < r_; ++k)
      if (!uinv_(k, i).is_zero()) uinv_(k, j) -= q * uinv_(k, i);
  }

  // col_i += q * col_j
  void add_col(int i, int j, const Poly& q) {
    for (int k = 0; k < r_; ++k)
      if (!d_(k, j).is_zero()) d_(k, i) += q * d_(k, j);
    if (!track_) return;
    for (int k = 0; k < c_; ++k)
      if (!v_(k, j).is_zero()) v_(k, i) += q * v_(k, j);
  }

  void scale_row(int i, const Rat& s) {
    for (int k = 0; k < c_; ++k) d_(i, k) *= s;
    if (!track_) return;
    for (int k = 0; k < r_; ++k) u_(i, k) *= s;
    const Rat inv = 1 / s;
    for (int k = 0; k < r_; ++k) uinv_(k, i) *= inv;
  }

  bool reduce_pivot(int t) {
    for (;;) {
      const auto pos = min_degree_entry(t);
      if (!pos) return false;
      swap_rows(t, pos->first);
      swap_cols(t, pos->second);
      bool clean = true;
      for (int i = t + 1; i < r_; ++i) {
        if (d_(i, t).is_zero()) continue;
        const auto dm = divmod(d_(i, t), d_(t, t));
        add_row(i, t, -dm.quotient);
        if (!dm.remainder.is_zero()) clean = false;
      }
      for (int j = t + 1; j < c_; ++j) {
        if (d_(t, j).is_zero()) continue;
        const auto dm = divmod(d_(t, j), d_(t, t));
        add_col(j, t, -dm.quotient);
        if (!dm.remainder.is_zero()) clean = false;
      }
      if (!clean) continue;
      bool divisible = true;
      for (int i = t + 1; i < r_ && divisible; ++i)
        for (int j = t + 1; j < c_; ++j) {
          if (!divides(d_(t, t), d_(i, j))) {
            add_row(t, i, Poly::constant(Rat(1)));
            divisible = false;
            break;
          }
        }
      if (!divisible) continue;
      scale_row(t, 1 / d_(t, t).lead());
      return true;
    }
  }

  PolyMatrix d_;
  bool track_;
  int r_;
  int c_;
  PolyMatrix u_;
  PolyMatrix uinv_;
  PolyMatrix v_;
};

}  // namespace

SmithResult smith_form(const PolyMatrix& p, bool track_transforms) {
  return SmithWorker(p, track_transforms).run();
}

PolyMatrix characteristic_matrix(const RatMatrix& m) {
  if (!m.is_square()) throw DomainError("characteristic matrix of a non-square matrix");
  const int n = m.rows();
  PolyMatrix p(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p(i, j) = Poly{-m(i, j), Rat(i == j ? 1 : 0)};
  return p;
}

PolyMatrix linear_pencil(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("pencil slice shape mismatch");
  PolyMatrix p(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) p(i, j) = Poly{a(i, j), b(i, j)};
  return p;
}

Poly poly_determinant(const PolyMatrix& p) {
  if (!p.is_square()) throw DomainError("determinant of a non-square polynomial matrix");
  const int n = p.rows();
  int bound = 0;
  for (int i = 0; i < n; ++i) {
    int row = 0;
    for (int j = 0; j < n; ++j) row = std::max(row, p(i, j).degree());
    bound += row;
  }
  // evaluate at 0..bound and interpolate (Newton form)
  std::vector<Rat> xs;
  std::vector<Rat> dd;
  for (int k = 0; k <= bound; ++k) {
    RatMatrix num(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) num(i, j) = p(i, j).eval(Rat(k));
    xs.emplace_back(k);
    dd.push_back(determinant(num));
  }
  for (int lvl = 1; lvl <= bound; ++lvl)
    for (int k = bound; k >= lvl; --k)
      dd[k] = (dd[k] - dd[k - 1]) / (xs[k] - xs[k - lvl]);
  Poly out;
  for (int k = bound; k >= 0; --k) out = out * Poly{-xs[k], Rat(1)} + Poly::constant(dd[k]);
  return out;
}

namespace {

// sum_j col[j](m) e_j by Horner on coefficient vectors.
RatVector apply_poly_column(const PolyMatrix& pm, int col, const RatMatrix& m) {
  const int n = m.rows();
  int maxdeg = -1;
  for (int j = 0; j < n; ++j) maxdeg = std::max(maxdeg, pm(j, col).degree());
  RatVector acc(static_cast<std::size_t>(n));
  for (int k = maxdeg; k >= 0; --k) {
    acc = mat_vec(m, acc);
    for (int j = 0; j < n; ++j) acc[static_cast<std::size_t>(j)] += pm(j, col).coeff(k);
  }
  return acc;
}

}  // namespace

FrobeniusResult frobenius_form(const RatMatrix& m) {
  if (!m.is_square()) throw DomainError("Frobenius form of a non-square matrix");
  const int n = m.rows();
  const SmithResult s = smith_form(characteristic_matrix(m), true);
  FrobeniusResult out;
  RatMatrix basis(n, 0);
  for (int i = 0; i < n; ++i) {
    const Poly& f = s.diagonal.factors[static_cast<std::size_t>(i)];
    if (f.is_constant()) continue;
    out.factors.factors.push_back(f);
    RatVector g = apply_poly_column(s.left_inverse, i, m);
    for (int k = 0; k < f.degree(); ++k) {
      basis = hstack(basis, column(g));
      g = mat_vec(m, g);
    }
  }
  if (basis.cols() != n) throw InternalError("Frobenius basis has the wrong size");
  out.transform_inverse = basis;
  out.transform = inverse(basis);
  if (!(out.transform * m * basis == companion_sum(out.factors.factors))) {
    throw InternalError("Frobenius transform does not reproduce the companion sum");
  }
  return out;
}

InvariantFactors similarity_invariants(const RatMatrix& m) {
  return smith_form(characteristic_matrix(m), false).diagonal.nontrivial();
}

bool matrices_similar(const RatMatrix& a, const RatMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw DomainError("similarity test needs square matrices of equal size");
  }
  return similarity_invariants(a) == similarity_invariants(b);
}

std::vector<Poly> coprime_base(const std::vector<Poly>& polys) {
  std::vector<Poly> base;
  for (const auto& p : polys) {
    if (p.is_constant()) continue;
    for (const auto& part : squarefree_decomposition(p))
      if (!part.is_constant()) base.push_back(part);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < base.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
        const Poly g = gcd(base[i], base[j]);
        if (g.is_constant()) continue;
        const Poly a = (base[i] / g).monic();
        const Poly b = (base[j] / g).monic();
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(j));
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(i));
        base.push_back(g);
        if (!a.is_constant()) base.push_back(a);
        if (!b.is_constant()) base.push_back(b);
        changed = true;
      }
  }
  std::sort(base.begin(), base.end(), poly_less);
  return base;
}

int multiplicity(const Poly& base, Poly p) {
  int mult = 0;
  for (;;) {
    auto dm = divmod(p, base);
    if (!dm.remainder.is_zero()) return mult;
    ++mult;
    p = std::move(dm.quotient);
  }
}

InvariantFactors invariant_chain(const std::vector<Poly>& entries) {
  const auto base = coprime_base(entries);
  const std::size_t len = entries.size();
  std::vector<Poly> chain(len, Poly::constant(Rat(1)));
  for (const auto& b : base) {
    std::vector<int> mult;
    for (const auto& e : entries) mult.push_back(multiplicity(b, e));
    std::sort(mult.begin(), mult.end());
    for (std::size_t i = 0; i < len; ++i)
      for (int r = 0; r < mult[i]; ++r) chain[i] *= b;
  }
  InvariantFactors out;
  out.factors = std::move(chain);
  return out.nontrivial();
}

std::vector<EigenCluster> eigen_clusters(const InvariantFactors& f) {
  std::vector<EigenCluster> out;
  for (const auto& b : coprime_base(f.factors)) {
    EigenCluster c{b, {}};
    for (const auto& p : f.factors) {
      if (p.is_constant()) continue;
      const int mult = multiplicity(b, p);
      if (mult > 0) c.partition.push_back(mult);
    }
    std::sort(c.partition.rbegin(), c.partition.rend());
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace pencil
