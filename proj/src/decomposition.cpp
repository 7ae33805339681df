#include "pencil/decomposition.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace pencil {

std::string to_string(DecompositionMode m) { return m == DecompositionMode::exact ? "exact" : "numeric"; }

namespace {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

Complex horner(const std::vector<Complex>& c, Complex x) {
  Complex r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

CMatrix to_complex(const RatMatrix& a) {
  CMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = to_double(a(i, j));
  return out;
}

std::vector<Complex> to_complex(const RatVector& v) {
  std::vector<Complex> out;
  for (const auto& x : v) out.emplace_back(to_double(x));
  return out;
}

RatVector embed(int n, int offset, const RatVector& part) {
  RatVector v(static_cast<std::size_t>(n));
  std::copy(part.begin(), part.end(), v.begin() + offset);
  return v;
}

}  // namespace

std::vector<Complex> numeric_roots(const Poly& f) {
  const int k = f.degree();
  if (k < 1) return {};
  const double lead = to_double(f.lead());
  std::vector<Complex> c;
  for (int i = 0; i <= k; ++i) c.emplace_back(to_double(f.coeff(i)) / lead);
  std::vector<Complex> dc;
  for (int i = 1; i <= k; ++i) dc.push_back(c[static_cast<std::size_t>(i)] * static_cast<double>(i));
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(k, k);
  for (int i = 1; i < k; ++i) comp(i, i - 1) = 1;
  for (int i = 0; i < k; ++i) comp(i, k - 1) = -c[static_cast<std::size_t>(i)].real();
  const Eigen::VectorXcd ev = comp.eigenvalues();
  std::vector<Complex> roots(ev.data(), ev.data() + k);
  for (auto& r : roots) {
    for (int it = 0; it < 8; ++it) {
      const Complex d = horner(dc, r);
      if (std::abs(d) == 0) break;
      const Complex step = horner(c, r) / d;
      r -= step;
      if (std::abs(step) <= 1e-17 * std::max(1.0, std::abs(r))) break;
    }
  }
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

Decomposition decompose(const Pencil2& t, Field field) {
  Decomposition out;
  out.field = field;
  out.m = t.m();
  out.n = t.n();
  out.rank = tensor_rank(t, field).rank;
  const CorrectionPlan plan = diagonalizing_correction(t, field, BudgetMode::minimal);
  const BlockDiagonalForm bd = block_diagonalize(plan.corrected);
  const int m = t.m();
  const int n = t.n();

  bool exact = true;
  for (const auto& b : bd.blocks) {
    if (b.kind == BlockKind::Shifted && static_cast<int>(rational_roots(b.poly).size()) != b.k) exact = false;
    if (b.kind != BlockKind::Shifted && b.kind != BlockKind::A) throw InternalError("corrected pencil has a singular block");
  }
  out.mode = exact ? DecompositionMode::exact : DecompositionMode::numeric;
  const RatMatrix pinv = inverse(bd.p);
  const RatMatrix qinv_t = inverse(bd.q).transpose();

  if (exact) {
    for (std::size_t bi = 0; bi < bd.blocks.size(); ++bi) {
      const auto& b = bd.blocks[bi];
      if (b.kind != BlockKind::Shifted) continue;
      auto roots = rational_roots(b.poly);
      std::sort(roots.begin(), roots.end());
      RatMatrix w(b.k, b.k);
      for (int i = 0; i < b.k; ++i) {
        Rat pw = 1;
        for (int j = 0; j < b.k; ++j) {
          w(i, j) = pw;
          pw *= roots[static_cast<std::size_t>(i)];
        }
      }
      const RatMatrix winv = inverse(w);
      for (int i = 0; i < b.k; ++i) {
        Rank1Term term;
        term.u = mat_vec(pinv, embed(m, bd.row_offsets[bi], column_of(winv, i)));
        term.v = mat_vec(qinv_t, embed(n, bd.col_offsets[bi], row_of(w, i)));
        term.w0 = 1 - bd.d * roots[static_cast<std::size_t>(i)];
        term.w1 = roots[static_cast<std::size_t>(i)];
        out.exact_terms.push_back(std::move(term));
      }
    }
    out.diagonal_terms = static_cast<int>(out.exact_terms.size());
    for (const auto& c : plan.terms) {
      Rank1Term neg = c;
      neg.w0 = -neg.w0;
      neg.w1 = -neg.w1;
      out.exact_terms.push_back(std::move(neg));
    }
  } else {
    const CMatrix pc = to_complex(pinv);
    const CMatrix qc = to_complex(qinv_t);
    const double dd = to_double(bd.d);
    for (std::size_t bi = 0; bi < bd.blocks.size(); ++bi) {
      const auto& b = bd.blocks[bi];
      if (b.kind != BlockKind::Shifted) continue;
      std::vector<Complex> roots;
      auto rat = rational_roots(b.poly);
      if (static_cast<int>(rat.size()) == b.k) {
        std::sort(rat.begin(), rat.end());
        for (const auto& r : rat) roots.emplace_back(to_double(r));
      } else {
        roots = numeric_roots(b.poly);
        if (field == Field::R)
          for (auto& r : roots) r = r.real();
      }
      CMatrix w(b.k, b.k);
      for (int i = 0; i < b.k; ++i) {
        Complex pw = 1;
        for (int j = 0; j < b.k; ++j) {
          w(i, j) = pw;
          pw *= roots[static_cast<std::size_t>(i)];
        }
      }
      const CMatrix winv = w.partialPivLu().inverse();
      for (int i = 0; i < b.k; ++i) {
        CVector ub = CVector::Zero(m);
        CVector vb = CVector::Zero(n);
        ub.segment(bd.row_offsets[bi], b.k) = winv.col(i);
        vb.segment(bd.col_offsets[bi], b.k) = w.row(i).transpose();
        const CVector u = pc * ub;
        const CVector v = qc * vb;
        NumericTerm term;
        term.u.assign(u.data(), u.data() + m);
        term.v.assign(v.data(), v.data() + n);
        const Complex lam = roots[static_cast<std::size_t>(i)];
        term.w0 = 1.0 - dd * lam;
        term.w1 = lam;
        out.numeric_terms.push_back(std::move(term));
      }
    }
    out.diagonal_terms = static_cast<int>(out.numeric_terms.size());
    for (const auto& c : plan.terms) {
      NumericTerm term;
      term.u = to_complex(c.u);
      term.v = to_complex(c.v);
      term.w0 = -to_double(c.w0);
      term.w1 = -to_double(c.w1);
      out.numeric_terms.push_back(std::move(term));
    }
  }
  out.correction_terms = static_cast<int>(plan.terms.size());
  if (static_cast<int>(out.size()) != out.rank) throw InternalError("decomposition length differs from the tensor rank");
  return out;
}

VerificationReport verify_decomposition(const Pencil2& t, const Decomposition& d, double tol) {
  VerificationReport r;
  r.count_matches = static_cast<int>(d.size()) == d.rank;
  if (d.m != t.m() || d.n != t.n()) return r;
  if (d.mode == DecompositionMode::exact) {
    r.terms_nonzero = std::all_of(d.exact_terms.begin(), d.exact_terms.end(),
                                  [](const Rank1Term& x) { return x.factors_nonzero(); });
    const Pencil2 diff = t - sum_of_terms(t.m(), t.n(), d.exact_terms);
    double worst = 0;
    double scale = 1;
    for (int s = 0; s < 2; ++s) {
      const RatMatrix& dm = s == 0 ? diff.a() : diff.b();
      const RatMatrix& tm = s == 0 ? t.a() : t.b();
      for (int i = 0; i < t.m(); ++i)
        for (int j = 0; j < t.n(); ++j) {
          worst = std::max(worst, std::abs(to_double(dm(i, j))));
          scale = std::max(scale, std::abs(to_double(tm(i, j))));
        }
    }
    r.residual = worst / scale;
    r.ok = r.count_matches && r.terms_nonzero && diff.is_zero();
    return r;
  }
  CMatrix sa = CMatrix::Zero(t.m(), t.n());
  CMatrix sb = CMatrix::Zero(t.m(), t.n());
  r.terms_nonzero = true;
  auto norm = [](const std::vector<Complex>& v) {
    double s = 0;
    for (auto x : v) s = std::max(s, std::abs(x));
    return s;
  };
  auto imag_part = [](const std::vector<Complex>& v) {
    double s = 0;
    for (auto x : v) s = std::max(s, std::abs(x.imag()));
    return s;
  };
  for (const auto& term : d.numeric_terms) {
    if (norm(term.u) <= tol || norm(term.v) <= tol || std::max(std::abs(term.w0), std::abs(term.w1)) <= tol)
      r.terms_nonzero = false;
    if (d.field == Field::R &&
        (imag_part(term.u) > tol || imag_part(term.v) > tol || std::abs(term.w0.imag()) > tol ||
         std::abs(term.w1.imag()) > tol))
      r.real_terms = false;
    const CVector u = Eigen::Map<const CVector>(term.u.data(), t.m());
    const CVector v = Eigen::Map<const CVector>(term.v.data(), t.n());
    const CMatrix uv = u * v.transpose();
    sa += term.w0 * uv;
    sb += term.w1 * uv;
  }
  const CMatrix ta = to_complex(t.a());
  const CMatrix tb = to_complex(t.b());
  const double scale = std::max({1.0, ta.cwiseAbs().maxCoeff(), tb.cwiseAbs().maxCoeff()});
  const double worst = std::max((ta - sa).cwiseAbs().maxCoeff(), (tb - sb).cwiseAbs().maxCoeff());
  r.residual = worst / scale;
  r.ok = r.count_matches && r.terms_nonzero && r.real_terms && r.residual < tol;
  return r;
}

}  // namespace pencil
