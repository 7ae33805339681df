#include "pencil/matrix.hpp"

#include <sstream>

namespace pencil {

RatMatrix diag(const std::vector<Rat>& d) {
  const int n = static_cast<int>(d.size());
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

RatMatrix direct_sum(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

RatMatrix hstack(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw DomainError("hstack row mismatch");
  RatMatrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

RatMatrix vstack(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.cols()) throw DomainError("vstack column mismatch");
  RatMatrix m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

RatMatrix jordan_nilpotent(int k) {
  RatMatrix j(k, k);
  for (int i = 0; i + 1 < k; ++i) j(i, i + 1) = 1;
  return j;
}

RatMatrix column(const RatVector& v) {
  return RatMatrix(static_cast<int>(v.size()), 1, v);
}

RatVector column_of(const RatMatrix& m, int j) {
  RatVector v(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) v[static_cast<std::size_t>(i)] = m(i, j);
  return v;
}

RatVector row_of(const RatMatrix& m, int i) {
  RatVector v(static_cast<std::size_t>(m.cols()));
  for (int j = 0; j < m.cols(); ++j) v[static_cast<std::size_t>(j)] = m(i, j);
  return v;
}

RatVector mat_vec(const RatMatrix& m, const RatVector& v) {
  if (static_cast<int>(v.size()) != m.cols()) throw DomainError("mat_vec shape mismatch");
  RatVector out(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(i)] += m(i, j) * v[static_cast<std::size_t>(j)];
  return out;
}

RatMatrix outer(const RatVector& u, const RatVector& v) {
  RatMatrix m(static_cast<int>(u.size()), static_cast<int>(v.size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
  return m;
}

RatMatrix companion(const Poly& monic) {
  if (monic.is_zero() || monic.lead() != 1) throw DomainError("companion matrix needs a monic polynomial");
  const int n = monic.degree();
  RatMatrix c(n, n);
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) c(i, n - 1) = -monic.coeff(i);
  return c;
}

RatMatrix companion_sum(const std::vector<Poly>& monics) {
  RatMatrix acc(0, 0);
  for (const auto& p : monics) acc = direct_sum(acc, companion(p));
  return acc;
}

std::string to_string(const RatMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << format_rat(m(i, j));
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Rref rref(RatMatrix m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const Rat inv = 1 / m(row, col);
    for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rat f = m(i, col);
      for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

int rank(const RatMatrix& m) {
  // Fraction-free forward elimination is enough for the rank.
  RatMatrix a = m;
  int r = 0;
  for (int col = 0; col < a.cols() && r < a.rows(); ++col) {
    int p = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = col; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    for (int i = r + 1; i < a.rows(); ++i) {
      if (a(i, col) == 0) continue;
      const Rat f = a(i, col) / a(r, col);
      for (int j = col; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

RatMatrix kernel_basis(const RatMatrix& m) {
  const Rref r = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < m.cols(); ++j)
    if (!is_pivot[static_cast<std::size_t>(j)]) free_cols.push_back(j);
  RatMatrix k(m.cols(), static_cast<int>(free_cols.size()));
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    const int fc = free_cols[f];
    k(fc, static_cast<int>(f)) = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      k(r.pivots[i], static_cast<int>(f)) = -r.reduced(static_cast<int>(i), fc);
  }
  return k;
}

Rat determinant(RatMatrix m) {
  if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
  const int n = m.rows();
  Rat det(1);
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (m(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) return Rat(0);
    if (p != col) {
      for (int j = col; j < n; ++j) std::swap(m(p, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      const Rat f = m(i, col) / m(col, col);
      for (int j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw DomainError("inverse of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return {};
  const Rref r = rref(hstack(m, RatMatrix::identity(n)));
  if (static_cast<int>(r.pivots.size()) < n || r.pivots[static_cast<std::size_t>(n - 1)] != n - 1) {
    throw DomainError("inverse of a singular matrix");
  }
  return r.reduced.block(0, n, n, n);
}

std::optional<RatMatrix> solve(const RatMatrix& m, const RatMatrix& b) {
  if (m.rows() != b.rows()) throw DomainError("solve shape mismatch");
  const Rref r = rref(hstack(m, b));
  RatMatrix x(m.cols(), b.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    const int pc = r.pivots[i];
    if (pc >= m.cols()) return std::nullopt;
    for (int j = 0; j < b.cols(); ++j) x(pc, j) = r.reduced(static_cast<int>(i), m.cols() + j);
  }
  return x;
}

RatMatrix complete_basis(const RatMatrix& cols) {
  const int n = cols.rows();
  RatMatrix acc = cols;
  int have = rank(acc);
  if (have != cols.cols()) throw InternalError("complete_basis: input columns are dependent");
  for (int j = 0; j < n && acc.cols() < n; ++j) {
    RatMatrix e(n, 1);
    e(j, 0) = 1;
    RatMatrix trial = hstack(acc, e);
    if (rank(trial) > have) {
      acc = std::move(trial);
      ++have;
    }
  }
  return acc;
}

Poly characteristic_polynomial(const RatMatrix& m) {
  if (!m.is_square()) throw DomainError("characteristic polynomial of a non-square matrix");
  // Faddeev-LeVerrier over Q.
  const int n = m.rows();
  std::vector<Rat> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = 1;
  RatMatrix mk = RatMatrix::identity(n);
  RatMatrix id = RatMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    RatMatrix am = m * mk;
    Rat tr(0);
    for (int i = 0; i < n; ++i) tr += am(i, i);
    const Rat ck = -tr / k;
    c[static_cast<std::size_t>(n - k)] = ck;
    mk = am + id * ck;
  }
  return Poly(std::move(c));
}

RatMatrix eval_at_matrix(const Poly& p, const RatMatrix& m) {
  if (!m.is_square()) throw DomainError("polynomial of a non-square matrix");
  const int n = m.rows();
  RatMatrix acc(n, n);
  const RatMatrix id = RatMatrix::identity(n);
  for (int i = p.degree(); i >= 0; --i) acc = acc * m + id * p.coeff(i);
  return acc;
}

}  // namespace pencil
