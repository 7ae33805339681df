#include "pencil/witness.hpp"

namespace pencil {

std::string to_string(MaxRankForm f) {
  switch (f) {
    case MaxRankForm::even: return "even";
    case MaxRankForm::i: return "i";
    case MaxRankForm::ii: return "ii";
    case MaxRankForm::iii: return "iii";
    case MaxRankForm::iv: return "iv";
    case MaxRankForm::v: return "v";
    case MaxRankForm::vi: return "vi";
    case MaxRankForm::vii: return "vii";
  }
  return "?";
}

std::optional<MaxRankForm> parse_form(const std::string& s) {
  for (MaxRankForm f : kAllForms)
    if (to_string(f) == s) return f;
  return std::nullopt;
}

Pencil2 maxrank_example(int m, int n) {
  if (m < 1 || m > n || n > 2 * m) throw DomainError("maxrank example needs 1 <= m <= n <= 2m");
  RatMatrix a(m, n);
  RatMatrix b(m, n);
  const int h = n / 2;
  for (int i = 0; i < m; ++i) a(i, i) = 1;
  for (int i = 0; i < h; ++i) b(i, n - h + i) = 1;
  return {a, b};
}

namespace {

Pencil2 jordan_pair(int k, const Rat& x) {
  return {RatMatrix::identity(k) * x + jordan_nilpotent(k), RatMatrix::identity(k)};
}

Pencil2 infinite_pair(int k) { return {RatMatrix::identity(k), jordan_nilpotent(k)}; }

Pencil2 l_block(int k) {
  RatMatrix a(k, k + 1);
  RatMatrix b(k, k + 1);
  for (int i = 0; i < k; ++i) {
    a(i, i + 1) = 1;
    b(i, i) = 1;
  }
  return {a, b};
}

Pencil2 y_block(const FormParams& p) {
  switch (p.y) {
    case YKind::jordan: return jordan_pair(2, p.y_eigen);
    case YKind::infinite: return infinite_pair(2);
    case YKind::rotation: {
      if (p.s == 0) throw DomainError("rotation block needs s != 0");
      RatMatrix a(2, 2);
      a(0, 0) = p.c;
      a(0, 1) = -p.s;
      a(1, 0) = p.s;
      a(1, 1) = p.c;
      return {a, RatMatrix::identity(2)};
    }
  }
  throw InternalError("unknown Y kind");
}

}  // namespace

Pencil2 classification_form(const FormParams& p) {
  if (p.alpha < 0 || p.ell_E < 0) throw DomainError("negative form parameter");
  std::vector<Pencil2> parts;
  const bool vy = p.form == MaxRankForm::v || p.form == MaxRankForm::vi;
  if (vy && p.alpha < 1) throw DomainError("forms v and vi need alpha >= 1");
  if (p.form == MaxRankForm::vii && p.ell_E < 1) throw DomainError("form vii needs ell_E >= 1");
  if (p.form == MaxRankForm::v) {
    for (int i = 0; i + 1 < p.alpha; ++i) parts.push_back(jordan_pair(2, p.y_eigen));
    parts.push_back(jordan_pair(3, p.y_eigen));
  } else if (p.form == MaxRankForm::vi) {
    for (int i = 0; i + 1 < p.alpha; ++i) parts.push_back(infinite_pair(2));
    parts.push_back(infinite_pair(3));
  } else {
    for (int i = 0; i < p.alpha; ++i) parts.push_back(y_block(p));
  }
  const int l1 = p.form == MaxRankForm::vii ? p.ell_E - 1 : p.ell_E;
  for (int i = 0; i < l1; ++i) parts.push_back(l_block(1));
  switch (p.form) {
    case MaxRankForm::i: parts.push_back(Pencil2::zero(0, 1)); break;
    case MaxRankForm::ii: parts.push_back(l_block(1).transpose()); break;
    case MaxRankForm::iii: parts.push_back(jordan_pair(1, p.x)); break;
    case MaxRankForm::iv: parts.push_back(infinite_pair(1)); break;
    case MaxRankForm::vii: parts.push_back(l_block(2)); break;
    default: break;
  }
  return direct_sum(parts);
}

Pencil2 cor_x2mn(int m, int n, int l, const RatMatrix& x11, const RatMatrix& x12, const RatMatrix& x22,
                 const RatMatrix& y) {
  if (m < 1 || m > n || n > 2 * m) throw DomainError("cor_x2mn needs m <= n <= 2m");
  if (l < n - m || l > n / 2) throw DomainError("cor_x2mn needs n - m <= l <= n/2");
  const int s11 = n - l;
  const int s22 = m + l - n;
  if (x11.rows() != s11 || x11.cols() != s11 || x12.rows() != s11 || x12.cols() != s22 || x22.rows() != s22 ||
      x22.cols() != s22 || y.rows() != l || y.cols() != l) {
    throw DomainError("cor_x2mn block shapes do not match m, n, l");
  }
  if (determinant(x11) == 0 || determinant(x22) == 0 || determinant(y) == 0) {
    throw DomainError("cor_x2mn blocks X11, X22, Y must be nonsingular");
  }
  RatMatrix a(m, n);
  a.set_block(0, 0, x11);
  a.set_block(0, s11, x12);
  a.set_block(s11, s11, x22);
  RatMatrix b(m, n);
  b.set_block(0, n - l, y);
  return {a, b};
}

Pencil2 cor_x2mn(int m, int n, int l) {
  return cor_x2mn(m, n, l, RatMatrix::identity(n - l), RatMatrix(n - l, m + l - n),
                  RatMatrix::identity(m + l - n), RatMatrix::identity(l));
}

Pencil2 jordan_rank_witness(const std::vector<int>& sizes, const Rat& x, const RatMatrix& tail) {
  if (!tail.is_square()) throw DomainError("tail block must be square");
  std::vector<Pencil2> parts;
  for (int k : sizes) {
    if (k < 1) throw DomainError("Jordan block sizes must be positive");
    parts.emplace_back(RatMatrix::identity(k), RatMatrix::identity(k) * x + jordan_nilpotent(k));
  }
  parts.emplace_back(RatMatrix::identity(tail.rows()), tail);
  return direct_sum(parts);
}

}  // namespace pencil
