#include "pencil/pencil.hpp"

#include <algorithm>

namespace pencil {

Pencil2::Pencil2(RatMatrix a, RatMatrix b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.rows() != b_.rows() || a_.cols() != b_.cols()) {
    throw DomainError("pencil slices must share their shape");
  }
}

Pencil2 Pencil2::transformed(const RatMatrix& p, const RatMatrix& q) const {
  return {p * a_ * q, p * b_ * q};
}

Pencil2 Pencil2::mixed(const Rat& c00, const Rat& c01, const Rat& c10, const Rat& c11) const {
  return {a_ * c00 + b_ * c01, a_ * c10 + b_ * c11};
}

Pencil2& Pencil2::operator+=(const Pencil2& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Pencil2& Pencil2::operator-=(const Pencil2& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Pencil2 direct_sum(const Pencil2& x, const Pencil2& y) {
  return {direct_sum(x.a(), y.a()), direct_sum(x.b(), y.b())};
}

Pencil2 direct_sum(const std::vector<Pencil2>& parts) {
  Pencil2 out = Pencil2::zero(0, 0);
  for (const auto& p : parts) out = direct_sum(out, p);
  return out;
}

int normal_rank(const Pencil2& t) {
  int best = 0;
  const int tries = std::min(t.m(), t.n());
  for (int k = 0; k <= tries; ++k) {
    best = std::max(best, rank(t.a() + t.b() * Rat(k)));
    if (best == tries) break;
  }
  return best;
}

Pencil2 Rank1Term::tensor() const {
  const RatMatrix uv = outer(u, v);
  return {uv * w0, uv * w1};
}

bool Rank1Term::factors_nonzero() const {
  auto nz = [](const RatVector& x) {
    return std::any_of(x.begin(), x.end(), [](const Rat& e) { return e != 0; });
  };
  return nz(u) && nz(v) && (w0 != 0 || w1 != 0);
}

Pencil2 sum_of_terms(int m, int n, const std::vector<Rank1Term>& terms) {
  Pencil2 out = Pencil2::zero(m, n);
  for (const auto& t : terms) {
    if (static_cast<int>(t.u.size()) != m || static_cast<int>(t.v.size()) != n) {
      throw DomainError("rank-1 term does not match the tensor shape");
    }
    out += t.tensor();
  }
  return out;
}

}  // namespace pencil
