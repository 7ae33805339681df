#pragma once

#include <vector>

#include "pencil/matrix.hpp"

namespace pencil {

/// m x n x 2 tensor with rational slices (A; B), read as the pencil A + xB.
class Pencil2 {
 public:
  Pencil2() = default;
  Pencil2(RatMatrix a, RatMatrix b);
  static Pencil2 zero(int m, int n) { return {RatMatrix(m, n), RatMatrix(m, n)}; }

  [[nodiscard]] int m() const { return a_.rows(); }
  [[nodiscard]] int n() const { return a_.cols(); }
  [[nodiscard]] const RatMatrix& a() const { return a_; }
  [[nodiscard]] const RatMatrix& b() const { return b_; }
  [[nodiscard]] bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  /// (A^T; B^T).
  [[nodiscard]] Pencil2 transpose() const { return {a_.transpose(), b_.transpose()}; }
  /// (P A Q; P B Q).
  [[nodiscard]] Pencil2 transformed(const RatMatrix& p, const RatMatrix& q) const;
  [[nodiscard]] Pencil2 block(int r0, int c0, int nr, int nc) const {
    return {a_.block(r0, c0, nr, nc), b_.block(r0, c0, nr, nc)};
  }
  /// Slice mixing (c00 A + c01 B; c10 A + c11 B).
  [[nodiscard]] Pencil2 mixed(const Rat& c00, const Rat& c01, const Rat& c10, const Rat& c11) const;

  Pencil2& operator+=(const Pencil2& o);
  Pencil2& operator-=(const Pencil2& o);
  friend Pencil2 operator+(Pencil2 x, const Pencil2& y) { return x += y; }
  friend Pencil2 operator-(Pencil2 x, const Pencil2& y) { return x -= y; }
  friend bool operator==(const Pencil2& x, const Pencil2& y) = default;

 private:
  RatMatrix a_;
  RatMatrix b_;
};

/// Block-diagonal direct sum; zero-width or zero-height parts are allowed.
Pencil2 direct_sum(const Pencil2& x, const Pencil2& y);
Pencil2 direct_sum(const std::vector<Pencil2>& parts);

/// Generic rank of A + xB.
int normal_rank(const Pencil2& t);

/// u (x) v (x) w; slice s equals w[s] u v^T.
struct Rank1Term {
  RatVector u;
  RatVector v;
  Rat w0;
  Rat w1;

  [[nodiscard]] Pencil2 tensor() const;
  [[nodiscard]] bool factors_nonzero() const;
  friend bool operator==(const Rank1Term&, const Rank1Term&) = default;
};

Pencil2 sum_of_terms(int m, int n, const std::vector<Rank1Term>& terms);

}  // namespace pencil
