#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pencil/errors.hpp"
#include "pencil/rational.hpp"

namespace pencil {

/// Dense univariate polynomial over Q, coefficients stored lowest degree
/// first. The zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<Rat> coeffs) : Poly(std::vector<Rat>(coeffs)) {}

  static Poly constant(const Rat& c);
  static Poly monomial(const Rat& c, int degree);
  static Poly x() { return monomial(Rat(1), 1); }
  /// Monic product of (x - r) over the given roots.
  static Poly from_roots(std::span<const Rat> roots);

  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] bool is_constant() const { return c_.size() <= 1; }
  [[nodiscard]] bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  [[nodiscard]] const Rat& lead() const;
  [[nodiscard]] Rat coeff(int i) const;
  [[nodiscard]] std::span<const Rat> coeffs() const { return c_; }

  [[nodiscard]] Poly monic() const;
  [[nodiscard]] Poly derivative() const;
  [[nodiscard]] Rat eval(const Rat& at) const;
  /// p(x + shift).
  [[nodiscard]] Poly taylor_shift(const Rat& shift) const;
  /// x^deg * p(1/x).
  [[nodiscard]] Poly reversed() const;
  /// Multiplicity of x as a factor (0 for p(0) != 0); zero polynomial is an error.
  [[nodiscard]] int x_valuation() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
  friend Poly operator-(Poly a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  [[nodiscard]] std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Rat> c_;
};

struct PolyDivMod {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division; divisor must be nonzero.
PolyDivMod divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& p);

/// base^e for e >= 0.
Poly power(const Poly& base, int e);

/// Monic gcd; both inputs zero is a DomainError.
Poly gcd(const Poly& p, const Poly& q);
/// Monic lcm of nonzero inputs.
Poly lcm(const Poly& p, const Poly& q);

/// p / gcd(p, p'), monic.
Poly squarefree_part(const Poly& p);
bool is_squarefree(const Poly& p);

/// Yun decomposition: p = lc * prod_i parts[i]^(i+1), parts pairwise coprime,
/// squarefree and monic (some may be 1).
std::vector<Poly> squarefree_decomposition(const Poly& p);

/// Number of distinct real roots of a squarefree polynomial.
int sturm_real_root_count(const Poly& p);

/// All rational roots with multiplicity, ascending.
std::vector<Rat> rational_roots(const Poly& p);

/// True iff p is a product of pairwise distinct monic linear factors over
/// the field. Constants split trivially.
bool splits_distinct_linear(const Poly& p, Field field);

}  // namespace pencil
