#include "pencil/poly.hpp"

#include <algorithm>
#include <sstream>

namespace pencil {

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, int degree) {
  std::vector<Rat> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::from_roots(std::span<const Rat> roots) {
  Poly p = constant(Rat(1));
  for (const Rat& r : roots) p *= Poly{-r, Rat(1)};
  return p;
}

const Rat& Poly::lead() const {
  if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return c_.back();
}

Rat Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
  return c_[static_cast<std::size_t>(i)];
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  Poly out = *this;
  const Rat inv = 1 / c_.back();
  for (auto& c : out.c_) c *= inv;
  return out;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return Poly(std::move(d));
}

Rat Poly::eval(const Rat& at) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::taylor_shift(const Rat& shift) const {
  // Horner in the shifted variable.
  Poly acc;
  const Poly lin{shift, Rat(1)};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(*it);
  return acc;
}

Poly Poly::reversed() const {
  std::vector<Rat> v(c_.rbegin(), c_.rend());
  return Poly(std::move(v));
}

int Poly::x_valuation() const {
  if (c_.empty()) throw DomainError("valuation of the zero polynomial");
  int k = 0;
  while (c_[static_cast<std::size_t>(k)] == 0) ++k;
  return k;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rat> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Poly operator-(Poly a) {
  for (auto& c : a.c_) c = -c;
  return a;
}

std::string Poly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rat mag = neg ? Rat(-c) : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << format_rat(mag);
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

PolyDivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Rat> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Rat inv = 1 / b.lead();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rat q = rem[static_cast<std::size_t>(k + db)] * inv;
    quo[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

bool divides(const Poly& d, const Poly& p) {
  if (d.is_zero()) return p.is_zero();
  return (p % d).is_zero();
}

Poly power(const Poly& base, int e) {
  if (e < 0) throw DomainError("negative polynomial exponent");
  Poly out = Poly::constant(Rat(1));
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

Poly gcd(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero()) throw DomainError("gcd of two zero polynomials");
  Poly a = p.monic();
  Poly b = q.monic();
  while (!b.is_zero()) {
    Poly r = (a % b).monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly lcm(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) throw DomainError("lcm with the zero polynomial");
  return (p * q / gcd(p, q)).monic();
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw DomainError("squarefree part of the zero polynomial");
  if (p.is_constant()) return Poly::constant(Rat(1));
  return (p / gcd(p, p.derivative())).monic();
}

bool is_squarefree(const Poly& p) {
  if (p.is_zero()) throw DomainError("squarefree test of the zero polynomial");
  if (p.is_constant()) return true;
  return gcd(p, p.derivative()).is_constant();
}

std::vector<Poly> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
  std::vector<Poly> parts;
  if (p.is_constant()) return parts;
  const Poly f = p.monic();
  Poly c = gcd(f, f.derivative());
  Poly w = f / c;
  while (!w.is_constant()) {
    Poly y = gcd(w, c);
    parts.push_back((w / y).monic());
    w = y;
    c = c / y;
  }
  return parts;
}

namespace {

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    Poly r = -(chain[chain.size() - 2] % chain.back());
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

int changes_at(const std::vector<Poly>& chain, const Rat& at) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const auto& q : chain) s.push_back(sgn(q.eval(at)));
  return sign_changes(s);
}

int changes_at_infinity(const std::vector<Poly>& chain, bool positive) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const auto& q : chain) {
    int v = sgn(q.lead());
    if (!positive && q.degree() % 2 == 1) v = -v;
    s.push_back(v);
  }
  return sign_changes(s);
}

// Distinct integer roots of a squarefree polynomial whose real roots are all
// inside (-bound, bound). Bisection on integer endpoints; each half-open
// interval (lo, hi] is counted by Sturm sign changes.
void integer_roots(const std::vector<Poly>& chain, const Poly& p, const Int& lo, const Int& hi,
                   int count, std::vector<Int>& out) {
  if (count == 0) return;
  if (hi - lo == 1) {
    if (p.eval(Rat(hi)) == 0) out.push_back(hi);
    return;
  }
  Int mid = lo + (hi - lo) / 2;
  const int left = changes_at(chain, Rat(lo)) - changes_at(chain, Rat(mid));
  integer_roots(chain, p, lo, mid, left, out);
  integer_roots(chain, p, mid, hi, count - left, out);
}

}  // namespace

int sturm_real_root_count(const Poly& p) {
  if (p.is_zero()) throw DomainError("Sturm count of the zero polynomial");
  if (!is_squarefree(p)) throw DomainError("Sturm count requires a squarefree polynomial");
  if (p.is_constant()) return 0;
  const auto chain = sturm_chain(p);
  return changes_at_infinity(chain, false) - changes_at_infinity(chain, true);
}

std::vector<Rat> rational_roots(const Poly& p) {
  if (p.is_zero()) throw DomainError("rational roots of the zero polynomial");
  std::vector<Rat> roots;
  if (p.is_constant()) return roots;

  const Poly s = squarefree_part(p);
  // Scale to an integer polynomial F, then substitute x = y / lc(F) so that
  // G(y) = lc^(n-1) F(y / lc) is monic with integer coefficients; rational
  // roots of F correspond to integer roots of G.
  Int den_lcm(1);
  for (const auto& c : s.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Int> f;
  for (const auto& c : s.coeffs()) f.push_back(Int(c * den_lcm));
  const int n = s.degree();
  const Int lc = f.back();
  std::vector<Rat> g(static_cast<std::size_t>(n) + 1);
  Int power(1);
  for (int i = n - 1; i >= 0; --i) {
    g[static_cast<std::size_t>(i)] = Rat(f[static_cast<std::size_t>(i)] * power);
    power *= lc;
  }
  g[static_cast<std::size_t>(n)] = 1;
  const Poly gp(std::move(g));

  Int bound(0);
  for (int i = 0; i < n; ++i) {
    Int a = abs(gp.coeff(i).get_num());
    if (a > bound) bound = a;
  }
  bound += 1;

  const auto chain = sturm_chain(gp);
  const Int lo = -bound - 1;
  const int total = changes_at(chain, Rat(lo)) - changes_at(chain, Rat(bound));
  std::vector<Int> ints;
  integer_roots(chain, gp, lo, bound, total, ints);

  for (const Int& y : ints) {
    Rat r(y, lc);
    r.canonicalize();
    // multiplicity in the original polynomial
    Poly q = p;
    const Poly lin{-r, Rat(1)};
    for (;;) {
      auto dm = divmod(q, lin);
      if (!dm.remainder.is_zero()) break;
      roots.push_back(r);
      q = std::move(dm.quotient);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool splits_distinct_linear(const Poly& p, Field field) {
  if (p.is_zero()) throw DomainError("splitting test of the zero polynomial");
  if (p.is_constant()) return true;
  if (!is_squarefree(p)) return false;
  switch (field) {
    case Field::C: return true;
    case Field::R: return sturm_real_root_count(p) == p.degree();
    case Field::Q: return static_cast<int>(rational_roots(p).size()) == p.degree();
  }
  return false;
}

}  // namespace pencil
