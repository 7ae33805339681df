#pragma once

#include <vector>

#include "pencil/matrix.hpp"
#include "pencil/poly.hpp"

namespace pencil {

/// Monic invariant factors e_1 | e_2 | ... (Smith-diagonal order).
struct InvariantFactors {
  std::vector<Poly> factors;

  /// Reverse-divisibility order p_1, p_2, ... with p_i = e_{n-i+1}.
  [[nodiscard]] std::vector<Poly> largest_first() const {
    return {factors.rbegin(), factors.rend()};
  }
  [[nodiscard]] Poly product() const;
  [[nodiscard]] int total_degree() const;
  [[nodiscard]] bool divisibility_chain_holds() const;
  /// Same list with constant factors removed.
  [[nodiscard]] InvariantFactors nontrivial() const;
  friend bool operator==(const InvariantFactors&, const InvariantFactors&) = default;
};

struct SmithResult {
  InvariantFactors diagonal;  // min(rows, cols) entries, units and zeros included
  PolyMatrix left;            // left * input * right = diag(...)
  PolyMatrix right;
  PolyMatrix left_inverse;
};

/// Smith normal form over Q[x]. Pivots on a minimal-degree nonzero entry,
/// ties broken row-major. Transforms are tracked only when requested.
SmithResult smith_form(const PolyMatrix& p, bool track_transforms = true);

/// x E - m.
PolyMatrix characteristic_matrix(const RatMatrix& m);
/// a + x b.
PolyMatrix linear_pencil(const RatMatrix& a, const RatMatrix& b);
Poly poly_determinant(const PolyMatrix& p);

struct FrobeniusResult {
  InvariantFactors factors;  // nonconstant invariant factors of x E - m
  RatMatrix transform;       // transform * m * transform^-1 = companion_sum(factors)
  RatMatrix transform_inverse;
};

/// Rational canonical form. Generators of the cyclic summands come from the
/// inverse left Smith transform of x E - m.
FrobeniusResult frobenius_form(const RatMatrix& m);

/// Nonconstant invariant factors of x E - m (no transforms).
InvariantFactors similarity_invariants(const RatMatrix& m);

bool matrices_similar(const RatMatrix& a, const RatMatrix& b);

/// Roots of `base` (squarefree, pairwise coprime across clusters) all carry
/// the same Jordan partition, listed in descending block size.
struct EigenCluster {
  Poly base;
  std::vector<int> partition;
  friend bool operator==(const EigenCluster&, const EigenCluster&) = default;
};

/// Primary structure of a chain of invariant factors without factoring:
/// a gcd-free refinement of the factors' squarefree decompositions.
std::vector<EigenCluster> eigen_clusters(const InvariantFactors& f);

/// Squarefree, monic, pairwise coprime polynomials such that every nonzero
/// input is a scalar times a product of their powers. Sorted by poly_less.
std::vector<Poly> coprime_base(const std::vector<Poly>& polys);

/// Largest e with base^e dividing p (p nonzero, base nonconstant).
int multiplicity(const Poly& base, Poly p);

/// Nonconstant invariant factors of diag(entries), entries nonzero.
InvariantFactors invariant_chain(const std::vector<Poly>& entries);

/// Lexicographic order on (degree, coefficients) used to sort polynomial lists.
bool poly_less(const Poly& a, const Poly& b);

}  // namespace pencil
