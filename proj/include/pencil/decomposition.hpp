#pragma once

#include <complex>
#include <vector>

#include "pencil/correction.hpp"

namespace pencil {

using Complex = std::complex<double>;

struct NumericTerm {
  std::vector<Complex> u;
  std::vector<Complex> v;
  Complex w0;
  Complex w1;
};

enum class DecompositionMode { exact, numeric };
std::string to_string(DecompositionMode m);

/// T as a sum of rank-1 terms: the diagonal terms of the corrected pencil
/// followed by the negated correction terms.
struct Decomposition {
  Field field = Field::C;
  DecompositionMode mode = DecompositionMode::exact;
  int m = 0;
  int n = 0;
  int rank = 0;              // tensor_rank over the field
  int diagonal_terms = 0;
  int correction_terms = 0;
  std::vector<Rank1Term> exact_terms;      // exact mode
  std::vector<NumericTerm> numeric_terms;  // numeric mode
  [[nodiscard]] std::size_t size() const {
    return mode == DecompositionMode::exact ? exact_terms.size() : numeric_terms.size();
  }
};

Decomposition decompose(const Pencil2& t, Field field);

struct VerificationReport {
  bool ok = false;
  double residual = 0;  // max-entry error relative to max(1, max |T|)
  bool count_matches = false;
  bool terms_nonzero = false;
  bool real_terms = true;  // field R only
};

VerificationReport verify_decomposition(const Pencil2& t, const Decomposition& d, double tol = 1e-9);

/// Roots of a squarefree polynomial in double precision (companion
/// eigenvalues polished by Newton steps), sorted by real then imaginary part.
std::vector<Complex> numeric_roots(const Poly& f);

}  // namespace pencil
