#pragma once

#include <optional>

#include "pencil/kronecker.hpp"
#include "pencil/witness.hpp"

namespace pencil {

struct RankComponents {
  int m_A = 0;
  int n_A = 0;
  int ell_E = 0;
  int ell_F = 0;
  int p = 0;
};

struct RankReport {
  Field field = Field::C;
  int rank = 0;
  int alpha = 0;
  RankComponents components;
  int max_rank = 0;
  bool is_max_rank = false;
  std::optional<MaxRankForm> classification;
};

/// Number of invariant factors of M = (A + dB)^-1 B that are not products of
/// distinct linear factors over the field.
int alpha_count(const InvariantFactors& m_factors, Field field);

/// Same count read off a structure: the i-th largest invariant factor of M
/// combines the i-th largest infinite degree with the i-th largest finite
/// factor, so no shift is needed.
int alpha_count(const KroneckerStructure& s, Field field);

/// rank of (E_n; A) = n + alpha.
int unit_pencil_rank(const RatMatrix& a, Field field);

/// Over Q only pencils without E/F blocks are in scope (ScopeError otherwise).
RankReport tensor_rank(const Pencil2& t, Field field);
RankReport rank_from_structure(const KroneckerStructure& s, Field field);

int max_rank(int m, int n);

enum class BorderRankReason { all_real_eigenvalues, nonreal_eigenvalue_present, complex_field };
std::string to_string(BorderRankReason r);

struct BorderRankReport {
  Field field = Field::C;
  int value = 0;
  BorderRankReason reason = BorderRankReason::complex_field;
};

/// Square pencils with some A + dB nonsingular only (ScopeError otherwise).
BorderRankReport border_rank(const Pencil2& t, Field field);

bool is_diagonalizable(const KroneckerStructure& s, Field field);
bool is_diagonalizable(const Pencil2& t, Field field);

/// Structural predicate for one listed form (up to equivalence).
bool matches_form(const KroneckerStructure& s, MaxRankForm form, Field field);

/// Tag of a maximal-rank tensor with m <= n <= 2m, decided from the counts
/// n_A, n_F, m_E - ell_E and p - 2 alpha; ties among iii-vi go to the first
/// listed match. None when out of range or not of maximal rank.
std::optional<MaxRankForm> classify_structure(const KroneckerStructure& s, Field field);
std::optional<MaxRankForm> classify_max_rank(const Pencil2& t, Field field);

}  // namespace pencil
