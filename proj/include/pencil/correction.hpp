#pragma once

#include <vector>

#include "pencil/kronecker.hpp"
#include "pencil/rank.hpp"

namespace pencil {

/// Splitting evidence for one invariant factor of the corrected M.
struct SplitEvidence {
  Poly factor;
  bool squarefree = false;
  int real_roots = -1;      // Sturm count, only for field R
  int rational_roots = -1;  // only for field Q
  bool splits = false;
};

struct DiagonalizabilityCertificate {
  KroneckerStructure corrected_structure;
  std::vector<SplitEvidence> factors;
  Poly block_minimal_lcm;  // lcm of the minimal polynomials of the regular blocks
  bool lcm_squarefree = false;
  bool diagonalizable = false;
};

enum class BudgetMode { minimal, floor_n_half };
std::string to_string(BudgetMode m);

struct CorrectionPlan {
  std::vector<Rank1Term> terms;
  Pencil2 corrected;
  DiagonalizabilityCertificate certificate;
  BudgetMode mode = BudgetMode::minimal;
  Field field = Field::C;
  int corrected_rank = 0;
  int pairs = 0;  // L1 + L1^T pairs fixed by a single term
};

/// N with companion(p_bad) - N = companion(prod (x - r_i)); only the last
/// column is nonzero.
RatMatrix companion_correction(const Poly& p_bad, const std::vector<Rat>& target_roots);

struct BlockCorrection {
  Rank1Term term;
  Pencil2 corrected;
};

/// Rank-1 correction of an E (or F) block touching slice A only; the
/// corrected block is equivalent to ((Diag(s), 0); (E_k, 0)) (or its
/// transpose).
BlockCorrection ef_correction(const BlockDescriptor& block, const std::vector<Rat>& s);

/// One term (M; M) for Diag(L_1, L_1^T); the corrected 3x3 pencil has
/// eigenvalues 1, -1, 0.
BlockCorrection pair_correction_L1L1(const Pencil2& pair);

/// Rank-1 terms making t diagonalizable. Minimal mode uses alpha + ell_E +
/// ell_F terms; floor_n_half pairs E and F blocks (largest first).
CorrectionPlan diagonalizing_correction(const Pencil2& t, Field field, BudgetMode mode = BudgetMode::minimal);

DiagonalizabilityCertificate certify_diagonalizable(const Pencil2& t, Field field);

}  // namespace pencil
