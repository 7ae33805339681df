#pragma once

#include <string>
#include <vector>

#include "pencil/normal_forms.hpp"
#include "pencil/pencil.hpp"

namespace pencil {

/// Block kinds of the canonical form. Companion and Shifted are the
/// factoring-free stand-ins for regular blocks with irrational data:
/// Companion realizes an elementary divisor h as (-companion(h); E), and
/// Shifted realizes an invariant factor f of M = (A + dB)^-1 B as
/// (E - d companion(f); companion(f)).
enum class BlockKind { A, B, C, D, E, F, Companion, Shifted };

std::string to_string(BlockKind k);

struct BlockDescriptor {
  BlockKind kind = BlockKind::A;
  int k = 0;   // size parameter; rows for kind A
  int l = 0;   // columns for kind A
  Rat alpha;   // B: (alpha E + J; E)
  Rat c;       // C: (C_k(c, s) + J_k (x) E_2; E_2k)
  Rat s;
  Poly poly;   // Companion: elementary divisor, Shifted: factor of M
  Rat shift;   // Shifted: d

  static BlockDescriptor zero(int rows, int cols);
  static BlockDescriptor jordan(int k, const Rat& alpha);
  static BlockDescriptor rotation(int k, const Rat& c, const Rat& s);
  static BlockDescriptor infinite(int k);
  static BlockDescriptor column(int k);
  static BlockDescriptor row(int k);
  static BlockDescriptor companion(const Poly& h);
  static BlockDescriptor shifted(const Poly& f, const Rat& d);

  [[nodiscard]] int rows() const;
  [[nodiscard]] int cols() const;
  [[nodiscard]] bool is_regular() const;
  friend bool operator==(const BlockDescriptor&, const BlockDescriptor&) = default;
};

/// Canonical sub-pencil of one block.
Pencil2 block_pencil(const BlockDescriptor& d);

/// Invariants of a pencil up to two-sided equivalence. Finite factors are the
/// nonconstant invariant factors of A + xB restricted to the regular part.
struct KroneckerStructure {
  int m = 0;
  int n = 0;
  int m_A = 0;
  int n_A = 0;
  std::vector<int> eps;          // E block sizes, descending
  std::vector<int> eta;          // F block sizes, descending
  std::vector<int> inf_degrees;  // D block sizes, descending
  InvariantFactors finite_factors;

  [[nodiscard]] int ell_E() const { return static_cast<int>(eps.size()); }
  [[nodiscard]] int ell_F() const { return static_cast<int>(eta.size()); }
  [[nodiscard]] int m_E() const;
  [[nodiscard]] int n_F() const;
  [[nodiscard]] int regular_size() const;
  /// Dimension bookkeeping and normalization (sorted lists, positive sizes,
  /// monic divisibility chain).
  [[nodiscard]] bool consistent() const;
  friend bool operator==(const KroneckerStructure&, const KroneckerStructure&) = default;
};

std::string to_string(const KroneckerStructure& s);

/// Regular part data. n_mat = a_reg + d b_reg is nonsingular and
/// m_mat = n_mat^-1 b_reg.
struct RegularReduction {
  Rat d;
  RatMatrix a_reg;
  RatMatrix b_reg;
  RatMatrix n_mat;
  RatMatrix m_mat;
};

/// Reduction to block form. Rows of `reduced` are laid out as
/// [zero | regular | E blocks | F blocks], columns likewise, E and F blocks
/// in descending size and in canonical form.
struct KroneckerDecomposition {
  KroneckerStructure structure;
  RegularReduction regular;
  RatMatrix p;
  RatMatrix q;
  Pencil2 reduced;  // p * T * q
  bool decoupled = true;
};

/// With decouple = false the off-diagonal coupling blocks are left in place
/// (block upper triangular in the order E, regular, F); the invariants are
/// the same and noticeably cheaper to obtain.
KroneckerDecomposition kronecker_decomposition(const Pencil2& t, bool decouple = true);
KroneckerStructure kronecker_structure(const Pencil2& t);

/// Maps an invariant factor of M to the finite elementary factor of the
/// regular pencil in the A + xB convention (constant if none).
Poly finite_factor_from_m(const Poly& f, const Rat& d);

struct BlockDiagonalForm {
  RatMatrix p;
  RatMatrix q;
  std::vector<BlockDescriptor> blocks;
  std::vector<Pencil2> sub_pencils;
  std::vector<int> row_offsets;
  std::vector<int> col_offsets;
  Rat d;
};

/// Exact block diagonalization: zero block, one Shifted block per
/// nonconstant invariant factor of M, then E and F blocks.
BlockDiagonalForm block_diagonalize(const Pencil2& t);

/// Structure of a direct sum of the given blocks, computed from the block
/// data alone.
KroneckerStructure structure_of(const std::vector<BlockDescriptor>& blocks);

/// Canonical block list: A, B (by eigenvalue, then size), C, Companion, D,
/// E, F, each by descending size.
std::vector<BlockDescriptor> canonical_blocks(const KroneckerStructure& s);
void sort_canonical(std::vector<BlockDescriptor>& blocks);

Pencil2 canonical_tensor(const KroneckerStructure& s);
/// Direct sum of the blocks after sorting them into canonical order.
Pencil2 canonical_tensor(std::vector<BlockDescriptor> blocks);

/// Shape mismatch gives false.
bool pencils_equivalent(const Pencil2& x, const Pencil2& y);

}  // namespace pencil
