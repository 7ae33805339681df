#include "pencil/correction.hpp"

#include <algorithm>

namespace pencil {

std::string to_string(BudgetMode m) {
  return m == BudgetMode::minimal ? "minimal" : "floor-n-half";
}

RatMatrix companion_correction(const Poly& p_bad, const std::vector<Rat>& target_roots) {
  const int k = p_bad.degree();
  if (k < 1 || p_bad.lead() != 1) throw DomainError("companion correction needs a monic nonconstant polynomial");
  if (static_cast<int>(target_roots.size()) != k) throw DomainError("need one target root per degree");
  auto sorted = target_roots;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("target roots must be distinct");
  }
  const Poly g = Poly::from_roots(target_roots);
  RatMatrix n(k, k);
  for (int i = 0; i < k; ++i) n(i, k - 1) = g.coeff(i) - p_bad.coeff(i);
  return n;
}

BlockCorrection ef_correction(const BlockDescriptor& block, const std::vector<Rat>& s) {
  if (block.kind != BlockKind::E && block.kind != BlockKind::F) throw DomainError("ef_correction needs an E or F block");
  const int k = block.k;
  if (k < 1 || static_cast<int>(s.size()) != k) throw DomainError("ef_correction needs k >= 1 values");
  auto sorted = s;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
      std::find(sorted.begin(), sorted.end(), Rat(0)) != sorted.end()) {
    throw DomainError("ef_correction values must be distinct and nonzero");
  }
  const Poly g = Poly::from_roots(s);
  RatVector row(static_cast<std::size_t>(k + 1));
  for (int j = 0; j < k; ++j) row[static_cast<std::size_t>(j)] = g.coeff(j);
  row[static_cast<std::size_t>(k)] = 1;
  RatVector last(static_cast<std::size_t>(k));
  last[static_cast<std::size_t>(k - 1)] = 1;
  BlockCorrection out;
  out.term.w0 = -1;
  out.term.w1 = 0;
  if (block.kind == BlockKind::E) {
    out.term.u = last;
    out.term.v = row;
  } else {
    out.term.u = row;
    out.term.v = last;
  }
  out.corrected = block_pencil(block) + out.term.tensor();
  return out;
}

BlockCorrection pair_correction_L1L1(const Pencil2& pair) {
  const Pencil2 expect = direct_sum(block_pencil(BlockDescriptor::column(1)), block_pencil(BlockDescriptor::row(1)));
  if (!(pair == expect)) throw DomainError("pair correction needs exactly Diag(L_1, L_1^T)");
  BlockCorrection out;
  out.term.u = {Rat(0), Rat(1), Rat(0)};
  out.term.v = {Rat(1), Rat(1), Rat(0)};
  out.term.w0 = 1;
  out.term.w1 = 1;
  out.corrected = pair + out.term.tensor();
  return out;
}

DiagonalizabilityCertificate certify_diagonalizable(const Pencil2& t, Field field) {
  DiagonalizabilityCertificate c;
  const KroneckerDecomposition kd = kronecker_decomposition(t, false);
  c.corrected_structure = kd.structure;
  bool all_split = true;
  for (const auto& f : similarity_invariants(kd.regular.m_mat).factors) {
    SplitEvidence e;
    e.factor = f;
    e.squarefree = is_squarefree(f);
    if (field == Field::R && e.squarefree) e.real_roots = sturm_real_root_count(f);
    if (field == Field::Q) e.rational_roots = static_cast<int>(rational_roots(f).size());
    e.splits = splits_distinct_linear(f, field);
    all_split = all_split && e.splits;
    c.factors.push_back(std::move(e));
  }
  c.block_minimal_lcm = Poly::constant(Rat(1));
  if (kd.structure.ell_E() == 0 && kd.structure.ell_F() == 0) {
    for (const auto& b : block_diagonalize(t).blocks)
      if (b.kind == BlockKind::Shifted) c.block_minimal_lcm = lcm(c.block_minimal_lcm, b.poly);
  }
  c.lcm_squarefree = is_squarefree(c.block_minimal_lcm);
  c.diagonalizable = c.corrected_structure.ell_E() == 0 && c.corrected_structure.ell_F() == 0 && all_split &&
                     c.lcm_squarefree && splits_distinct_linear(c.block_minimal_lcm, field);
  return c;
}

namespace {

RatVector unit(int n, int i) {
  RatVector v(static_cast<std::size_t>(n));
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

RatVector embed(int n, int offset, const RatVector& part) {
  RatVector v(static_cast<std::size_t>(n));
  std::copy(part.begin(), part.end(), v.begin() + offset);
  return v;
}

std::vector<Rat> first_integers(int k, int from) {
  std::vector<Rat> out;
  for (int i = 0; i < k; ++i) out.emplace_back(from + i);
  return out;
}

}  // namespace

CorrectionPlan diagonalizing_correction(const Pencil2& t, Field field, BudgetMode mode) {
  const int m = t.m();
  const int n = t.n();
  const BlockDiagonalForm bd = block_diagonalize(t);
  std::vector<Rank1Term> local;  // in block coordinates
  std::vector<std::size_t> e_idx;
  std::vector<std::size_t> f_idx;
  for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
    const auto& b = bd.blocks[i];
    if (b.kind == BlockKind::E) e_idx.push_back(i);
    if (b.kind == BlockKind::F) f_idx.push_back(i);
    if (b.kind != BlockKind::Shifted || splits_distinct_linear(b.poly, field)) continue;
    const RatMatrix nm = companion_correction(b.poly, first_integers(b.k, 0));
    Rank1Term term;
    term.u = embed(m, bd.row_offsets[i], column_of(nm, b.k - 1));
    term.v = unit(n, bd.col_offsets[i] + b.k - 1);
    term.w0 = bd.d;
    term.w1 = -1;
    local.push_back(std::move(term));
  }
  std::vector<bool> done(bd.blocks.size(), false);
  int pairs = 0;
  if (mode == BudgetMode::floor_n_half) {
    for (std::size_t j = 0; j < std::min(e_idx.size(), f_idx.size()); ++j) {
      const std::size_t ei = e_idx[j];
      const std::size_t fi = f_idx[j];
      if (bd.blocks[ei].k != 1 || bd.blocks[fi].k != 1) continue;
      Rank1Term term;
      term.u = unit(m, bd.row_offsets[fi]);
      term.v = unit(n, bd.col_offsets[ei]);
      term.v[static_cast<std::size_t>(bd.col_offsets[ei] + 1)] = 1;
      term.w0 = 1;
      term.w1 = 1;
      local.push_back(std::move(term));
      done[ei] = done[fi] = true;
      ++pairs;
    }
  }
  for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
    const auto& b = bd.blocks[i];
    if (done[i] || (b.kind != BlockKind::E && b.kind != BlockKind::F)) continue;
    const BlockCorrection bc = ef_correction(b, first_integers(b.k, 1));
    Rank1Term term = bc.term;
    term.u = embed(m, bd.row_offsets[i], term.u);
    term.v = embed(n, bd.col_offsets[i], term.v);
    local.push_back(std::move(term));
  }

  const RatMatrix pinv = inverse(bd.p);
  const RatMatrix qinv_t = inverse(bd.q).transpose();
  CorrectionPlan plan;
  plan.mode = mode;
  plan.field = field;
  plan.pairs = pairs;
  for (const auto& lt : local) {
    Rank1Term g;
    g.u = mat_vec(pinv, lt.u);
    g.v = mat_vec(qinv_t, lt.v);
    g.w0 = lt.w0;
    g.w1 = lt.w1;
    plan.terms.push_back(std::move(g));
  }
  plan.corrected = t + sum_of_terms(m, n, plan.terms);
  if (!(plan.corrected.transformed(bd.p, bd.q) == direct_sum(bd.sub_pencils) + sum_of_terms(m, n, local))) {
    throw InternalError("pulled-back correction does not match the block coordinates");
  }
  plan.certificate = certify_diagonalizable(plan.corrected, field);
  if (!plan.certificate.diagonalizable) throw InternalError("corrected pencil is not diagonalizable");
  const auto& cs = plan.certificate.corrected_structure;
  plan.corrected_rank = cs.m - cs.m_A;
  const KroneckerStructure before = structure_of(bd.blocks);
  const int base = m - before.m_A - before.ell_F();
  if (plan.corrected_rank != base + pairs) throw InternalError("corrected rank differs from the expected count");
  return plan;
}

}  // namespace pencil
