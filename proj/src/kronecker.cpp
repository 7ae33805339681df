#include "pencil/kronecker.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pencil {

std::string to_string(BlockKind k) {
  switch (k) {
    case BlockKind::A: return "A";
    case BlockKind::B: return "B";
    case BlockKind::C: return "C";
    case BlockKind::D: return "D";
    case BlockKind::E: return "E";
    case BlockKind::F: return "F";
    case BlockKind::Companion: return "companion";
    case BlockKind::Shifted: return "shifted";
  }
  return "?";
}

BlockDescriptor BlockDescriptor::zero(int rows, int cols) {
  BlockDescriptor d;
  d.kind = BlockKind::A;
  d.k = rows;
  d.l = cols;
  return d;
}

BlockDescriptor BlockDescriptor::jordan(int k, const Rat& alpha) {
  BlockDescriptor d;
  d.kind = BlockKind::B;
  d.k = k;
  d.alpha = alpha;
  return d;
}

BlockDescriptor BlockDescriptor::rotation(int k, const Rat& c, const Rat& s) {
  if (s == 0) throw DomainError("rotation block needs s != 0");
  BlockDescriptor d;
  d.kind = BlockKind::C;
  d.k = k;
  d.c = c;
  d.s = s;
  return d;
}

BlockDescriptor BlockDescriptor::infinite(int k) {
  BlockDescriptor d;
  d.kind = BlockKind::D;
  d.k = k;
  return d;
}

BlockDescriptor BlockDescriptor::column(int k) {
  BlockDescriptor d;
  d.kind = BlockKind::E;
  d.k = k;
  return d;
}

BlockDescriptor BlockDescriptor::row(int k) {
  BlockDescriptor d;
  d.kind = BlockKind::F;
  d.k = k;
  return d;
}

BlockDescriptor BlockDescriptor::companion(const Poly& h) {
  if (h.is_constant() || h.lead() != 1) throw DomainError("companion block needs a monic nonconstant polynomial");
  BlockDescriptor d;
  d.kind = BlockKind::Companion;
  d.k = h.degree();
  d.poly = h;
  return d;
}

BlockDescriptor BlockDescriptor::shifted(const Poly& f, const Rat& shift) {
  if (f.is_constant() || f.lead() != 1) throw DomainError("shifted block needs a monic nonconstant polynomial");
  BlockDescriptor d;
  d.kind = BlockKind::Shifted;
  d.k = f.degree();
  d.poly = f;
  d.shift = shift;
  return d;
}

int BlockDescriptor::rows() const {
  switch (kind) {
    case BlockKind::A: return k;
    case BlockKind::C: return 2 * k;
    case BlockKind::F: return k + 1;
    default: return k;
  }
}

int BlockDescriptor::cols() const {
  switch (kind) {
    case BlockKind::A: return l;
    case BlockKind::C: return 2 * k;
    case BlockKind::E: return k + 1;
    default: return k;
  }
}

bool BlockDescriptor::is_regular() const {
  return kind != BlockKind::A && kind != BlockKind::E && kind != BlockKind::F;
}

Pencil2 block_pencil(const BlockDescriptor& d) {
  const int k = d.k;
  if (k < 0 || d.l < 0) throw DomainError("negative block size");
  switch (d.kind) {
    case BlockKind::A:
      return Pencil2::zero(d.k, d.l);
    case BlockKind::B: {
      RatMatrix a = RatMatrix::identity(k) * d.alpha + jordan_nilpotent(k);
      return {a, RatMatrix::identity(k)};
    }
    case BlockKind::C: {
      RatMatrix a(2 * k, 2 * k);
      for (int i = 0; i < k; ++i) {
        a(2 * i, 2 * i) = d.c;
        a(2 * i, 2 * i + 1) = -d.s;
        a(2 * i + 1, 2 * i) = d.s;
        a(2 * i + 1, 2 * i + 1) = d.c;
        if (i + 1 < k) {
          a(2 * i, 2 * i + 2) = 1;
          a(2 * i + 1, 2 * i + 3) = 1;
        }
      }
      return {a, RatMatrix::identity(2 * k)};
    }
    case BlockKind::D:
      return {RatMatrix::identity(k), jordan_nilpotent(k)};
    case BlockKind::E: {
      RatMatrix a(k, k + 1);
      RatMatrix b(k, k + 1);
      for (int i = 0; i < k; ++i) {
        a(i, i + 1) = 1;
        b(i, i) = 1;
      }
      return {a, b};
    }
    case BlockKind::F:
      return block_pencil(BlockDescriptor::column(k)).transpose();
    case BlockKind::Companion:
      return {-companion(d.poly), RatMatrix::identity(k)};
    case BlockKind::Shifted: {
      const RatMatrix c = companion(d.poly);
      return {RatMatrix::identity(k) - c * d.shift, c};
    }
  }
  throw InternalError("unknown block kind");
}

int KroneckerStructure::m_E() const { return std::accumulate(eps.begin(), eps.end(), 0); }
int KroneckerStructure::n_F() const { return std::accumulate(eta.begin(), eta.end(), 0); }

int KroneckerStructure::regular_size() const {
  return std::accumulate(inf_degrees.begin(), inf_degrees.end(), 0) + finite_factors.total_degree();
}

bool KroneckerStructure::consistent() const {
  auto desc_positive = [](const std::vector<int>& v) {
    return std::is_sorted(v.rbegin(), v.rend()) &&
           std::all_of(v.begin(), v.end(), [](int x) { return x >= 1; });
  };
  if (m_A < 0 || n_A < 0) return false;
  if (!desc_positive(eps) || !desc_positive(eta) || !desc_positive(inf_degrees)) return false;
  for (const auto& f : finite_factors.factors)
    if (f.is_constant() || f.lead() != 1) return false;
  if (!finite_factors.divisibility_chain_holds()) return false;
  const int p = regular_size();
  return m == m_A + m_E() + n_F() + ell_F() + p && n == n_A + m_E() + ell_E() + n_F() + p;
}

std::string to_string(const KroneckerStructure& s) {
  std::ostringstream os;
  auto list = [&os](const std::vector<int>& v) {
    os << '{';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << '}';
  };
  os << s.m << 'x' << s.n << " m_A=" << s.m_A << " n_A=" << s.n_A << " eps=";
  list(s.eps);
  os << " eta=";
  list(s.eta);
  os << " inf=";
  list(s.inf_degrees);
  os << " finite={";
  for (std::size_t i = 0; i < s.finite_factors.factors.size(); ++i)
    os << (i ? "," : "") << s.finite_factors.factors[i].to_string();
  os << '}';
  return os.str();
}

Poly finite_factor_from_m(const Poly& f, const Rat& d) {
  const int a = f.x_valuation();
  std::vector<Rat> g(f.coeffs().begin() + a, f.coeffs().end());
  const int deg = static_cast<int>(g.size()) - 1;
  std::vector<Rat> q(g.size());
  for (int j = 0; j <= deg; ++j) {
    Rat c = g[static_cast<std::size_t>(j)];
    if ((deg - j) % 2 != 0) c = -c;
    q[static_cast<std::size_t>(deg - j)] = c;
  }
  return Poly(std::move(q)).taylor_shift(-d).monic();
}

namespace {

RatMatrix toeplitz(const Pencil2& t, int k) {
  const int m = t.m();
  const int n = t.n();
  RatMatrix out((k + 2) * m, (k + 1) * n);
  for (int j = 0; j <= k; ++j) {
    out.set_block(j * m, j * n, t.a());
    out.set_block((j + 1) * m, j * n, t.b());
  }
  return out;
}

struct KernelVector {
  int degree;
  RatVector coeffs;  // (degree + 1) * n, lowest degree first
};

// Minimal polynomial basis of the right kernel of A + xB, found degree by
// degree: at each k, kernel vectors of the block Toeplitz matrix that are
// not combinations of shifts of the vectors already chosen.
std::vector<KernelVector> minimal_kernel_basis(const Pencil2& t) {
  const int n = t.n();
  const int need = n - normal_rank(t);
  std::vector<KernelVector> found;
  for (int k = 0; static_cast<int>(found.size()) < need; ++k) {
    if (k > t.m()) throw InternalError("minimal index search exceeded its bound");
    const RatMatrix ker = kernel_basis(toeplitz(t, k));
    const int len = (k + 1) * n;
    std::vector<RatVector> span;
    for (const auto& f : found)
      for (int s = 0; s + f.degree <= k; ++s) {
        RatVector c(static_cast<std::size_t>(len));
        std::copy(f.coeffs.begin(), f.coeffs.end(), c.begin() + s * n);
        span.push_back(std::move(c));
      }
    if (static_cast<int>(span.size()) == ker.cols()) continue;
    RatMatrix joint(len, static_cast<int>(span.size()) + ker.cols());
    for (std::size_t j = 0; j < span.size(); ++j)
      for (int i = 0; i < len; ++i) joint(i, static_cast<int>(j)) = span[j][static_cast<std::size_t>(i)];
    joint.set_block(0, static_cast<int>(span.size()), ker);
    const Rref r = rref(joint);
    for (int pc : r.pivots) {
      if (pc < static_cast<int>(span.size())) continue;
      found.push_back({k, column_of(joint, pc)});
    }
  }
  return found;
}

// Column chains: P T Q = [[0, E-blocks, X], [0, 0, R]] with columns
// [zero | chains | rest] and rows [chain rows | rest].
struct ColumnChains {
  int zero = 0;
  std::vector<int> eps;
  RatMatrix p;
  RatMatrix q;
  int chain_rows = 0;
  int chain_cols = 0;
};

ColumnChains column_chains(const Pencil2& t) {
  const int m = t.m();
  const int n = t.n();
  auto basis = minimal_kernel_basis(t);
  std::stable_sort(basis.begin(), basis.end(),
                   [](const KernelVector& x, const KernelVector& y) { return x.degree > y.degree; });
  ColumnChains out;
  RatMatrix qcols(n, 0);
  RatMatrix pcols(m, 0);
  for (const auto& v : basis)
    if (v.degree == 0) {
      qcols = hstack(qcols, column(v.coeffs));
      ++out.zero;
    }
  for (const auto& v : basis) {
    if (v.degree == 0) continue;
    out.eps.push_back(v.degree);
    for (int j = 0; j <= v.degree; ++j) {
      RatVector qj(v.coeffs.begin() + j * n, v.coeffs.begin() + (j + 1) * n);
      if (j % 2 != 0)
        for (auto& e : qj) e = -e;
      qcols = hstack(qcols, column(qj));
      if (j < v.degree) pcols = hstack(pcols, column(mat_vec(t.b(), qj)));
    }
  }
  out.chain_rows = pcols.cols();
  out.chain_cols = qcols.cols();
  out.q = complete_basis(qcols);
  out.p = inverse(complete_basis(pcols));
  return out;
}

RatMatrix row_permutation(const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  RatMatrix p(n, n);
  for (int i = 0; i < n; ++i) p(i, order[static_cast<std::size_t>(i)]) = 1;
  return p;
}

// Solves L_s V + U G_s = -X_s for s = A, B. Returns (U, V).
std::pair<RatMatrix, RatMatrix> coupled_sylvester(const Pencil2& l, const Pencil2& g, const Pencil2& x) {
  const int a = l.m();
  const int b = l.n();
  const int c = g.m();
  const int d = g.n();
  const int nv = b * d;
  const int nu = a * c;
  RatMatrix sys(2 * a * d, nv + nu);
  RatMatrix rhs(2 * a * d, 1);
  for (int s = 0; s < 2; ++s) {
    const RatMatrix& ls = s == 0 ? l.a() : l.b();
    const RatMatrix& gs = s == 0 ? g.a() : g.b();
    const RatMatrix& xs = s == 0 ? x.a() : x.b();
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < d; ++j) {
        const int row = s * a * d + i * d + j;
        for (int k = 0; k < b; ++k) sys(row, k * d + j) += ls(i, k);
        for (int k = 0; k < c; ++k) sys(row, nv + i * c + k) += gs(k, j);
        rhs(row, 0) = -xs(i, j);
      }
  }
  const auto sol = solve(sys, rhs);
  if (!sol) throw InternalError("coupling equations have no solution");
  RatMatrix v(b, d);
  RatMatrix u(a, c);
  for (int k = 0; k < b; ++k)
    for (int j = 0; j < d; ++j) v(k, j) = (*sol)(k * d + j, 0);
  for (int i = 0; i < a; ++i)
    for (int k = 0; k < c; ++k) u(i, k) = (*sol)(nv + i * c + k, 0);
  return {u, v};
}

// Clears the block (r0.., c0..) of size (r1 - r0) x (cols - c1) coupling the
// leading diagonal block [r0, r1) x [c0, c1) with the trailing block.
void decouple_split(Pencil2& t, RatMatrix& p, RatMatrix& q, int r0, int r1, int c0, int c1) {
  const int rows = t.m();
  const int cols = t.n();
  const Pencil2 lead = t.block(r0, c0, r1 - r0, c1 - c0);
  const Pencil2 trail = t.block(r1, c1, rows - r1, cols - c1);
  const Pencil2 coupling = t.block(r0, c1, r1 - r0, cols - c1);
  if (coupling.is_zero()) return;
  const auto [u, v] = coupled_sylvester(lead, trail, coupling);
  RatMatrix pl = RatMatrix::identity(rows);
  pl.set_block(r0, r1, u);
  RatMatrix qr = RatMatrix::identity(cols);
  qr.set_block(c0, c1, v);
  t = t.transformed(pl, qr);
  p = pl * p;
  q = q * qr;
}

KroneckerStructure structure_from_m(KroneckerStructure s, const RegularReduction& reg) {
  InvariantFactors mf = similarity_invariants(reg.m_mat);
  for (const auto& f : mf.factors) {
    const int a = f.x_valuation();
    if (a > 0) s.inf_degrees.push_back(a);
    const Poly g = finite_factor_from_m(f, reg.d);
    if (!g.is_constant()) s.finite_factors.factors.push_back(g);
  }
  std::sort(s.inf_degrees.rbegin(), s.inf_degrees.rend());
  return s;
}

}  // namespace

KroneckerDecomposition kronecker_decomposition(const Pencil2& t, bool decouple) {
  const int m = t.m();
  const int n = t.n();
  const ColumnChains c1 = column_chains(t);
  const Pencil2 t1 = t.transformed(c1.p, c1.q);
  const int er = c1.chain_rows;
  const int ec = c1.chain_cols;
  const Pencil2 rest = t1.block(er, ec, m - er, n - ec);
  const ColumnChains c2 = column_chains(rest.transpose());

  RatMatrix p = direct_sum(RatMatrix::identity(er), c2.q.transpose()) * c1.p;
  RatMatrix q = c1.q * direct_sum(RatMatrix::identity(ec), c2.p.transpose());

  // current rows: [E rows | zero rows | F rows | reg rows]
  // current cols: [zero cols | E cols | F cols | reg cols]
  const int z_rows = c2.zero;
  const int f_rows = c2.chain_cols - c2.zero;
  const int f_cols = c2.chain_rows;
  const int z_cols = c1.zero;
  const int e_cols = ec - z_cols;
  const int reg = m - er - z_rows - f_rows;
  if (reg != n - ec - f_cols || reg < 0) throw InternalError("regular part is not square");

  // reorder to rows [zero | E | reg | F], cols [zero | E | reg | F]
  std::vector<int> rord;
  for (int i = 0; i < z_rows; ++i) rord.push_back(er + i);
  for (int i = 0; i < er; ++i) rord.push_back(i);
  for (int i = 0; i < reg; ++i) rord.push_back(er + z_rows + f_rows + i);
  for (int i = 0; i < f_rows; ++i) rord.push_back(er + z_rows + i);
  std::vector<int> cord;
  for (int j = 0; j < ec; ++j) cord.push_back(j);
  for (int j = 0; j < reg; ++j) cord.push_back(ec + f_cols + j);
  for (int j = 0; j < f_cols; ++j) cord.push_back(ec + j);
  const RatMatrix pr = row_permutation(rord);
  const RatMatrix qc = row_permutation(cord).transpose();
  p = pr * p;
  q = q * qc;
  Pencil2 cur = t.transformed(p, q);

  const int r_e = z_rows;           // first E row
  const int r_reg = z_rows + er;    // first reg row
  const int r_f = r_reg + reg;      // first F row
  const int c_e = z_cols;
  const int c_reg = ec;
  const int c_f = ec + reg;

  if (decouple) {
    // regular vs F, then E vs (regular + F)
    decouple_split(cur, p, q, r_reg, r_f, c_reg, c_f);
    decouple_split(cur, p, q, r_e, r_reg, c_e, c_reg);
  }

  KroneckerDecomposition out;
  out.decoupled = decouple;
  KroneckerStructure s;
  s.m = m;
  s.n = n;
  s.m_A = z_rows;
  s.n_A = z_cols;
  s.eps = c1.eps;
  s.eta = c2.eps;

  RegularReduction rr;
  rr.a_reg = cur.a().block(r_reg, c_reg, reg, reg);
  rr.b_reg = cur.b().block(r_reg, c_reg, reg, reg);
  if (reg > 0) {
    for (int d = 0;; ++d) {
      if (d > reg) throw InternalError("regular block is singular for every shift");
      RatMatrix cand = rr.a_reg + rr.b_reg * Rat(d);
      if (determinant(cand) != 0) {
        rr.d = d;
        rr.n_mat = std::move(cand);
        break;
      }
    }
    rr.m_mat = inverse(rr.n_mat) * rr.b_reg;
  } else {
    rr.n_mat = RatMatrix(0, 0);
    rr.m_mat = RatMatrix(0, 0);
  }
  out.structure = structure_from_m(std::move(s), rr);
  out.regular = std::move(rr);

  // final layout [zero | reg | E | F]
  std::vector<int> rfin;
  for (int i = 0; i < z_rows; ++i) rfin.push_back(i);
  for (int i = 0; i < reg; ++i) rfin.push_back(r_reg + i);
  for (int i = 0; i < er; ++i) rfin.push_back(r_e + i);
  for (int i = 0; i < f_rows; ++i) rfin.push_back(r_f + i);
  std::vector<int> cfin;
  for (int j = 0; j < z_cols; ++j) cfin.push_back(j);
  for (int j = 0; j < reg; ++j) cfin.push_back(c_reg + j);
  for (int j = 0; j < e_cols; ++j) cfin.push_back(c_e + j);
  for (int j = 0; j < f_cols; ++j) cfin.push_back(c_f + j);
  p = row_permutation(rfin) * p;
  q = q * row_permutation(cfin).transpose();
  out.reduced = t.transformed(p, q);
  out.p = std::move(p);
  out.q = std::move(q);

  if (decouple) {
    std::vector<BlockDescriptor> expect_blocks;
    for (int k : out.structure.eps) expect_blocks.push_back(BlockDescriptor::column(k));
    for (int k : out.structure.eta) expect_blocks.push_back(BlockDescriptor::row(k));
    Pencil2 expect = direct_sum(Pencil2::zero(z_rows, z_cols),
                                Pencil2(out.regular.a_reg, out.regular.b_reg));
    for (const auto& b : expect_blocks) expect = direct_sum(expect, block_pencil(b));
    if (!(expect == out.reduced)) throw InternalError("reduction is not block diagonal");
  }
  return out;
}

KroneckerStructure kronecker_structure(const Pencil2& t) {
  return kronecker_decomposition(t, false).structure;
}

BlockDiagonalForm block_diagonalize(const Pencil2& t) {
  const KroneckerDecomposition kd = kronecker_decomposition(t, true);
  const KroneckerStructure& s = kd.structure;
  const RegularReduction& rr = kd.regular;
  const int reg = rr.a_reg.rows();
  RatMatrix p_reg = RatMatrix::identity(reg);
  RatMatrix q_reg = RatMatrix::identity(reg);
  std::vector<Poly> factors;
  if (reg > 0) {
    const FrobeniusResult fr = frobenius_form(rr.m_mat);
    p_reg = fr.transform * inverse(rr.n_mat);
    q_reg = fr.transform_inverse;
    factors = fr.factors.factors;
  }
  const RatMatrix pl = direct_sum(direct_sum(RatMatrix::identity(s.m_A), p_reg),
                                  RatMatrix::identity(t.m() - s.m_A - reg));
  const RatMatrix qr = direct_sum(direct_sum(RatMatrix::identity(s.n_A), q_reg),
                                  RatMatrix::identity(t.n() - s.n_A - reg));
  BlockDiagonalForm out;
  out.p = pl * kd.p;
  out.q = kd.q * qr;
  out.d = rr.d;
  if (s.m_A + s.n_A > 0) out.blocks.push_back(BlockDescriptor::zero(s.m_A, s.n_A));
  for (const auto& f : factors) out.blocks.push_back(BlockDescriptor::shifted(f, rr.d));
  for (int k : s.eps) out.blocks.push_back(BlockDescriptor::column(k));
  for (int k : s.eta) out.blocks.push_back(BlockDescriptor::row(k));
  int r = 0;
  int c = 0;
  for (const auto& b : out.blocks) {
    out.row_offsets.push_back(r);
    out.col_offsets.push_back(c);
    out.sub_pencils.push_back(block_pencil(b));
    r += b.rows();
    c += b.cols();
  }
  if (!(t.transformed(out.p, out.q) == direct_sum(out.sub_pencils))) {
    throw InternalError("block diagonal form does not match its blocks");
  }
  return out;
}

KroneckerStructure structure_of(const std::vector<BlockDescriptor>& blocks) {
  KroneckerStructure s;
  std::vector<Poly> finite;
  for (const auto& b : blocks) {
    s.m += b.rows();
    s.n += b.cols();
    switch (b.kind) {
      case BlockKind::A:
        s.m_A += b.k;
        s.n_A += b.l;
        break;
      case BlockKind::B:
        if (b.k > 0) finite.push_back(power(Poly{b.alpha, Rat(1)}, b.k));
        break;
      case BlockKind::C:
        if (b.k > 0) finite.push_back(power(Poly{b.c * b.c + b.s * b.s, 2 * b.c, Rat(1)}, b.k));
        break;
      case BlockKind::D:
        if (b.k > 0) s.inf_degrees.push_back(b.k);
        break;
      case BlockKind::E:
        if (b.k == 0) {
          ++s.n_A;
        } else {
          s.eps.push_back(b.k);
        }
        break;
      case BlockKind::F:
        if (b.k == 0) {
          ++s.m_A;
        } else {
          s.eta.push_back(b.k);
        }
        break;
      case BlockKind::Companion:
        finite.push_back(b.poly);
        break;
      case BlockKind::Shifted: {
        const int a = b.poly.x_valuation();
        if (a > 0) s.inf_degrees.push_back(a);
        const Poly g = finite_factor_from_m(b.poly, b.shift);
        if (!g.is_constant()) finite.push_back(g);
        break;
      }
    }
  }
  std::sort(s.eps.rbegin(), s.eps.rend());
  std::sort(s.eta.rbegin(), s.eta.rend());
  std::sort(s.inf_degrees.rbegin(), s.inf_degrees.rend());
  s.finite_factors = invariant_chain(finite);
  return s;
}

namespace {

int kind_rank(BlockKind k) {
  switch (k) {
    case BlockKind::A: return 0;
    case BlockKind::B: return 1;
    case BlockKind::C: return 2;
    case BlockKind::Companion: return 3;
    case BlockKind::Shifted: return 4;
    case BlockKind::D: return 5;
    case BlockKind::E: return 6;
    case BlockKind::F: return 7;
  }
  return 8;
}

bool rational_sqrt(const Rat& x, Rat& out) {
  if (x < 0) return false;
  const Int num = x.get_num();
  const Int den = x.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
  out = Rat(Int(sqrt(num)), Int(sqrt(den)));
  return true;
}

}  // namespace

void sort_canonical(std::vector<BlockDescriptor>& blocks) {
  std::stable_sort(blocks.begin(), blocks.end(), [](const BlockDescriptor& x, const BlockDescriptor& y) {
    if (x.kind != y.kind) return kind_rank(x.kind) < kind_rank(y.kind);
    switch (x.kind) {
      case BlockKind::B:
        if (x.alpha != y.alpha) return x.alpha < y.alpha;
        break;
      case BlockKind::C:
        if (x.c != y.c) return x.c < y.c;
        if (x.s != y.s) return x.s < y.s;
        break;
      case BlockKind::Companion:
      case BlockKind::Shifted:
        if (x.k != y.k) return x.k > y.k;
        if (x.shift != y.shift) return x.shift < y.shift;
        return poly_less(x.poly, y.poly);
      default:
        break;
    }
    if (x.k != y.k) return x.k > y.k;
    return x.l > y.l;
  });
}

std::vector<BlockDescriptor> canonical_blocks(const KroneckerStructure& s) {
  if (!s.consistent()) throw DomainError("inconsistent Kronecker structure");
  std::vector<BlockDescriptor> out;
  if (s.m_A + s.n_A > 0) out.push_back(BlockDescriptor::zero(s.m_A, s.n_A));
  for (const auto& cl : eigen_clusters(s.finite_factors)) {
    const Poly& b = cl.base;
    Rat sq;
    if (b.degree() == 1) {
      for (int k : cl.partition) out.push_back(BlockDescriptor::jordan(k, b.coeff(0)));
      continue;
    }
    if (b.degree() == 2) {
      const Rat c = b.coeff(1) / 2;
      const Rat s2 = b.coeff(0) - c * c;
      if (s2 > 0 && rational_sqrt(s2, sq)) {
        for (int k : cl.partition) out.push_back(BlockDescriptor::rotation(k, c, sq));
        continue;
      }
    }
    for (int k : cl.partition) out.push_back(BlockDescriptor::companion(power(b, k)));
  }
  for (int k : s.inf_degrees) out.push_back(BlockDescriptor::infinite(k));
  for (int k : s.eps) out.push_back(BlockDescriptor::column(k));
  for (int k : s.eta) out.push_back(BlockDescriptor::row(k));
  sort_canonical(out);
  return out;
}

Pencil2 canonical_tensor(const KroneckerStructure& s) {
  return canonical_tensor(canonical_blocks(s));
}

Pencil2 canonical_tensor(std::vector<BlockDescriptor> blocks) {
  sort_canonical(blocks);
  std::vector<Pencil2> parts;
  parts.reserve(blocks.size());
  for (const auto& b : blocks) parts.push_back(block_pencil(b));
  return direct_sum(parts);
}

bool pencils_equivalent(const Pencil2& x, const Pencil2& y) {
  if (x.m() != y.m() || x.n() != y.n()) return false;
  return kronecker_structure(x) == kronecker_structure(y);
}

}  // namespace pencil
