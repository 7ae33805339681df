#include "pencil/gf_oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <string>
#include <thread>

#include "pencil/errors.hpp"

namespace pencil {

bool is_prime_small(int q) { return q == 2 || q == 3 || q == 5 || q == 7; }

int gf_inverse(int x, int q) {
  x %= q;
  if (x < 0) x += q;
  for (int y = 1; y < q; ++y)
    if (x * y % q == 1) return y;
  throw DomainError("zero has no inverse");
}

int gf_matrix_rank(std::vector<int> mat, int rows, int cols, int q) {
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (mat[i * cols + c] % q != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < cols; ++j) std::swap(mat[r * cols + j], mat[piv * cols + j]);
    const int inv = gf_inverse(mat[r * cols + c], q);
    for (int i = 0; i < rows; ++i) {
      if (i == r || mat[i * cols + c] % q == 0) continue;
      const int f = mat[i * cols + c] * inv % q;
      for (int j = 0; j < cols; ++j) mat[i * cols + j] = ((mat[i * cols + j] - f * mat[r * cols + j]) % q + q) % q;
    }
    ++r;
  }
  return r;
}

GFTensor::GFTensor(int q_, int m_, int n_, std::vector<int> a_, std::vector<int> b_)
    : q(q_), m(m_), n(n_), a(std::move(a_)), b(std::move(b_)) {
  if (!is_prime_small(q)) throw ScopeError("GF(q) oracle supports q in {2, 3, 5, 7}");
  if (m < 1 || n < 1 || m > 4 || n > 4) throw ScopeError("GF(q) oracle supports 1 <= m, n <= 4");
  if (static_cast<int>(a.size()) != m * n || static_cast<int>(b.size()) != m * n) throw DomainError("slice size mismatch");
  for (const auto* s : {&a, &b})
    for (int x : *s)
      if (x < 0 || x >= q) throw DomainError("GF(q) entries must lie in [0, q)");
}

GFTensor GFTensor::from_grids(int q, const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
  const int m = static_cast<int>(a.size());
  const int n = m ? static_cast<int>(a[0].size()) : 0;
  if (static_cast<int>(b.size()) != m) throw DomainError("slice shapes differ");
  std::vector<int> fa;
  std::vector<int> fb;
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(a[i].size()) != n || static_cast<int>(b[i].size()) != n) throw DomainError("ragged slice");
    fa.insert(fa.end(), a[i].begin(), a[i].end());
    fb.insert(fb.end(), b[i].begin(), b[i].end());
  }
  return GFTensor(q, m, n, fa, fb);
}

int GFTensor::at(int slice, int i, int j) const { return (slice == 0 ? a : b)[i * n + j]; }

std::uint16_t GFTensor::board(int slice) const {
  if (q != 2) throw DomainError("bitboards exist only for GF(2)");
  std::uint16_t out = 0;
  const auto& s = slice == 0 ? a : b;
  for (int k = 0; k < m * n; ++k)
    if (s[k]) out |= static_cast<std::uint16_t>(1u << k);
  return out;
}

GFTensor GFTensor::from_boards(int m, int n, std::uint16_t ba, std::uint16_t bb) {
  std::vector<int> a(m * n);
  std::vector<int> b(m * n);
  for (int k = 0; k < m * n; ++k) {
    a[k] = (ba >> k) & 1;
    b[k] = (bb >> k) & 1;
  }
  return GFTensor(2, m, n, a, b);
}

GFTensor GFTensor::transformed(const std::vector<int>& p, const std::vector<int>& qm) const {
  auto mul = [&](const std::vector<int>& s) {
    std::vector<int> out(m * n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) {
        long acc = 0;
        for (int k = 0; k < m; ++k)
          for (int l = 0; l < n; ++l) acc += static_cast<long>(p[i * m + k]) * s[k * n + l] * qm[l * n + j];
        out[i * n + j] = static_cast<int>(acc % q);
      }
    return out;
  };
  return GFTensor(q, m, n, mul(a), mul(b));
}

GFTensor gf_sum(int q, int m, int n, const std::vector<GFTerm>& terms) {
  std::vector<int> a(m * n);
  std::vector<int> b(m * n);
  for (const auto& t : terms)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) {
        const int uv = t.u[i] * t.v[j] % q;
        a[i * n + j] = (a[i * n + j] + t.w0 * uv) % q;
        b[i * n + j] = (b[i * n + j] + t.w1 * uv) % q;
      }
  return GFTensor(q, m, n, a, b);
}

namespace {

using Dense = std::array<std::uint8_t, 16>;

struct Arith {
  int q;
  int m;
  int n;
  int size() const { return m * n; }
  Dense axpy(const Dense& x, int c, const Dense& y) const {
    Dense r{};
    for (int k = 0; k < size(); ++k) r[k] = static_cast<std::uint8_t>((x[k] + c * y[k]) % q);
    return r;
  }
  bool is_zero(const Dense& x) const {
    for (int k = 0; k < size(); ++k)
      if (x[k]) return false;
    return true;
  }
  bool is_rank_one(const Dense& x) const {
    int r0 = -1;
    int c0 = -1;
    for (int k = 0; k < size() && r0 < 0; ++k)
      if (x[k]) {
        r0 = k / n;
        c0 = k % n;
      }
    if (r0 < 0) return false;
    const int inv = gf_inverse(x[r0 * n + c0], q);
    for (int i = 0; i < m; ++i) {
      const int f = x[i * n + c0] * inv % q;
      for (int j = 0; j < n; ++j)
        if ((x[i * n + j] - f * x[r0 * n + j] % q + q) % q != 0) return false;
    }
    return true;
  }
};

std::uint16_t pack(const Dense& x, int size) {
  std::uint16_t out = 0;
  for (int k = 0; k < size; ++k)
    if (x[k]) out |= static_cast<std::uint16_t>(1u << k);
  return out;
}

bool board_rank_one(std::uint16_t x, int m, int n) {
  if (!x) return false;
  const unsigned mask = (1u << n) - 1;
  unsigned row = 0;
  for (int i = 0; i < m; ++i) {
    const unsigned r = (x >> (i * n)) & mask;
    if (!r) continue;
    if (row && r != row) return false;
    row = r;
  }
  return true;
}

// Incremental row echelon basis of a subspace of GF(q)^size.
struct Echelon {
  std::vector<Dense> rows;
  std::vector<int> pivots;
  // Reduces x; returns false when x is in the span, otherwise appends it.
  bool insert(Dense x, const Arith& f) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const int c = x[pivots[i]];
      if (c) x = f.axpy(x, f.q - c, rows[i]);
    }
    int p = -1;
    for (int k = 0; k < f.size(); ++k)
      if (x[k]) {
        p = k;
        break;
      }
    if (p < 0) return false;
    const int inv = gf_inverse(x[p], f.q);
    for (int k = 0; k < f.size(); ++k) x[k] = static_cast<std::uint8_t>(x[k] * inv % f.q);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const int c = rows[i][p];
      if (c) rows[i] = f.axpy(rows[i], f.q - c, x);
    }
    rows.push_back(x);
    pivots.push_back(p);
    return true;
  }
};

struct RankOne {
  std::vector<int> u;
  std::vector<int> v;
  Dense dense{};
  std::uint16_t bits = 0;
};

std::vector<std::vector<int>> projective_points(int len, int q) {
  std::vector<std::vector<int>> out;
  std::vector<int> x(len);
  int total = 1;
  for (int i = 0; i < len; ++i) total *= q;
  for (int code = 1; code < total; ++code) {
    int c = code;
    for (int i = len - 1; i >= 0; --i) {
      x[i] = c % q;
      c /= q;
    }
    const auto first = std::find_if(x.begin(), x.end(), [](int e) { return e != 0; });
    if (*first == 1) out.push_back(x);
  }
  return out;
}

// Rank-1 matrix classes up to scalar, in lexicographic (u, v) order.
std::vector<RankOne> rank_one_catalog(const Arith& f) {
  std::vector<RankOne> out;
  for (const auto& u : projective_points(f.m, f.q))
    for (const auto& v : projective_points(f.n, f.q)) {
      RankOne r;
      r.u = u;
      r.v = v;
      for (int i = 0; i < f.m; ++i)
        for (int j = 0; j < f.n; ++j) r.dense[i * f.n + j] = static_cast<std::uint8_t>(u[i] * v[j] % f.q);
      r.bits = pack(r.dense, f.size());
      out.push_back(std::move(r));
    }
  return out;
}

GFTerm factor_rank_one(const Dense& x, const Arith& f) {
  GFTerm t;
  t.u.assign(f.m, 0);
  t.v.assign(f.n, 0);
  int r0 = -1;
  for (int k = 0; k < f.size() && r0 < 0; ++k)
    if (x[k]) r0 = k / f.n;
  int c0 = -1;
  for (int j = 0; j < f.n; ++j) {
    t.v[j] = x[r0 * f.n + j];
    if (c0 < 0 && t.v[j]) c0 = j;
  }
  const int inv = gf_inverse(t.v[c0], f.q);
  for (int i = 0; i < f.m; ++i) t.u[i] = x[i * f.n + c0] * inv % f.q;
  return t;
}

Dense to_dense(const std::vector<int>& s) {
  Dense d{};
  std::copy(s.begin(), s.end(), d.begin());
  return d;
}

// Slice combinations a*A + b*B for projective (a, b): (1, 0), (1, 1), ..., (0, 1).
std::vector<std::array<int, 2>> slice_classes(int q) {
  std::vector<std::array<int, 2>> out;
  for (int b = 0; b < q; ++b) out.push_back({1, b});
  out.push_back({0, 1});
  return out;
}

struct Hit {
  std::array<int, 2> cls;
  std::vector<int> coeffs;
  Dense value;
};

// Looks for a rank-1 element base + sum c_i R_i; coefficients are
// enumerated in lexicographic order.
bool find_rank_one(const Arith& f, const Dense& base, const std::vector<const RankOne*>& rs, Hit& hit) {
  const int s = static_cast<int>(rs.size());
  if (f.q == 2) {
    const std::uint16_t b0 = pack(base, f.size());
    for (unsigned mask = 0; mask < (1u << s); ++mask) {
      std::uint16_t x = b0;
      for (int i = 0; i < s; ++i)
        if (mask & (1u << (s - 1 - i))) x ^= rs[i]->bits;
      if (board_rank_one(x, f.m, f.n)) {
        hit.coeffs.assign(s, 0);
        for (int i = 0; i < s; ++i) hit.coeffs[i] = (mask >> (s - 1 - i)) & 1;
        hit.value = base;
        for (int i = 0; i < s; ++i)
          if (hit.coeffs[i]) hit.value = f.axpy(hit.value, 1, rs[i]->dense);
        return true;
      }
    }
    return false;
  }
  std::vector<int> c(s, 0);
  std::vector<Dense> partial(s + 1);
  partial[0] = base;
  // odometer with prefix sums
  int depth = 0;
  for (;;) {
    for (int i = depth; i < s; ++i) partial[i + 1] = f.axpy(partial[i], c[i], rs[i]->dense);
    if (f.is_rank_one(partial[s])) {
      hit.coeffs = c;
      hit.value = partial[s];
      return true;
    }
    int i = s - 1;
    while (i >= 0 && c[i] == f.q - 1) {
      c[i] = 0;
      --i;
    }
    if (i < 0) return false;
    ++c[i];
    depth = i;
  }
}

// Given R_1..R_s independent modulo span(A, B), decides whether span(A, B,
// R_1..R_s) is spanned by its rank-1 elements and builds the witness.
bool check_subspace(const Arith& f, const Dense& a, const Dense& b, const std::vector<const RankOne*>& rs,
                    std::vector<GFTerm>& witness) {
  std::vector<Hit> hits;
  for (const auto& cls : slice_classes(f.q)) {
    Dense base = f.axpy(Dense{}, cls[0], a);
    base = f.axpy(base, cls[1], b);
    Hit h;
    if (find_rank_one(f, base, rs, h)) {
      h.cls = cls;
      hits.push_back(h);
      if (hits.size() == 2) break;
    }
  }
  if (hits.size() < 2) return false;
  // E_k = c_k0 A + c_k1 B + sum h_k R; invert the 2x2 class matrix.
  const int q = f.q;
  const int a1 = hits[0].cls[0], b1 = hits[0].cls[1], a2 = hits[1].cls[0], b2 = hits[1].cls[1];
  const int det = ((a1 * b2 - a2 * b1) % q + q) % q;
  const int di = gf_inverse(det, q);
  // X_k = E_k - sum h_k R equals (a_k, b_k) . (A, B), so (A, B) = inv (X_1, X_2)
  const int inv[2][2] = {{b2 * di % q, (q - b1) * di % q}, {(q - a2) * di % q, a1 * di % q}};
  witness.clear();
  for (int k = 0; k < 2; ++k) {
    GFTerm t = factor_rank_one(hits[k].value, f);
    t.w0 = inv[0][k];
    t.w1 = inv[1][k];
    if (t.w0 || t.w1) witness.push_back(t);
  }
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const int h1 = hits[0].coeffs[i];
    const int h2 = hits[1].coeffs[i];
    GFTerm t;
    t.u = rs[i]->u;
    t.v = rs[i]->v;
    t.w0 = (q * q * 2 - (h1 * inv[0][0] + h2 * inv[0][1])) % q;
    t.w1 = (q * q * 2 - (h1 * inv[1][0] + h2 * inv[1][1])) % q;
    if (t.w0 || t.w1) witness.push_back(t);
  }
  return true;
}

int thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("PENCIL_RANK_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return std::min(v, 64);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Rank-1 factorization of a single matrix c: c = c[:, pivots] * rref rows.
std::vector<GFTerm> matrix_terms(const Dense& c, const Arith& f, int wa, int wb) {
  std::vector<int> mat(c.begin(), c.begin() + f.size());
  std::vector<int> red = mat;
  const int q = f.q;
  std::vector<int> piv;
  int r = 0;
  for (int col = 0; col < f.n && r < f.m; ++col) {
    int p = -1;
    for (int i = r; i < f.m; ++i)
      if (red[i * f.n + col]) {
        p = i;
        break;
      }
    if (p < 0) continue;
    for (int j = 0; j < f.n; ++j) std::swap(red[r * f.n + j], red[p * f.n + j]);
    const int iv = gf_inverse(red[r * f.n + col], q);
    for (int j = 0; j < f.n; ++j) red[r * f.n + j] = red[r * f.n + j] * iv % q;
    for (int i = 0; i < f.m; ++i) {
      if (i == r || !red[i * f.n + col]) continue;
      const int fac = red[i * f.n + col];
      for (int j = 0; j < f.n; ++j) red[i * f.n + j] = ((red[i * f.n + j] - fac * red[r * f.n + j]) % q + q) % q;
    }
    piv.push_back(col);
    ++r;
  }
  std::vector<GFTerm> out;
  for (int k = 0; k < r; ++k) {
    GFTerm t;
    for (int i = 0; i < f.m; ++i) t.u.push_back(mat[i * f.n + piv[k]]);
    for (int j = 0; j < f.n; ++j) t.v.push_back(red[k * f.n + j]);
    t.w0 = wa;
    t.w1 = wb;
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

GFSearchResult gf_rank_atmost(const GFTensor& t, int r, int threads) {
  if (r < 0 || r > 2 * std::min(t.m, t.n)) throw DomainError("r must lie in [0, 2 min(m, n)]");
  const Arith f{t.q, t.m, t.n};
  const Dense a = to_dense(t.a);
  const Dense b = to_dense(t.b);
  GFSearchResult out;
  Echelon span_ab;
  span_ab.insert(a, f);
  span_ab.insert(b, f);
  const int dim = static_cast<int>(span_ab.rows.size());
  if (dim == 0) {
    out.found = true;
    return out;
  }
  if (dim == 1) {
    // B = lambda A, or A = 0
    Dense c = f.is_zero(a) ? b : a;
    int wa = 1, wb = 0;
    if (f.is_zero(a)) {
      wa = 0;
      wb = 1;
    } else {
      for (int k = 0; k < f.size(); ++k)
        if (a[k]) {
          wb = b[k] * gf_inverse(a[k], f.q) % f.q;
          break;
        }
    }
    auto terms = matrix_terms(c, f, wa, wb);
    if (static_cast<int>(terms.size()) <= r) {
      out.found = true;
      out.witness = std::move(terms);
    }
    return out;
  }
  if (r < 2) return out;
  const int s = std::min(r - 2, f.size() - 2);
  const auto catalog = rank_one_catalog(f);
  // Fixed partitions of the first choice; the lowest partition with a hit
  // wins, so the witness does not depend on the worker count.
  const int partitions = s == 0 ? 1 : 16;
  const int workers = std::min(partitions, thread_count(threads));

  std::atomic<int> best(partitions);
  std::atomic<int> next(0);
  std::mutex mu;
  std::vector<GFTerm> best_witness;

  auto run = [&](int part) {
    std::vector<const RankOne*> chosen;
    std::vector<Echelon> ech(static_cast<std::size_t>(s + 1));
    ech[0] = span_ab;
    std::vector<GFTerm> witness;
    bool found = false;
    // depth-first over increasing index tuples, skipping dependent choices
    auto rec = [&](auto&& self, int depth, std::size_t start) -> void {
      if (found || best.load() < part) return;
      if (depth == s) {
        if (check_subspace(f, a, b, chosen, witness)) found = true;
        return;
      }
      for (std::size_t i = start; i + static_cast<std::size_t>(s - depth) <= catalog.size(); ++i) {
        if (depth == 0 && static_cast<int>(i % partitions) != part) continue;
        ech[depth + 1] = ech[depth];
        if (!ech[depth + 1].insert(catalog[i].dense, f)) continue;
        chosen.push_back(&catalog[i]);
        self(self, depth + 1, i + 1);
        chosen.pop_back();
        if (found || best.load() < part) return;
      }
    };
    rec(rec, 0, 0);
    if (!found) return;
    std::lock_guard<std::mutex> lock(mu);
    if (part < best.load()) {
      best.store(part);
      best_witness = std::move(witness);
    }
  };
  auto worker = [&] {
    for (int p = next++; p < partitions && p < best.load(); p = next++) run(p);
  };

  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (best.load() < partitions) {
    out.found = true;
    out.witness = std::move(best_witness);
    if (!(gf_sum(t.q, t.m, t.n, out.witness) == t)) throw InternalError("GF witness does not reconstruct");
  }
  return out;
}

GFRankResult gf_rank(const GFTensor& t, int threads) {
  GFRankResult res;
  int lb = 0;
  std::vector<int> combo(t.m * t.n);
  for (const auto& cls : slice_classes(t.q)) {
    for (int k = 0; k < t.m * t.n; ++k) combo[k] = (cls[0] * t.a[k] + cls[1] * t.b[k]) % t.q;
    lb = std::max(lb, gf_matrix_rank(combo, t.m, t.n, t.q));
  }
  res.lower_bound = lb;
  for (int r = lb; r <= 2 * std::min(t.m, t.n); ++r) {
    auto s = gf_rank_atmost(t, r, threads);
    if (s.found) {
      res.rank = r;
      res.witness = std::move(s.witness);
      return res;
    }
  }
  throw InternalError("GF rank exceeds the trivial bound");
}

}  // namespace pencil
