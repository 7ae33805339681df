#pragma once

#include <cstdint>
#include <vector>

namespace pencil {

/// m x n x 2 tensor over GF(q), q prime <= 7, m, n <= 4. Entries row-major.
struct GFTensor {
  int q = 2;
  int m = 0;
  int n = 0;
  std::vector<int> a;
  std::vector<int> b;

  GFTensor() = default;
  GFTensor(int q, int m, int n, std::vector<int> a, std::vector<int> b);
  static GFTensor from_grids(int q, const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b);

  [[nodiscard]] int at(int slice, int i, int j) const;
  /// GF(2) only; bit i*n + j of each board.
  [[nodiscard]] std::uint16_t board(int slice) const;
  static GFTensor from_boards(int m, int n, std::uint16_t a, std::uint16_t b);
  /// P T Q slice-wise.
  [[nodiscard]] GFTensor transformed(const std::vector<int>& p, const std::vector<int>& qm) const;
  bool operator==(const GFTensor&) const = default;
};

struct GFTerm {
  std::vector<int> u;
  std::vector<int> v;
  int w0 = 0;
  int w1 = 0;
};

GFTensor gf_sum(int q, int m, int n, const std::vector<GFTerm>& terms);

struct GFSearchResult {
  bool found = false;
  std::vector<GFTerm> witness;
};

/// Decides rank <= r. threads = 0 reads PENCIL_RANK_THREADS (default: all
/// cores). The witness is the same for every thread count.
GFSearchResult gf_rank_atmost(const GFTensor& t, int r, int threads = 0);

struct GFRankResult {
  int rank = 0;
  int lower_bound = 0;  // from ranks of slice combinations
  std::vector<GFTerm> witness;
};

GFRankResult gf_rank(const GFTensor& t, int threads = 0);

bool is_prime_small(int q);
int gf_inverse(int x, int q);
/// Rank of an r x c matrix over GF(q).
int gf_matrix_rank(std::vector<int> mat, int rows, int cols, int q);

}  // namespace pencil
