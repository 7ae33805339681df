#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "pencil/errors.hpp"
#include "pencil/gf_oracle.hpp"

using namespace pencil;

namespace {

// Ranks of every m x n x 2 tensor over GF(q) by breadth-first search from
// zero, adding one rank-1 tensor u (x) v (x) w per step. Tensors are
// indexed by their base-q digits, slice A first.
std::vector<int> bfs_ranks(int q, int m, int n) {
  const int cells = 2 * m * n;
  int total = 1;
  for (int i = 0; i < cells; ++i) total *= q;
  std::vector<std::vector<int>> rank_one;
  auto vectors = [&](int len) {
    std::vector<std::vector<int>> out;
    int cnt = 1;
    for (int i = 0; i < len; ++i) cnt *= q;
    for (int c = 1; c < cnt; ++c) {
      std::vector<int> x(len);
      int k = c;
      for (int i = 0; i < len; ++i) {
        x[i] = k % q;
        k /= q;
      }
      out.push_back(x);
    }
    return out;
  };
  auto normalized = [&](int len) {
    auto all = vectors(len);
    std::erase_if(all, [](const std::vector<int>& x) { return *std::find_if(x.begin(), x.end(), [](int e) { return e; }) != 1; });
    return all;
  };
  for (const auto& u : normalized(m))
    for (const auto& v : normalized(n))
      for (const auto& w : vectors(2)) {
        std::vector<int> t(cells);
        for (int s = 0; s < 2; ++s)
          for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) t[s * m * n + i * n + j] = w[s] * u[i] * v[j] % q;
        rank_one.push_back(t);
      }
  auto decode = [&](int code) {
    std::vector<int> d(cells);
    for (int i = 0; i < cells; ++i) {
      d[i] = code % q;
      code /= q;
    }
    return d;
  };
  auto encode = [&](const std::vector<int>& d) {
    int code = 0;
    for (int i = cells - 1; i >= 0; --i) code = code * q + d[i];
    return code;
  };
  std::vector<int> dist(total, -1);
  dist[0] = 0;
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int code : frontier) {
      const auto d = decode(code);
      for (const auto& r : rank_one) {
        std::vector<int> s(cells);
        for (int i = 0; i < cells; ++i) s[i] = (d[i] + r[i]) % q;
        const int c = encode(s);
        if (dist[c] < 0) {
          dist[c] = dist[code] + 1;
          next.push_back(c);
        }
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

GFTensor tensor_from_code(int q, int m, int n, int code) {
  std::vector<int> a(m * n);
  std::vector<int> b(m * n);
  for (int i = 0; i < m * n; ++i) {
    a[i] = code % q;
    code /= q;
  }
  for (int i = 0; i < m * n; ++i) {
    b[i] = code % q;
    code /= q;
  }
  return GFTensor(q, m, n, a, b);
}

std::vector<int> random_invertible(std::mt19937& rng, int n, int q) {
  std::uniform_int_distribution<int> d(0, q - 1);
  for (;;) {
    std::vector<int> p(n * n);
    for (auto& x : p) x = d(rng);
    if (gf_matrix_rank(p, n, n, q) == n) return p;
  }
}

const GFTensor kRankFive =
    GFTensor::from_grids(2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 0, 1}, {1, 0, 1}, {0, 1, 0}});

}  // namespace

TEST(GFTensor, BoardsRoundTrip) {
  const auto b0 = kRankFive.board(0);
  const auto b1 = kRankFive.board(1);
  EXPECT_EQ(GFTensor::from_boards(3, 3, b0, b1), kRankFive);
  EXPECT_EQ(b0, 0b100010001);
  EXPECT_THROW(static_cast<void>(GFTensor::from_grids(5, {{1}}, {{1}}).board(0)), DomainError);
}

TEST(GFTensor, Caps) {
  EXPECT_THROW(GFTensor(4, 1, 1, {0}, {0}), ScopeError);
  EXPECT_THROW(GFTensor(11, 1, 1, {0}, {0}), ScopeError);
  EXPECT_THROW(GFTensor(2, 5, 1, std::vector<int>(5), std::vector<int>(5)), ScopeError);
  EXPECT_THROW(GFTensor(3, 1, 1, {3}, {0}), DomainError);
  EXPECT_THROW(gf_rank_atmost(kRankFive, 7), DomainError);
}

TEST(GFRank, Examples) {
  EXPECT_TRUE(gf_rank_atmost(GFTensor(2, 2, 2, {0, 0, 0, 0}, {0, 0, 0, 0}), 0).found);
  const auto ej2 = [](int q) { return GFTensor::from_grids(q, {{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}); };
  EXPECT_EQ(gf_rank(ej2(2)).rank, 3);
  EXPECT_EQ(gf_rank(ej2(5)).rank, 3);
  EXPECT_EQ(gf_rank(GFTensor::from_grids(2, {{1}}, {{1}})).rank, 1);
}

TEST(GFRank, RankFiveTensor) {
  EXPECT_FALSE(gf_rank_atmost(kRankFive, 4).found);
  const auto r5 = gf_rank_atmost(kRankFive, 5);
  ASSERT_TRUE(r5.found);
  EXPECT_LE(r5.witness.size(), 5u);
  EXPECT_EQ(gf_sum(2, 3, 3, r5.witness), kRankFive);
  EXPECT_EQ(gf_rank(kRankFive).rank, 5);
}

TEST(GFRank, MatchesBreadthFirstSearch) {
  struct Case {
    int q, m, n, stride;
  };
  for (const Case c : {Case{2, 2, 2, 1}, Case{3, 2, 2, 1}, Case{2, 2, 3, 1}, Case{2, 3, 3, 331}}) {
    const auto dist = bfs_ranks(c.q, c.m, c.n);
    for (std::size_t code = 0; code < dist.size(); code += static_cast<std::size_t>(c.stride)) {
      const GFTensor t = tensor_from_code(c.q, c.m, c.n, static_cast<int>(code));
      const auto res = gf_rank(t);
      ASSERT_EQ(res.rank, dist[code]) << "q=" << c.q << " " << c.m << "x" << c.n << " code " << code;
      ASSERT_EQ(gf_sum(c.q, c.m, c.n, res.witness), t);
      ASSERT_LE(static_cast<int>(res.witness.size()), res.rank);
    }
  }
}

TEST(GFRank, RankFiveByBreadthFirstSearch) {
  const auto dist = bfs_ranks(2, 3, 3);
  int code = 0;
  for (int i = 2 * 9 - 1; i >= 0; --i) code = code * 2 + (i < 9 ? kRankFive.a[i] : kRankFive.b[i - 9]);
  EXPECT_EQ(dist[static_cast<std::size_t>(code)], 5);
}

TEST(GFRank, MonotoneAndInvariant) {
  std::mt19937 rng(3);
  for (int q : {2, 3, 5}) {
    for (int trial = 0; trial < 6; ++trial) {
      const int m = 2 + trial % 2;
      const int n = 2 + (trial / 2) % 2;
      std::uniform_int_distribution<int> d(0, q - 1);
      std::vector<int> a(m * n);
      std::vector<int> b(m * n);
      for (auto& x : a) x = d(rng);
      for (auto& x : b) x = d(rng);
      const GFTensor t(q, m, n, a, b);
      const int r = gf_rank(t).rank;
      for (int s = 0; s <= 2 * std::min(m, n); ++s) EXPECT_EQ(gf_rank_atmost(t, s).found, s >= r);
      for (int k = 0; k < 20; ++k) {
        const GFTensor u = t.transformed(random_invertible(rng, m, q), random_invertible(rng, n, q));
        ASSERT_EQ(gf_rank(u).rank, r);
      }
    }
  }
}

TEST(GFRank, ThreadedSearchAgrees) {
  const auto j = GFTensor::from_grids(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  const auto one = gf_rank(j, 1);
  const auto four = gf_rank(j, 4);
  EXPECT_EQ(one.rank, 4);
  EXPECT_EQ(four.rank, 4);
  EXPECT_EQ(gf_sum(3, 3, 3, four.witness), j);
  EXPECT_FALSE(gf_rank_atmost(kRankFive, 4, 3).found);
  const auto again = gf_rank(j, 3);
  ASSERT_EQ(again.witness.size(), four.witness.size());
  for (std::size_t i = 0; i < again.witness.size(); ++i) {
    EXPECT_EQ(again.witness[i].u, four.witness[i].u);
    EXPECT_EQ(again.witness[i].v, four.witness[i].v);
    EXPECT_EQ(one.witness[i].u, four.witness[i].u);
  }
}
