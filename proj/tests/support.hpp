#pragma once

#include <random>
#include <vector>

#include "pencil/matrix.hpp"
#include "pencil/pencil.hpp"

namespace testing_support {

using pencil::Pencil2;
using pencil::Rat;
using pencil::RatMatrix;

inline RatMatrix mat(int rows, int cols, std::vector<long> entries) {
  std::vector<Rat> e;
  e.reserve(entries.size());
  for (long x : entries) e.emplace_back(x);
  return {rows, cols, std::move(e)};
}

inline RatMatrix random_matrix(std::mt19937& rng, int rows, int cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  RatMatrix out(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out(i, j) = dist(rng);
  return out;
}

inline RatMatrix random_invertible(std::mt19937& rng, int n, int lo = -2, int hi = 2) {
  for (;;) {
    RatMatrix m = random_matrix(rng, n, n, lo, hi);
    if (pencil::determinant(m) != 0) return m;
  }
}

inline Pencil2 random_pencil(std::mt19937& rng, int m, int n, int lo = -2, int hi = 2) {
  return {random_matrix(rng, m, n, lo, hi), random_matrix(rng, m, n, lo, hi)};
}

/// Random pencil of prescribed low rank structure: sum of `terms` random
/// integer rank-1 tensors, which gives singular and degenerate pencils often.
inline Pencil2 random_low_rank_pencil(std::mt19937& rng, int m, int n, int terms) {
  Pencil2 out = Pencil2::zero(m, n);
  for (int t = 0; t < terms; ++t) {
    const RatMatrix u = random_matrix(rng, m, 1, -1, 1);
    const RatMatrix v = random_matrix(rng, 1, n, -1, 1);
    const RatMatrix w = random_matrix(rng, 1, 2, -1, 1);
    const RatMatrix uv = u * v;
    out += Pencil2(uv * w(0, 0), uv * w(0, 1));
  }
  return out;
}

inline Pencil2 random_equivalent(std::mt19937& rng, const Pencil2& t) {
  return t.transformed(random_invertible(rng, t.m()), random_invertible(rng, t.n()));
}

}  // namespace testing_support
