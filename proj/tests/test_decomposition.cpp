#include <gtest/gtest.h>

#include "pencil/decomposition.hpp"
#include "structures.hpp"
#include "support.hpp"

using namespace pencil;
using namespace testing_support;

namespace {

// Entrywise error of the term sum, recomputed without the library checker.
double sum_error(const Pencil2& t, const Decomposition& d) {
  double worst = 0;
  for (int i = 0; i < t.m(); ++i)
    for (int j = 0; j < t.n(); ++j) {
      Complex a = 0;
      Complex b = 0;
      if (d.mode == DecompositionMode::exact) {
        for (const auto& x : d.exact_terms) {
          const Rat uv = x.u[static_cast<std::size_t>(i)] * x.v[static_cast<std::size_t>(j)];
          a += to_double(x.w0 * uv);
          b += to_double(x.w1 * uv);
        }
      } else {
        for (const auto& x : d.numeric_terms) {
          const Complex uv = x.u[static_cast<std::size_t>(i)] * x.v[static_cast<std::size_t>(j)];
          a += x.w0 * uv;
          b += x.w1 * uv;
        }
      }
      worst = std::max({worst, std::abs(a - to_double(t.a()(i, j))), std::abs(b - to_double(t.b()(i, j)))});
    }
  return worst;
}

}  // namespace

TEST(Decompose, JordanBlockIsExact) {
  const Pencil2 t = block_pencil(BlockDescriptor::jordan(2, Rat(0)));
  const auto d = decompose(t, Field::C);
  EXPECT_EQ(d.mode, DecompositionMode::exact);
  EXPECT_EQ(d.size(), 3u);
  EXPECT_EQ(d.correction_terms, 1);
  EXPECT_EQ(sum_of_terms(2, 2, d.exact_terms), t);
  EXPECT_TRUE(verify_decomposition(t, d).ok);
}

TEST(Decompose, RotationOverBothFields) {
  const Pencil2 t = block_pencil(BlockDescriptor::rotation(1, Rat(0), Rat(1)));
  const auto dr = decompose(t, Field::R);
  EXPECT_EQ(dr.mode, DecompositionMode::exact);
  EXPECT_EQ(dr.size(), 3u);
  EXPECT_TRUE(verify_decomposition(t, dr).ok);

  const auto dc = decompose(t, Field::C);
  EXPECT_EQ(dc.mode, DecompositionMode::numeric);
  EXPECT_EQ(dc.size(), 2u);
  const auto rep = verify_decomposition(t, dc);
  EXPECT_TRUE(rep.ok);
  EXPECT_LT(rep.residual, 1e-9);
  EXPECT_LT(sum_error(t, dc), 1e-9);
}

TEST(Decompose, IrrationalRealEigenvalues) {
  const Pencil2 t = block_pencil(BlockDescriptor::companion(Poly{-2, 0, 1}));
  const auto d = decompose(t, Field::R);
  EXPECT_EQ(d.mode, DecompositionMode::numeric);
  EXPECT_EQ(d.size(), 2u);
  const auto rep = verify_decomposition(t, d);
  EXPECT_TRUE(rep.real_terms);
  EXPECT_TRUE(rep.ok);
}

TEST(Decompose, SingularBlock) {
  const Pencil2 t(mat(1, 2, {0, 1}), mat(1, 2, {1, 0}));
  const auto d = decompose(t, Field::R);
  EXPECT_EQ(d.size(), 2u);
  EXPECT_TRUE(verify_decomposition(t, d).ok);
  EXPECT_THROW(decompose(t, Field::Q), ScopeError);
}

TEST(Decompose, NumericRootsArePolished) {
  const Poly f{-3, 1, 0, 1, 0, 1};  // x^5 + x^3 + x - 3
  for (const auto& r : numeric_roots(f)) {
    Complex v = 0;
    for (int i = f.degree(); i >= 0; --i) v = v * r + to_double(f.coeff(i));
    EXPECT_LT(std::abs(v), 1e-12);
  }
}

TEST(Decompose, CatalogInRandomCoordinates) {
  std::mt19937 rng(23);
  int checked = 0;
  for_each_block_list(5, [&](const std::vector<BlockDescriptor>& blocks) {
    const Pencil2 t = random_equivalent(rng, canonical_tensor(blocks));
    for (Field field : {Field::R, Field::C}) {
      const auto d = decompose(t, field);
      ASSERT_EQ(static_cast<int>(d.size()), tensor_rank(t, field).rank);
      const auto rep = verify_decomposition(t, d);
      ASSERT_TRUE(rep.ok) << rep.residual;
      ASSERT_LT(sum_error(t, d), 1e-9);
      if (d.mode == DecompositionMode::exact) ASSERT_EQ(sum_of_terms(t.m(), t.n(), d.exact_terms), t);
    }
    ++checked;
  });
  EXPECT_GT(checked, 1000);
}

TEST(Decompose, RandomPencils) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 80; ++trial) {
    const int m = 1 + trial % 5;
    const int n = 1 + (trial / 5) % 5;
    const Pencil2 t = random_pencil(rng, m, n, -3, 3);
    for (Field field : {Field::R, Field::C}) {
      const auto d = decompose(t, field);
      const auto rep = verify_decomposition(t, d);
      EXPECT_TRUE(rep.ok) << m << "x" << n << " residual " << rep.residual;
      EXPECT_LT(sum_error(t, d), 1e-9);
    }
  }
}

TEST(Verify, RejectsWrongSums) {
  const Pencil2 t = block_pencil(BlockDescriptor::jordan(2, Rat(0)));
  auto d = decompose(t, Field::C);
  d.exact_terms.back().w0 += 1;
  EXPECT_FALSE(verify_decomposition(t, d).ok);
  d = decompose(t, Field::C);
  d.exact_terms.pop_back();
  EXPECT_FALSE(verify_decomposition(t, d).ok);
}
