#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "pencil/errors.hpp"
#include "pencil/poly.hpp"
#include "pencil/rational.hpp"

namespace pencil {

/// Dense row-major matrix over an exact ring (Rat or Poly).
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows * cols)) {
    if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
  }
  Matrix(int rows, int cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != static_cast<std::size_t>(rows * cols)) {
      throw DomainError("matrix entry count does not match its shape");
    }
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = one();
    return m;
  }

  [[nodiscard]] int rows() const { return rows_; }
  [[nodiscard]] int cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  T& operator()(int i, int j) { return e_[static_cast<std::size_t>(i * cols_ + j)]; }
  const T& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i * cols_ + j)]; }

  [[nodiscard]] const std::vector<T>& entries() const { return e_; }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  [[nodiscard]] Matrix block(int r0, int c0, int nr, int nc) const {
    Matrix b(nr, nc);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(int r0, int c0, const Matrix& b) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& x : e_)
      if (!(x == T())) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T()) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend Matrix operator*(Matrix a, const Rat& s) {
    for (auto& x : a.e_) x *= s;
    return a;
  }
  friend Matrix operator*(const Rat& s, Matrix a) { return std::move(a) * s; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.e_) x = -x;
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  static T one() {
    if constexpr (std::is_same_v<T, Poly>) {
      return Poly::constant(Rat(1));
    } else {
      return T(1);
    }
  }
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> e_;
};

using RatMatrix = Matrix<Rat>;
using PolyMatrix = Matrix<Poly>;
using RatVector = std::vector<Rat>;

RatMatrix diag(const std::vector<Rat>& d);
/// Block-diagonal direct sum.
RatMatrix direct_sum(const RatMatrix& a, const RatMatrix& b);
RatMatrix hstack(const RatMatrix& a, const RatMatrix& b);
RatMatrix vstack(const RatMatrix& a, const RatMatrix& b);
/// k x k nilpotent Jordan block (ones on the superdiagonal).
RatMatrix jordan_nilpotent(int k);
RatMatrix column(const RatVector& v);
RatVector column_of(const RatMatrix& m, int j);
RatVector row_of(const RatMatrix& m, int i);
RatVector mat_vec(const RatMatrix& m, const RatVector& v);
/// Outer product u v^T.
RatMatrix outer(const RatVector& u, const RatVector& v);
/// Companion matrix of a monic polynomial: ones on the subdiagonal, last
/// column holds the negated low-order coefficients.
RatMatrix companion(const Poly& monic);
/// Direct sum of companion matrices; empty list gives a 0x0 matrix.
RatMatrix companion_sum(const std::vector<Poly>& monics);

std::string to_string(const RatMatrix& m);

struct Rref {
  RatMatrix reduced;
  std::vector<int> pivots;  // pivot column per nonzero row
};

enum class SolveKind { rref, kernel_basis, determinant, inverse };

/// Unique reduced row echelon form.
Rref rref(RatMatrix m);
int rank(const RatMatrix& m);
/// Columns span the right null space; empty (n x 0) when trivial.
RatMatrix kernel_basis(const RatMatrix& m);
Rat determinant(RatMatrix m);
/// Throws DomainError for singular or non-square input.
RatMatrix inverse(const RatMatrix& m);
/// One solution of m x = b (free variables zero), or nullopt if inconsistent.
std::optional<RatMatrix> solve(const RatMatrix& m, const RatMatrix& b);
/// Appends standard basis vectors (lowest index first) to the given
/// independent columns until the result is square and nonsingular.
RatMatrix complete_basis(const RatMatrix& cols);

/// Characteristic polynomial det(xE - m), monic.
Poly characteristic_polynomial(const RatMatrix& m);
/// p(m) for square m.
RatMatrix eval_at_matrix(const Poly& p, const RatMatrix& m);

}  // namespace pencil
