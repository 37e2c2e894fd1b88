#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "liecoh/scalar.hpp"

namespace liecoh {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over the Gaussian rationals. Matrices act on
/// column vectors: `apply(x)` is `M x`.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Matrix whose rows are the given vectors (all of length `cols`).
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  Vector column(std::size_t c) const;

  Vector apply(std::span<const Scalar> x) const;
  Matrix transpose() const;
  Matrix conjugate() const;
  bool is_zero() const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Kronecker product; `kron(A, I_m)` lays out index (i, a) as i*m + a.
Matrix kron(const Matrix& a, const Matrix& b);
/// a*b - b*a
Matrix commutator(const Matrix& a, const Matrix& b);

bool is_zero_vector(std::span<const Scalar> v);

}  // namespace liecoh
