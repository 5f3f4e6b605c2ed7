#pragma once

// Constant vectors and matrices over the Gaussian rationals.

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <vector>

#include "jumat/scalar.hpp"

namespace jumat {

using Vector = std::vector<GaussianRational>;

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const GaussianRational& s, const Vector& v);
Vector conj(const Vector& v);
bool is_zero(const Vector& v);
Vector zero_vector(std::size_t n);

/// a* b (conjugate-linear in a).
GaussianRational inner(const Vector& a, const Vector& b);
/// a* D b with D = diag{-1, 1, ..., 1}.
GaussianRational metric_inner(const Vector& a, const Vector& b);
/// D v.
Vector apply_metric(const Vector& v);

/// Returns lambda with b = lambda * a. Absent when a = 0 and b != 0, or when
/// b is not a multiple of a. For a = b = 0 the answer is 0.
std::optional<GaussianRational> is_parallel(const Vector& a, const Vector& b);
/// As is_parallel, but the multiplier must be real.
std::optional<Rational> is_real_parallel(const Vector& a, const Vector& b);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

  static Matrix identity(std::size_t n);
  /// D = diag{-1, 1, ..., 1}.
  static Matrix metric(std::size_t n);
  static Matrix column(const Vector& v);
  static Matrix row(const Vector& v);
  /// a b*.
  static Matrix outer(const Vector& a, const Vector& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  GaussianRational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vector col(std::size_t c) const;
  Vector row_vector(std::size_t r) const;

  bool is_zero() const;
  bool is_real() const;
  bool is_imaginary() const;

  /// Conjugate transpose.
  Matrix adjoint() const;
  Matrix conj() const;
  /// Exact Gauss-Jordan inverse; throws DimensionError when singular.
  Matrix inverse() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix operator-() const;

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const GaussianRational& s, Matrix m);
  friend Vector operator*(const Matrix& m, const Vector& v);
  friend bool operator==(const Matrix&, const Matrix&) = default;

  /// Row-major dump for hashing and diagnostics.
  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// Row vector times matrix: v* M.
Vector adjoint_times(const Vector& v, const Matrix& m);

/// Exact basis of {x | A x = 0} via reduced row echelon form. Each basis
/// vector has a 1 in its free coordinate and zeros in the other free ones.
std::vector<Vector> nullspace(const Matrix& a);

}  // namespace jumat
