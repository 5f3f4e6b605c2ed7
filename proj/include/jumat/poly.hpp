#pragma once

// Polynomials in a real variable omega with Gaussian-rational coefficients.
// Storage is dense and ascending: coeffs[k] multiplies omega^k. The Hermitian
// involution star() conjugates coefficients in place, since omega* = omega.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "jumat/linalg.hpp"
#include "jumat/scalar.hpp"

namespace jumat {

/// Degree of a polynomial; empty for the zero polynomial.
using Degree = std::optional<std::size_t>;

/// Sum of degrees, empty if either side is the zero polynomial.
inline Degree add_degrees(Degree a, Degree b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

class ScalarPoly {
 public:
  ScalarPoly() = default;
  explicit ScalarPoly(std::vector<GaussianRational> coeffs);
  static ScalarPoly monomial(GaussianRational c, std::size_t power);

  const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
  GaussianRational coefficient(std::size_t k) const;
  Degree degree() const;
  bool is_zero() const { return coeffs_.empty(); }

  ScalarPoly star() const;
  GaussianRational eval(const GaussianRational& x) const;

  ScalarPoly& operator+=(const ScalarPoly& o);
  ScalarPoly& operator-=(const ScalarPoly& o);
  ScalarPoly operator-() const;
  friend ScalarPoly operator+(ScalarPoly a, const ScalarPoly& b) {
    return a += b;
  }
  friend ScalarPoly operator-(ScalarPoly a, const ScalarPoly& b) {
    return a -= b;
  }
  friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);
  friend ScalarPoly operator*(const GaussianRational& s, ScalarPoly p);
  friend bool operator==(const ScalarPoly&, const ScalarPoly&) = default;

 private:
  void trim();
  std::vector<GaussianRational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const ScalarPoly& p);

/// Column-vector polynomial of fixed height.
class VectorPoly {
 public:
  explicit VectorPoly(std::size_t height = 0) : height_(height) {}
  VectorPoly(std::size_t height, std::vector<Vector> coeffs);

  std::size_t height() const { return height_; }
  const std::vector<Vector>& coeffs() const { return coeffs_; }
  Vector coefficient(std::size_t k) const;
  Degree degree() const;
  bool is_zero() const { return coeffs_.empty(); }

  VectorPoly& operator+=(const VectorPoly& o);
  VectorPoly operator-() const;
  friend VectorPoly operator+(VectorPoly a, const VectorPoly& b) {
    return a += b;
  }
  friend VectorPoly operator*(const Matrix& m, const VectorPoly& v);
  friend bool operator==(const VectorPoly&, const VectorPoly&) = default;

 private:
  void trim();
  std::size_t height_;
  std::vector<Vector> coeffs_;
};

/// g* h as a scalar polynomial.
ScalarPoly star_dot(const VectorPoly& g, const VectorPoly& h);

class MatrixPolynomial {
 public:
  MatrixPolynomial() = default;
  /// The zero polynomial of the given shape.
  MatrixPolynomial(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols) {}
  /// A constant polynomial.
  explicit MatrixPolynomial(const Matrix& constant);
  MatrixPolynomial(std::size_t rows, std::size_t cols,
                   std::vector<Matrix> coeffs);

  static MatrixPolynomial identity(std::size_t n) {
    return MatrixPolynomial(Matrix::identity(n));
  }
  /// a b* for vector polynomials (omega real, so b* conjugates in place).
  static MatrixPolynomial outer(const VectorPoly& a, const VectorPoly& b);
  /// p(omega) * M.
  static MatrixPolynomial scaled(const ScalarPoly& p, const Matrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<Matrix>& coeffs() const { return coeffs_; }

  Degree degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of omega^k; the zero matrix beyond the degree.
  Matrix coefficient(std::size_t k) const;
  /// (degree, leading coefficient); the zero polynomial has no leading term.
  std::optional<std::pair<std::size_t, Matrix>> leading() const;
  Matrix eval(const GaussianRational& x) const;

  MatrixPolynomial star() const;

  MatrixPolynomial& operator+=(const MatrixPolynomial& o);
  MatrixPolynomial& operator-=(const MatrixPolynomial& o);
  MatrixPolynomial operator-() const;
  friend MatrixPolynomial operator+(MatrixPolynomial a,
                                    const MatrixPolynomial& b) {
    return a += b;
  }
  friend MatrixPolynomial operator-(MatrixPolynomial a,
                                    const MatrixPolynomial& b) {
    return a -= b;
  }
  friend MatrixPolynomial operator*(const MatrixPolynomial& a,
                                    const MatrixPolynomial& b);
  friend MatrixPolynomial operator*(const MatrixPolynomial& a,
                                    const Matrix& b);
  friend MatrixPolynomial operator*(const Matrix& a,
                                    const MatrixPolynomial& b);
  friend MatrixPolynomial operator*(const GaussianRational& s,
                                    MatrixPolynomial m);
  friend bool operator==(const MatrixPolynomial&,
                         const MatrixPolynomial&) = default;

  /// Every coefficient real.
  bool is_real_omega() const;
  /// Coefficients of even powers real, of odd powers purely imaginary;
  /// equivalently real coefficients in lambda = i*omega.
  bool is_real_lambda() const;

 private:
  void trim();
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Matrix> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const MatrixPolynomial& m);

}  // namespace jumat
