#pragma once

// Common-denominator images of matrix polynomials: U = V / L with V
// Gaussian-integral. Products and metric checks run on V with mpz
// arithmetic, canonicalizing once per output entry instead of per term.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "jumat/poly.hpp"

namespace jumat::detail {

class IntegerImage {
 public:
  explicit IntegerImage(const MatrixPolynomial& u);
  IntegerImage(std::size_t rows, std::size_t cols, std::size_t terms,
               mpz_class scale);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t terms() const { return terms_; }
  const mpz_class& scale() const { return scale_; }

  /// Exact product image; its scale is the product of the scales.
  friend IntegerImage operator*(const IntegerImage& a, const IntegerImage& b);

  MatrixPolynomial to_polynomial() const;

  /// V D V* = L^2 D, or V* D V = L^2 D when `adjoint_first`.
  bool metric_product_is_scaled_metric(bool adjoint_first) const;

 private:
  std::size_t index(std::size_t t, std::size_t r, std::size_t c) const {
    return (t * rows_ + r) * cols_ + c;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::size_t terms_;
  mpz_class scale_;
  std::vector<mpz_class> re_;
  std::vector<mpz_class> im_;
};

}  // namespace jumat::detail
