#include "integer_image.hpp"

#include <algorithm>

#include "jumat/errors.hpp"

namespace jumat::detail {

IntegerImage::IntegerImage(const MatrixPolynomial& u)
    : rows_(u.rows()), cols_(u.cols()), terms_(u.coeffs().size()), scale_(1) {
  for (const auto& c : u.coeffs()) {
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t k = 0; k < cols_; ++k) {
        mpz_lcm(scale_.get_mpz_t(), scale_.get_mpz_t(),
                c(r, k).re().value().get_den_mpz_t());
        mpz_lcm(scale_.get_mpz_t(), scale_.get_mpz_t(),
                c(r, k).im().value().get_den_mpz_t());
      }
    }
  }
  re_.resize(terms_ * rows_ * cols_);
  im_.resize(terms_ * rows_ * cols_);
  mpz_class q;
  for (std::size_t t = 0; t < terms_; ++t) {
    const Matrix& c = u.coeffs()[t];
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const mpq_class& re = c(r, k).re().value();
        const mpq_class& im = c(r, k).im().value();
        mpz_divexact(q.get_mpz_t(), scale_.get_mpz_t(), re.get_den_mpz_t());
        re_[index(t, r, k)] = re.get_num() * q;
        mpz_divexact(q.get_mpz_t(), scale_.get_mpz_t(), im.get_den_mpz_t());
        im_[index(t, r, k)] = im.get_num() * q;
      }
    }
  }
}

IntegerImage::IntegerImage(std::size_t rows, std::size_t cols,
                           std::size_t terms, mpz_class scale)
    : rows_(rows),
      cols_(cols),
      terms_(terms),
      scale_(std::move(scale)),
      re_(terms * rows * cols),
      im_(terms * rows * cols) {}

IntegerImage operator*(const IntegerImage& a, const IntegerImage& b) {
  if (a.cols_ != b.rows_) {
    throw DimensionError("matrix polynomial product shape mismatch");
  }
  if (a.terms_ == 0 || b.terms_ == 0) {
    return IntegerImage(a.rows_, b.cols_, 0, a.scale_ * b.scale_);
  }
  IntegerImage out(a.rows_, b.cols_, a.terms_ + b.terms_ - 1,
                   a.scale_ * b.scale_);
  for (std::size_t i = 0; i < a.terms_; ++i) {
    for (std::size_t j = 0; j < b.terms_; ++j) {
      for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t m = 0; m < a.cols_; ++m) {
          const mpz_class& xr = a.re_[a.index(i, r, m)];
          const mpz_class& xi = a.im_[a.index(i, r, m)];
          const bool x_real_zero = xr == 0;
          const bool x_imag_zero = xi == 0;
          if (x_real_zero && x_imag_zero) continue;
          for (std::size_t c = 0; c < b.cols_; ++c) {
            const mpz_class& yr = b.re_[b.index(j, m, c)];
            const mpz_class& yi = b.im_[b.index(j, m, c)];
            mpz_class& zr = out.re_[out.index(i + j, r, c)];
            mpz_class& zi = out.im_[out.index(i + j, r, c)];
            if (!x_real_zero) {
              mpz_addmul(zr.get_mpz_t(), xr.get_mpz_t(), yr.get_mpz_t());
              mpz_addmul(zi.get_mpz_t(), xr.get_mpz_t(), yi.get_mpz_t());
            }
            if (!x_imag_zero) {
              mpz_submul(zr.get_mpz_t(), xi.get_mpz_t(), yi.get_mpz_t());
              mpz_addmul(zi.get_mpz_t(), xi.get_mpz_t(), yr.get_mpz_t());
            }
          }
        }
      }
    }
  }
  return out;
}

MatrixPolynomial IntegerImage::to_polynomial() const {
  std::vector<Matrix> coeffs(terms_, Matrix(rows_, cols_));
  for (std::size_t t = 0; t < terms_; ++t) {
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        coeffs[t](r, c) =
            GaussianRational(Rational(mpq_class(re_[index(t, r, c)], scale_)),
                             Rational(mpq_class(im_[index(t, r, c)], scale_)));
      }
    }
  }
  return MatrixPolynomial(rows_, cols_, std::move(coeffs));
}

bool IntegerImage::metric_product_is_scaled_metric(bool adjoint_first) const {
  if (terms_ == 0 || rows_ != cols_) return false;
  const std::size_t n = rows_;
  const mpz_class target = scale_ * scale_;
  mpz_class acc_re;
  mpz_class acc_im;
  mpz_class tmp;
  for (std::size_t power = 0; power + 1 < 2 * terms_; ++power) {
    const std::size_t lo = power + 1 > terms_ ? power + 1 - terms_ : 0;
    const std::size_t hi = std::min(power, terms_ - 1);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        acc_re = 0;
        acc_im = 0;
        for (std::size_t i = lo; i <= hi; ++i) {
          const std::size_t j = power - i;
          for (std::size_t m = 0; m < n; ++m) {
            // Forward term d_m x conj(y) with x = V_i[r][m], y = V_j[c][m];
            // adjoint term d_m conj(x) y with x = V_i[m][r], y = V_j[m][c].
            const std::size_t ia = adjoint_first ? index(i, m, r) : index(i, r, m);
            const std::size_t ib = adjoint_first ? index(j, m, c) : index(j, c, m);
            const mpz_class& xr = re_[ia];
            const mpz_class& xi = im_[ia];
            const mpz_class& yr = re_[ib];
            const mpz_class& yi = im_[ib];
            const bool negative = m == 0;
            if (negative) {
              mpz_submul(acc_re.get_mpz_t(), xr.get_mpz_t(), yr.get_mpz_t());
              mpz_submul(acc_re.get_mpz_t(), xi.get_mpz_t(), yi.get_mpz_t());
            } else {
              mpz_addmul(acc_re.get_mpz_t(), xr.get_mpz_t(), yr.get_mpz_t());
              mpz_addmul(acc_re.get_mpz_t(), xi.get_mpz_t(), yi.get_mpz_t());
            }
            // Im(x conj(y)) = xi yr - xr yi; Im(conj(x) y) is its negation.
            tmp = xi * yr;
            mpz_submul(tmp.get_mpz_t(), xr.get_mpz_t(), yi.get_mpz_t());
            if (adjoint_first != negative) {
              acc_im -= tmp;
            } else {
              acc_im += tmp;
            }
          }
        }
        const bool on_metric = power == 0 && r == c;
        const mpz_class expected =
            on_metric ? (r == 0 ? mpz_class(-target) : target) : mpz_class(0);
        if (acc_re != expected || acc_im != 0) return false;
      }
    }
  }
  return true;
}

}  // namespace jumat::detail
