#include "jumat/poly.hpp"

#include <algorithm>
#include <ostream>

#include "integer_image.hpp"
#include "jumat/errors.hpp"

namespace jumat {

// ScalarPoly

ScalarPoly::ScalarPoly(std::vector<GaussianRational> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

ScalarPoly ScalarPoly::monomial(GaussianRational c, std::size_t power) {
  std::vector<GaussianRational> coeffs(power + 1);
  coeffs[power] = std::move(c);
  return ScalarPoly(std::move(coeffs));
}

void ScalarPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussianRational ScalarPoly::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : GaussianRational{};
}

Degree ScalarPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

ScalarPoly ScalarPoly::star() const {
  ScalarPoly out(*this);
  for (auto& c : out.coeffs_) c = c.conj();
  return out;
}

GaussianRational ScalarPoly::eval(const GaussianRational& x) const {
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

ScalarPoly& ScalarPoly::operator+=(const ScalarPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

ScalarPoly& ScalarPoly::operator-=(const ScalarPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

ScalarPoly ScalarPoly::operator-() const {
  ScalarPoly out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return ScalarPoly(std::move(out));
}

ScalarPoly operator*(const GaussianRational& s, ScalarPoly p) {
  for (auto& c : p.coeffs_) c *= s;
  p.trim();
  return p;
}

std::ostream& operator<<(std::ostream& os, const ScalarPoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (p.coeffs()[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << p.coeffs()[k] << ')';
    if (k > 0) os << "w^" << k;
  }
  return os;
}

// VectorPoly

VectorPoly::VectorPoly(std::size_t height, std::vector<Vector> coeffs)
    : height_(height), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.size() != height_) throw DimensionError("vector polynomial height");
  }
  trim();
}

void VectorPoly::trim() {
  while (!coeffs_.empty() && jumat::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Vector VectorPoly::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : zero_vector(height_);
}

Degree VectorPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

VectorPoly& VectorPoly::operator+=(const VectorPoly& o) {
  if (o.height_ != height_) throw DimensionError("vector polynomial height");
  if (o.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(o.coeffs_.size(), zero_vector(height_));
  }
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
    coeffs_[k] = coeffs_[k] + o.coeffs_[k];
  }
  trim();
  return *this;
}

VectorPoly VectorPoly::operator-() const {
  VectorPoly out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

VectorPoly operator*(const Matrix& m, const VectorPoly& v) {
  std::vector<Vector> coeffs;
  coeffs.reserve(v.coeffs_.size());
  for (const auto& c : v.coeffs_) coeffs.push_back(m * c);
  return VectorPoly(m.rows(), std::move(coeffs));
}

ScalarPoly star_dot(const VectorPoly& g, const VectorPoly& h) {
  if (g.height() != h.height()) throw DimensionError("vector polynomial height");
  if (g.is_zero() || h.is_zero()) return {};
  std::vector<GaussianRational> out(g.coeffs().size() + h.coeffs().size() - 1);
  for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < h.coeffs().size(); ++j) {
      out[i + j] += inner(g.coeffs()[i], h.coeffs()[j]);
    }
  }
  return ScalarPoly(std::move(out));
}

// MatrixPolynomial

MatrixPolynomial::MatrixPolynomial(const Matrix& constant)
    : rows_(constant.rows()), cols_(constant.cols()), coeffs_{constant} {
  trim();
}

MatrixPolynomial::MatrixPolynomial(std::size_t rows, std::size_t cols,
                                   std::vector<Matrix> coeffs)
    : rows_(rows), cols_(cols), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.rows() != rows_ || c.cols() != cols_) {
      throw DimensionError("matrix polynomial coefficient shape");
    }
  }
  trim();
}

MatrixPolynomial MatrixPolynomial::outer(const VectorPoly& a,
                                         const VectorPoly& b) {
  MatrixPolynomial out(a.height(), b.height());
  if (a.is_zero() || b.is_zero()) return out;
  out.coeffs_.assign(a.coeffs().size() + b.coeffs().size() - 1,
                     Matrix(a.height(), b.height()));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      out.coeffs_[i + j] += Matrix::outer(a.coeffs()[i], b.coeffs()[j]);
    }
  }
  out.trim();
  return out;
}

MatrixPolynomial MatrixPolynomial::scaled(const ScalarPoly& p,
                                          const Matrix& m) {
  std::vector<Matrix> coeffs;
  coeffs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) coeffs.push_back(c * m);
  return MatrixPolynomial(m.rows(), m.cols(), std::move(coeffs));
}

void MatrixPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Degree MatrixPolynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Matrix MatrixPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Matrix(rows_, cols_);
}

std::optional<std::pair<std::size_t, Matrix>> MatrixPolynomial::leading()
    const {
  if (coeffs_.empty()) return std::nullopt;
  return std::make_pair(coeffs_.size() - 1, coeffs_.back());
}

Matrix MatrixPolynomial::eval(const GaussianRational& x) const {
  Matrix acc(rows_, cols_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = x * acc + *it;
  }
  return acc;
}

MatrixPolynomial MatrixPolynomial::star() const {
  MatrixPolynomial out(cols_, rows_);
  out.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.coeffs_.push_back(c.adjoint());
  return out;
}

MatrixPolynomial& MatrixPolynomial::operator+=(const MatrixPolynomial& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw DimensionError("matrix polynomial sum of different shapes");
  }
  if (o.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(o.coeffs_.size(), Matrix(rows_, cols_));
  }
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

MatrixPolynomial& MatrixPolynomial::operator-=(const MatrixPolynomial& o) {
  return *this += -o;
}

MatrixPolynomial MatrixPolynomial::operator-() const {
  MatrixPolynomial out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

MatrixPolynomial operator*(const MatrixPolynomial& a,
                           const MatrixPolynomial& b) {
  if (a.cols_ != b.rows_) {
    throw DimensionError("matrix polynomial product shape mismatch");
  }
  if (a.is_zero() || b.is_zero()) return MatrixPolynomial(a.rows_, b.cols_);
  return (detail::IntegerImage(a) * detail::IntegerImage(b)).to_polynomial();
}

MatrixPolynomial operator*(const MatrixPolynomial& a, const Matrix& b) {
  return a * MatrixPolynomial(b);
}

MatrixPolynomial operator*(const Matrix& a, const MatrixPolynomial& b) {
  return MatrixPolynomial(a) * b;
}

MatrixPolynomial operator*(const GaussianRational& s, MatrixPolynomial m) {
  for (auto& c : m.coeffs_) c = s * c;
  m.trim();
  return m;
}

bool MatrixPolynomial::is_real_omega() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Matrix& c) { return c.is_real(); });
}

bool MatrixPolynomial::is_real_lambda() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k % 2 == 0 ? !coeffs_[k].is_real() : !coeffs_[k].is_imaginary()) {
      return false;
    }
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const MatrixPolynomial& m) {
  if (m.is_zero()) return os << "0";
  for (std::size_t k = 0; k < m.coeffs().size(); ++k) {
    if (k) os << " + ";
    os << m.coeffs()[k];
    if (k > 0) os << "*w^" << k;
  }
  return os;
}

}  // namespace jumat
