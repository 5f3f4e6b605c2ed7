#include "jumat/linalg.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "jumat/errors.hpp"

namespace jumat {

namespace {

void require_same_size(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector sizes differ");
}

}  // namespace

Vector operator+(const Vector& a, const Vector& b) {
  require_same_size(a, b);
  Vector out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  require_same_size(a, b);
  Vector out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

Vector operator-(const Vector& a) {
  Vector out(a);
  for (auto& x : out) x = -x;
  return out;
}

Vector operator*(const GaussianRational& s, const Vector& v) {
  Vector out(v);
  for (auto& x : out) x *= s;
  return out;
}

Vector conj(const Vector& v) {
  Vector out(v);
  for (auto& x : out) x = x.conj();
  return out;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vector zero_vector(std::size_t n) { return Vector(n); }

GaussianRational inner(const Vector& a, const Vector& b) {
  require_same_size(a, b);
  GaussianRational acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].conj() * b[i];
  return acc;
}

GaussianRational metric_inner(const Vector& a, const Vector& b) {
  require_same_size(a, b);
  if (a.empty()) return {};
  GaussianRational acc = -(a[0].conj() * b[0]);
  for (std::size_t i = 1; i < a.size(); ++i) acc += a[i].conj() * b[i];
  return acc;
}

Vector apply_metric(const Vector& v) {
  Vector out(v);
  if (!out.empty()) out[0] = -out[0];
  return out;
}

std::optional<GaussianRational> is_parallel(const Vector& a, const Vector& b) {
  require_same_size(a, b);
  std::size_t pivot = a.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero()) {
      pivot = i;
      break;
    }
  }
  if (pivot == a.size()) {
    if (is_zero(b)) return GaussianRational{};
    return std::nullopt;
  }
  GaussianRational lambda = b[pivot] / a[pivot];
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (lambda * a[i] != b[i]) return std::nullopt;
  }
  return lambda;
}

std::optional<Rational> is_real_parallel(const Vector& a, const Vector& b) {
  auto lambda = is_parallel(a, b);
  if (!lambda || !lambda->is_real()) return std::nullopt;
  return lambda->re();
}

Matrix::Matrix(
    std::initializer_list<std::initializer_list<GaussianRational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::metric(std::size_t n) {
  Matrix m = identity(n);
  if (n > 0) m(0, 0) = -1;
  return m;
}

Matrix Matrix::column(const Vector& v) {
  Matrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Matrix Matrix::row(const Vector& v) {
  Matrix m(1, v.size());
  for (std::size_t i = 0; i < v.size(); ++i) m(0, i) = v[i];
  return m;
}

Matrix Matrix::outer(const Vector& a, const Vector& b) {
  Matrix m(a.size(), b.size());
  for (std::size_t j = 0; j < b.size(); ++j) {
    const GaussianRational bj = b[j].conj();
    if (bj.is_zero()) continue;
    for (std::size_t i = 0; i < a.size(); ++i) m(i, j) = a[i] * bj;
  }
  return m;
}

Vector Matrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row_vector(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_real() const {
  for (const auto& x : data_) {
    if (!x.is_real()) return false;
  }
  return true;
}

bool Matrix::is_imaginary() const {
  for (const auto& x : data_) {
    if (!x.is_imaginary()) return false;
  }
  return true;
}

Matrix Matrix::adjoint() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c).conj();
  }
  return out;
}

Matrix Matrix::conj() const {
  Matrix out(*this);
  for (auto& x : out.data_) x = x.conj();
  return out;
}

Matrix Matrix::inverse() const {
  if (!is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = rows_;
  Matrix a(*this);
  Matrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw DimensionError("matrix is singular");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const GaussianRational scale = GaussianRational(1) / a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const GaussianRational f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw DimensionError("matrix sum of different shapes");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw DimensionError("matrix difference of different shapes");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix out(*this);
  for (auto& x : out.data_) x = -x;
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const GaussianRational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const GaussianRational& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

Matrix operator*(const GaussianRational& s, Matrix m) {
  for (auto& x : m.data_) x *= s;
  return m;
}

Vector operator*(const Matrix& m, const Vector& v) {
  if (m.cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
  Vector out(m.rows_);
  for (std::size_t i = 0; i < m.rows_; ++i) {
    for (std::size_t k = 0; k < m.cols_; ++k) {
      if (!v[k].is_zero()) out[i] += m(i, k) * v[k];
    }
  }
  return out;
}

Vector adjoint_times(const Vector& v, const Matrix& m) {
  if (m.rows() != v.size()) throw DimensionError("row-vector shape mismatch");
  Vector out(m.cols());
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (v[k].is_zero()) continue;
    const GaussianRational vk = v[k].conj();
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += vk * m(k, j);
  }
  return out;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ", ";
      os << m(r, c);
    }
    os << ']';
  }
  return os << ']';
}

std::vector<Vector> nullspace(const Matrix& a) {
  Matrix m(a);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    }
    const GaussianRational scale = GaussianRational(1) / m(r, c);
    for (std::size_t j = 0; j < cols; ++j) m(r, j) *= scale;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const GaussianRational f = m(i, c);
      for (std::size_t j = 0; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace jumat
