#include "jumat/group.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "jumat/errors.hpp"

namespace jumat {

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::Complex:
      return "complex";
    case Mode::RealOmega:
      return "real_omega";
    case Mode::RealLambda:
      return "real_lambda";
  }
  return "complex";
}

Mode parse_mode(std::string_view text) {
  if (text == "complex") return Mode::Complex;
  if (text == "real_omega") return Mode::RealOmega;
  if (text == "real_lambda") return Mode::RealLambda;
  throw ParseError("unknown mode '" + std::string(text) + "'");
}

namespace {

bool vector_is_real(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_real()) return false;
  }
  return true;
}

bool vector_is_imaginary(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_imaginary()) return false;
  }
  return true;
}

// Real for even powers, imaginary for odd ones.
bool lambda_real_term(const Vector& v, std::size_t power) {
  return power % 2 == 0 ? vector_is_real(v) : vector_is_imaginary(v);
}

void require_same_direction(const GeneratorParams& a,
                            const GeneratorParams& b) {
  if (!(a.z == b.z)) {
    throw ValidationError("generators belong to different directions");
  }
}

}  // namespace

IsotropicDirection validate_xi(Vector z, Mode mode) {
  if (z.size() < 2) throw ValidationError("direction needs at least 2 entries");
  if (z[0] != GaussianRational(1)) {
    throw ValidationError("direction must have first entry 1");
  }
  if (!metric_inner(z, z).is_zero()) {
    throw ValidationError("direction is not isotropic: z*Dz = " +
                          metric_inner(z, z).str());
  }
  if (mode != Mode::Complex && !vector_is_real(z)) {
    throw ValidationError("direction must be real in mode " +
                          std::string(to_string(mode)));
  }
  return IsotropicDirection(std::move(z));
}

// PhasePoly

PhasePoly::PhasePoly(std::vector<Rational> rhos) : rhos_(std::move(rhos)) {
  while (!rhos_.empty() && rhos_.back().is_zero()) rhos_.pop_back();
}

PhasePoly PhasePoly::from_poly(const ScalarPoly& p) {
  if (!p.coefficient(0).is_zero()) {
    throw ValidationError("phase must vanish at 0");
  }
  std::vector<Rational> rhos;
  for (std::size_t k = 1; k < p.coeffs().size(); ++k) {
    const auto& c = p.coeffs()[k];
    if (!c.is_imaginary()) {
      throw ValidationError("phase coefficient " + c.str() +
                            " is not purely imaginary");
    }
    rhos.push_back(c.im());
  }
  return PhasePoly(std::move(rhos));
}

PhasePoly PhasePoly::monomial(Rational rho, std::size_t power) {
  if (power == 0) throw ValidationError("phase must vanish at 0");
  std::vector<Rational> rhos(power);
  rhos[power - 1] = std::move(rho);
  return PhasePoly(std::move(rhos));
}

Rational PhasePoly::rho(std::size_t power) const {
  if (power == 0 || power > rhos_.size()) return Rational(0);
  return rhos_[power - 1];
}

ScalarPoly PhasePoly::poly() const {
  std::vector<GaussianRational> coeffs(rhos_.size() + 1);
  for (std::size_t k = 0; k < rhos_.size(); ++k) {
    coeffs[k + 1] = GaussianRational(Rational(0), rhos_[k]);
  }
  return ScalarPoly(std::move(coeffs));
}

PhasePoly PhasePoly::operator-() const {
  std::vector<Rational> out(rhos_);
  for (auto& r : out) r = -r;
  return PhasePoly(std::move(out));
}

PhasePoly operator+(const PhasePoly& a, const PhasePoly& b) {
  std::vector<Rational> out(std::max(a.rhos_.size(), b.rhos_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = a.rho(k + 1) + b.rho(k + 1);
  }
  return PhasePoly(std::move(out));
}

// TangentPoly

TangentPoly::TangentPoly(std::size_t nu, std::vector<Vector> terms) {
  std::vector<Vector> coeffs;
  coeffs.reserve(terms.size() + 1);
  coeffs.push_back(zero_vector(nu));
  for (auto& t : terms) coeffs.push_back(std::move(t));
  poly_ = VectorPoly(nu, std::move(coeffs));
}

TangentPoly TangentPoly::from_poly(const VectorPoly& p) {
  if (!jumat::is_zero(p.coefficient(0))) {
    throw ValidationError("tangent polynomial must vanish at 0");
  }
  TangentPoly out(p.height());
  out.poly_ = p;
  return out;
}

TangentPoly TangentPoly::monomial(const Vector& d, std::size_t power) {
  if (power == 0) throw ValidationError("tangent polynomial must vanish at 0");
  std::vector<Vector> terms(power, zero_vector(d.size()));
  terms[power - 1] = d;
  return TangentPoly(d.size(), std::move(terms));
}

std::vector<Vector> TangentPoly::terms() const {
  const auto& c = poly_.coeffs();
  if (c.size() <= 1) return {};
  return std::vector<Vector>(c.begin() + 1, c.end());
}

TangentPoly TangentPoly::operator-() const { return from_poly(-poly_); }

TangentPoly operator+(const TangentPoly& a, const TangentPoly& b) {
  return TangentPoly::from_poly(a.poly_ + b.poly_);
}

std::ostream& operator<<(std::ostream& os, const GeneratorParams& p) {
  os << "G_z(phi, g) with z = (";
  for (std::size_t i = 0; i < p.z.dim(); ++i) {
    if (i) os << ", ";
    os << p.z.vector()[i];
  }
  os << "), phi = " << p.phi.poly() << ", g = [";
  const auto terms = p.g.terms();
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (k) os << "; ";
    os << "w^" << (k + 1) << ": (";
    for (std::size_t i = 0; i < terms[k].size(); ++i) {
      if (i) os << ", ";
      os << terms[k][i];
    }
    os << ')';
  }
  return os << ']';
}

// ConstantUnitary

ConstantUnitary ConstantUnitary::inverse() const {
  return ConstantUnitary(w_.adjoint());
}

ConstantUnitary validate_upsilon(Matrix w) {
  if (!w.is_square() || w.rows() < 2) {
    throw ValidationError("W must be square of size at least 2");
  }
  const std::size_t n = w.rows();
  if (w(0, 0) != GaussianRational(1)) {
    throw ValidationError("W must have W[0][0] = 1");
  }
  for (std::size_t k = 1; k < n; ++k) {
    if (!w(0, k).is_zero() || !w(k, 0).is_zero()) {
      throw ValidationError("W must have block form diag{1, L}");
    }
  }
  if (w.adjoint() * w != Matrix::identity(n)) {
    throw ValidationError("W = diag{1, L} needs L* L = I");
  }
  return ConstantUnitary(std::move(w));
}

// Tangent spaces

bool in_delta0(const Vector& d, const IsotropicDirection& z) {
  if (d.size() != z.dim()) throw DimensionError("tangent vector size");
  const bool by_definition = inner(d, z.vector()).is_zero() &&
                             metric_inner(d, z.vector()).is_zero();
  GaussianRational tail;
  for (std::size_t k = 1; k < d.size(); ++k) tail += conj(d[k]) * z.vector()[k];
  const bool by_structure = d[0].is_zero() && tail.is_zero();
  if (by_definition != by_structure) {
    throw std::logic_error("tangent space characterizations disagree");
  }
  return by_definition;
}

std::vector<Vector> delta_basis(const IsotropicDirection& z) {
  const std::size_t n = z.dim();
  // Rows z* and z* D: d* z = 0 <=> z* d = 0, d* D z = 0 <=> z* D d = 0.
  Matrix conditions(2, n);
  const Vector zc = conj(z.vector());
  for (std::size_t k = 0; k < n; ++k) {
    conditions(0, k) = zc[k];
    conditions(1, k) = k == 0 ? -zc[k] : zc[k];
  }
  return nullspace(conditions);
}

void validate_params(const GeneratorParams& p, Mode mode) {
  const std::size_t n = p.dim();
  if (p.g.dim() != n) throw ValidationError("tangent polynomial has wrong height");
  if (mode != Mode::Complex) {
    // Re-validating z catches directions built under a different mode.
    (void)validate_xi(p.z.vector(), mode);
  }
  const auto terms = p.g.terms();
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (!in_delta0(terms[k], p.z)) {
      throw ValidationError("tangent coefficient of omega^" +
                            std::to_string(k + 1) + " is not in Delta_z");
    }
  }
  switch (mode) {
    case Mode::Complex:
      break;
    case Mode::RealOmega:
      if (!p.phi.is_zero()) {
        throw ValidationError("real_omega mode admits only phi = 0");
      }
      for (const auto& t : terms) {
        if (!vector_is_real(t)) {
          throw ValidationError("real_omega mode needs a real tangent");
        }
      }
      break;
    case Mode::RealLambda:
      for (std::size_t k = 0; k < p.phi.rhos().size(); ++k) {
        if ((k + 1) % 2 == 0 && !p.phi.rhos()[k].is_zero()) {
          throw ValidationError(
              "real_lambda mode admits only odd powers in phi");
        }
      }
      for (std::size_t k = 0; k < terms.size(); ++k) {
        if (!lambda_real_term(terms[k], k + 1)) {
          throw ValidationError("real_lambda tangent coefficient of omega^" +
                                std::to_string(k + 1) +
                                " has the wrong parity");
        }
      }
      break;
  }
}

bool params_valid(const GeneratorParams& p, Mode mode) {
  try {
    validate_params(p, mode);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

void validate_word(const Word& w, Mode mode) {
  for (std::size_t k = 0; k < w.factors.size(); ++k) {
    const auto& f = w.factors[k];
    if (f.dim() != w.nu) throw ValidationError("factor size differs from word");
    validate_params(f, mode);
    if (f.is_identity()) {
      throw ValidationError("reduced word contains an identity factor");
    }
    if (k > 0 && w.factors[k - 1].z == f.z) {
      throw ValidationError("adjacent factors share a direction");
    }
  }
}

// Generators

ScalarPoly phase_minus_norm(const GeneratorParams& p) {
  return p.phi.poly() - star_dot(p.g.poly(), p.g.poly());
}

std::size_t generator_degree(const GeneratorParams& p) {
  return phase_minus_norm(p).degree().value_or(0);
}

MatrixPolynomial build_generator(const GeneratorParams& p) {
  const std::size_t n = p.dim();
  const Vector& z = p.z.vector();
  const Matrix metric = Matrix::metric(n);
  const VectorPoly zp(n, {z});
  const ScalarPoly half_norm =
      GaussianRational(Rational(1, 2)) * star_dot(p.g.poly(), p.g.poly());
  MatrixPolynomial inner_part =
      MatrixPolynomial::scaled(p.phi.poly() - half_norm, Matrix::outer(z, z));
  inner_part += MatrixPolynomial::outer(zp, p.g.poly());
  inner_part -= MatrixPolynomial::outer(p.g.poly(), zp);
  return metric * inner_part + MatrixPolynomial::identity(n);
}

GeneratorParams identity_params(const IsotropicDirection& z) {
  return {z, PhasePoly(), TangentPoly(z.dim())};
}

GeneratorParams group_compose(const GeneratorParams& a,
                              const GeneratorParams& b) {
  require_same_direction(a, b);
  const ScalarPoly twice_correction =
      star_dot(b.g.poly(), a.g.poly()) - star_dot(a.g.poly(), b.g.poly());
  const PhasePoly correction = PhasePoly::from_poly(
      GaussianRational(Rational(1, 2)) * twice_correction);
  return {a.z, a.phi + b.phi + correction, a.g + b.g};
}

GeneratorParams group_inverse(const GeneratorParams& a) {
  return {a.z, -a.phi, -a.g};
}

GeneratorParams commutator(const GeneratorParams& a, const GeneratorParams& b) {
  require_same_direction(a, b);
  GeneratorParams out = group_compose(
      group_compose(group_compose(a, b), group_inverse(a)), group_inverse(b));
  if (!out.g.is_zero()) {
    throw std::logic_error("commutator has a nonzero tangent part");
  }
  return out;
}

GeneratorParams conjugate_by_W(const ConstantUnitary& w,
                               const GeneratorParams& p) {
  if (w.dim() != p.dim()) throw DimensionError("W and generator sizes differ");
  IsotropicDirection wz = validate_xi(w.matrix() * p.z.vector());
  GeneratorParams out{std::move(wz), p.phi,
                      TangentPoly::from_poly(w.matrix() * p.g.poly())};
  validate_params(out);
  return out;
}

GeneratorParams star_generator(const GeneratorParams& p) {
  IsotropicDirection z = validate_xi(-apply_metric(p.z.vector()));
  return {std::move(z), -p.phi, p.g};
}

// Words

MatrixPolynomial word_to_matrix(const Word& w) {
  MatrixPolynomial out = MatrixPolynomial::identity(w.nu);
  for (const auto& f : w.factors) {
    if (f.dim() != w.nu) throw DimensionError("factor size differs from word");
    out = out * build_generator(f);
  }
  return out;
}

Word word_reduce(std::size_t nu, const std::vector<GeneratorParams>& factors) {
  Word out{nu, {}};
  for (const auto& f : factors) {
    if (f.dim() != nu) throw DimensionError("factor size differs from word");
    if (f.is_identity()) continue;
    if (!out.factors.empty() && out.factors.back().z == f.z) {
      GeneratorParams merged = group_compose(out.factors.back(), f);
      out.factors.pop_back();
      if (!merged.is_identity()) out.factors.push_back(std::move(merged));
    } else {
      out.factors.push_back(f);
    }
  }
  return out;
}

std::size_t word_degree(const Word& w) {
  std::size_t total = 0;
  for (const auto& f : w.factors) total += generator_degree(f);
  return total;
}

Word word_inverse(const Word& w) {
  Word out{w.nu, {}};
  for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) {
    out.factors.push_back(group_inverse(*it));
  }
  return out;
}

Word conjugate_word(const ConstantUnitary& w, const Word& word) {
  Word out{word.nu, {}};
  for (const auto& f : word.factors) out.factors.push_back(conjugate_by_W(w, f));
  return out;
}

}  // namespace jumat
