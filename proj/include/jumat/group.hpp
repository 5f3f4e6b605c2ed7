#pragma once

// Generators G_z(phi, g) of the group of polynomial matrices U with
// U D U* = D, D = diag{-1, 1, ..., 1}, and words over them.
//
//   G_z(phi, g) = D [ z (phi - g*g / 2) z* + (z g* - g z*) ] + I
//
// with z isotropic and normalized (first entry 1, z* D z = 0), phi a purely
// imaginary polynomial without constant term, and g a vector polynomial
// without constant term whose coefficients d satisfy d* z = d* D z = 0.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "jumat/linalg.hpp"
#include "jumat/poly.hpp"
#include "jumat/scalar.hpp"

namespace jumat {

/// Coefficient regime. RealOmega: real coefficients in omega. RealLambda:
/// real coefficients in lambda = i*omega, i.e. even powers of omega real and
/// odd powers purely imaginary.
enum class Mode { Complex, RealOmega, RealLambda };

std::string_view to_string(Mode mode);
/// Accepts "complex", "real_omega", "real_lambda".
Mode parse_mode(std::string_view text);

/// A validated point of the isotropic cone with first entry 1.
class IsotropicDirection {
 public:
  const Vector& vector() const { return z_; }
  std::size_t dim() const { return z_.size(); }
  friend bool operator==(const IsotropicDirection&,
                         const IsotropicDirection&) = default;

 private:
  friend IsotropicDirection validate_xi(Vector z, Mode mode);
  explicit IsotropicDirection(Vector z) : z_(std::move(z)) {}
  Vector z_;
};

/// Throws ValidationError if z[0] != 1, z* D z != 0, or the entries do not fit
/// the mode (real modes need a real z).
IsotropicDirection validate_xi(Vector z, Mode mode = Mode::Complex);

/// phi(omega) = i * sum_k rhos[k] omega^(k+1), so phi(0) = 0 and phi* = -phi.
class PhasePoly {
 public:
  PhasePoly() = default;
  explicit PhasePoly(std::vector<Rational> rhos);
  /// Throws ValidationError unless p(0) = 0 and every coefficient is
  /// purely imaginary.
  static PhasePoly from_poly(const ScalarPoly& p);
  /// i * rho * omega^power.
  static PhasePoly monomial(Rational rho, std::size_t power);

  const std::vector<Rational>& rhos() const { return rhos_; }
  /// rho at omega^power (power >= 1); zero beyond the stored range.
  Rational rho(std::size_t power) const;
  bool is_zero() const { return rhos_.empty(); }
  ScalarPoly poly() const;

  PhasePoly operator-() const;
  friend PhasePoly operator+(const PhasePoly& a, const PhasePoly& b);
  friend bool operator==(const PhasePoly&, const PhasePoly&) = default;

 private:
  std::vector<Rational> rhos_;
};

/// g(omega) = sum_k terms[k] omega^(k+1).
class TangentPoly {
 public:
  explicit TangentPoly(std::size_t nu = 0) : poly_(nu) {}
  TangentPoly(std::size_t nu, std::vector<Vector> terms);
  /// Throws ValidationError if p has a nonzero constant term.
  static TangentPoly from_poly(const VectorPoly& p);
  /// d * omega^power.
  static TangentPoly monomial(const Vector& d, std::size_t power);

  std::size_t dim() const { return poly_.height(); }
  /// Coefficients of omega^1, omega^2, ...
  std::vector<Vector> terms() const;
  const VectorPoly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  TangentPoly operator-() const;
  friend TangentPoly operator+(const TangentPoly& a, const TangentPoly& b);
  friend bool operator==(const TangentPoly&, const TangentPoly&) = default;

 private:
  VectorPoly poly_;
};

struct GeneratorParams {
  IsotropicDirection z;
  PhasePoly phi;
  TangentPoly g;

  std::size_t dim() const { return z.dim(); }
  /// (phi, g) = (0, 0): the identity matrix.
  bool is_identity() const { return phi.is_zero() && g.is_zero(); }
  friend bool operator==(const GeneratorParams&,
                         const GeneratorParams&) = default;
};

std::ostream& operator<<(std::ostream& os, const GeneratorParams& p);

/// Factors multiplied left to right. Reduced when it has no identity factors
/// and adjacent factors have distinct directions.
struct Word {
  std::size_t nu = 0;
  std::vector<GeneratorParams> factors;

  bool empty() const { return factors.empty(); }
  friend bool operator==(const Word&, const Word&) = default;
};

/// W = diag{1, L} with L* L = I.
class ConstantUnitary {
 public:
  const Matrix& matrix() const { return w_; }
  std::size_t dim() const { return w_.rows(); }
  ConstantUnitary inverse() const;

 private:
  friend ConstantUnitary validate_upsilon(Matrix w);
  explicit ConstantUnitary(Matrix w) : w_(std::move(w)) {}
  Matrix w_;
};

/// Throws ValidationError unless w has the block form diag{1, L}, L unitary.
ConstantUnitary validate_upsilon(Matrix w);

/// d* z = 0 and d* D z = 0. Also cross-checks the equivalent form
/// d[0] = 0, sum_{k>0} conj(d_k) z_k = 0, and throws std::logic_error if the
/// two disagree.
bool in_delta0(const Vector& d, const IsotropicDirection& z);

/// Exact basis of the tangent space {d | d* z = d* D z = 0}, of size nu - 2.
std::vector<Vector> delta_basis(const IsotropicDirection& z);

/// Throws ValidationError when g is not tangent at z or when z, phi or g
/// violate the mode.
void validate_params(const GeneratorParams& p, Mode mode = Mode::Complex);
bool params_valid(const GeneratorParams& p, Mode mode);

/// Checks every factor and reducedness.
void validate_word(const Word& w, Mode mode = Mode::Complex);

/// phi - g* g, whose degree is the degree of the generator.
ScalarPoly phase_minus_norm(const GeneratorParams& p);
/// deg(phi - g* g); 0 for the identity.
std::size_t generator_degree(const GeneratorParams& p);

MatrixPolynomial build_generator(const GeneratorParams& p);

/// The identity of M_z.
GeneratorParams identity_params(const IsotropicDirection& z);

/// G_z(phi, g) G_z(psi, h) = G_z(phi + psi + (h*g - g*h)/2, g + h).
/// Throws ValidationError when the directions differ.
GeneratorParams group_compose(const GeneratorParams& a,
                              const GeneratorParams& b);
GeneratorParams group_inverse(const GeneratorParams& a);
/// a b a^-1 b^-1, always of the form (phi, 0).
GeneratorParams commutator(const GeneratorParams& a, const GeneratorParams& b);

/// W G_z(phi, g) W^-1 = G_{Wz}(phi, W g).
GeneratorParams conjugate_by_W(const ConstantUnitary& w,
                               const GeneratorParams& p);

/// star(G_z(phi, g)) = G_{-Dz}(-phi, g).
GeneratorParams star_generator(const GeneratorParams& p);

/// Product of the built factors, left to right; the identity for an empty word.
MatrixPolynomial word_to_matrix(const Word& w);

/// Merges adjacent factors sharing a direction and drops identities until the
/// word is reduced.
Word word_reduce(std::size_t nu, const std::vector<GeneratorParams>& factors);

/// Sum of generator degrees; equals the degree of the product for reduced
/// words.
std::size_t word_degree(const Word& w);

/// Inverse word: reversed order, each factor inverted.
Word word_inverse(const Word& w);

/// W applied factorwise.
Word conjugate_word(const ConstantUnitary& w, const Word& word);

}  // namespace jumat
