#pragma once

// Membership tests and the degree-reduction factorization of J-unitary
// polynomial matrices into their unique reduced word.
//
// Degree reduction works on the leading-first view of U of degree kappa:
// X_j is the coefficient of omega^(kappa - j), so X_0 is the leading
// coefficient and X_j = 0 for j > kappa.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jumat/errors.hpp"
#include "jumat/group.hpp"
#include "jumat/linalg.hpp"
#include "jumat/poly.hpp"

namespace jumat {

/// Degree-reduction failed: the input is not a normalized member, or an
/// internal identity did not hold. The message names the failed check.
class ReductionFailure : public NotMemberError {
 public:
  explicit ReductionFailure(const std::string& what)
      : NotMemberError("input not in M0: " + what) {}
};

/// Constant V with V D V* = D.
class ConstantJUnitary {
 public:
  const Matrix& matrix() const { return v_; }
  /// V^-1 = D V* D.
  Matrix inverse() const;

 private:
  friend ConstantJUnitary validate_constant_j_unitary(Matrix v);
  explicit ConstantJUnitary(Matrix v) : v_(std::move(v)) {}
  Matrix v_;
};

ConstantJUnitary validate_constant_j_unitary(Matrix v);

/// U D U* = D. Throws DimensionError for non-square input or size < 2.
/// When true, U* D U = D is also checked and a mismatch throws logic_error.
bool is_j_unitary(const MatrixPolynomial& u);
/// J-unitary and U(0) = I.
bool is_normalized_member(const MatrixPolynomial& u);
/// Coefficients fit the mode (real, or lambda-real).
bool matrix_in_mode(const MatrixPolynomial& u, Mode mode);

/// D U* D, the inverse of a member.
MatrixPolynomial j_inverse(const MatrixPolynomial& u);

/// U = U0 V with V = U(0) and U0(0) = I. Throws NotMemberError if U is not
/// J-unitary.
std::pair<MatrixPolynomial, ConstantJUnitary> split_constant(
    const MatrixPolynomial& u);

/// X = alpha D y z* with y, z normalized isotropic directions.
struct Dyad {
  GaussianRational alpha;
  IsotropicDirection y;
  IsotropicDirection z;
};

/// Throws NotMemberError unless X != 0, X D X* = X* D X = 0.
Dyad dyad_extract(const Matrix& x);

struct ScanIndices {
  /// X_j = alpha_j D y z* for all j < tau; 1 <= tau <= kappa.
  std::size_t tau = 0;
  /// Smallest j >= tau with X_j D z != 0.
  std::size_t mu = 0;
  /// Smallest j >= tau with y* X_j != 0.
  std::size_t xi = 0;
  friend bool operator==(const ScanIndices&, const ScanIndices&) = default;
};

/// Requires deg U > 0 and leading coefficient proportional to D y z*.
ScanIndices scan_indices(const MatrixPolynomial& u, const IsotropicDirection& y,
                         const IsotropicDirection& z);

/// X = D (r z* - y s* + alpha y z*) with s tangent at z and r tangent at y.
struct TangentParts {
  Vector r;
  Vector s;
  GaussianRational alpha;
};

/// Requires X D z = 0 and X D k parallel to D y for every tangent k at z.
/// Throws NotMemberError when those hypotheses or the reassembly fail.
TangentParts tangent_decompose(const Matrix& x, const IsotropicDirection& y,
                             const IsotropicDirection& z);

enum class Side { Left, Right };
/// Case1: a phase-only factor cancels the leading term (mu or xi < 2 tau).
/// Case2: a factor with tangent part d omega^tau and phase i rho omega^(2 tau).
enum class Branch { Case1, Case2 };

std::string_view to_string(Side side);
std::string_view to_string(Branch branch);

struct ReductionStep {
  Side side = Side::Right;
  Branch branch = Branch::Case1;
  /// Reduced = U * build(params) (Right) or build(params) * U (Left).
  GeneratorParams params;
  /// Indices scanned on the matrix the branch was applied to (star(U) for
  /// left steps).
  ScanIndices indices;
  std::size_t degree_before = 0;
  std::size_t degree_after = 0;
};

struct Reduction {
  MatrixPolynomial reduced;
  ReductionStep step;
};

/// One degree-lowering multiplication. Requires U in M0 with deg U > 0.
Reduction reduce_once(const MatrixPolynomial& u, Mode mode = Mode::Complex);

struct FactorizationResult {
  Word word;
  ConstantJUnitary tail;
  std::vector<ReductionStep> trace;
};

/// U = word_to_matrix(word) * tail with tail = U(0) and word reduced.
/// Throws NotMemberError (not J-unitary or reduction failure) or
/// ValidationError (mode violation).
FactorizationResult factor(const MatrixPolynomial& u, Mode mode = Mode::Complex,
                           bool verify = true);

struct RealOmegaReport {
  std::size_t nu = 0;
  /// No nonidentity real generator exists: M0 is trivial.
  bool trivial = false;
  /// Real directions sampled and the tangent dimension found at each.
  std::size_t directions_checked = 0;
  std::size_t tangent_dimension = 0;
  /// Phases in real_omega mode are identically 0.
  bool phase_trivial = true;
  std::size_t pairs_checked = 0;
  bool all_commute = true;
};

/// Real-omega structure checks: for nu = 2 the normalized group is trivial;
/// for nu > 2 same-direction real generators commute.
RealOmegaReport real_omega_checks(std::size_t nu, std::uint64_t seed = 1,
                               std::size_t pairs = 100);

}  // namespace jumat
