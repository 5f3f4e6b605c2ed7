#include "jumat/factorization.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "integer_image.hpp"
#include "jumat/sampling.hpp"

namespace jumat {

namespace {

void require_square(const MatrixPolynomial& u) {
  if (!u.is_square() || u.rows() < 2) {
    throw DimensionError("expected a square matrix of size at least 2");
  }
}

// X_j in the leading-first view.
Matrix leading_view(const MatrixPolynomial& u, std::size_t kappa,
                    std::size_t j) {
  return j > kappa ? Matrix(u.rows(), u.cols()) : u.coefficient(kappa - j);
}

// alpha with X = alpha * base, where base(0, 0) != 0.
std::optional<GaussianRational> proportional(const Matrix& x,
                                             const Matrix& base) {
  GaussianRational alpha = x(0, 0) / base(0, 0);
  if (alpha * base != x) return std::nullopt;
  return alpha;
}

Matrix dyad_matrix(const IsotropicDirection& y, const IsotropicDirection& z) {
  return Matrix::metric(y.dim()) * Matrix::outer(y.vector(), z.vector());
}

std::string describe(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ')';
  return os.str();
}

struct Analysis {
  std::size_t kappa = 0;
  Dyad dyad;
  ScanIndices indices;
};

Analysis analyze(const MatrixPolynomial& u) {
  const auto lead = u.leading();
  if (!lead || lead->first == 0) {
    throw PreconditionError("degree reduction needs deg U > 0");
  }
  Dyad dyad = dyad_extract(lead->second);
  ScanIndices idx = scan_indices(u, dyad.y, dyad.z);
  return {lead->first, std::move(dyad), idx};
}

struct RightStep {
  GeneratorParams params;
  Branch branch;
};

// A factor G_z(phi, g) with deg(U G) < deg U, or nothing when the
// reduction has to happen on the left.
std::optional<RightStep> right_reduction(const MatrixPolynomial& u,
                                         const Analysis& a) {
  const std::size_t n = u.rows();
  const auto& [kappa, dyad, idx] = a;
  const Vector dy = apply_metric(dyad.y.vector());
  const Vector dz = apply_metric(dyad.z.vector());
  const std::size_t tau = idx.tau;

  if (idx.mu < 2 * tau) {
    // alpha_0 D y + i rho X_mu D z = 0 with real rho.
    const Vector v = leading_view(u, kappa, idx.mu) * dz;
    const auto c = is_parallel(dy, v);
    if (!c || c->is_zero()) {
      throw ReductionFailure("X_mu D z is not a nonzero multiple of D y");
    }
    const GaussianRational rho = GaussianRational::i() * dyad.alpha / *c;
    if (!rho.is_real()) {
      throw ReductionFailure("phase multiplier rho = " + rho.str() +
                             " is not real");
    }
    return RightStep{
        {dyad.z, PhasePoly::monomial(rho.re(), idx.mu), TangentPoly(n)},
        Branch::Case1};
  }
  if (idx.xi < 2 * tau) return std::nullopt;

  const TangentParts parts =
      tangent_decompose(leading_view(u, kappa, tau), dyad.y, dyad.z);
  if (is_zero(parts.s)) {
    if (is_zero(parts.r)) {
      throw ReductionFailure("X_tau decomposes with r = s = 0");
    }
    return std::nullopt;
  }

  const Vector s0 = (GaussianRational(1) / dyad.alpha.conj()) * parts.s;
  const Rational s0_norm = inner(s0, s0).re();
  const Rational half_norm = s0_norm / Rational(2);
  const Vector w = leading_view(u, kappa, 2 * tau) * dz;
  const Vector p = dyad.alpha * dy;
  const auto c = is_parallel(p, w);
  if (!c) throw ReductionFailure("X_2tau D z is not parallel to alpha_0 D y");
  const Rational& sigma0 = c->re();
  const Rational& rho0 = c->im();
  if (sigma0 != -half_norm) {
    throw ReductionFailure("sigma_0 = " + sigma0.str() + " but -|s_0|^2/2 = " +
                           (-half_norm).str());
  }

  Rational rho;
  GaussianRational theta;
  if (rho0.is_zero()) {
    theta = GaussianRational(Rational(-1) / half_norm);
  } else {
    const Rational denom = rho0 * rho0 + half_norm * half_norm;
    theta = GaussianRational(-half_norm / denom, rho0 / denom);
    const GaussianRational shifted =
        GaussianRational(1) + GaussianRational(half_norm) * theta;
    rho = shifted.abs2() / rho0;
  }
  const Vector d = theta * s0;

  // epsilon = 1 + s0* d + (i rho0 - |s0|^2/2)(i rho - |d|^2/2) must vanish.
  const GaussianRational epsilon =
      GaussianRational(1) + inner(s0, d) +
      GaussianRational(-half_norm, rho0) *
          GaussianRational(-inner(d, d).re() / Rational(2), rho);
  if (!epsilon.is_zero()) {
    throw ReductionFailure("annihilation coefficient epsilon = " +
                           epsilon.str());
  }
  return RightStep{{dyad.z, PhasePoly::monomial(rho, 2 * tau),
                    TangentPoly::monomial(d, tau)},
                   Branch::Case2};
}

Reduction reduce_unchecked(const MatrixPolynomial& u, Mode mode) {
  const Analysis a = analyze(u);
  const std::size_t before = a.kappa;

  Side side = Side::Right;
  std::optional<RightStep> step = right_reduction(u, a);
  ScanIndices indices = a.indices;
  if (!step) {
    // Left reductions: reduce star(U) on the right, then star back using
    // star(G_z(phi, g)) = G_{-Dz}(-phi, g).
    const MatrixPolynomial v = u.star();
    const Analysis b = analyze(v);
    auto mirrored = right_reduction(v, b);
    if (!mirrored) {
      throw ReductionFailure("neither a right nor a left reduction applies");
    }
    side = Side::Left;
    indices = b.indices;
    step = RightStep{star_generator(mirrored->params), mirrored->branch};
  }

  MatrixPolynomial reduced = side == Side::Right
                                 ? u * build_generator(step->params)
                                 : build_generator(step->params) * u;
  const std::size_t after = reduced.degree().value_or(0);
  if (reduced.is_zero() || after >= before) {
    throw ReductionFailure("degree did not decrease (" +
                           std::to_string(before) + " -> " +
                           std::to_string(after) + ")");
  }
  if (!params_valid(step->params, mode)) {
    throw ReductionFailure("reduction factor leaves mode " +
                           std::string(to_string(mode)));
  }
  return {std::move(reduced),
          ReductionStep{side, step->branch, std::move(step->params), indices,
                        before, after}};
}

}  // namespace

std::string_view to_string(Side side) {
  return side == Side::Left ? "left" : "right";
}

std::string_view to_string(Branch branch) {
  return branch == Branch::Case1 ? "case1" : "case2";
}

Matrix ConstantJUnitary::inverse() const {
  const Matrix d = Matrix::metric(v_.rows());
  return d * v_.adjoint() * d;
}

ConstantJUnitary validate_constant_j_unitary(Matrix v) {
  if (!v.is_square() || v.rows() < 2) {
    throw DimensionError("expected a square matrix of size at least 2");
  }
  const Matrix d = Matrix::metric(v.rows());
  if (v * d * v.adjoint() != d) {
    throw NotMemberError("constant matrix is not J-unitary");
  }
  return ConstantJUnitary(std::move(v));
}

bool is_j_unitary(const MatrixPolynomial& u) {
  require_square(u);
  const detail::IntegerImage image(u);
  const bool forward = image.metric_product_is_scaled_metric(false);
  if (forward && !image.metric_product_is_scaled_metric(true)) {
    throw std::logic_error("U D U* = D holds but U* D U = D does not");
  }
  return forward;
}

bool is_normalized_member(const MatrixPolynomial& u) {
  return is_j_unitary(u) && u.eval(0) == Matrix::identity(u.rows());
}

bool matrix_in_mode(const MatrixPolynomial& u, Mode mode) {
  switch (mode) {
    case Mode::Complex:
      return true;
    case Mode::RealOmega:
      return u.is_real_omega();
    case Mode::RealLambda:
      return u.is_real_lambda();
  }
  return false;
}

MatrixPolynomial j_inverse(const MatrixPolynomial& u) {
  require_square(u);
  const Matrix d = Matrix::metric(u.rows());
  return d * u.star() * d;
}

std::pair<MatrixPolynomial, ConstantJUnitary> split_constant(
    const MatrixPolynomial& u) {
  if (!is_j_unitary(u)) throw NotMemberError("matrix is not J-unitary");
  ConstantJUnitary tail = validate_constant_j_unitary(u.eval(0));
  MatrixPolynomial normalized = u * tail.inverse();
  return {std::move(normalized), std::move(tail)};
}

Dyad dyad_extract(const Matrix& x) {
  if (!x.is_square() || x.rows() < 2) {
    throw DimensionError("dyad extraction needs a square matrix");
  }
  if (x.is_zero()) throw NotMemberError("leading coefficient is zero");
  const std::size_t n = x.rows();
  const Matrix d = Matrix::metric(n);
  if (!(x * d * x.adjoint()).is_zero() || !(x.adjoint() * d * x).is_zero()) {
    throw NotMemberError("leading coefficient X fails X D X* = X* D X = 0");
  }
  // D X = alpha y z* with y[0] = z[0] = 1, so alpha = (D X)(0, 0).
  const Matrix dx = d * x;
  const GaussianRational alpha = dx(0, 0);
  if (alpha.is_zero()) {
    throw NotMemberError("leading coefficient is not an isotropic dyad");
  }
  Vector y = (GaussianRational(1) / alpha) * dx.col(0);
  Vector z = conj((GaussianRational(1) / alpha) * dx.row_vector(0));
  Dyad out{alpha, validate_xi(std::move(y)), validate_xi(std::move(z))};
  if (alpha * dyad_matrix(out.y, out.z) != x) {
    throw NotMemberError("leading coefficient is not a dyad");
  }
  return out;
}

ScanIndices scan_indices(const MatrixPolynomial& u, const IsotropicDirection& y,
                         const IsotropicDirection& z) {
  const auto lead = u.leading();
  if (!lead || lead->first == 0) {
    throw PreconditionError("index scan needs deg U > 0");
  }
  const std::size_t kappa = lead->first;
  const Matrix base = dyad_matrix(y, z);
  if (!proportional(lead->second, base)) {
    throw PreconditionError("leading coefficient is not proportional to D y z*");
  }
  ScanIndices idx;
  idx.tau = 1;
  while (idx.tau < kappa && proportional(leading_view(u, kappa, idx.tau), base)) {
    ++idx.tau;
  }
  const Vector dz = apply_metric(z.vector());
  idx.mu = idx.tau;
  while (idx.mu <= kappa && is_zero(leading_view(u, kappa, idx.mu) * dz)) {
    ++idx.mu;
  }
  idx.xi = idx.tau;
  while (idx.xi <= kappa &&
         is_zero(adjoint_times(y.vector(), leading_view(u, kappa, idx.xi)))) {
    ++idx.xi;
  }
  if (idx.mu > kappa || idx.xi > kappa) {
    throw ReductionFailure("constant coefficient annihilates D z or y*");
  }
  return idx;
}

TangentParts tangent_decompose(const Matrix& x, const IsotropicDirection& y,
                             const IsotropicDirection& z) {
  const std::size_t n = x.rows();
  const Matrix d = Matrix::metric(n);
  const Vector& yv = y.vector();
  const Vector& zv = z.vector();
  const Vector dy = apply_metric(yv);
  if (!is_zero(x * apply_metric(zv))) {
    throw NotMemberError("X_tau D z != 0");
  }
  for (const auto& k : delta_basis(z)) {
    if (!is_parallel(dy, x * apply_metric(k))) {
      throw NotMemberError("X_tau D k is not parallel to D y for tangent k = " +
                           describe(k));
    }
  }
  const Matrix dx = d * x;
  const Rational yy = inner(yv, yv).re();
  const Rational zz = inner(zv, zv).re();
  const GaussianRational alpha =
      inner(yv, dx * zv) / GaussianRational(yy * zz);
  // s* = alpha z* - y* D X / (y* y).
  const Vector s_row = conj(alpha.conj() * zv) -
                       (GaussianRational(Rational(1) / yy) *
                        adjoint_times(yv, dx));
  Vector s = conj(s_row);
  // r = D X z / (z* z) - alpha y.
  Vector r = (GaussianRational(Rational(1) / zz) * (dx * zv)) - alpha * yv;

  if (!in_delta0(s, z)) throw NotMemberError("recovered s is not tangent at z");
  if (!in_delta0(r, y)) throw NotMemberError("recovered r is not tangent at y");
  const Matrix rebuilt =
      d * (Matrix::outer(r, zv) - Matrix::outer(yv, s) +
           alpha * Matrix::outer(yv, zv));
  if (rebuilt != x) {
    throw NotMemberError("X_tau != D (r z* - y s* + alpha y z*)");
  }
  return {std::move(r), std::move(s), alpha};
}

Reduction reduce_once(const MatrixPolynomial& u, Mode mode) {
  require_square(u);
  if (!u.degree() || *u.degree() == 0) {
    throw PreconditionError("degree reduction needs deg U > 0");
  }
  if (!is_normalized_member(u)) {
    throw NotMemberError("matrix is not a normalized J-unitary matrix");
  }
  if (!matrix_in_mode(u, mode)) {
    throw ValidationError("matrix coefficients violate mode " +
                          std::string(to_string(mode)));
  }
  return reduce_unchecked(u, mode);
}

FactorizationResult factor(const MatrixPolynomial& u, Mode mode, bool verify) {
  require_square(u);
  const std::size_t n = u.rows();
  if (!matrix_in_mode(u, mode)) {
    throw ValidationError("matrix coefficients violate mode " +
                          std::string(to_string(mode)));
  }
  auto [current, tail] = split_constant(u);
  const std::size_t total_degree = current.degree().value_or(0);

  std::vector<ReductionStep> trace;
  std::vector<GeneratorParams> lefts;
  std::vector<GeneratorParams> rights;
  while (current.degree().value_or(0) > 0) {
    if (trace.size() >= total_degree) {
      throw ReductionFailure("more reduction steps than the degree");
    }
    Reduction r = reduce_unchecked(current, mode);
    (r.step.side == Side::Left ? lefts : rights).push_back(r.step.params);
    trace.push_back(std::move(r.step));
    current = std::move(r.reduced);
  }
  if (current != MatrixPolynomial::identity(n)) {
    throw ReductionFailure("reduction ended at a constant other than I");
  }

  // L_k ... L_1 U0 R_1 ... R_m = I.
  std::vector<GeneratorParams> sequence;
  sequence.reserve(lefts.size() + rights.size());
  for (const auto& l : lefts) sequence.push_back(group_inverse(l));
  for (auto it = rights.rbegin(); it != rights.rend(); ++it) {
    sequence.push_back(group_inverse(*it));
  }
  Word word = word_reduce(n, sequence);

  if (verify) {
    if (word_to_matrix(word) * tail.matrix() != u) {
      throw ReductionFailure("reconstructed product differs from the input");
    }
    if (word_degree(word) != total_degree) {
      throw ReductionFailure("word degree " + std::to_string(word_degree(word)) +
                             " differs from matrix degree " +
                             std::to_string(total_degree));
    }
    validate_word(word, mode);
  }
  return {std::move(word), std::move(tail), std::move(trace)};
}

RealOmegaReport real_omega_checks(std::size_t nu, std::uint64_t seed,
                               std::size_t pairs) {
  SampleConfig cfg;
  cfg.nu = nu;
  cfg.mode = Mode::RealOmega;
  cfg.seed = seed;
  Sampler sampler(cfg);

  RealOmegaReport report;
  report.nu = nu;
  report.phase_trivial = sampler.sample_phase().is_zero();
  std::size_t max_dim = 0;
  for (std::size_t k = 0; k < 8; ++k) {
    max_dim = std::max(max_dim, delta_basis(sampler.sample_xi()).size());
    ++report.directions_checked;
  }
  report.tangent_dimension = max_dim;
  report.trivial = report.phase_trivial && max_dim == 0;
  if (report.trivial) return report;

  for (std::size_t k = 0; k < pairs; ++k) {
    const IsotropicDirection z = sampler.sample_xi();
    const MatrixPolynomial a = build_generator(sampler.sample_generator(z));
    const MatrixPolynomial b = build_generator(sampler.sample_generator(z));
    ++report.pairs_checked;
    if (a * b != b * a) report.all_commute = false;
  }
  return report;
}

}  // namespace jumat
