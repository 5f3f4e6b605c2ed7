#pragma once

// Seeded exact sampling of directions, phases, tangents, words and block
// unitaries. Output depends only on (seed, config).

#include <cstddef>
#include <cstdint>
#include <random>

#include "jumat/group.hpp"

namespace jumat {

struct SampleConfig {
  std::size_t nu = 3;
  Mode mode = Mode::Complex;
  std::size_t max_factors = 4;
  std::size_t max_phase_degree = 3;
  std::size_t max_tangent_degree = 2;
  /// Bound on numerators and denominators of drawn rationals.
  long height = 1000;
  std::uint64_t seed = 0;
};

class Sampler {
 public:
  explicit Sampler(SampleConfig cfg);

  const SampleConfig& config() const { return cfg_; }

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  /// p/q with |p| <= height, 1 <= q <= height.
  Rational rational(long height);
  Rational nonzero_rational(long height);

  /// Stereographic image of a random rational point, with entries real in
  /// the real modes.
  IsotropicDirection sample_xi();
  /// Random rational combinations of delta_basis(z); zero when nu = 2.
  TangentPoly sample_tangent(const IsotropicDirection& z);
  /// Empty in real_omega mode; odd powers only in real_lambda mode.
  PhasePoly sample_phase();
  /// A non-identity generator at z. Throws PreconditionError when the mode
  /// admits none (nu = 2, real_omega).
  GeneratorParams sample_generator(const IsotropicDirection& z);
  /// A reduced word with 1..max_factors factors (empty when no non-identity
  /// generator exists).
  Word sample_word();
  Word sample_word(std::size_t factors);
  /// diag{1, L}, L the Cayley transform of a random skew-Hermitian matrix.
  ConstantUnitary sample_upsilon();

 private:
  GaussianRational tangent_coefficient(std::size_t power);
  bool generators_exist() const;

  SampleConfig cfg_;
  std::mt19937_64 rng_;
};

/// diag{1, (I - S)(I + S)^-1}. Throws ValidationError unless S* = -S.
ConstantUnitary cayley_upsilon(const Matrix& s);

}  // namespace jumat
