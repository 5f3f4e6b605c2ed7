#include "jumat/sampling.hpp"

#include <cmath>
#include <utility>

#include "jumat/errors.hpp"

namespace jumat {

Sampler::Sampler(SampleConfig cfg) : cfg_(cfg), rng_(cfg.seed) {
  if (cfg_.nu < 2) throw ValidationError("nu must be at least 2");
  if (cfg_.height < 1) throw ValidationError("height must be positive");
}

long Sampler::uniform(long lo, long hi) {
  // Modulo draw keeps the stream identical across standard libraries.
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng_() % span);
}

Rational Sampler::rational(long height) {
  const long num = uniform(-height, height);
  const long den = uniform(1, height);
  return Rational(num, den);
}

Rational Sampler::nonzero_rational(long height) {
  long num = 0;
  while (num == 0) num = uniform(-height, height);
  return Rational(num, uniform(1, height));
}

IsotropicDirection Sampler::sample_xi() {
  const std::size_t n = cfg_.nu;
  // Real coordinates of zeta_2..zeta_nu on the unit sphere in R^m.
  const std::size_t m = cfg_.mode == Mode::Complex ? 2 * (n - 1) : n - 1;
  const long bound = std::max<long>(
      1, static_cast<long>(std::sqrt(static_cast<double>(cfg_.height) /
                                     static_cast<double>(m))));
  const long q = uniform(1, bound);
  std::vector<long> p(m - 1);
  long p_norm = 0;
  for (auto& x : p) {
    x = uniform(-bound, bound);
    p_norm += x * x;
  }
  // x = p / q maps to (2x, |x|^2 - 1) / (|x|^2 + 1).
  const long q2 = q * q;
  std::vector<Rational> point(m);
  for (std::size_t k = 0; k + 1 < m; ++k) {
    point[k] = Rational(2 * p[k] * q, p_norm + q2);
  }
  point[m - 1] = Rational(p_norm - q2, p_norm + q2);
  if (uniform(0, 1) == 1) point[m - 1] = -point[m - 1];

  Vector z(n);
  z[0] = 1;
  for (std::size_t k = 1; k < n; ++k) {
    if (cfg_.mode == Mode::Complex) {
      z[k] = GaussianRational(point[2 * (k - 1)], point[2 * (k - 1) + 1]);
    } else {
      z[k] = GaussianRational(point[k - 1]);
    }
  }
  return validate_xi(std::move(z), cfg_.mode);
}

GaussianRational Sampler::tangent_coefficient(std::size_t power) {
  switch (cfg_.mode) {
    case Mode::Complex:
      return {rational(cfg_.height), rational(cfg_.height)};
    case Mode::RealOmega:
      return GaussianRational(rational(cfg_.height));
    case Mode::RealLambda:
      if (power % 2 == 0) return GaussianRational(rational(cfg_.height));
      return {Rational(0), rational(cfg_.height)};
  }
  return {};
}

TangentPoly Sampler::sample_tangent(const IsotropicDirection& z) {
  const auto basis = delta_basis(z);
  if (basis.empty() || cfg_.max_tangent_degree == 0) return TangentPoly(z.dim());
  const auto degree =
      static_cast<std::size_t>(uniform(0, static_cast<long>(cfg_.max_tangent_degree)));
  std::vector<Vector> terms;
  for (std::size_t power = 1; power <= degree; ++power) {
    Vector t = zero_vector(z.dim());
    for (const auto& b : basis) t = t + tangent_coefficient(power) * b;
    terms.push_back(std::move(t));
  }
  return TangentPoly(z.dim(), std::move(terms));
}

PhasePoly Sampler::sample_phase() {
  if (cfg_.mode == Mode::RealOmega || cfg_.max_phase_degree == 0) return {};
  const auto degree =
      static_cast<std::size_t>(uniform(0, static_cast<long>(cfg_.max_phase_degree)));
  std::vector<Rational> rhos(degree);
  for (std::size_t power = 1; power <= degree; ++power) {
    if (cfg_.mode == Mode::RealLambda && power % 2 == 0) continue;
    rhos[power - 1] = rational(cfg_.height);
  }
  return PhasePoly(std::move(rhos));
}

bool Sampler::generators_exist() const {
  const bool phases = cfg_.mode != Mode::RealOmega && cfg_.max_phase_degree > 0;
  const bool tangents = cfg_.nu > 2 && cfg_.max_tangent_degree > 0;
  return phases || tangents;
}

GeneratorParams Sampler::sample_generator(const IsotropicDirection& z) {
  if (!generators_exist()) {
    throw PreconditionError("no non-identity generators in this configuration");
  }
  for (;;) {
    GeneratorParams p{z, sample_phase(), sample_tangent(z)};
    if (!p.is_identity()) return p;
  }
}

Word Sampler::sample_word() {
  if (!generators_exist()) return Word{cfg_.nu, {}};
  const auto count =
      static_cast<std::size_t>(uniform(1, static_cast<long>(std::max<std::size_t>(1, cfg_.max_factors))));
  return sample_word(count);
}

Word Sampler::sample_word(std::size_t factors) {
  Word w{cfg_.nu, {}};
  if (!generators_exist()) return w;
  std::vector<IsotropicDirection> seen;
  while (w.factors.size() < factors) {
    std::optional<IsotropicDirection> z;
    // Revisit an earlier, non-adjacent direction now and then.
    if (!seen.empty() && uniform(0, 2) == 0) {
      z = seen[static_cast<std::size_t>(
          uniform(0, static_cast<long>(seen.size()) - 1))];
    } else {
      z = sample_xi();
    }
    if (!w.factors.empty() && w.factors.back().z == *z) continue;
    bool known = false;
    for (const auto& s : seen) known = known || s == *z;
    if (!known) seen.push_back(*z);
    w.factors.push_back(sample_generator(*z));
  }
  return w;
}

ConstantUnitary Sampler::sample_upsilon() {
  const std::size_t m = cfg_.nu - 1;
  const long h = std::min<long>(cfg_.height, 10);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Matrix s(m, m);
    for (std::size_t i = 0; i < m; ++i) {
      if (cfg_.mode == Mode::Complex) {
        s(i, i) = GaussianRational(Rational(0), rational(h));
      }
      for (std::size_t j = i + 1; j < m; ++j) {
        GaussianRational c = cfg_.mode == Mode::Complex
                                 ? GaussianRational(rational(h), rational(h))
                                 : GaussianRational(rational(h));
        s(j, i) = -c.conj();
        s(i, j) = std::move(c);
      }
    }
    try {
      return cayley_upsilon(s);
    } catch (const DimensionError&) {
      // I + S singular; skew-Hermitian S never hits this, but resample anyway.
    }
  }
  throw PreconditionError("could not sample an invertible I + S in 100 tries");
}

ConstantUnitary cayley_upsilon(const Matrix& s) {
  if (!s.is_square()) throw DimensionError("S must be square");
  if (s.adjoint() != -s) throw ValidationError("S must be skew-Hermitian");
  const std::size_t m = s.rows();
  const Matrix id = Matrix::identity(m);
  const Matrix l = (id - s) * (id + s).inverse();
  Matrix w(m + 1, m + 1);
  w(0, 0) = 1;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) w(i + 1, j + 1) = l(i, j);
  }
  return validate_upsilon(std::move(w));
}

}  // namespace jumat
