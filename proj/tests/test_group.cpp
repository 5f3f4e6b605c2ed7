#include <set>
#include <sstream>
#include <string>

#include "doctest.h"
#include "jumat/errors.hpp"
#include "jumat/group.hpp"
#include "jumat/sampling.hpp"

using namespace jumat;

namespace {

const GaussianRational I = GaussianRational::i();

IsotropicDirection xi(Vector z) { return validate_xi(std::move(z)); }

// Oracle: U D U* = D and U* D U = D by direct multiplication.
bool preserves_metric(const MatrixPolynomial& u) {
  const MatrixPolynomial d(Matrix::metric(u.rows()));
  return u * d * u.star() == d && u.star() * d * u == d;
}

MatrixPolynomial poly(std::size_t n, std::vector<Matrix> coeffs) {
  return MatrixPolynomial(n, n, std::move(coeffs));
}

Sampler sampler(std::size_t nu, Mode mode, std::uint64_t seed) {
  SampleConfig cfg;
  cfg.nu = nu;
  cfg.mode = mode;
  cfg.seed = seed;
  cfg.height = 30;
  return Sampler(cfg);
}

}  // namespace

TEST_CASE("validate_xi") {
  CHECK_NOTHROW(xi({1, 1}));
  CHECK_NOTHROW(xi({1, Rational(3, 5), Rational(4, 5)}));
  CHECK_NOTHROW(xi({1, GaussianRational(Rational(3, 5), Rational(4, 5)), 0}));
  CHECK_THROWS_AS(xi({1, 1, 1}), ValidationError);
  CHECK_THROWS_AS(xi({2, 2}), ValidationError);
  CHECK_THROWS_AS(validate_xi({1, I}, Mode::RealOmega), ValidationError);
  CHECK_NOTHROW(validate_xi({1, I}, Mode::Complex));
}

TEST_CASE("delta_basis") {
  CHECK(delta_basis(xi({1, 1})).empty());
  const auto b3 = delta_basis(xi({1, 1, 0}));
  REQUIRE(b3.size() == 1);
  CHECK(b3[0] == Vector{0, 0, 1});
  const auto b4 = delta_basis(xi({1, 1, 0, 0}));
  REQUIRE(b4.size() == 2);
  CHECK(b4[0] == Vector{0, 0, 1, 0});
  CHECK(b4[1] == Vector{0, 0, 0, 1});

  Sampler s = sampler(4, Mode::Complex, 3);
  for (int k = 0; k < 50; ++k) {
    const auto z = s.sample_xi();
    const auto basis = delta_basis(z);
    CHECK(basis.size() == 2);
    for (const auto& d : basis) {
      CHECK(d[0].is_zero());
      CHECK(apply_metric(d) == d);
      CHECK(in_delta0(d, z));
    }
  }
}

TEST_CASE("build_generator examples") {
  const auto z2 = xi({1, 1});
  CHECK(build_generator(identity_params(z2)) == MatrixPolynomial::identity(2));

  // z = (1, 1), phi = i*alpha*omega with alpha = 3/2.
  const Rational alpha(3, 2);
  const GaussianRational ia = I * GaussianRational(alpha);
  const MatrixPolynomial g = build_generator({z2, PhasePoly({alpha}), TangentPoly(2)});
  CHECK(g == poly(2, {Matrix::identity(2), Matrix{{-ia, -ia}, {ia, ia}}}));

  // nu = 3, z = (1, 1, 0), g = (0, 0, 1) omega.
  const auto z3 = xi({1, 1, 0});
  const GeneratorParams p{z3, PhasePoly(), TangentPoly::monomial({0, 0, 1}, 1)};
  const GaussianRational h(Rational(1, 2));
  const MatrixPolynomial expected =
      poly(3, {Matrix::identity(3), Matrix{{0, 0, -1}, {0, 0, 1}, {-1, -1, 0}},
               Matrix{{h, h, 0}, {-h, -h, 0}, {0, 0, 0}}});
  CHECK(build_generator(p) == expected);
  CHECK(preserves_metric(expected));
  CHECK(generator_degree(p) == 2);
}

TEST_CASE("group law examples") {
  const auto z4 = xi({1, 1, 0, 0});
  const GeneratorParams phase_a{z4, PhasePoly({1, 2}), TangentPoly(4)};
  const GeneratorParams phase_b{z4, PhasePoly({-1, 0, 5}), TangentPoly(4)};
  CHECK(group_compose(phase_a, phase_b).phi == PhasePoly({0, 2, 5}));
  CHECK(group_compose(phase_a, phase_b).g.is_zero());

  const Vector d{0, 0, GaussianRational(Rational(2), Rational(1)), 1};
  const GeneratorParams same{z4, PhasePoly(), TangentPoly::monomial(d, 1)};
  const auto doubled = group_compose(same, same);
  CHECK(doubled.phi.is_zero());
  CHECK(doubled.g == TangentPoly::monomial(GaussianRational(2) * d, 1));

  const GeneratorParams a{z4, PhasePoly(), TangentPoly::monomial({0, 0, 1, 0}, 1)};
  const GeneratorParams b{z4, PhasePoly(), TangentPoly::monomial({0, 0, I, 0}, 1)};
  const auto ab = group_compose(a, b);
  CHECK(ab.phi == PhasePoly::monomial(-1, 2));
  CHECK(ab.g == TangentPoly::monomial({0, 0, 1 + I, 0}, 1));
  CHECK(build_generator(ab) == build_generator(a) * build_generator(b));

  CHECK(commutator(a, b).phi == PhasePoly::monomial(-2, 2));
  CHECK(commutator(a, b).g.is_zero());
  CHECK(commutator(a, a).is_identity());

  const auto other = xi({1, 0, 1, 0});
  CHECK_THROWS_AS(group_compose(a, identity_params(other)), ValidationError);
}

TEST_CASE("group inverse") {
  const auto z3 = xi({1, 1, 0});
  const GeneratorParams phase{z3, PhasePoly({1, -3}), TangentPoly(3)};
  CHECK(group_inverse(phase).phi == PhasePoly({-1, 3}));
  const GeneratorParams tangent{z3, PhasePoly(), TangentPoly::monomial({0, 0, 2}, 2)};
  const auto inv = group_inverse(tangent);
  CHECK(inv.g == TangentPoly::monomial({0, 0, -2}, 2));
  CHECK(group_compose(tangent, inv).is_identity());

  for (Mode mode : {Mode::Complex, Mode::RealOmega, Mode::RealLambda}) {
    Sampler s = sampler(3, mode, 11);
    for (int k = 0; k < 20; ++k) {
      const auto p = s.sample_generator(s.sample_xi());
      CHECK(build_generator(p) * build_generator(group_inverse(p)) ==
            MatrixPolynomial::identity(3));
    }
  }
}

TEST_CASE("conjugation by block unitaries") {
  const Matrix swap{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
  const auto w = validate_upsilon(swap);
  const GeneratorParams p{xi({1, 1, 0}), PhasePoly({1}),
                          TangentPoly::monomial({0, 0, 1}, 1)};
  const auto q = conjugate_by_W(w, p);
  CHECK(q.z.vector() == Vector{1, 0, 1});
  CHECK(q.g == TangentPoly::monomial({0, 1, 0}, 1));
  CHECK(conjugate_by_W(validate_upsilon(Matrix::identity(3)), p) == p);
  CHECK_THROWS_AS(validate_upsilon(Matrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}),
                  ValidationError);

  Sampler s = sampler(4, Mode::Complex, 5);
  for (int k = 0; k < 20; ++k) {
    const auto u = s.sample_upsilon();
    const auto g = s.sample_generator(s.sample_xi());
    const auto image = conjugate_by_W(u, g);
    CHECK(u.matrix() * build_generator(g) * u.inverse().matrix() ==
          build_generator(image));
  }
}

TEST_CASE("star of a generator") {
  const GeneratorParams p{xi({1, 1}), PhasePoly({2}), TangentPoly(2)};
  const auto q = star_generator(p);
  CHECK(q.z.vector() == Vector{1, -1});
  CHECK(q.phi == PhasePoly({-2}));
  CHECK(build_generator(p).star() == build_generator(q));
  CHECK(build_generator(star_generator(identity_params(xi({1, 1})))) ==
        MatrixPolynomial::identity(2));

  const GeneratorParams t{xi({1, 1, 0}), PhasePoly(), TangentPoly::monomial({0, 0, 1}, 1)};
  CHECK(build_generator(t).star() == build_generator(star_generator(t)));

  Sampler s = sampler(4, Mode::Complex, 9);
  for (int k = 0; k < 30; ++k) {
    const auto g = s.sample_generator(s.sample_xi());
    CHECK(star_generator(star_generator(g)) == g);
    CHECK(build_generator(g).star() == build_generator(star_generator(g)));
  }
}

TEST_CASE("words") {
  CHECK(word_to_matrix(Word{3, {}}) == MatrixPolynomial::identity(3));
  CHECK(word_degree(Word{3, {}}) == 0);

  const auto z1 = xi({1, 1});
  const auto z2 = xi({1, -1});
  const GeneratorParams a{z1, PhasePoly({1}), TangentPoly(2)};
  CHECK(word_reduce(2, {a, group_inverse(a)}).empty());
  CHECK(word_reduce(2, {a, identity_params(z2), a}).factors.size() == 1);

  const GeneratorParams b{z2, PhasePoly({1}), TangentPoly(2)};
  const Word w = word_reduce(2, {a, b});
  CHECK(w.factors.size() == 2);
  CHECK(word_to_matrix(w).degree() == 2u);
  CHECK(word_degree(w) == 2);
  CHECK(word_degree(Word{2, {a}}) == 1);

  // Cascading merge: a b b^-1 a^-1 collapses entirely.
  CHECK(word_reduce(2, {a, b, group_inverse(b), group_inverse(a)}).empty());
  CHECK(word_to_matrix(word_inverse(w)) * word_to_matrix(w) ==
        MatrixPolynomial::identity(2));
}

TEST_CASE("generators preserve the metric in every mode") {
  for (Mode mode : {Mode::Complex, Mode::RealOmega, Mode::RealLambda}) {
    for (std::size_t nu : {2, 3, 4}) {
      if (mode == Mode::RealOmega && nu == 2) continue;
      Sampler s = sampler(nu, mode, 100 + nu);
      for (int k = 0; k < 60; ++k) {
        const auto p = s.sample_generator(s.sample_xi());
        CHECK(params_valid(p, mode));
        const auto u = build_generator(p);
        CHECK(preserves_metric(u));
        CHECK(u.eval(0) == Matrix::identity(nu));
        if (mode == Mode::RealOmega) CHECK(u.is_real_omega());
        if (mode == Mode::RealLambda) CHECK(u.is_real_lambda());
      }
    }
  }
}

TEST_CASE("homomorphism, leading dyad and degree") {
  for (Mode mode : {Mode::Complex, Mode::RealLambda}) {
    Sampler s = sampler(4, mode, 21);
    for (int k = 0; k < 40; ++k) {
      const auto z = s.sample_xi();
      const auto a = s.sample_generator(z);
      const auto b = s.sample_generator(z);
      const auto ab = group_compose(a, b);
      CHECK(build_generator(ab) == build_generator(a) * build_generator(b));
      if (mode == Mode::RealLambda) CHECK(params_valid(ab, Mode::RealLambda));

      const auto u = build_generator(a);
      const auto lead = u.leading();
      REQUIRE(lead);
      CHECK(lead->first == generator_degree(a));
      CHECK(lead->first > 0);
      const Matrix dyad = Matrix::metric(4) * Matrix::outer(z.vector(), z.vector());
      const GaussianRational ratio = lead->second(0, 0) / dyad(0, 0);
      CHECK(ratio * dyad == lead->second);
    }
  }
}

TEST_CASE("dyad products vanish exactly at repeated adjacent directions") {
  Sampler s = sampler(3, Mode::Complex, 31);
  std::vector<IsotropicDirection> pool;
  for (int k = 0; k < 4; ++k) pool.push_back(s.sample_xi());
  for (int trial = 0; trial < 100; ++trial) {
    const auto length = static_cast<std::size_t>(s.uniform(2, 5));
    std::vector<std::size_t> picks;
    for (std::size_t k = 0; k < length; ++k) {
      picks.push_back(static_cast<std::size_t>(s.uniform(0, 3)));
    }
    Matrix product = Matrix::identity(3);
    bool repeated = false;
    for (std::size_t k = 0; k < length; ++k) {
      const auto& z = pool[picks[k]].vector();
      product = product * (Matrix::metric(3) * Matrix::outer(z, z));
      if (k > 0 && picks[k] == picks[k - 1]) repeated = true;
    }
    CHECK(product.is_zero() == repeated);
  }
}

TEST_CASE("distinct parameters give distinct matrices") {
  Sampler s = sampler(3, Mode::Complex, 41);
  std::set<std::string> params_seen;
  std::set<std::string> matrices_seen;
  std::vector<IsotropicDirection> pool;
  for (int k = 0; k < 3; ++k) pool.push_back(s.sample_xi());
  for (int k = 0; k < 150; ++k) {
    const auto& z = pool[static_cast<std::size_t>(s.uniform(0, 2))];
    const auto p = s.sample_generator(z);
    std::ostringstream key;
    key << p;
    if (!params_seen.insert(key.str()).second) continue;
    std::ostringstream m;
    m << build_generator(p);
    CHECK(matrices_seen.insert(m.str()).second);
  }
  CHECK(params_seen.size() == matrices_seen.size());
}

TEST_CASE("centre and commutant") {
  for (std::size_t nu : {2, 3, 4}) {
    Sampler s = sampler(nu, Mode::Complex, 51 + nu);
    for (int k = 0; k < 20; ++k) {
      const auto z = s.sample_xi();
      const auto a = s.sample_generator(z);
      const auto b = s.sample_generator(z);
      const GeneratorParams central{z, s.sample_phase(), TangentPoly(nu)};
      CHECK(group_compose(central, a) == group_compose(a, central));
      const auto c = commutator(a, b);
      CHECK(c.g.is_zero());
      if (nu == 2) CHECK(c.is_identity());
      CHECK(group_compose(c, b) == group_compose(b, c));
    }
  }
}

TEST_CASE("mode validation of parameters") {
  const auto z = xi({1, 1, 0});
  const GeneratorParams even_phase{z, PhasePoly({0, 1}), TangentPoly(3)};
  CHECK_FALSE(params_valid(even_phase, Mode::RealLambda));
  CHECK(params_valid(even_phase, Mode::Complex));
  CHECK_FALSE(params_valid({z, PhasePoly({1}), TangentPoly(3)}, Mode::RealOmega));
  CHECK_FALSE(params_valid({z, PhasePoly(), TangentPoly::monomial({0, 0, 1}, 1)},
                           Mode::RealLambda));
  CHECK(params_valid({z, PhasePoly(), TangentPoly::monomial({0, 0, I}, 1)},
                     Mode::RealLambda));
  CHECK_FALSE(params_valid({z, PhasePoly(), TangentPoly::monomial({0, 1, 0}, 1)},
                           Mode::Complex));
}
