#include <set>
#include <sstream>

#include "doctest.h"
#include "jumat/errors.hpp"
#include "jumat/factorization.hpp"
#include "jumat/sampling.hpp"

using namespace jumat;

namespace {

SampleConfig config(std::size_t nu, Mode mode, std::uint64_t seed) {
  SampleConfig cfg;
  cfg.nu = nu;
  cfg.mode = mode;
  cfg.seed = seed;
  return cfg;
}

std::string show(const Word& w) {
  std::ostringstream out;
  for (const auto& f : w.factors) out << f << ';';
  return out.str();
}

}  // namespace

TEST_CASE("cayley_upsilon") {
  const auto w = cayley_upsilon(Matrix{{0, 1}, {-1, 0}});
  CHECK(w.matrix() == Matrix{{1, 0, 0}, {0, 0, -1}, {0, 1, 0}});
  CHECK(cayley_upsilon(Matrix(3, 3)).matrix() == Matrix::identity(4));
  CHECK_THROWS_AS(cayley_upsilon(Matrix{{0, 1}, {1, 0}}), ValidationError);
  const GaussianRational i = GaussianRational::i();
  const auto w1 = cayley_upsilon(Matrix{{i}});
  CHECK(w1.matrix() == Matrix{{1, 0}, {0, -i}});
}

TEST_CASE("samples are valid in their mode") {
  for (Mode mode : {Mode::Complex, Mode::RealOmega, Mode::RealLambda}) {
    for (std::size_t nu : {2, 3, 4, 5}) {
      Sampler s(config(nu, mode, 3));
      for (int k = 0; k < 30; ++k) {
        const auto z = s.sample_xi();
        CHECK(z.dim() == nu);
        if (mode != Mode::Complex) CHECK(Matrix::column(z.vector()).is_real());
        const auto phi = s.sample_phase();
        if (mode == Mode::RealOmega) CHECK(phi.is_zero());
        CHECK(params_valid({z, phi, s.sample_tangent(z)}, mode));
        const auto u = s.sample_upsilon().matrix();
        CHECK(u * u.adjoint() == Matrix::identity(nu));
        if (mode != Mode::Complex) CHECK(u.is_real());
      }
      const Word w = s.sample_word();
      CHECK(w.nu == nu);
      CHECK(w.factors.size() <= 4);
      CHECK_NOTHROW(validate_word(w, mode));
      CHECK(is_normalized_member(word_to_matrix(w)));
    }
  }
}

TEST_CASE("no generators in real omega with nu = 2") {
  Sampler s(config(2, Mode::RealOmega, 1));
  CHECK_THROWS_AS(s.sample_generator(s.sample_xi()), PreconditionError);
  CHECK(s.sample_word().empty());
}

TEST_CASE("determinism") {
  Sampler a(config(4, Mode::Complex, 42));
  Sampler b(config(4, Mode::Complex, 42));
  Sampler c(config(4, Mode::Complex, 43));
  const auto wa = a.sample_word(4);
  CHECK(wa == b.sample_word(4));
  CHECK(wa != c.sample_word(4));
  CHECK(wa.factors.size() == 4);
}

TEST_CASE("coverage") {
  Sampler s(config(3, Mode::Complex, 5));
  std::set<std::string> words;
  std::set<std::size_t> lengths;
  bool phase_only = false, tangent = false, repeated_direction = false;
  for (int k = 0; k < 200; ++k) {
    const Word w = s.sample_word();
    words.insert(show(w));
    lengths.insert(w.factors.size());
    for (std::size_t j = 0; j < w.factors.size(); ++j) {
      const auto& f = w.factors[j];
      if (f.g.is_zero()) phase_only = true;
      else tangent = true;
      for (std::size_t m = 0; m + 1 < j; ++m) {
        if (w.factors[m].z == f.z) repeated_direction = true;
      }
    }
  }
  CHECK(words.size() > 190);
  CHECK(lengths == std::set<std::size_t>{1, 2, 3, 4});
  CHECK(phase_only);
  CHECK(tangent);
  CHECK(repeated_direction);
}
