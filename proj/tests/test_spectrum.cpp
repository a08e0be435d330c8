#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "slbasis/errors.hpp"
#include "slbasis/spectrum.hpp"

using slb::Potential;
using slb::Problem;
using slb::RationalHerglotz;

namespace {

constexpr double kPi = std::numbers::pi;

Problem classical(int m = 64) {
  return Problem(Potential::zero(m), RationalHerglotz::zero(), RationalHerglotz::zero());
}

Problem symmetric_model(int m = 64) {
  RationalHerglotz aff(1.0, 0.0, {});
  return Problem(Potential::zero(m), aff, aff);
}

}  // namespace

TEST_CASE("classical eigenvalues are n^2") {
  const std::vector<double> lams = slb::find_eigenvalues(classical(), 5);
  REQUIRE(lams.size() == 6);
  for (int n = 0; n <= 5; ++n)
    CHECK(lams[static_cast<std::size_t>(n)] ==
          doctest::Approx(n * n).epsilon(1e-10).scale(1.0));
}

TEST_CASE("left Robin-type coefficient against the scalar oracle") {
  Problem p(Potential::zero(64), RationalHerglotz(1.0, 0.0, {}),
            RationalHerglotz::zero());
  const std::vector<double> lams = slb::find_eigenvalues(p, 8);
  const std::vector<double> ref = oracle::robin_left_eigenvalues(8);
  for (std::size_t i = 0; i < lams.size(); ++i)
    CHECK(lams[i] == doctest::Approx(ref[i]).epsilon(1e-9).scale(1.0));
}

TEST_CASE("separable two-sided problem against the scalar oracle") {
  const std::vector<double> lams = slb::find_eigenvalues(symmetric_model(), 10);
  const std::vector<double> ref = oracle::separable_eigenvalues(10);
  for (std::size_t i = 0; i < lams.size(); ++i)
    CHECK(lams[i] == doctest::Approx(ref[i]).epsilon(1e-9).scale(1.0));
}

TEST_CASE("find_eigenvalues input validation") {
  CHECK_THROWS_AS(slb::find_eigenvalues(classical(), -1), slb::ConfigError);
}

TEST_CASE("classical eigenfunctions") {
  const Problem p = classical(128);
  const slb::EigenPair e0 = slb::normalize(p, 0.0, 0);
  CHECK(e0.psi_hat.empty());
  for (std::size_t i = 0; i < e0.psi.states.size(); i += 50)
    CHECK(e0.psi.states[i].u == doctest::Approx(1.0 / std::sqrt(kPi)).epsilon(1e-9));

  const slb::EigenPair e3 = slb::normalize(p, 9.0, 3);
  const std::vector<double> xs = p.grid();
  for (std::size_t i = 0; i < xs.size(); i += 37)
    CHECK(e3.psi.states[i].u ==
          doctest::Approx(std::sqrt(2.0 / kPi) * std::cos(3 * xs[i])).epsilon(1e-8));
}

TEST_CASE("normalization gives unit H-norm") {
  const Problem p = symmetric_model(128);
  const slb::Spectrum sp = slb::compute_spectrum(p, 6);
  for (const slb::EigenPair& pair : sp.pairs) {
    const double nrm =
        p.h_inner({pair.psi.values(), pair.psi_hat}, {pair.psi.values(), pair.psi_hat});
    CHECK(nrm == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("H-orthonormality of computed eigenpairs") {
  const Problem p = symmetric_model(128);
  const slb::Spectrum sp = slb::compute_spectrum(p, 8);
  for (int i = 0; i < sp.size(); ++i)
    for (int j = 0; j <= i; ++j) {
      const double g = p.h_inner({sp.at(i).psi.values(), sp.at(i).psi_hat},
                                 {sp.at(j).psi.values(), sp.at(j).psi_hat});
      CHECK(std::abs(g - (i == j ? 1.0 : 0.0)) < 1e-6);
    }
}

TEST_CASE("link constants") {
  SUBCASE("classical beta alternates") {
    const Problem p = classical();
    for (int n = 1; n <= 4; ++n) {
      const double b = slb::link_constant(p, static_cast<double>(n) * n);
      CHECK(b == doctest::Approx(n % 2 == 0 ? 1.0 : -1.0).epsilon(1e-9));
    }
  }
  SUBCASE("symmetric model has beta_n = (-1)^n") {
    const Problem p = symmetric_model();
    const slb::Spectrum sp = slb::compute_spectrum(p, 8);
    for (const slb::EigenPair& pair : sp.pairs)
      CHECK(pair.beta ==
            doctest::Approx(pair.n % 2 == 0 ? 1.0 : -1.0).epsilon(1e-8));
  }
  SUBCASE("non-eigenvalue is rejected") {
    CHECK_THROWS_AS(slb::link_constant(symmetric_model(), 1.7),
                    slb::ComputationError);
  }
}

TEST_CASE("beta alternation for a nonsymmetric problem") {
  Problem p(Potential::linear_antisymmetric(0.8, 64), RationalHerglotz(1.0, 0.3, {}),
            RationalHerglotz(0.0, 0.0, {{1.0, 2.0}}));
  const slb::Spectrum sp = slb::compute_spectrum(p, 12);
  for (int n = 0; n + 1 < sp.size(); ++n)
    CHECK(sp.at(n).beta * sp.at(n + 1).beta < 0.0);
}

TEST_CASE("pole-safe psi_hat entries match the naive formula away from poles") {
  Problem p(Potential::zero(64), RationalHerglotz(0.0, 0.0, {{-1.0, 2.0}}),
            RationalHerglotz(0.0, 0.0, {{0.5, 1.0}}));
  const slb::Spectrum sp = slb::compute_spectrum(p, 6);
  for (const slb::EigenPair& pair : sp.pairs) {
    const double lam = pair.lambda;
    if (std::abs(lam + 1.0) > 1e-6) {
      const double naive = 2.0 * pair.psi.front().u / (lam - (-1.0));
      CHECK(pair.psi_hat[0] == doctest::Approx(naive).epsilon(1e-8));
    }
    if (std::abs(lam - 0.5) > 1e-6) {
      const double naive = 1.0 * pair.psi.back().u / (0.5 - lam);
      CHECK(pair.psi_hat[1] == doctest::Approx(naive).epsilon(1e-8));
    }
  }
}

TEST_CASE("eigenvalues decrease when a constant is added to f") {
  Problem p0(Potential::zero(64), RationalHerglotz(0.0, 0.0, {}),
             RationalHerglotz::zero());
  Problem p1(Potential::zero(64), RationalHerglotz(0.0, 1.0, {}),
             RationalHerglotz::zero());
  const std::vector<double> a = slb::find_eigenvalues(p0, 6);
  const std::vector<double> b = slb::find_eigenvalues(p1, 6);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(b[i] < a[i] + 1e-12);
}

TEST_CASE("asymptotic diagnostics") {
  SUBCASE("symmetric model has xi identically zero") {
    const Problem p = symmetric_model();
    const slb::Spectrum sp = slb::compute_spectrum(p, 14);
    const slb::AsymptoticReport rep = slb::asymptotic_diagnostics(sp, p);
    for (std::size_t i = 2; i < rep.xi.size(); ++i)
      CHECK(std::abs(rep.xi[i]) < 1e-7);
    CHECK(rep.xi_tail_decaying);
  }
  SUBCASE("classical offsets vanish") {
    const Problem p = classical();
    const slb::Spectrum sp = slb::compute_spectrum(p, 12);
    const slb::AsymptoticReport rep = slb::asymptotic_diagnostics(sp, p);
    for (double off : rep.sqrt_offsets) CHECK(std::abs(off) < 1e-9);
  }
  SUBCASE("needs at least 10 pairs") {
    const Problem p = classical();
    const slb::Spectrum sp = slb::compute_spectrum(p, 4);
    CHECK_THROWS_AS(slb::asymptotic_diagnostics(sp, p), slb::ComputationError);
  }
}
