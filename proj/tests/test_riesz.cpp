#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "slbasis/errors.hpp"
#include "slbasis/riesz.hpp"

using slb::Potential;
using slb::Problem;
using slb::RationalHerglotz;
using slb::ThetaSet;
using slb::Verdict;

namespace {

constexpr double kPi = std::numbers::pi;

Problem symmetric_model(int m = 64) {
  RationalHerglotz aff(1.0, 0.0, {});
  return Problem(Potential::zero(m), aff, aff);
}

const slb::Spectrum& symmetric_spectrum() {
  static const slb::Spectrum sp = slb::compute_spectrum(symmetric_model(), 32);
  return sp;
}

std::vector<double> trig_poly(const Problem& p, std::mt19937& rng) {
  std::normal_distribution<double> gauss;
  std::vector<double> coeff_a(9), coeff_b(9);
  for (double& c : coeff_a) c = gauss(rng);
  for (double& c : coeff_b) c = gauss(rng);
  const std::vector<double> xs = p.grid();
  std::vector<double> y(xs.size(), 0.0);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (int j = 0; j <= 8; ++j)
      y[i] += coeff_a[static_cast<std::size_t>(j)] * std::cos(j * xs[i]) +
              coeff_b[static_cast<std::size_t>(j)] * std::sin(j * xs[i]);
  return y;
}

}  // namespace

TEST_CASE("theta set validation") {
  CHECK_THROWS_AS(ThetaSet({2, 1}), slb::ConfigError);
  CHECK_THROWS_AS(ThetaSet({1, 1}), slb::ConfigError);
  CHECK_THROWS_AS(ThetaSet({-1, 3}), slb::ConfigError);
  CHECK(ThetaSet({0, 4}).contains(4));
  CHECK_FALSE(ThetaSet({0, 4}).contains(2));
}

TEST_CASE("verdict thresholds") {
  CHECK(slb::verdict(Eigen::MatrixXd(0, 0)) == Verdict::basis);
  CHECK(slb::verdict(Eigen::MatrixXd::Identity(2, 2), 1.0) == Verdict::basis);
  Eigen::MatrixXd equal_rows(2, 2);
  equal_rows << 1.0, 2.0, 1.0, 2.0;
  CHECK(slb::verdict(equal_rows) == Verdict::not_basis);
  Eigen::MatrixXd mid = Eigen::MatrixXd::Identity(2, 2);
  mid(1, 1) = 1e-8;
  CHECK(slb::verdict(mid, 1.0) == Verdict::borderline);
}

TEST_CASE("parity rule for the symmetric model") {
  const slb::Spectrum& sp = symmetric_spectrum();
  CHECK(slb::verdict(slb::build_M(sp, ThetaSet({0, 2}))) == Verdict::not_basis);
  CHECK(slb::verdict(slb::build_M(sp, ThetaSet({1, 3}))) == Verdict::not_basis);
  CHECK(slb::verdict(slb::build_M(sp, ThetaSet({0, 1}))) == Verdict::basis);
  CHECK(slb::verdict(slb::build_M(sp, ThetaSet({2, 5}))) == Verdict::basis);
}

TEST_CASE("build_M rejects out-of-range indices") {
  CHECK_THROWS_AS(slb::build_M(symmetric_spectrum(), ThetaSet({0, 999})),
                  slb::ConfigError);
}

TEST_CASE("y_theta identities") {
  const Problem p = symmetric_model();
  const slb::Spectrum& sp = symmetric_spectrum();
  const ThetaSet theta({0, 1});

  SUBCASE("fixed point (psi_n)_Theta = psi_hat_n for n outside Theta") {
    for (int n = 2; n <= 12; ++n) {
      const std::vector<double> yt = slb::y_theta(p, sp, theta, sp.at(n).psi.values());
      REQUIRE(yt.size() == sp.at(n).psi_hat.size());
      for (std::size_t k = 0; k < yt.size(); ++k)
        CHECK(std::abs(yt[k] - sp.at(n).psi_hat[k]) < 1e-7);
    }
  }

  SUBCASE("L2-orthogonal input maps to zero") {
    // remove the L2 projections onto psi_0 and psi_1 from a generic input
    std::mt19937 rng(4);
    std::vector<double> y = trig_poly(p, rng);
    const std::vector<double> v0 = sp.at(0).psi.values();
    const std::vector<double> v1 = sp.at(1).psi.values();
    Eigen::Matrix2d G;
    G << p.l2_inner(v0, v0), p.l2_inner(v0, v1), p.l2_inner(v1, v0),
        p.l2_inner(v1, v1);
    const Eigen::Vector2d c =
        G.fullPivLu().solve(Eigen::Vector2d(p.l2_inner(y, v0), p.l2_inner(y, v1)));
    for (std::size_t i = 0; i < y.size(); ++i) y[i] -= c(0) * v0[i] + c(1) * v1[i];
    for (double v : slb::y_theta(p, sp, theta, y)) CHECK(std::abs(v) < 1e-9);
  }

  SUBCASE("removed eigenfunction picks up the -W^{-1}M^{-1}e_k correction") {
    const Eigen::MatrixXd M = slb::build_M(sp, theta);
    const std::vector<double> w = p.weight_diagonal();
    for (int k = 0; k < 2; ++k) {
      const int nk = theta.indices()[static_cast<std::size_t>(k)];
      const std::vector<double> yt = slb::y_theta(p, sp, theta, sp.at(nk).psi.values());
      const Eigen::VectorXd corr = M.fullPivLu().solve(Eigen::Vector2d::Unit(k));
      for (int j = 0; j < 2; ++j) {
        const double expect = sp.at(nk).psi_hat[static_cast<std::size_t>(j)] -
                              corr(j) / w[static_cast<std::size_t>(j)];
        CHECK(yt[static_cast<std::size_t>(j)] == doctest::Approx(expect).epsilon(1e-6));
      }
    }
  }

  SUBCASE("linearity") {
    std::mt19937 rng(21);
    const std::vector<double> y = trig_poly(p, rng);
    const std::vector<double> z = trig_poly(p, rng);
    std::vector<double> comb(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) comb[i] = 2.5 * y[i] - 0.75 * z[i];
    const auto ty = slb::y_theta(p, sp, theta, y);
    const auto tz = slb::y_theta(p, sp, theta, z);
    const auto tc = slb::y_theta(p, sp, theta, comb);
    for (std::size_t k = 0; k < tc.size(); ++k)
      CHECK(tc[k] == doctest::Approx(2.5 * ty[k] - 0.75 * tz[k]).epsilon(1e-10));
  }

  SUBCASE("singular theta is rejected") {
    CHECK_THROWS_AS(
        slb::y_theta(p, sp, ThetaSet({0, 2}), sp.at(1).psi.values()),
        slb::SingularMatrixError);
  }
}

TEST_CASE("theta inner product") {
  const Problem p = symmetric_model();
  const slb::Spectrum& sp = symmetric_spectrum();
  const ThetaSet theta({0, 1});

  SUBCASE("retained eigenfunctions are orthonormal") {
    for (int n = 2; n <= 10; ++n)
      for (int m = 2; m <= n; ++m) {
        const double g =
            slb::theta_inner(p, sp, theta, sp.at(n).psi.values(), sp.at(m).psi.values());
        CHECK(std::abs(g - (n == m ? 1.0 : 0.0)) < 1e-6);
      }
  }

  SUBCASE("sandwich inequality with the explicit constant") {
    const Eigen::MatrixXd M = slb::build_M(sp, theta);
    const std::vector<double> w = p.weight_diagonal();
    double winv = 0.0;
    for (double x : w) winv = std::max(winv, 1.0 / x);
    const double minv =
        1.0 / Eigen::JacobiSVD<Eigen::MatrixXd>(M).singularValues().minCoeff();
    double sum_int = 0.0;
    for (int k = 0; k < 2; ++k) {
      const auto vals = sp.at(theta.indices()[static_cast<std::size_t>(k)]).psi.values();
      sum_int += p.l2_inner(vals, vals);
    }
    const double C = 1.0 + winv * minv * minv * sum_int;

    std::mt19937 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
      const std::vector<double> y = trig_poly(p, rng);
      const double l2 = p.l2_inner(y, y);
      const double ti = slb::theta_inner(p, sp, theta, y, y);
      CHECK(ti >= l2 * (1.0 - 1e-10));
      CHECK(ti <= C * l2 * (1.0 + 1e-10));
    }
  }
}

TEST_CASE("completeness defect") {
  const Problem p = symmetric_model();
  const slb::Spectrum& sp = symmetric_spectrum();

  SUBCASE("singular theta yields a genuine defect") {
    const auto defect = slb::completeness_defect(p, sp, ThetaSet({0, 2}), 20);
    CHECK(defect.residuals.size() == 19);
    for (double r : defect.residuals) CHECK(std::abs(r) < 1e-6);
    const double n0 = std::abs(defect.coefficients[0]);
    const double n1 = std::abs(defect.coefficients[1]);
    CHECK(n0 > 0.1);
    CHECK(n1 > 0.1);
  }
  SUBCASE("invertible theta is rejected") {
    CHECK_THROWS_AS(slb::completeness_defect(p, sp, ThetaSet({0, 1}), 10),
                    slb::SingularMatrixError);
  }
  SUBCASE("empty theta is rejected") {
    Problem cls(Potential::zero(32), RationalHerglotz::zero(), RationalHerglotz::zero());
    const slb::Spectrum csp = slb::compute_spectrum(cls, 5);
    CHECK_THROWS_AS(slb::completeness_defect(cls, csp, ThetaSet(std::vector<int>{}), 5),
                    slb::SingularMatrixError);
  }
}

TEST_CASE("gram sections") {
  SUBCASE("classical family is orthonormal") {
    Problem cls(Potential::zero(64), RationalHerglotz::zero(), RationalHerglotz::zero());
    const slb::Spectrum csp = slb::compute_spectrum(cls, 12);
    const auto entries =
        slb::gram_section(cls, csp, ThetaSet(std::vector<int>{}), {5, 10});
    for (const slb::GramEntry& g : entries) {
      CHECK(g.min_eig == doctest::Approx(1.0).epsilon(1e-8));
      CHECK(g.max_eig == doctest::Approx(1.0).epsilon(1e-8));
    }
  }
  SUBCASE("trend follows the verdict") {
    const Problem p = symmetric_model();
    const slb::Spectrum& sp = symmetric_spectrum();
    const auto good = slb::gram_section(p, sp, ThetaSet({0, 1}), {10, 20});
    CHECK(good[1].min_eig > 0.5 * good[0].min_eig);
    const auto bad = slb::gram_section(p, sp, ThetaSet({0, 2}), {10, 20});
    CHECK(bad[1].min_eig < bad[0].min_eig);
  }
  SUBCASE("insufficient spectrum") {
    const Problem p = symmetric_model();
    CHECK_THROWS_AS(slb::gram_section(p, symmetric_spectrum(), ThetaSet({0, 1}), {99}),
                    slb::ConfigError);
  }
}

TEST_CASE("make_report") {
  const Problem p = symmetric_model();
  const slb::Spectrum& sp = symmetric_spectrum();
  const slb::RieszReport good = slb::make_report(p, sp, ThetaSet({0, 1}), {10, 20});
  CHECK(good.verdict == Verdict::basis);
  CHECK(good.gram_consistent);
  CHECK(good.singular_values.size() == 2);
  CHECK(good.singular_values[0] >= good.singular_values[1]);

  const slb::RieszReport bad = slb::make_report(p, sp, ThetaSet({0, 2}), {10, 20});
  CHECK(bad.verdict == Verdict::not_basis);
  CHECK(std::abs(bad.det) < 1e-10);
}
