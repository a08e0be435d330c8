#include "slbasis/reduced.hpp"

#include <cmath>

#include "slbasis/errors.hpp"

namespace slb {

std::pair<Polynomial, std::vector<Polynomial>> poly_p(const RationalHerglotz& f) {
  Polynomial p = Polynomial::constant(1.0);
  for (const Pole& pk : f.poles()) p = p * Polynomial({pk.location, -1.0});
  std::vector<Polynomial> parts;
  for (int m = 0; m < f.pole_count(); ++m) {
    Polynomial pm = Polynomial::constant(1.0);
    for (int k = 0; k < f.pole_count(); ++k)
      if (k != m) pm = pm * Polynomial({f.poles()[static_cast<std::size_t>(k)].location, -1.0});
    parts.push_back(pm);
  }
  return {p, parts};
}

Eigen::MatrixXd reduced_one_sided(const Problem& p, const Spectrum& sp,
                                  const ThetaSet& theta) {
  const RationalHerglotz& f = p.f();
  if (p.F().index() != 0 || f.index() < 1)
    throw HypothesisError("reduced: one-sided case needs constant F and non-constant f");
  const int N = theta.size();
  if (N != f.capacity())
    throw ConfigError("reduced: theta size does not match capacity of f");

  const auto [poly, parts] = poly_p(f);
  const int d = f.pole_count();
  Eigen::MatrixXd M(N, N);
  for (int k = 0; k < N; ++k) {
    const double lam = sp.at(theta.indices()[static_cast<std::size_t>(k)]).lambda;
    for (int m = 0; m < d; ++m) M(k, m) = parts[static_cast<std::size_t>(m)](lam);
    if (f.h0() > 0.0) M(k, d) = poly(lam);
  }
  return M;
}

Verdict ReducedLinear::verdict() const {
  const bool equal =
      std::abs(beta1 - beta2) <= 1e-8 * std::max(std::abs(beta1), std::abs(beta2));
  return equal ? Verdict::not_basis : Verdict::basis;
}

ReducedLinear reduced_linear(const Spectrum& sp, const ThetaSet& theta) {
  if (theta.size() != 2)
    throw HypothesisError("reduced: linear case needs exactly two removed indices");
  ReducedLinear out;
  out.beta1 = sp.at(theta.indices()[0]).beta;
  out.beta2 = sp.at(theta.indices()[1]).beta;
  if (out.beta1 == 0.0 || out.beta2 == 0.0)
    throw ComputationError("reduced: vanishing link constant");
  out.matrix << 1.0, 1.0 / out.beta1, 1.0, 1.0 / out.beta2;
  return out;
}

namespace {

double smin(const Eigen::MatrixXd& M) {
  if (M.rows() == 0) return 0.0;
  return Eigen::JacobiSVD<Eigen::MatrixXd>(M).singularValues().minCoeff();
}

}  // namespace

CrossCheck cross_validate(const Problem& p, const Spectrum& sp, const ThetaSet& theta) {
  CrossCheck out;
  const int indf = p.f().index();
  const int indF = p.F().index();

  const Eigen::MatrixXd M = build_M(sp, theta);
  out.full = verdict(M);
  out.smin_full = smin(M);

  const bool one_sided = indF == 0 && indf >= 1;
  const bool linear = indf >= 1 && indf <= 2 && indF >= 1 && indF <= 2 && theta.size() == 2;
  if (!one_sided && !linear) return out;

  if (one_sided) {
    // The cancellation divides rows by psi_{n_k}(0); skip when that factor
    // is numerically zero (eigenvalue at a pole of f).
    for (int k = 0; k < theta.size(); ++k) {
      const EigenPair& pair = sp.at(theta.indices()[static_cast<std::size_t>(k)]);
      double vmax = 0.0;
      for (const State& st : pair.psi.states) vmax = std::max(vmax, std::abs(st.u));
      if (std::abs(pair.psi.front().u) < 1e-9 * vmax) return out;
    }
    const Eigen::MatrixXd R = reduced_one_sided(p, sp, theta);
    out.reduced = verdict(R);
    out.smin_reduced = smin(R);
  } else {
    const ReducedLinear R = reduced_linear(sp, theta);
    out.reduced = R.verdict();
    out.smin_reduced = smin(R.matrix);
  }
  out.applicable = true;
  out.agree = out.full == out.reduced || out.full == Verdict::borderline ||
              out.reduced == Verdict::borderline;
  return out;
}

}  // namespace slb
