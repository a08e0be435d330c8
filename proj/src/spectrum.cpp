#include "slbasis/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "slbasis/errors.hpp"

namespace slb {

namespace {

double bisect(const Problem& p, double lo, double hi, double wlo) {
  // wlo and w(hi) have opposite signs (or one endpoint is an exact zero)
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= 1e-13 * std::max(1.0, std::abs(mid))) return mid;
    const double wm = characteristic(p, mid);
    if (wm == 0.0) return mid;
    if ((wm > 0.0) == (wlo > 0.0)) {
      lo = mid;
      wlo = wm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void check_simple(const Problem& p, double root) {
  const double d = 1e-5 * std::max(1.0, std::abs(root));
  const double wl = characteristic(p, root - d);
  const double wr = characteristic(p, root + d);
  if (wl == 0.0 || wr == 0.0 || (wl > 0.0) == (wr > 0.0))
    throw DegenerateRootError("spectrum: characteristic function does not change sign at lambda = " +
                              std::to_string(root));
}

// Roots of omega on the increasing lambda mesh, polished by bisection.
std::vector<double> scan_roots(const Problem& p, const std::vector<double>& mesh) {
  std::vector<double> roots;
  double prev_lambda = mesh.front();
  double prev_w = characteristic(p, prev_lambda);
  for (std::size_t i = 1; i < mesh.size(); ++i) {
    const double lam = mesh[i];
    const double w = characteristic(p, lam);
    if (prev_w == 0.0) {
      if (roots.empty() || roots.back() != prev_lambda) roots.push_back(prev_lambda);
    } else if (w != 0.0 && (w > 0.0) != (prev_w > 0.0)) {
      roots.push_back(bisect(p, prev_lambda, lam, prev_w));
    }
    prev_lambda = lam;
    prev_w = w;
  }
  if (prev_w == 0.0) roots.push_back(prev_lambda);
  return roots;
}

}  // namespace

std::vector<double> find_eigenvalues(const Problem& p, int n_max) {
  if (n_max < 0) throw ConfigError("spectrum: n_max must be nonnegative");
  const double half_ind = 0.5 * (p.f().index() + p.F().index());
  const double tau_top = n_max - half_ind + 1.6;

  // Lower end: expand bands in sigma = sqrt(-lambda) until one is root-free.
  double sigma_max = 4.0;
  for (double band_lo = 4.0; band_lo < 64.0; band_lo *= 2.0) {
    const double band_hi = 2.0 * band_lo;
    std::vector<double> mesh;
    for (double s = band_hi; s >= band_lo; s -= 0.125) mesh.push_back(-s * s);
    if (scan_roots(p, mesh).empty()) break;
    sigma_max = band_hi;
  }

  double dtau = 0.25;
  for (int attempt = 0; attempt < 7; ++attempt, dtau *= 0.5) {
    std::vector<double> mesh;
    for (double s = sigma_max; s > dtau / 2; s -= dtau) mesh.push_back(-s * s);
    for (double t = 0.0; t <= tau_top; t += dtau) mesh.push_back(t * t);
    std::vector<double> roots = scan_roots(p, mesh);

    if (static_cast<int>(roots.size()) < n_max + 1) continue;

    // Beyond the low-lying transient the roots must land in their
    // asymptotic slots one by one.
    bool slots_ok = true;
    for (int n = 11; n <= n_max && slots_ok; ++n) {
      const double lam = roots[static_cast<std::size_t>(n)];
      if (lam <= 0.0 || std::abs(std::sqrt(lam) - (n - half_ind)) > 0.5) slots_ok = false;
    }
    if (!slots_ok) continue;

    roots.resize(static_cast<std::size_t>(n_max + 1));
    for (double r : roots) check_simple(p, r);
    return roots;
  }
  throw MissedRootError("spectrum: root count disagrees with the asymptotic counting function");
}

double link_constant(const Problem& p, double lambda) {
  const Trajectory phi = solve_left(p, lambda);
  const Trajectory chi = solve_right(p, lambda);
  double num = 0.0, den = 0.0, umax = 0.0;
  std::size_t imax = 0;
  for (std::size_t i = 0; i < phi.states.size(); ++i) {
    num += chi.states[i].u * phi.states[i].u;
    den += phi.states[i].u * phi.states[i].u;
    if (std::abs(phi.states[i].u) > umax) {
      umax = std::abs(phi.states[i].u);
      imax = i;
    }
  }
  if (den == 0.0) throw ComputationError("spectrum: left solution vanishes identically");
  const double ls = num / den;
  const double pointwise = chi.states[imax].u / phi.states[imax].u;
  if (std::abs(pointwise - ls) > 1e-6 * std::max(std::abs(pointwise), std::abs(ls)))
    throw ComputationError("spectrum: chi is not proportional to phi; lambda = " +
                           std::to_string(lambda) + " is not an eigenvalue to tolerance");
  return ls;
}

EigenPair normalize(const Problem& p, double lambda, int n) {
  const Trajectory phi = solve_left(p, lambda);
  const double beta = link_constant(p, lambda);
  const double phi0 = phi.front().u;
  const double phipi = phi.back().u;

  const RationalHerglotz& f = p.f();
  const RationalHerglotz& F = p.F();
  std::vector<double> ghat;
  ghat.reserve(static_cast<std::size_t>(p.boundary_dim()));

  // Left entries delta_k phi(0) / (lambda - h_k).  Since phi(0) = f_down(lambda)
  // the quotient equals -delta_k h0' prod_{j != k}(h_j - lambda) exactly, which
  // stays finite when lambda hits a pole of f.
  const double h0p = f.h0() > 0.0 ? 1.0 / f.h0() : 1.0;
  for (int k = 0; k < f.pole_count(); ++k) {
    double prod = 1.0;
    for (int j = 0; j < f.pole_count(); ++j)
      if (j != k) prod *= f.poles()[static_cast<std::size_t>(j)].location - lambda;
    ghat.push_back(-f.poles()[static_cast<std::size_t>(k)].residue * h0p * prod);
  }
  if (f.h0() > 0.0) ghat.push_back(-f.h0() * phi0);

  // Right entries Delta_k phi(pi) / (H_k - lambda); when lambda is at a pole of
  // F, route through chi: phi(pi) = F_down(lambda) / beta.
  const double H0p = F.h0() > 0.0 ? 1.0 / F.h0() : 1.0;
  for (int k = 0; k < F.pole_count(); ++k) {
    const Pole& pk = F.poles()[static_cast<std::size_t>(k)];
    if (std::abs(pk.location - lambda) > 1e-6 * std::max(1.0, std::abs(pk.location))) {
      ghat.push_back(pk.residue * phipi / (pk.location - lambda));
    } else {
      double prod = 1.0;
      for (int j = 0; j < F.pole_count(); ++j)
        if (j != k) prod *= F.poles()[static_cast<std::size_t>(j)].location - lambda;
      ghat.push_back(pk.residue * H0p * prod / beta);
    }
  }
  if (F.h0() > 0.0) ghat.push_back(F.h0() * phipi);

  const double rho2 = p.h_inner({phi.values(), ghat}, {phi.values(), ghat});
  if (!(rho2 > 1e-300))
    throw ComputationError("spectrum: zero norm at lambda = " + std::to_string(lambda) +
                           "; spurious root");
  const double rho = std::sqrt(rho2);

  EigenPair pair;
  pair.n = n;
  pair.lambda = lambda;
  pair.psi = phi;
  for (State& st : pair.psi.states) {
    st.u /= rho;
    st.v /= rho;
  }
  pair.psi_hat = std::move(ghat);
  for (double& g : pair.psi_hat) g /= rho;
  pair.beta = beta;
  return pair;
}

Spectrum compute_spectrum(const Problem& p, int n_max) {
  const std::vector<double> lambdas = find_eigenvalues(p, n_max);
  Spectrum sp;
  sp.pairs.reserve(lambdas.size());
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    sp.pairs.push_back(normalize(p, lambdas[i], static_cast<int>(i)));
  return sp;
}

namespace {

// Mean |.| of the last quarter no larger than of the second quarter.
bool tail_decaying(const std::vector<double>& v) {
  const std::size_t n = v.size();
  if (n < 8) return true;
  double mid = 0.0, tail = 0.0;
  std::size_t nm = 0, nt = 0;
  for (std::size_t i = n / 4; i < n / 2; ++i, ++nm) mid += std::abs(v[i]);
  for (std::size_t i = 3 * n / 4; i < n; ++i, ++nt) tail += std::abs(v[i]);
  return tail / nt <= mid / nm + 1e-12;
}

}  // namespace

AsymptoticReport asymptotic_diagnostics(const Spectrum& sp, const Problem& p) {
  if (sp.size() < 10)
    throw ComputationError("spectrum: asymptotic diagnostics need at least 10 eigenpairs");
  const int indf = p.f().index();
  const int indF = p.F().index();
  const double half_ind = 0.5 * (indf + indF);
  AsymptoticReport rep;
  for (const EigenPair& pair : sp.pairs) {
    const double shifted = pair.n - half_ind;
    const double sign = pair.n % 2 == 0 ? 1.0 : -1.0;
    double xi = std::numeric_limits<double>::quiet_NaN();
    if (shifted > 0.0)
      xi = pair.beta * sign * std::pow(shifted, indf - indF) - 1.0;
    rep.xi.push_back(xi);
    rep.sqrt_offsets.push_back(pair.lambda >= 0.0
                                   ? std::sqrt(pair.lambda) - shifted
                                   : -std::sqrt(-pair.lambda) - shifted);
  }
  std::vector<double> xi_clean;
  for (double x : rep.xi)
    if (std::isfinite(x)) xi_clean.push_back(x);
  rep.xi_tail_decaying = tail_decaying(xi_clean);
  rep.offsets_tail_decaying = tail_decaying(rep.sqrt_offsets);
  return rep;
}

}  // namespace slb
