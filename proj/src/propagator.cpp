#include "slbasis/propagator.hpp"

#include <cmath>

namespace slb {

std::vector<double> Trajectory::values() const {
  std::vector<double> out(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) out[i] = states[i].u;
  return out;
}

void trig_pair(double lambda, double h, double& c, double& st) {
  const double z = lambda * h * h;
  if (std::abs(z) < 1e-6) {
    // removable singularity at lambda = 0
    c = 1.0 + z * (-0.5 + z * (1.0 / 24.0 + z * (-1.0 / 720.0)));
    st = h * (1.0 + z * (-1.0 / 6.0 + z * (1.0 / 120.0 + z * (-1.0 / 5040.0))));
  } else if (lambda > 0.0) {
    const double tau = std::sqrt(lambda);
    c = std::cos(tau * h);
    st = std::sin(tau * h) / tau;
  } else {
    const double sigma = std::sqrt(-lambda);
    c = std::cosh(sigma * h);
    st = std::sinh(sigma * h) / sigma;
  }
}

State cell_step(double a, double lambda, double h, const State& st0) {
  double c, st;
  trig_pair(lambda, h, c, st);
  return {c * st0.u + st * (a * st0.u + st0.v),
          c * st0.v + st * (-(a * a + lambda) * st0.u - a * st0.v)};
}

namespace {

Trajectory propagate(const Problem& p, double lambda, const State& init, bool forward) {
  const Potential& s = p.potential();
  const int m = s.cells();
  const int total = p.grid_points();
  const double hsub = s.cell_width() / kSubSamples;

  double c, st;
  trig_pair(lambda, forward ? hsub : -hsub, c, st);

  Trajectory traj;
  traj.grid = p.grid();
  traj.states.assign(static_cast<std::size_t>(total), State{});

  if (forward) {
    traj.states[0] = init;
    int idx = 0;
    for (int cell = 0; cell < m; ++cell) {
      const double a = s.value(cell);
      const double q = a * a + lambda;
      for (int j = 0; j < kSubSamples; ++j, ++idx) {
        const State& cur = traj.states[static_cast<std::size_t>(idx)];
        traj.states[static_cast<std::size_t>(idx + 1)] = {
            c * cur.u + st * (a * cur.u + cur.v),
            c * cur.v + st * (-q * cur.u - a * cur.v)};
      }
    }
  } else {
    traj.states.back() = init;
    int idx = total - 1;
    for (int cell = m - 1; cell >= 0; --cell) {
      const double a = s.value(cell);
      const double q = a * a + lambda;
      for (int j = 0; j < kSubSamples; ++j, --idx) {
        const State& cur = traj.states[static_cast<std::size_t>(idx)];
        traj.states[static_cast<std::size_t>(idx - 1)] = {
            c * cur.u + st * (a * cur.u + cur.v),
            c * cur.v + st * (-q * cur.u - a * cur.v)};
      }
    }
  }
  return traj;
}

}  // namespace

Trajectory solve_left(const Problem& p, double lambda) {
  const auto [fup, fdown] = p.f().updown();
  return propagate(p, lambda, {fdown(lambda), -fup(lambda)}, /*forward=*/true);
}

Trajectory solve_right(const Problem& p, double lambda) {
  const auto [Fup, Fdown] = p.F().updown();
  return propagate(p, lambda, {Fdown(lambda), Fup(lambda)}, /*forward=*/false);
}

double characteristic(const Problem& p, double lambda) {
  const auto [fup, fdown] = p.f().updown();
  const auto [Fup, Fdown] = p.F().updown();
  const Potential& s = p.potential();
  const double h = s.cell_width();

  double c, st;
  trig_pair(lambda, h, c, st);

  State cur{fdown(lambda), -fup(lambda)};
  double logscale = 0.0;
  for (int cell = 0; cell < s.cells(); ++cell) {
    const double a = s.value(cell);
    cur = {c * cur.u + st * (a * cur.u + cur.v),
           c * cur.v + st * (-(a * a + lambda) * cur.u - a * cur.v)};
    const double mag = std::max(std::abs(cur.u), std::abs(cur.v));
    if (mag > 1e50) {
      cur.u /= mag;
      cur.v /= mag;
      logscale += std::log(mag);
    }
  }
  const double omega = cur.v * Fdown(lambda) - cur.u * Fup(lambda);
  if (omega == 0.0 || logscale == 0.0) return omega;
  const double lg = logscale + std::log(std::abs(omega));
  if (lg > 700.0) return omega > 0.0 ? 1e300 : -1e300;
  return omega * std::exp(logscale);
}

}  // namespace slb
