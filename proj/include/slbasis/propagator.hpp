#ifndef SLBASIS_PROPAGATOR_HPP
#define SLBASIS_PROPAGATOR_HPP

#include <vector>

#include "slbasis/problem.hpp"

namespace slb {

// Solution value y and quasi-derivative y^[1] = y' - s*y at one point.
struct State {
  double u = 0.0;  // y
  double v = 0.0;  // y^[1]
};

struct Trajectory {
  std::vector<double> grid;    // 0 = x_0 < ... < x_K = pi
  std::vector<State> states;

  std::vector<double> values() const;           // y samples
  const State& front() const { return states.front(); }
  const State& back() const { return states.back(); }
};

// Propagates (u, v) across a cell of width h where s = a:
//   u' = a u + v,  v' = -(a^2 + lambda) u - a v.
// The coefficient matrix A has tr A = 0 and det A = lambda, so
// exp(A h) = c I + st A with c = cos(sqrt(lambda) h), st = sin(sqrt(lambda) h)
// / sqrt(lambda) (hyperbolic for lambda < 0, series near 0).  Negative h gives
// the inverse propagator.
State cell_step(double a, double lambda, double h, const State& st);

// Trig pair (c, st) above; exposed for tests.
void trig_pair(double lambda, double h, double& c, double& st);

// Left solution phi(., lambda) with phi(0) = f_down(lambda),
// phi^[1](0) = -f_up(lambda), sampled on the trajectory grid.
Trajectory solve_left(const Problem& p, double lambda);

// Right solution chi(., lambda) with chi(pi) = F_down(lambda),
// chi^[1](pi) = F_up(lambda), integrated backward from pi.
Trajectory solve_right(const Problem& p, double lambda);

// Characteristic function
//   omega(lambda) = phi^[1](pi) F_down(lambda) - phi(pi) F_up(lambda),
// real-analytic in lambda with zero set equal to the spectrum.  States are
// renormalized per cell for large |lambda|; the returned value has the
// correct sign and is magnitude-comparable across nearby lambda.
double characteristic(const Problem& p, double lambda);

}  // namespace slb

#endif
