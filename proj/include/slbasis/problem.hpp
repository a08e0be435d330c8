#ifndef SLBASIS_PROBLEM_HPP
#define SLBASIS_PROBLEM_HPP

#include <functional>
#include <vector>

#include "slbasis/rational.hpp"

namespace slb {

// Number of trajectory sub-samples per potential cell.  Even, so that
// composite Simpson panels never straddle a cell boundary.
inline constexpr int kSubSamples = 8;

// Composite Simpson rule for values sampled on a uniform grid with an even
// number of intervals.
double simpson(const std::vector<double>& values, double step);

// Real piecewise-constant representative of s in L2(0,pi) on a uniform
// partition into m cells.
class Potential {
public:
  explicit Potential(std::vector<double> samples);

  // Midpoint sampling of a smooth coefficient function on m cells.
  static Potential sample(const std::function<double(double)>& s, int m);
  static Potential zero(int m) { return Potential(std::vector<double>(m, 0.0)); }
  // s(x) = c * (x - pi/2), midpoint-sampled; satisfies s(x) + s(pi - x) = 0.
  static Potential linear_antisymmetric(double c, int m);

  int cells() const { return static_cast<int>(samples_.size()); }
  double cell_width() const;
  double value(int cell) const { return samples_[static_cast<std::size_t>(cell)]; }
  const std::vector<double>& samples() const { return samples_; }
  double l2_norm() const;

private:
  std::vector<double> samples_;
};

// An element of H = L2(0,pi) (+) R^N: function values on the trajectory grid
// plus the boundary-data vector.
struct HVector {
  std::vector<double> values;    // on the grid of kSubSamples * m + 1 points
  std::vector<double> boundary;  // length N
};

class Problem {
public:
  Problem(Potential s, RationalHerglotz f, RationalHerglotz F);

  const Potential& potential() const { return s_; }
  const RationalHerglotz& f() const { return f_; }
  const RationalHerglotz& F() const { return F_; }

  // N = capacity(f) + capacity(F); recomputed, never stored.
  int boundary_dim() const { return f_.capacity() + F_.capacity(); }

  // Diagonal of W in the fixed order
  //   1/delta_1 .. 1/delta_d, [1/h0], 1/Delta_1 .. 1/Delta_D, [1/H0].
  std::vector<double> weight_diagonal() const;

  // Number of points of the trajectory grid (kSubSamples per cell + 1).
  int grid_points() const { return kSubSamples * s_.cells() + 1; }
  double grid_step() const;
  std::vector<double> grid() const;

  // <u, v>_H = int u v dx + sum_k W_kk u^_k v^_k (Simpson on the grid).
  double h_inner(const HVector& u, const HVector& v) const;

  // L2 part only.
  double l2_inner(const std::vector<double>& u, const std::vector<double>& v) const;

  // s(x) + s(pi - x) = 0 within tol and f = F field-by-field.
  bool is_symmetric(double tol) const;

private:
  Potential s_;
  RationalHerglotz f_;
  RationalHerglotz F_;
};

}  // namespace slb

#endif
