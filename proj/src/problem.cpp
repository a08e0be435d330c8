#include "slbasis/problem.hpp"

#include <cmath>
#include <numbers>

#include "slbasis/errors.hpp"

namespace slb {

namespace {
constexpr double kPi = std::numbers::pi;
}

double simpson(const std::vector<double>& values, double step) {
  const std::size_t n = values.size();
  if (n < 3 || n % 2 == 0)
    throw ComputationError("simpson: need an odd number of sample points >= 3");
  double acc = values.front() + values.back();
  for (std::size_t i = 1; i + 1 < n; ++i) acc += values[i] * (i % 2 == 1 ? 4.0 : 2.0);
  return acc * step / 3.0;
}

Potential::Potential(std::vector<double> samples) : samples_(std::move(samples)) {
  if (samples_.empty()) throw ConfigError("potential: need at least one cell");
  for (double v : samples_)
    if (!std::isfinite(v)) throw ConfigError("potential: samples must be finite");
}

Potential Potential::sample(const std::function<double(double)>& s, int m) {
  std::vector<double> values(static_cast<std::size_t>(m));
  const double h = kPi / m;
  for (int i = 0; i < m; ++i) values[static_cast<std::size_t>(i)] = s((i + 0.5) * h);
  return Potential(std::move(values));
}

Potential Potential::linear_antisymmetric(double c, int m) {
  return sample([c](double x) { return c * (x - kPi / 2); }, m);
}

double Potential::cell_width() const { return kPi / cells(); }

double Potential::l2_norm() const {
  double acc = 0.0;
  for (double v : samples_) acc += v * v;
  return std::sqrt(acc * cell_width());
}

Problem::Problem(Potential s, RationalHerglotz f, RationalHerglotz F)
    : s_(std::move(s)), f_(std::move(f)), F_(std::move(F)) {
  if (static_cast<int>(weight_diagonal().size()) != boundary_dim())
    throw ComputationError("problem: weight dimension mismatch");
}

std::vector<double> Problem::weight_diagonal() const {
  std::vector<double> diag;
  diag.reserve(static_cast<std::size_t>(boundary_dim()));
  for (const Pole& p : f_.poles()) diag.push_back(1.0 / p.residue);
  if (f_.h0() > 0.0) diag.push_back(1.0 / f_.h0());
  for (const Pole& p : F_.poles()) diag.push_back(1.0 / p.residue);
  if (F_.h0() > 0.0) diag.push_back(1.0 / F_.h0());
  return diag;
}

double Problem::grid_step() const { return kPi / (kSubSamples * s_.cells()); }

std::vector<double> Problem::grid() const {
  const int n = grid_points();
  const double h = grid_step();
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) xs[static_cast<std::size_t>(i)] = i * h;
  xs.back() = kPi;
  return xs;
}

double Problem::l2_inner(const std::vector<double>& u, const std::vector<double>& v) const {
  if (u.size() != v.size() || static_cast<int>(u.size()) != grid_points())
    throw ComputationError("problem: l2_inner grid length mismatch");
  std::vector<double> prod(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) prod[i] = u[i] * v[i];
  return simpson(prod, grid_step());
}

double Problem::h_inner(const HVector& u, const HVector& v) const {
  const std::vector<double> w = weight_diagonal();
  if (u.boundary.size() != w.size() || v.boundary.size() != w.size())
    throw ComputationError("problem: h_inner boundary length mismatch");
  double acc = l2_inner(u.values, v.values);
  for (std::size_t k = 0; k < w.size(); ++k) acc += w[k] * u.boundary[k] * v.boundary[k];
  return acc;
}

bool Problem::is_symmetric(double tol) const {
  const std::vector<double>& sv = s_.samples();
  const std::size_t m = sv.size();
  for (std::size_t i = 0; i < m; ++i)
    if (std::abs(sv[i] + sv[m - 1 - i]) > tol) return false;
  return f_ == F_;
}

}  // namespace slb
