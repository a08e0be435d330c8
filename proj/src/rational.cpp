#include "slbasis/rational.hpp"

#include <cmath>
#include <cstdlib>

#include "slbasis/errors.hpp"

namespace slb {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0.0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (coeffs_.empty() || other.coeffs_.empty()) return Polynomial();
  std::vector<double> out(coeffs_.size() + other.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * other.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  std::vector<double> out(std::max(coeffs_.size(), other.coeffs_.size()), 0.0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < coeffs_.size()) out[i] += coeffs_[i];
    if (i < other.coeffs_.size()) out[i] += other.coeffs_[i];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(double c) const {
  std::vector<double> out(coeffs_);
  for (double& v : out) v *= c;
  return Polynomial(std::move(out));
}

RationalHerglotz::RationalHerglotz() = default;

RationalHerglotz::RationalHerglotz(double h0, double h, std::vector<Pole> poles)
    : h0_(h0), h_(h), poles_(std::move(poles)) {
  if (!(h0_ >= 0.0)) throw ConfigError("rational: h0 must be nonnegative");
  if (!std::isfinite(h0_) || !std::isfinite(h_))
    throw ConfigError("rational: coefficients must be finite");
  for (std::size_t k = 0; k < poles_.size(); ++k) {
    if (!(poles_[k].residue > 0.0))
      throw ConfigError("rational: residues must be positive");
    if (k > 0 && !(poles_[k - 1].location < poles_[k].location))
      throw ConfigError("rational: pole locations must be strictly increasing");
  }
}

double RationalHerglotz::eval(double lambda) const {
  double acc = h0_ * lambda + h_;
  for (const Pole& p : poles_) {
    if (std::abs(lambda - p.location) < 1e-12 * std::max(1.0, std::abs(p.location)))
      throw PoleHitError("rational: eval at pole location");
    acc += p.residue / (p.location - lambda);
  }
  return acc;
}

int RationalHerglotz::index() const {
  return 2 * pole_count() + (h0_ > 0.0 ? 1 : 0);
}

int RationalHerglotz::capacity() const {
  return pole_count() + (h0_ > 0.0 ? 1 : 0);
}

std::pair<Polynomial, Polynomial> RationalHerglotz::updown() const {
  const double h0p = h0_ > 0.0 ? 1.0 / h0_ : 1.0;
  Polynomial down = Polynomial::constant(h0p);
  for (const Pole& p : poles_) down = down * Polynomial({p.location, -1.0});
  // f_up = (h0*l + h) * f_down + sum_k delta_k * h0' * prod_{j != k} (h_j - l)
  Polynomial up = Polynomial({h_, h0_}) * down;
  for (std::size_t k = 0; k < poles_.size(); ++k) {
    Polynomial part = Polynomial::constant(poles_[k].residue * h0p);
    for (std::size_t j = 0; j < poles_.size(); ++j)
      if (j != k) part = part * Polynomial({poles_[j].location, -1.0});
    up = up + part;
  }
  return {up, down};
}

bool RationalHerglotz::operator==(const RationalHerglotz& other) const {
  if (h0_ != other.h0_ || h_ != other.h_ || poles_.size() != other.poles_.size())
    return false;
  for (std::size_t k = 0; k < poles_.size(); ++k)
    if (poles_[k].location != other.poles_[k].location ||
        poles_[k].residue != other.poles_[k].residue)
      return false;
  return true;
}

}  // namespace slb
