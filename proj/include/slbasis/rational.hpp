#ifndef SLBASIS_RATIONAL_HPP
#define SLBASIS_RATIONAL_HPP

#include <utility>
#include <vector>

namespace slb {

// Real polynomial with coefficients in ascending degree order.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);

  static Polynomial constant(double c) { return Polynomial({c}); }

  // Horner evaluation.
  double operator()(double x) const;

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double coeff(int k) const;

  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator*(double c) const;

private:
  std::vector<double> coeffs_;  // empty means the zero polynomial
};

struct Pole {
  double location;  // h_k
  double residue;   // delta_k > 0
};

// Rational Herglotz-Nevanlinna function
//   f(lambda) = h0*lambda + h + sum_k delta_k / (h_k - lambda),
// with h0 >= 0, delta_k > 0 and strictly increasing pole locations.
class RationalHerglotz {
public:
  RationalHerglotz();  // the zero function
  RationalHerglotz(double h0, double h, std::vector<Pole> poles);

  static RationalHerglotz zero() { return RationalHerglotz(); }

  double h0() const { return h0_; }
  double h() const { return h_; }
  const std::vector<Pole>& poles() const { return poles_; }
  int pole_count() const { return static_cast<int>(poles_.size()); }

  // Throws PoleHitError if lambda is within tolerance of a pole.
  double eval(double lambda) const;

  // ind f = 2d + 1 if h0 > 0, else 2d.
  int index() const;

  // ceil(index / 2) = d + (h0 > 0).
  int capacity() const;

  // f = f_up / f_down with f_down(l) = h0' * prod_k (h_k - l),
  // h0' = 1/h0 if h0 > 0 else 1.
  std::pair<Polynomial, Polynomial> updown() const;
  Polynomial up() const { return updown().first; }
  Polynomial down() const { return updown().second; }

  bool operator==(const RationalHerglotz& other) const;

private:
  double h0_ = 0.0;
  double h_ = 0.0;
  std::vector<Pole> poles_;
};

}  // namespace slb

#endif
