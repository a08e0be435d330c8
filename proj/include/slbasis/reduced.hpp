#ifndef SLBASIS_REDUCED_HPP
#define SLBASIS_REDUCED_HPP

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "slbasis/riesz.hpp"

namespace slb {

// p(l) = prod_k (h_k - l) and the leave-one-out products
// p_m(l) = prod_{k != m} (h_k - l).
std::pair<Polynomial, std::vector<Polynomial>> poly_p(const RationalHerglotz& f);

// Reduced matrix for the case of a constant right boundary coefficient:
// rows (p_1(l_n), ..., p_d(l_n) [, p(l_n)]) at the theta eigenvalues, the last
// column present iff h0 > 0.
Eigen::MatrixXd reduced_one_sided(const Problem& p, const Spectrum& sp,
                                  const ThetaSet& theta);

struct ReducedLinear {
  Eigen::Matrix2d matrix;  // rows (1, 1/beta_{n_k})
  double beta1 = 0.0;
  double beta2 = 0.0;

  // Invertible iff beta_{n_1} != beta_{n_2} (relative tolerance 1e-8).
  Verdict verdict() const;
};

// Reduced 2x2 matrix for boundary coefficients of index 1 or 2 on both sides.
ReducedLinear reduced_linear(const Spectrum& sp, const ThetaSet& theta);

struct CrossCheck {
  bool applicable = false;
  bool agree = true;
  Verdict full = Verdict::basis;
  Verdict reduced = Verdict::basis;
  double smin_full = 0.0;
  double smin_reduced = 0.0;
};

// Compares the full M_Theta verdict with the applicable reduced-matrix
// verdict.  Reports not-applicable when neither special-case hypothesis
// holds or when the cancellation factor psi_{n_k}(0) is numerically zero.
CrossCheck cross_validate(const Problem& p, const Spectrum& sp, const ThetaSet& theta);

}  // namespace slb

#endif
