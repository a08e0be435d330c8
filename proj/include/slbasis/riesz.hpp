#ifndef SLBASIS_RIESZ_HPP
#define SLBASIS_RIESZ_HPP

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "slbasis/spectrum.hpp"

namespace slb {

// N distinct nonnegative indices of eigenfunctions to remove.
class ThetaSet {
public:
  ThetaSet() = default;
  explicit ThetaSet(std::vector<int> indices);

  const std::vector<int>& indices() const { return indices_; }
  int size() const { return static_cast<int>(indices_.size()); }
  bool contains(int n) const;

private:
  std::vector<int> indices_;  // strictly increasing
};

enum class Verdict { basis, not_basis, borderline };

std::string to_string(Verdict v);

struct GramEntry {
  int size = 0;
  double min_eig = 0.0;
  double max_eig = 0.0;
};

struct RieszReport {
  double det = 1.0;
  std::vector<double> singular_values;  // descending
  Verdict verdict = Verdict::basis;
  std::vector<GramEntry> gram;
  bool gram_consistent = true;               // Gram trend matches the verdict
  std::optional<bool> reduced_agrees;        // set by the reduced-matrix cross-check
};

// N x N matrix whose row k is psi_hat of the k-th removed index.
Eigen::MatrixXd build_M(const Spectrum& sp, const ThetaSet& theta);

// Invertibility verdict from sigma_min relative to a row-norm scale:
// basis above 1e-6 * scale, not_basis below 1e-10 * scale, else borderline.
// The empty matrix is invertible.
Verdict verdict(const Eigen::MatrixXd& M, double scale);

// Convenience: scale = max row norm.
Verdict verdict(const Eigen::MatrixXd& M);

// y_Theta = -W^{-1} M_Theta^{-1} (int y psi_{n_k})_k for y sampled on the
// trajectory grid.  Requires verdict basis.
std::vector<double> y_theta(const Problem& p, const Spectrum& sp, const ThetaSet& theta,
                            const std::vector<double>& y);

// <y, z>_Theta = <(y, y_Theta), (z, z_Theta)>_H.
double theta_inner(const Problem& p, const Spectrum& sp, const ThetaSet& theta,
                   const std::vector<double>& y, const std::vector<double>& z);

struct CompletenessDefect {
  std::vector<double> coefficients;  // alpha with sum alpha_k psi_hat_{n_k} = 0
  std::vector<double> defect;        // y = sum alpha_k psi_{n_k}, grid samples
  std::vector<int> tested_indices;   // n <= n_test, n not in Theta
  std::vector<double> residuals;     // <y, psi_n>_{L2}
};

// Witness of non-completeness when M_Theta is singular.
CompletenessDefect completeness_defect(const Problem& p, const Spectrum& sp,
                                       const ThetaSet& theta, int n_test);

// Extreme eigenvalues of the L2 Gram matrix of the first `size` retained
// eigenfunctions, for each requested section size.
std::vector<GramEntry> gram_section(const Problem& p, const Spectrum& sp,
                                    const ThetaSet& theta, const std::vector<int>& sizes);

// Full report: M_Theta spectrum data, verdict, Gram sections, trend flag.
RieszReport make_report(const Problem& p, const Spectrum& sp, const ThetaSet& theta,
                        const std::vector<int>& sizes);

// Retained indices {0, ..., } \ theta, first `count` of them.
std::vector<int> retained_indices(const Spectrum& sp, const ThetaSet& theta, int count);

}  // namespace slb

#endif
