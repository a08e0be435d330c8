#include "slbasis/riesz.hpp"

#include <algorithm>
#include <cmath>

#include "slbasis/errors.hpp"

namespace slb {

ThetaSet::ThetaSet(std::vector<int> indices) : indices_(std::move(indices)) {
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 0) throw ConfigError("theta: indices must be nonnegative");
    if (i > 0 && indices_[i - 1] >= indices_[i])
      throw ConfigError("theta: indices must be strictly increasing");
  }
}

bool ThetaSet::contains(int n) const {
  return std::binary_search(indices_.begin(), indices_.end(), n);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::basis: return "basis";
    case Verdict::not_basis: return "not_basis";
    default: return "borderline";
  }
}

Eigen::MatrixXd build_M(const Spectrum& sp, const ThetaSet& theta) {
  const int N = theta.size();
  Eigen::MatrixXd M(N, N);
  for (int k = 0; k < N; ++k) {
    const int n = theta.indices()[static_cast<std::size_t>(k)];
    if (n >= sp.size())
      throw ConfigError("riesz: theta index " + std::to_string(n) +
                        " beyond computed spectrum");
    const std::vector<double>& row = sp.at(n).psi_hat;
    if (static_cast<int>(row.size()) != N)
      throw ComputationError("riesz: psi_hat length does not match theta size");
    for (int j = 0; j < N; ++j) M(k, j) = row[static_cast<std::size_t>(j)];
  }
  return M;
}

Verdict verdict(const Eigen::MatrixXd& M, double scale) {
  if (M.rows() == 0) return Verdict::basis;  // empty matrix convention
  if (!(scale > 0.0)) return Verdict::not_basis;
  const double smin =
      Eigen::JacobiSVD<Eigen::MatrixXd>(M).singularValues().minCoeff();
  if (smin > 1e-6 * scale) return Verdict::basis;
  if (smin < 1e-10 * scale) return Verdict::not_basis;
  return Verdict::borderline;
}

Verdict verdict(const Eigen::MatrixXd& M) {
  double scale = 0.0;
  for (Eigen::Index k = 0; k < M.rows(); ++k) scale = std::max(scale, M.row(k).norm());
  return verdict(M, scale);
}

std::vector<double> y_theta(const Problem& p, const Spectrum& sp, const ThetaSet& theta,
                            const std::vector<double>& y) {
  const int N = theta.size();
  if (N == 0) return {};
  const Eigen::MatrixXd M = build_M(sp, theta);
  if (verdict(M) != Verdict::basis)
    throw SingularMatrixError("riesz: M_Theta is not invertible to tolerance");
  Eigen::VectorXd b(N);
  for (int k = 0; k < N; ++k)
    b(k) = p.l2_inner(y, sp.at(theta.indices()[static_cast<std::size_t>(k)]).psi.values());
  Eigen::VectorXd x = M.fullPivLu().solve(b);
  const std::vector<double> w = p.weight_diagonal();
  std::vector<double> out(static_cast<std::size_t>(N));
  for (int k = 0; k < N; ++k) out[static_cast<std::size_t>(k)] = -x(k) / w[static_cast<std::size_t>(k)];
  return out;
}

double theta_inner(const Problem& p, const Spectrum& sp, const ThetaSet& theta,
                   const std::vector<double>& y, const std::vector<double>& z) {
  return p.h_inner({y, y_theta(p, sp, theta, y)}, {z, y_theta(p, sp, theta, z)});
}

CompletenessDefect completeness_defect(const Problem& p, const Spectrum& sp,
                                       const ThetaSet& theta, int n_test) {
  const int N = theta.size();
  if (N == 0)
    throw SingularMatrixError("riesz: empty theta admits no completeness defect");
  const Eigen::MatrixXd M = build_M(sp, theta);
  if (verdict(M) != Verdict::not_basis)
    throw SingularMatrixError("riesz: defect requires verdict not_basis");

  // alpha with sum_k alpha_k psi_hat_{n_k} = 0: null vector of M^T, i.e. the
  // left singular vector of M for the smallest singular value.
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullU);
  Eigen::VectorXd alpha = svd.matrixU().col(N - 1);

  CompletenessDefect out;
  out.coefficients.assign(alpha.data(), alpha.data() + N);
  out.defect.assign(static_cast<std::size_t>(p.grid_points()), 0.0);
  for (int k = 0; k < N; ++k) {
    const std::vector<double> vals =
        sp.at(theta.indices()[static_cast<std::size_t>(k)]).psi.values();
    for (std::size_t i = 0; i < out.defect.size(); ++i) out.defect[i] += alpha(k) * vals[i];
  }
  const double norm = std::sqrt(p.l2_inner(out.defect, out.defect));
  if (!(norm > 1e-8))
    throw ComputationError("riesz: defect function is numerically zero");

  for (int n = 0; n <= n_test && n < sp.size(); ++n) {
    if (theta.contains(n)) continue;
    out.tested_indices.push_back(n);
    out.residuals.push_back(p.l2_inner(out.defect, sp.at(n).psi.values()));
  }
  return out;
}

std::vector<int> retained_indices(const Spectrum& sp, const ThetaSet& theta, int count) {
  std::vector<int> out;
  for (int n = 0; n < sp.size() && static_cast<int>(out.size()) < count; ++n)
    if (!theta.contains(n)) out.push_back(n);
  if (static_cast<int>(out.size()) < count)
    throw ConfigError("riesz: insufficient spectrum for requested section size");
  return out;
}

std::vector<GramEntry> gram_section(const Problem& p, const Spectrum& sp,
                                    const ThetaSet& theta, const std::vector<int>& sizes) {
  int max_size = 0;
  for (int s : sizes) max_size = std::max(max_size, s);
  const std::vector<int> idx = retained_indices(sp, theta, max_size);

  Eigen::MatrixXd G(max_size, max_size);
  for (int i = 0; i < max_size; ++i) {
    const std::vector<double> vi = sp.at(idx[static_cast<std::size_t>(i)]).psi.values();
    for (int j = 0; j <= i; ++j) {
      const double g = p.l2_inner(vi, sp.at(idx[static_cast<std::size_t>(j)]).psi.values());
      G(i, j) = g;
      G(j, i) = g;
    }
  }

  std::vector<GramEntry> out;
  for (int s : sizes) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G.topLeftCorner(s, s));
    out.push_back({s, es.eigenvalues().minCoeff(), es.eigenvalues().maxCoeff()});
  }
  return out;
}

RieszReport make_report(const Problem& p, const Spectrum& sp, const ThetaSet& theta,
                        const std::vector<int>& sizes) {
  RieszReport rep;
  const Eigen::MatrixXd M = build_M(sp, theta);
  if (M.rows() > 0) {
    rep.det = M.determinant();
    Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(M).singularValues();
    rep.singular_values.assign(sv.data(), sv.data() + sv.size());
  }
  rep.verdict = verdict(M);
  if (!sizes.empty()) {
    rep.gram = gram_section(p, sp, theta, sizes);
    const double first = rep.gram.front().min_eig;
    const double last = rep.gram.back().min_eig;
    const bool decaying = last < 0.5 * first;
    rep.gram_consistent = rep.verdict == Verdict::borderline ||
                          (rep.verdict == Verdict::basis && !decaying) ||
                          (rep.verdict == Verdict::not_basis && decaying);
  }
  return rep;
}

}  // namespace slb
