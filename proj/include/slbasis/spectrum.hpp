#ifndef SLBASIS_SPECTRUM_HPP
#define SLBASIS_SPECTRUM_HPP

#include <vector>

#include "slbasis/propagator.hpp"

namespace slb {

struct EigenPair {
  int n = 0;
  double lambda = 0.0;
  Trajectory psi;                // normalized in H, sign inherited from phi
  std::vector<double> psi_hat;   // boundary vector, length N
  double beta = 0.0;             // chi_n = beta_n * phi_n
};

struct Spectrum {
  std::vector<EigenPair> pairs;

  const EigenPair& at(int n) const { return pairs.at(static_cast<std::size_t>(n)); }
  int size() const { return static_cast<int>(pairs.size()); }
};

// First n_max + 1 zeros of the characteristic function, in increasing order.
// Brackets come from sign scanning on a mesh tied to the asymptotic spacing
// sqrt(lambda_n) ~ n - (ind f + ind F)/2; the mesh is refined until the root
// count and slot positions stabilize.  Roots are polished by bisection to
// relative lambda-tolerance 1e-13.
std::vector<double> find_eigenvalues(const Problem& p, int n_max);

// beta with chi = beta * phi, by least squares over the grid with a pointwise
// cross-check; throws if the two disagree (lambda not an eigenvalue).
double link_constant(const Problem& p, double lambda);

// Normalized eigenpair at a located eigenvalue.
EigenPair normalize(const Problem& p, double lambda, int n);

// find_eigenvalues + normalize for every index.
Spectrum compute_spectrum(const Problem& p, int n_max);

struct AsymptoticReport {
  std::vector<double> xi;            // beta_n (-1)^n (n - (ind f + ind F)/2)^(ind f - ind F) - 1
  std::vector<double> sqrt_offsets;  // sqrt(lambda_n) - (n - (ind f + ind F)/2)
  bool xi_tail_decaying = false;
  bool offsets_tail_decaying = false;
};

AsymptoticReport asymptotic_diagnostics(const Spectrum& sp, const Problem& p);

}  // namespace slb

#endif
