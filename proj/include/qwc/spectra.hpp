#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "qwc/graphs.hpp"

namespace qwc {

using Complex = std::complex<double>;

struct SpectralOptions {
  // Eigenvalues closer than cluster_tol * max(1, spectral radius) are merged.
  double cluster_tol = 1e-7;
  double support_tol = 1e-8;
  double cospectral_tol = 1e-8;
  double identity_tol = 1e-8;
};

// Distinct eigenvalues (strictly descending) with orthogonal eigenprojectors.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  std::vector<Eigen::MatrixXd> projectors;
  std::vector<std::size_t> multiplicities;
  // Set when two clusters are separated by less than 10x the merge threshold.
  bool clustering_warning = false;
  double smallest_gap = 0.0;

  std::size_t size() const { return eigenvalues.size(); }
  std::size_t order() const {
    return projectors.empty() ? 0 : static_cast<std::size_t>(projectors[0].rows());
  }
  // Index of the eigenvalue within `tol` of x, or size() if none.
  std::size_t find(double x, double tol = 1e-7) const;
};

SpectralDecomposition decompose(const Eigen::MatrixXd& q, const SpectralOptions& opts = {});

// Largest violation of: sum F = I, F^2 = F, F^T = F, F_i F_j = 0, sum theta F = Q.
double projector_residual(const SpectralDecomposition& dec, const Eigen::MatrixXd& q);

// U(tau) = sum_r exp(-i tau theta_r) F_r.
Eigen::MatrixXcd transition_matrix(const SpectralDecomposition& dec, double tau);
Complex transition_amplitude(const SpectralDecomposition& dec, std::size_t u, std::size_t v,
                             double tau);

// Indices (into dec.eigenvalues) of theta with F_theta e_u != 0.
std::vector<std::size_t> eigenvalue_support(const SpectralDecomposition& dec, std::size_t u,
                                            double support_tol = 1e-8);

struct Cospectrality {
  bool strongly_cospectral = false;
  // +1 when F e_u = F e_v, -1 when F e_u = -F e_v, 0 when F e_u = 0, one entry
  // per eigenvalue of the decomposition.
  std::vector<int> signs;
};

Cospectrality strong_cospectrality(const SpectralDecomposition& dec, std::size_t u,
                                   std::size_t v, double tol = 1e-8);

// A_d F_i = (-1)^i F_i for every eigenvalue index i (descending), d = diameter.
bool antipodal_identity_check(const Graph& g, const SpectralOptions& opts = {});

struct FidelitySample {
  double tau = 0.0;
  double fidelity = 0.0;
};

struct FidelityScan {
  std::vector<FidelitySample> samples;
  std::vector<double> running_max;
  FidelitySample best;  // after golden-section refinement
};

// Samples |U(tau)_{uv}|^2 at `steps` uniform points of [0, t_max], then
// refines the best sample on its bracketing interval.
FidelityScan fidelity_scan(const SpectralDecomposition& dec, std::size_t u, std::size_t v,
                           double t_max, std::size_t steps);

// Golden-section maximisation of a unimodal function on [lo, hi].
template <typename F>
FidelitySample golden_section_max(F&& f, double lo, double hi, int iterations = 80) {
  const double ratio = 0.6180339887498949;
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < iterations && hi - lo > 1e-14; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = f(x1);
    }
  }
  return f1 > f2 ? FidelitySample{x1, f1} : FidelitySample{x2, f2};
}

}  // namespace qwc
