#include "qwc/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qwc {

std::size_t SpectralDecomposition::find(double x, double tol) const {
  for (std::size_t i = 0; i < eigenvalues.size(); ++i)
    if (std::abs(eigenvalues[i] - x) <= tol) return i;
  return eigenvalues.size();
}

SpectralDecomposition decompose(const Eigen::MatrixXd& q, const SpectralOptions& opts) {
  if (q.rows() != q.cols() || q.rows() == 0)
    throw std::invalid_argument("decompose: matrix must be square and non-empty");
  if (!(opts.cluster_tol > 0)) throw std::invalid_argument("cluster_tol must be positive");
  if ((q - q.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, q.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("decompose: matrix is not symmetric");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(q);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  const auto& values = solver.eigenvalues();  // ascending
  const auto& vectors = solver.eigenvectors();
  const Eigen::Index n = q.rows();
  const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
  const double merge = opts.cluster_tol * scale;

  SpectralDecomposition dec;
  dec.smallest_gap = std::numeric_limits<double>::infinity();
  Eigen::Index hi = n - 1;
  while (hi >= 0) {
    Eigen::Index lo = hi;
    while (lo > 0 && values(hi) - values(lo - 1) <= merge) --lo;
    const auto count = hi - lo + 1;
    const auto block = vectors.middleCols(lo, count);
    dec.eigenvalues.push_back(values.segment(lo, count).mean());
    dec.projectors.push_back(block * block.transpose());
    dec.multiplicities.push_back(static_cast<std::size_t>(count));
    if (lo > 0) dec.smallest_gap = std::min(dec.smallest_gap, values(lo) - values(lo - 1));
    hi = lo - 1;
  }
  dec.clustering_warning = dec.smallest_gap < 10.0 * merge;
  return dec;
}

double projector_residual(const SpectralDecomposition& dec, const Eigen::MatrixXd& q) {
  const Eigen::Index n = q.rows();
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd recon = Eigen::MatrixXd::Zero(n, n);
  double worst = 0.0;
  for (std::size_t i = 0; i < dec.size(); ++i) {
    const auto& f = dec.projectors[i];
    sum += f;
    recon += dec.eigenvalues[i] * f;
    worst = std::max(worst, (f * f - f).cwiseAbs().maxCoeff());
    worst = std::max(worst, (f - f.transpose()).cwiseAbs().maxCoeff());
    for (std::size_t j = i + 1; j < dec.size(); ++j)
      worst = std::max(worst, (f * dec.projectors[j]).cwiseAbs().maxCoeff());
  }
  worst = std::max(worst, (sum - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff());
  worst = std::max(worst, (recon - q).cwiseAbs().maxCoeff());
  return worst;
}

Eigen::MatrixXcd transition_matrix(const SpectralDecomposition& dec, double tau) {
  const auto n = static_cast<Eigen::Index>(dec.order());
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t r = 0; r < dec.size(); ++r)
    u += std::polar(1.0, -tau * dec.eigenvalues[r]) * dec.projectors[r].cast<Complex>();
  return u;
}

Complex transition_amplitude(const SpectralDecomposition& dec, std::size_t u, std::size_t v,
                             double tau) {
  Complex sum{0.0, 0.0};
  for (std::size_t r = 0; r < dec.size(); ++r)
    sum += std::polar(1.0, -tau * dec.eigenvalues[r]) *
           dec.projectors[r](static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v));
  return sum;
}

std::vector<std::size_t> eigenvalue_support(const SpectralDecomposition& dec, std::size_t u,
                                            double support_tol) {
  if (u >= dec.order()) throw std::out_of_range("vertex out of range");
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < dec.size(); ++r)
    if (dec.projectors[r].col(static_cast<Eigen::Index>(u)).cwiseAbs().maxCoeff() > support_tol)
      out.push_back(r);
  return out;
}

Cospectrality strong_cospectrality(const SpectralDecomposition& dec, std::size_t u,
                                   std::size_t v, double tol) {
  if (u >= dec.order() || v >= dec.order()) throw std::out_of_range("vertex out of range");
  if (u == v) throw std::invalid_argument("strong_cospectrality needs distinct vertices");
  Cospectrality out;
  out.strongly_cospectral = true;
  for (const auto& f : dec.projectors) {
    const auto cu = f.col(static_cast<Eigen::Index>(u));
    const auto cv = f.col(static_cast<Eigen::Index>(v));
    const bool zero_u = cu.cwiseAbs().maxCoeff() <= tol;
    const bool zero_v = cv.cwiseAbs().maxCoeff() <= tol;
    if (zero_u && zero_v) {
      out.signs.push_back(0);
    } else if ((cu - cv).cwiseAbs().maxCoeff() <= tol) {
      out.signs.push_back(1);
    } else if ((cu + cv).cwiseAbs().maxCoeff() <= tol) {
      out.signs.push_back(-1);
    } else {
      out.signs.push_back(0);
      out.strongly_cospectral = false;
    }
  }
  return out;
}

bool antipodal_identity_check(const Graph& g, const SpectralOptions& opts) {
  const auto d = g.diameter();
  const auto ad = distance_k_adjacency(g, d);
  const auto dec = decompose(signless_laplacian(g), opts);
  for (std::size_t i = 0; i < dec.size(); ++i) {
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    if ((ad * dec.projectors[i] - sign * dec.projectors[i]).cwiseAbs().maxCoeff() >
        opts.identity_tol)
      return false;
  }
  return true;
}

FidelityScan fidelity_scan(const SpectralDecomposition& dec, std::size_t u, std::size_t v,
                           double t_max, std::size_t steps) {
  if (!(t_max > 0)) throw std::invalid_argument("t_max must be positive");
  if (steps < 2) throw std::invalid_argument("steps must be at least 2");
  if (u >= dec.order() || v >= dec.order()) throw std::out_of_range("vertex out of range");
  std::vector<double> weights;
  for (const auto& f : dec.projectors)
    weights.push_back(f(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)));
  auto fidelity = [&](double tau) {
    Complex sum{0.0, 0.0};
    for (std::size_t r = 0; r < weights.size(); ++r)
      sum += std::polar(1.0, -tau * dec.eigenvalues[r]) * weights[r];
    return std::norm(sum);
  };

  FidelityScan scan;
  scan.samples.reserve(steps);
  std::size_t best = 0;
  const double h = t_max / static_cast<double>(steps - 1);
  for (std::size_t k = 0; k < steps; ++k) {
    const double tau = h * static_cast<double>(k);
    scan.samples.push_back({tau, fidelity(tau)});
    if (scan.samples[k].fidelity > scan.samples[best].fidelity) best = k;
    scan.running_max.push_back(scan.samples[best].fidelity);
  }
  const double lo = best == 0 ? 0.0 : scan.samples[best - 1].tau;
  const double hi = best + 1 == steps ? t_max : scan.samples[best + 1].tau;
  scan.best = golden_section_max(fidelity, lo, hi);
  if (scan.best.fidelity < scan.samples[best].fidelity) scan.best = scan.samples[best];
  return scan;
}

}  // namespace qwc
