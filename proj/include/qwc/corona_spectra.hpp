#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qwc/algebraic.hpp"
#include "qwc/graphs.hpp"
#include "qwc/spectra.hpp"

namespace qwc {

// Constants of the vertex complemented corona of an r1-regular G on n1
// vertices with an r2-regular H on n2 vertices.
struct CoronaParams {
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;
  std::int64_t r1 = 0;
  std::int64_t r2 = 0;
  std::int64_t s = 0;  // n1 + 2 r2 - 1
  std::int64_t t = 0;  // n2 (n1 - 1)

  static CoronaParams make(std::int64_t n1, std::int64_t n2, std::int64_t r1, std::int64_t r2);

  // Lambda_theta^2 = (theta - s + t)^2 + 4 n2 for integral theta.
  std::int64_t theta_radicand(std::int64_t theta) const;
  // Lambda_r^2 = (2 r1 - s + t)^2 + 4 n2 (n1 - 1)^2.
  std::int64_t r_radicand() const;
  double lambda_theta(double theta) const;
  double lambda_r() const;
};

enum class CoronaBranch { h_shift, theta_plus, theta_minus, r_plus, r_minus };
std::string to_string(CoronaBranch kind);

struct CoronaEigenvalue {
  CoronaBranch kind = CoronaBranch::h_shift;
  double value = 0.0;
  std::optional<QuadExt> exact;  // present when the source eigenvalue is integral
  double origin = 0.0;           // mu of H (h_shift) or theta of G
  std::size_t origin_index = 0;  // index into the source decomposition
  std::size_t multiplicity = 0;
  // Lambda^2 when integral; Lambda itself is always filled (0 for h_shift).
  std::optional<std::int64_t> radicand;
  double lambda = 0.0;
};

// Closed-form eigensystem of Q(G ~o H). Holds the factor decompositions so
// projectors can be materialized on demand.
class CoronaSpectrum {
 public:
  CoronaSpectrum(CoronaParams params, SpectralDecomposition gdec, SpectralDecomposition hdec,
                 std::vector<CoronaEigenvalue> entries, std::size_t top_index);

  const CoronaParams& params() const { return params_; }
  const std::vector<CoronaEigenvalue>& entries() const { return entries_; }
  const SpectralDecomposition& g_decomposition() const { return gdec_; }
  const SpectralDecomposition& h_decomposition() const { return hdec_; }
  // Index of 2 r1 in the decomposition of G.
  std::size_t top_index() const { return top_; }
  std::size_t order() const { return static_cast<std::size_t>(params_.n1 * (1 + params_.n2)); }

  // Dense eigenprojector of one entry, in the corona's vertex ordering.
  Eigen::MatrixXd projector(std::size_t entry) const;

  // Entries merged into distinct eigenvalues (values within merge_tol are
  // one eigenvalue), with summed projectors when `with_projectors`.
  SpectralDecomposition materialize(bool with_projectors = true, double merge_tol = 1e-9) const;

 private:
  CoronaParams params_;
  SpectralDecomposition gdec_;
  SpectralDecomposition hdec_;
  std::vector<CoronaEigenvalue> entries_;
  std::size_t top_;
};

// Closed form from factor decompositions. G must be connected r1-regular
// (top eigenvalue 2 r1 with projector J/n1) and H r2-regular; throws
// PreconditionError otherwise. Requires n1 >= 2.
CoronaSpectrum corona_spectrum(const SpectralDecomposition& gdec,
                               const SpectralDecomposition& hdec, const CoronaParams& params);

// Checks regularity and connectivity on the graphs (naming the offending
// vertex), decomposes Q(G) and Q(H), then applies the closed form.
CoronaSpectrum corona_spectrum(const Graph& g, const Graph& h,
                               const SpectralOptions& opts = {});

// Throws PreconditionError naming the first vertex whose degree differs.
std::int64_t require_regular(const Graph& g, const std::string& which);

// Amplitude between G-vertices (u,0) and (v,0), evaluated from G's
// decomposition only. Construct once, evaluate at many times.
class BaseAmplitude {
 public:
  BaseAmplitude(const SpectralDecomposition& gdec, const CoronaParams& params, std::size_t u,
                std::size_t v);
  Complex operator()(double tau) const;
  double fidelity(double tau) const { return std::norm((*this)(tau)); }

 private:
  struct Term {
    double theta;
    double shifted;  // theta - s + t
    double lambda;
    double weight;   // e_u^T F_theta e_v
  };
  std::vector<Term> terms_;
  double s_plus_t_;
};

Complex corona_transition_element(const SpectralDecomposition& gdec, const CoronaParams& params,
                                  std::size_t u, std::size_t v, double tau);

// Q(G ~o H) assembled blockwise; no regularity needed.
Eigen::MatrixXd corona_full_q(const Graph& g, const Graph& h);

// Exact checks of the conjugate-pair identities for every integral pair:
//   theta+ + theta- = theta + s + t,  (s - theta+)(s - theta-) = -n2,
//   ((s - theta+)^2 + n2)((s - theta-)^2 + n2) = n2 Lambda^2,
// and the r-pair analogues with n2 (n1 - 1)^2.
struct PairIdentityReport {
  std::size_t pairs_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
PairIdentityReport verify_pair_identities(const CoronaSpectrum& spectrum);

}  // namespace qwc
