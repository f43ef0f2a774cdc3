#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qwc/algebraic.hpp"
#include "qwc/corona_spectra.hpp"
#include "qwc/graphs.hpp"
#include "qwc/spectra.hpp"

namespace qwc {

// Which argument produced a verdict. Serialized as the report's "basis".
enum class Basis {
  none,
  strong_cospectrality,    // u, v not strongly cospectral
  common_quadratic_form,   // support not of the form (a + b_r sqrt(delta))/2
  eigenvalue_parity,       // Lambda+/- disagree with the parity classification
  pst_characterization,    // all conditions hold: certified PST
  corona_integrality,      // exact periodicity test of a base vertex
  corona_necessary_bounds, // n2 >= |theta-s+t|+1 and n2(n1-1)^2 >= |2r1-s+t|+1
  corona_gap_sqrt_delta,   // a gap equals sqrt(delta) or 2 sqrt(delta)
  corona_gap_inequality,   // a gap lies strictly between 0 and 3
  k2_square_differences,   // G = K2, n2 = 1 or prime
  k2_even_order_external,  // G = K2, n2 even: cited external result
  numeric_recognition,     // eigenvalues could not be identified exactly
};
std::string to_string(Basis basis);

enum class Verdict { pst, no_pst, undecided_numeric, undecided };
std::string to_string(Verdict verdict);

// ------------------------------------------------------------ periodicity

enum class PeriodicityCase { integer_case, quadratic_case, refuted, undecided_numeric };
std::string to_string(PeriodicityCase c);

struct PeriodicityReport {
  std::optional<std::size_t> vertex;
  bool periodic = false;
  PeriodicityCase kind = PeriodicityCase::refuted;
  std::optional<std::int64_t> delta;
  std::string witness;
  Basis basis = Basis::common_quadratic_form;
};

// Periodic iff all support values are integers, or all are (a + b_r sqrt(delta))/2
// with one a and one square-free delta.
PeriodicityReport is_periodic_vertex(const std::vector<QuadExt>& support);
// Numeric support: each value is recognized first; failures give undecided_numeric.
PeriodicityReport is_periodic_vertex(const std::vector<double>& support,
                                     const RecognitionOptions& opts = {});

// Exact periodicity of (v,0) in G ~o H from integral supp_G(v) (2 r1 may be
// included or not; the r-pair is always part of the corona support). With
// 2r1 + t != s every quantity must be integral; with 2r1 + t = s a common
// sqrt(delta) is allowed and then delta | n2. A support of just {2 r1} (no
// graph has one) is periodic with the r-pair's delta.
PeriodicityReport corona_base_periodicity(const CoronaParams& params,
                                          const std::vector<std::int64_t>& supp_g_v);

struct BoundsCheck {
  bool holds = true;
  std::optional<double> violating_theta;  // theta with n2 < |theta-s+t|+1
  bool r_term_violated = false;           // n2(n1-1)^2 < |2r1-s+t|+1
  std::string witness;
};
// Necessary conditions for (v,0) to be periodic; any violation refutes it.
BoundsCheck periodicity_bounds(const CoronaParams& params, const std::vector<double>& supp_g_v);

enum class GapCondition { none, pair_gap, r_gap };

struct GapRefutation {
  bool nonperiodic = false;
  GapCondition condition = GapCondition::none;
  Basis basis = Basis::none;
  double first = 0.0;   // lambda (pair) or gamma (r_gap)
  double second = 0.0;  // mu (pair) or 2 r1 (r_gap)
  std::optional<std::int64_t> delta;
  std::string witness;
};

// 0 < |l-s+t| - |m-s+t| < 3 for distinct l, m, or
// 0 < ||2r1-s+t| - (n1-1)|g-s+t|| < 3, over supp \ {2 r1}.
GapRefutation gap_inequality_refutation(const CoronaParams& params,
                                        const std::vector<double>& supp_g_v);
// Same differences checked exactly for membership in {sqrt(delta), 2 sqrt(delta)}.
GapRefutation sqrt_delta_gap_refutation(const CoronaParams& params,
                                        const std::vector<std::int64_t>& supp_g_v);

struct K2Analysis {
  Verdict verdict = Verdict::undecided;
  Basis basis = Basis::none;
  // Result of the square-difference search: some square-free delta makes both
  // theta - s + t and sqrt((theta-s+t)^2 + 4 n2) multiples of sqrt(delta).
  bool base_periodic = false;
  std::optional<std::int64_t> delta;
  std::string witness;
  std::string provenance;
};
// G = K2 and H r2-regular of order n2.
K2Analysis k2_corona_no_pst(std::int64_t n2, std::int64_t r2);

// --------------------------------------------------------- certification

// Support of u with per-value exact forms (when known) and cospectrality signs.
struct CertificationInput {
  std::size_t u = 0;
  std::size_t v = 0;
  bool strongly_cospectral = false;
  std::vector<double> numeric;               // descending
  std::vector<std::optional<QuadExt>> exact;  // same order
  std::vector<int> signs;                     // +1 / -1, same order
};

struct PSTReport {
  std::size_t u = 0;
  std::size_t v = 0;
  bool strongly_cospectral = false;
  std::vector<double> support_numeric;
  std::vector<std::optional<QuadExt>> support;
  std::vector<int> signs;
  std::optional<std::int64_t> delta;
  std::optional<std::int64_t> g;
  std::vector<QuadExt> lambda_plus;
  std::vector<QuadExt> lambda_minus;
  std::vector<std::int64_t> scaled_gaps;
  Verdict verdict = Verdict::undecided_numeric;
  Basis basis = Basis::none;
  std::optional<double> tau0;
  // U(tau0)_{vu} = exp(-i tau0 theta_0) for the top support eigenvalue.
  std::optional<std::complex<double>> phase;
  std::string refutation_witness;
  // Every refutation that applied, in evaluation order (corona checks).
  std::vector<std::pair<Basis, std::string>> refutations;
};

PSTReport pst_certify(const CertificationInput& input);

// Builds the certification input from a numeric decomposition. When `hints`
// is given, numeric support values within 1e-7 of a hint take its exact form;
// the rest go through recognize_quadext.
CertificationInput certification_input(const SpectralDecomposition& dec, std::size_t u,
                                       std::size_t v, const SpectralOptions& opts = {},
                                       const RecognitionOptions& recog = {},
                                       const std::vector<QuadExt>& hints = {});

PSTReport certify_pst(const SpectralDecomposition& dec, std::size_t u, std::size_t v,
                      const SpectralOptions& opts = {}, const RecognitionOptions& recog = {});

// PST between two vertices of G ~o H. For regular G, H the corona refutations
// run on each endpoint's base vertex first; if none applies the assembled
// corona is certified with closed-form eigenvalues as exact hints.
PSTReport check_corona_pst(const Graph& g, const Graph& h, CoronaVertex a, CoronaVertex b,
                           const SpectralOptions& opts = {}, const RecognitionOptions& recog = {});

// ------------------------------------------------------------------ PGST

struct PGSTSearchResult {
  double target_epsilon = 0.0;
  std::int64_t l_bound = 0;
  std::int64_t best_l = 0;
  double time = 0.0;
  double fidelity = 0.0;
  bool achieved = false;
  bool applicable = true;
  std::string branch;
  std::string basis;
  std::vector<std::string> notes;
};

struct PgstHypotheses {
  bool ok = true;
  std::int64_t g = 0;
  std::int64_t r_radicand = 0;
  SquareFreeDecomposition r_root;  // Lambda_r = s sqrt(c)
  std::vector<std::string> failures;
  std::vector<std::string> notes;
};

// Checks the hypotheses of the base-vertex PGST construction from spectral
// data alone: n1 >= 2, H empty (r2 == 0), Lambda_r irrational. For n1 >= 3
// every Lambda_theta over the integral support should be irrational; the one
// exception reachable by a graph (theta = 0 with n2 = 1, bipartite G) is
// recorded in `notes`, anything else is a logic error.
PgstHypotheses check_pgst_hypotheses(const CoronaParams& params,
                                     const std::vector<std::int64_t>& supp_g_u, std::int64_t g);

// Times T_l = (4l + 2/g) pi for l = 0..l_bound; stops at the first l whose
// fidelity reaches 1 - epsilon, otherwise returns the best.
PGSTSearchResult scan_pgst_times(const BaseAmplitude& amplitude, std::int64_t g, double epsilon,
                                 std::int64_t l_bound);

// Certifies PST u -> v in G (delta must be 1, tau = pi/g), checks the
// hypotheses and scans. Throws PreconditionError when a hypothesis fails.
PGSTSearchResult pgst_time_search(const SpectralDecomposition& gdec, const CoronaParams& params,
                                  std::size_t u, std::size_t v, double epsilon,
                                  std::int64_t l_bound, const SpectralOptions& opts = {});

// Cocktail party CP(m) ~o K1 for odd m > 2, antipodal base vertices 0 and 1,
// times T = 2 pi l. Returns applicable == false when neither case applies.
PGSTSearchResult pgst_cocktail(std::int64_t m, double epsilon, std::int64_t l_bound);

}  // namespace qwc
