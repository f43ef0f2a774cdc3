#include "qwc/state_transfer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qwc/errors.hpp"

namespace qwc {

namespace {

constexpr double kEps = 1e-9;

std::optional<std::int64_t> as_integer(double x) {
  const double r = std::nearbyint(x);
  if (std::abs(x - r) <= kEps * std::max(1.0, std::abs(x))) return static_cast<std::int64_t>(r);
  return std::nullopt;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

bool is_perfect_square(std::int64_t n) { return n >= 0 && exact_sqrt(static_cast<std::uint64_t>(n)).has_value(); }

std::int64_t sqfree_of(std::int64_t n) {
  return static_cast<std::int64_t>(square_free_part(static_cast<std::uint64_t>(n)).c);
}

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(12);
  out << x;
  return out.str();
}

// supp \ {2 r1}
template <typename T>
std::vector<T> without_top(const CoronaParams& p, const std::vector<T>& supp) {
  std::vector<T> rest;
  for (auto theta : supp)
    if (std::abs(static_cast<double>(theta) - 2.0 * static_cast<double>(p.r1)) > kEps)
      rest.push_back(theta);
  return rest;
}

}  // namespace

std::string to_string(Basis basis) {
  switch (basis) {
    case Basis::none: return "none";
    case Basis::strong_cospectrality: return "strong-cospectrality";
    case Basis::common_quadratic_form: return "common-quadratic-form";
    case Basis::eigenvalue_parity: return "eigenvalue-parity";
    case Basis::pst_characterization: return "pst-characterization";
    case Basis::corona_integrality: return "corona-periodicity-integrality";
    case Basis::corona_necessary_bounds: return "corona-necessary-bounds";
    case Basis::corona_gap_sqrt_delta: return "corona-gap-sqrt-delta";
    case Basis::corona_gap_inequality: return "corona-gap-inequality";
    case Basis::k2_square_differences: return "k2-corona-square-differences";
    case Basis::k2_even_order_external: return "k2-corona-even-order-external";
    case Basis::numeric_recognition: return "numeric-recognition";
  }
  return "unknown";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::pst: return "PST";
    case Verdict::no_pst: return "no-PST";
    case Verdict::undecided_numeric: return "undecided-numeric";
    case Verdict::undecided: return "undecided";
  }
  return "unknown";
}

std::string to_string(PeriodicityCase c) {
  switch (c) {
    case PeriodicityCase::integer_case: return "integer-case";
    case PeriodicityCase::quadratic_case: return "quadratic-case";
    case PeriodicityCase::refuted: return "refuted";
    case PeriodicityCase::undecided_numeric: return "undecided-numeric";
  }
  return "unknown";
}

// ------------------------------------------------------------ periodicity

PeriodicityReport is_periodic_vertex(const std::vector<QuadExt>& input) {
  if (input.empty()) throw std::invalid_argument("support must be non-empty");
  std::vector<QuadExt> support = input;
  std::sort(support.begin(), support.end(), [](const QuadExt& x, const QuadExt& y) { return y < x; });
  support.erase(std::unique(support.begin(), support.end()), support.end());

  PeriodicityReport out;
  out.basis = Basis::common_quadratic_form;
  std::set<std::int64_t> deltas;
  for (const auto& x : support)
    if (x.b() != 0) deltas.insert(x.delta());

  if (deltas.empty()) {
    for (const auto& x : support)
      if (!x.is_integer()) {
        out.witness = x.to_string() + " is rational but not an integer";
        return out;
      }
    out.periodic = true;
    out.kind = PeriodicityCase::integer_case;
    out.delta = 1;
    return out;
  }
  if (deltas.size() > 1) {
    out.witness = "support mixes sqrt(" + std::to_string(*deltas.begin()) + ") and sqrt(" +
                  std::to_string(*std::next(deltas.begin())) + ")";
    return out;
  }
  for (const auto& x : support)
    if (x.a() != support.front().a()) {
      out.witness = support.front().to_string() + " and " + x.to_string() +
                    " have different rational parts";
      return out;
    }
  out.periodic = true;
  out.kind = PeriodicityCase::quadratic_case;
  out.delta = *deltas.begin();
  return out;
}

PeriodicityReport is_periodic_vertex(const std::vector<double>& support,
                                     const RecognitionOptions& opts) {
  std::vector<QuadExt> exact;
  for (double x : support) {
    const auto rec = recognize_quadext(x, opts);
    if (!rec.matched()) {
      PeriodicityReport out;
      out.kind = PeriodicityCase::undecided_numeric;
      out.basis = Basis::numeric_recognition;
      out.witness = "could not identify eigenvalue " + fmt(x) +
                    (rec.status == Recognition::Status::ambiguous ? " (ambiguous)" : "");
      return out;
    }
    exact.push_back(*rec.value);
  }
  return is_periodic_vertex(exact);
}

PeriodicityReport corona_base_periodicity(const CoronaParams& p,
                                          const std::vector<std::int64_t>& supp) {
  PeriodicityReport out;
  out.basis = Basis::corona_integrality;
  const bool split = 2 * p.r1 + p.t == p.s;

  // Every quantity that must be an integer multiple of a common sqrt(delta),
  // stored as its square.
  struct Quantity {
    std::string name;
    std::int64_t square;
  };
  std::vector<Quantity> quantities;
  for (auto theta : without_top(p, supp)) {
    const auto x = theta - p.s + p.t;
    quantities.push_back({"theta-s+t at theta=" + std::to_string(theta), x * x});
    quantities.push_back({"Lambda_theta^2 at theta=" + std::to_string(theta), p.theta_radicand(theta)});
  }
  quantities.push_back({"Lambda_r^2", p.r_radicand()});

  std::optional<std::int64_t> delta;
  for (const auto& q : quantities) {
    if (q.square == 0) continue;
    const auto c = sqfree_of(q.square);
    if (!delta) {
      delta = c;
    } else if (*delta != c) {
      out.witness = q.name + " = " + std::to_string(q.square) + " has square-free part " +
                    std::to_string(c) + ", expected " + std::to_string(*delta);
      return out;
    }
  }
  if (!delta) delta = 1;
  if (without_top(p, supp).empty() && *delta != 1) {
    // only the r-pair: it always shares its rational part
    out.periodic = true;
    out.kind = PeriodicityCase::quadratic_case;
    out.delta = delta;
    if (split && p.n2 % *delta != 0)
      throw std::logic_error("periodic quadratic case with delta not dividing n2");
    return out;
  }
  if (*delta == 1) {
    out.periodic = true;
    out.kind = PeriodicityCase::integer_case;
    out.delta = 1;
    return out;
  }
  if (!split) {
    out.witness = "2r1+t != s requires integral quantities; found multiples of sqrt(" +
                  std::to_string(*delta) + ")";
    return out;
  }
  if (p.n2 % *delta != 0)
    throw std::logic_error("periodic quadratic case with delta not dividing n2");
  out.periodic = true;
  out.kind = PeriodicityCase::quadratic_case;
  out.delta = delta;
  return out;
}

BoundsCheck periodicity_bounds(const CoronaParams& p, const std::vector<double>& supp) {
  BoundsCheck out;
  const double s = static_cast<double>(p.s), t = static_cast<double>(p.t);
  const double n2 = static_cast<double>(p.n2);
  for (double theta : without_top(p, supp)) {
    const double need = std::abs(theta - s + t) + 1.0;
    if (need > n2 + kEps) {
      out.holds = false;
      out.violating_theta = theta;
      out.witness = "theta=" + fmt(theta) + ": |theta-s+t|+1 = " + fmt(need) + " > n2 = " +
                    std::to_string(p.n2);
      return out;
    }
  }
  const double rhs = std::abs(2.0 * static_cast<double>(p.r1) - s + t) + 1.0;
  const double lhs = n2 * static_cast<double>((p.n1 - 1) * (p.n1 - 1));
  if (rhs > lhs + kEps) {
    out.holds = false;
    out.r_term_violated = true;
    out.witness = "|2r1-s+t|+1 = " + fmt(rhs) + " > n2(n1-1)^2 = " + fmt(lhs);
  }
  return out;
}

GapRefutation gap_inequality_refutation(const CoronaParams& p, const std::vector<double>& supp) {
  GapRefutation out;
  const double s = static_cast<double>(p.s), t = static_cast<double>(p.t);
  const auto rest = without_top(p, supp);
  for (double lambda : rest)
    for (double mu : rest) {
      const double d = std::abs(lambda - s + t) - std::abs(mu - s + t);
      if (d > kEps && d < 3.0 - kEps) {
        out = {true, GapCondition::pair_gap, Basis::corona_gap_inequality, lambda, mu, std::nullopt,
               "|" + fmt(lambda) + "-s+t| - |" + fmt(mu) + "-s+t| = " + fmt(d) + " in (0,3)"};
        return out;
      }
    }
  const double two_r1 = 2.0 * static_cast<double>(p.r1);
  const double k = static_cast<double>(p.n1 - 1);
  for (double gamma : rest) {
    const double e = std::abs(std::abs(two_r1 - s + t) - k * std::abs(gamma - s + t));
    if (e > kEps && e < 3.0 - kEps) {
      out = {true, GapCondition::r_gap, Basis::corona_gap_inequality, gamma, two_r1, std::nullopt,
             "||2r1-s+t| - (n1-1)|" + fmt(gamma) + "-s+t|| = " + fmt(e) + " in (0,3)"};
      return out;
    }
  }
  return out;
}

namespace {

// d in {sqrt(delta), 2 sqrt(delta)} for a square-free delta; returns delta.
std::optional<std::int64_t> sqrt_delta_multiple(std::int64_t d) {
  if (d <= 0) return std::nullopt;
  const auto sq = d * d;
  if (is_square_free(static_cast<std::uint64_t>(sq))) return sq;
  if (sq % 4 == 0 && is_square_free(static_cast<std::uint64_t>(sq / 4))) return sq / 4;
  return std::nullopt;
}

}  // namespace

GapRefutation sqrt_delta_gap_refutation(const CoronaParams& p,
                                        const std::vector<std::int64_t>& supp) {
  GapRefutation out;
  const auto rest = without_top(p, supp);
  for (auto lambda : rest)
    for (auto mu : rest) {
      const auto d = std::abs(lambda - p.s + p.t) - std::abs(mu - p.s + p.t);
      if (auto delta = sqrt_delta_multiple(d)) {
        out = {true, GapCondition::pair_gap, Basis::corona_gap_sqrt_delta,
               static_cast<double>(lambda), static_cast<double>(mu), delta,
               "|" + std::to_string(lambda) + "-s+t| - |" + std::to_string(mu) + "-s+t| = " +
                   std::to_string(d) + " with delta=" + std::to_string(*delta)};
        return out;
      }
    }
  for (auto gamma : rest) {
    const auto e = std::abs(std::abs(2 * p.r1 - p.s + p.t) - (p.n1 - 1) * std::abs(gamma - p.s + p.t));
    if (auto delta = sqrt_delta_multiple(e)) {
      out = {true, GapCondition::r_gap, Basis::corona_gap_sqrt_delta, static_cast<double>(gamma),
             static_cast<double>(2 * p.r1), delta,
             "||2r1-s+t| - (n1-1)|" + std::to_string(gamma) + "-s+t|| = " + std::to_string(e) +
                 " with delta=" + std::to_string(*delta)};
      return out;
    }
  }
  return out;
}

K2Analysis k2_corona_no_pst(std::int64_t n2, std::int64_t r2) {
  if (n2 < 1 || r2 < 0 || r2 > n2 - 1) throw std::invalid_argument("need n2 >= 1, 0 <= r2 < n2");
  K2Analysis out;
  const auto params = CoronaParams::make(2, n2, 1, r2);

  // Re-run the square-difference search: delta | 2 n2, l = 2 n2 / delta,
  // m_theta = (theta - s + t)/sqrt(delta) and M_theta^2 = m_theta^2 + 2l integral.
  for (std::int64_t delta = 1; delta <= 2 * n2; ++delta) {
    if ((2 * n2) % delta != 0 || !is_square_free(static_cast<std::uint64_t>(delta))) continue;
    const auto l = 2 * n2 / delta;
    bool all = true;
    std::ostringstream w;
    for (std::int64_t theta : {0, 2}) {
      const auto x = theta - params.s + params.t;
      if ((x * x) % delta != 0 || !is_perfect_square(x * x / delta)) {
        all = false;
        break;
      }
      const auto m2 = x * x / delta;
      if (!is_perfect_square(m2 + 2 * l)) {
        all = false;
        break;
      }
      w << "theta=" << theta << ": m^2=" << m2 << ", M^2=" << m2 + 2 * l << "; ";
    }
    if (all) {
      out.base_periodic = true;
      out.delta = delta;
      out.witness = "delta=" + std::to_string(delta) + ", l=" + std::to_string(l) + ": " + w.str();
      break;
    }
  }

  const bool covered = n2 == 1 || is_prime(n2);
  if (covered && !out.base_periodic) {
    out.verdict = Verdict::no_pst;
    out.basis = Basis::k2_square_differences;
    if (out.witness.empty())
      out.witness = "theta-s+t = " + std::to_string(-params.s + params.t) + ", " +
                    std::to_string(2 - params.s + params.t) +
                    ": no square-free delta | 2n2 makes both m^2 and m^2 + 4n2/delta squares";
    out.provenance = "derived";
    return out;
  }
  if (n2 % 2 == 0) {
    out.verdict = Verdict::no_pst;
    out.basis = Basis::k2_even_order_external;
    out.provenance =
        "external: K2 corona with an even-order regular graph has no signless Laplacian PST "
        "(published result, not re-derived here)";
    if (out.witness.empty()) out.witness = "n2 = " + std::to_string(n2) + " is even";
    return out;
  }
  out.verdict = Verdict::undecided;
  out.provenance = "n2 = " + std::to_string(n2) + " is odd and composite; not covered";
  return out;
}

// --------------------------------------------------------- certification

PSTReport pst_certify(const CertificationInput& in) {
  PSTReport r;
  r.u = in.u;
  r.v = in.v;
  r.strongly_cospectral = in.strongly_cospectral;
  r.support_numeric = in.numeric;
  r.support = in.exact;
  r.signs = in.signs;

  if (!in.strongly_cospectral) {
    r.verdict = Verdict::no_pst;
    r.basis = Basis::strong_cospectrality;
    r.refutation_witness = "F_theta e_u != +/- F_theta e_v for some eigenvalue";
    return r;
  }
  std::vector<QuadExt> exact;
  for (std::size_t i = 0; i < in.exact.size(); ++i) {
    if (!in.exact[i]) {
      r.verdict = Verdict::undecided_numeric;
      r.basis = Basis::numeric_recognition;
      r.refutation_witness = "support eigenvalue " + fmt(in.numeric[i]) + " not identified";
      return r;
    }
    exact.push_back(*in.exact[i]);
  }
  if (exact.size() < 2) {
    r.verdict = Verdict::no_pst;
    r.basis = Basis::common_quadratic_form;
    r.refutation_witness = "support has fewer than two eigenvalues";
    return r;
  }

  SupportClassification cls;
  try {
    cls = classify_support(exact);
  } catch (const InvalidSupportError& e) {
    r.verdict = Verdict::no_pst;
    r.basis = Basis::common_quadratic_form;
    r.refutation_witness = e.what();
    return r;
  }
  r.delta = cls.delta;
  r.g = cls.g;
  r.lambda_plus = cls.lambda_plus;
  r.lambda_minus = cls.lambda_minus;
  r.scaled_gaps = cls.scaled_gaps;

  for (std::size_t i = 0; i < exact.size(); ++i) {
    const int expected = cls.in_lambda_plus(exact[i]) ? 1 : -1;
    if (in.signs[i] != expected) {
      r.verdict = Verdict::no_pst;
      r.basis = Basis::eigenvalue_parity;
      r.refutation_witness = "eigenvalue " + exact[i].to_string() + " has sign " +
                             std::to_string(in.signs[i]) + " but parity class " +
                             (expected > 0 ? "Lambda+" : "Lambda-");
      return r;
    }
  }
  r.verdict = Verdict::pst;
  r.basis = Basis::pst_characterization;
  r.tau0 = std::numbers::pi / (static_cast<double>(cls.g) * std::sqrt(static_cast<double>(cls.delta)));
  r.phase = std::polar(1.0, -*r.tau0 * cls.support.front().value());
  return r;
}

CertificationInput certification_input(const SpectralDecomposition& dec, std::size_t u,
                                       std::size_t v, const SpectralOptions& opts,
                                       const RecognitionOptions& recog,
                                       const std::vector<QuadExt>& hints) {
  CertificationInput in;
  in.u = u;
  in.v = v;
  const auto cos = strong_cospectrality(dec, u, v, opts.cospectral_tol);
  in.strongly_cospectral = cos.strongly_cospectral;
  for (auto idx : eigenvalue_support(dec, u, opts.support_tol)) {
    const double x = dec.eigenvalues[idx];
    in.numeric.push_back(x);
    in.signs.push_back(cos.signs[idx]);
    std::optional<QuadExt> exact;
    for (const auto& h : hints)
      if (std::abs(h.value() - x) <= 1e-7 * std::max(1.0, std::abs(x))) {
        exact = h;
        break;
      }
    if (!exact) {
      const auto rec = recognize_quadext(x, recog);
      if (rec.matched()) exact = rec.value;
    }
    in.exact.push_back(exact);
  }
  return in;
}

PSTReport certify_pst(const SpectralDecomposition& dec, std::size_t u, std::size_t v,
                      const SpectralOptions& opts, const RecognitionOptions& recog) {
  return pst_certify(certification_input(dec, u, v, opts, recog));
}

PSTReport check_corona_pst(const Graph& g, const Graph& h, CoronaVertex a, CoronaVertex b,
                           const SpectralOptions& opts, const RecognitionOptions& recog) {
  const auto n1 = g.order(), n2 = h.order();
  const auto ia = corona_index(n1, n2, a), ib = corona_index(n1, n2, b);
  if (ia == ib) throw std::invalid_argument("PST needs two distinct vertices");

  const bool closed_form = n1 >= 2 && g.regular_degree() >= 0 && h.regular_degree() >= 0 &&
                           g.is_connected();
  if (!closed_form) {
    const auto dec = decompose(corona_full_q(g, h), opts);
    return certify_pst(dec, ia, ib, opts, recog);
  }

  const auto spectrum = corona_spectrum(g, h, opts);
  const auto& p = spectrum.params();
  const auto& gdec = spectrum.g_decomposition();
  std::vector<std::pair<Basis, std::string>> refutations;
  auto add = [&](Basis basis, const std::string& where, const std::string& witness) {
    refutations.emplace_back(basis, where + ": " + witness);
  };

  std::vector<std::size_t> bases{a.base};
  if (b.base != a.base) bases.push_back(b.base);
  for (auto base : bases) {
    const auto where = "base vertex " + std::to_string(base);
    std::vector<double> supp;
    std::vector<std::size_t> supp_idx = eigenvalue_support(gdec, base, opts.support_tol);
    for (auto idx : supp_idx) {
      const double x = gdec.eigenvalues[idx];
      const auto k = as_integer(x);
      supp.push_back(k ? static_cast<double>(*k) : x);
    }
    std::vector<std::int64_t> integral;
    for (double x : supp)
      if (auto k = as_integer(x)) integral.push_back(*k);
    const bool is_integral = integral.size() == supp.size();

    if (p.n1 == 2) {
      const auto k2 = k2_corona_no_pst(p.n2, p.r2);
      if (k2.verdict == Verdict::no_pst) add(k2.basis, where, k2.witness);
    }
    if (auto bounds = periodicity_bounds(p, supp); !bounds.holds)
      add(Basis::corona_necessary_bounds, where, bounds.witness);
    if (auto gap = gap_inequality_refutation(p, supp); gap.nonperiodic)
      add(gap.basis, where, gap.witness);
    if (is_integral) {
      if (auto gap = sqrt_delta_gap_refutation(p, integral); gap.nonperiodic)
        add(gap.basis, where, gap.witness);
      if (auto per = corona_base_periodicity(p, integral); !per.periodic)
        add(per.basis, where, per.witness);
    } else {
      std::vector<double> corona_support;
      for (const auto& e : spectrum.entries())
        if (e.kind != CoronaBranch::h_shift &&
            std::find(supp_idx.begin(), supp_idx.end(), e.origin_index) != supp_idx.end())
          corona_support.push_back(e.value);
      if (auto per = is_periodic_vertex(corona_support, recog);
          per.kind == PeriodicityCase::refuted)
        add(per.basis, where, per.witness);
    }
  }

  if (!refutations.empty()) {
    PSTReport r;
    r.u = ia;
    r.v = ib;
    r.verdict = Verdict::no_pst;
    r.basis = refutations.front().first;
    r.refutation_witness = refutations.front().second;
    r.refutations = std::move(refutations);
    return r;
  }

  std::vector<QuadExt> hints;
  for (const auto& e : spectrum.entries())
    if (e.exact) hints.push_back(*e.exact);
  const auto dec = decompose(corona_full_q(g, h), opts);
  return pst_certify(certification_input(dec, ia, ib, opts, recog, hints));
}

// ------------------------------------------------------------------ PGST

PgstHypotheses check_pgst_hypotheses(const CoronaParams& p, const std::vector<std::int64_t>& supp,
                                     std::int64_t g) {
  PgstHypotheses out;
  out.g = g;
  if (g < 1) out.failures.push_back("PST time pi/g needs a positive integer g");
  if (p.n1 < 2) out.failures.push_back("G needs at least two vertices");
  if (p.r2 != 0) out.failures.push_back("H must be the empty graph on n2 vertices (r2 = 0)");
  out.r_radicand = p.r_radicand();
  out.r_root = square_free_part(static_cast<std::uint64_t>(out.r_radicand));
  if (out.r_root.c == 1)
    out.failures.push_back("Lambda_r = sqrt(" + std::to_string(out.r_radicand) +
                           ") is rational; the construction requires Lambda_r irrational");
  if (p.n1 >= 3 && p.r2 == 0) {
    for (auto theta : without_top(p, supp)) {
      const auto radicand = p.theta_radicand(theta);
      if (!is_perfect_square(radicand)) continue;
      if (theta == 0 && p.n2 == 1) {
        out.notes.push_back("Lambda_theta = 2 is rational at theta = 0 (n2 = 1)");
        continue;
      }
      throw std::logic_error("Lambda_theta = sqrt(" + std::to_string(radicand) + ") at theta=" +
                               std::to_string(theta) + " is rational although n1 >= 3");
    }
  }
  out.ok = out.failures.empty();
  return out;
}

PGSTSearchResult scan_pgst_times(const BaseAmplitude& amplitude, std::int64_t g, double epsilon,
                                 std::int64_t l_bound) {
  if (g < 1) throw std::invalid_argument("g must be positive");
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  if (l_bound < 0) throw std::invalid_argument("l_bound must be non-negative");
  PGSTSearchResult out;
  out.target_epsilon = epsilon;
  out.l_bound = l_bound;
  out.fidelity = -1.0;
  const double offset = 2.0 / static_cast<double>(g);
  for (std::int64_t l = 0; l <= l_bound; ++l) {
    const double time = (4.0 * static_cast<double>(l) + offset) * std::numbers::pi;
    const double f = amplitude.fidelity(time);
    if (f > out.fidelity) {
      out.fidelity = f;
      out.best_l = l;
      out.time = time;
    }
    if (f >= 1.0 - epsilon) break;
  }
  out.achieved = out.fidelity >= 1.0 - epsilon;
  return out;
}

PGSTSearchResult pgst_time_search(const SpectralDecomposition& gdec, const CoronaParams& p,
                                  std::size_t u, std::size_t v, double epsilon,
                                  std::int64_t l_bound, const SpectralOptions& opts) {
  if (u == v) throw PreconditionError("PGST search needs two distinct vertices");
  const auto cert = certify_pst(gdec, u, v, opts);
  if (cert.verdict != Verdict::pst)
    throw PreconditionError("G does not admit PST from " + std::to_string(u) + " to " +
                            std::to_string(v) + " (" + to_string(cert.basis) + ")");
  if (cert.delta != 1)
    throw PreconditionError("PST time of G is not of the form pi/g (delta = " +
                            std::to_string(*cert.delta) + ")");
  std::vector<std::int64_t> supp;
  for (const auto& x : cert.support) supp.push_back(x->integer_value());
  const auto hyp = check_pgst_hypotheses(p, supp, *cert.g);
  if (!hyp.ok) {
    std::string msg = "PGST hypotheses fail: ";
    for (std::size_t i = 0; i < hyp.failures.size(); ++i)
      msg += (i ? "; " : "") + hyp.failures[i];
    throw PreconditionError(msg);
  }
  auto out = scan_pgst_times(BaseAmplitude(gdec, p, u, v), *cert.g, epsilon, l_bound);
  out.branch = "pst-lift";
  out.basis = "T = (4l + 2/g) pi with g = " + std::to_string(*cert.g);
  out.notes.push_back("Lambda_r = " + std::to_string(hyp.r_root.s) + "*sqrt(" +
                      std::to_string(hyp.r_root.c) + ")");
  out.notes.insert(out.notes.end(), hyp.notes.begin(), hyp.notes.end());
  return out;
}

PGSTSearchResult pgst_cocktail(std::int64_t m, double epsilon, std::int64_t l_bound) {
  if (m <= 2 || m % 2 == 0) throw PreconditionError("cocktail party case requires odd m > 2");
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  if (l_bound < 1) throw std::invalid_argument("l_bound must be at least 1");

  const auto r_rad = 8 * m * m - 12 * m + 5;  // 4(m-1)^2 + (2m-1)^2
  const auto t1_rad = (m - 1) * (m - 1) + 1;
  const auto t2_rad = (m - 2) * (m - 2) + 1;
  const auto sf_r = square_free_part(static_cast<std::uint64_t>(r_rad));
  const auto sf_1 = square_free_part(static_cast<std::uint64_t>(t1_rad));
  const auto sf_2 = square_free_part(static_cast<std::uint64_t>(t2_rad));

  PGSTSearchResult out;
  out.target_epsilon = epsilon;
  out.l_bound = l_bound;
  out.notes.push_back("Lambda_r = 2*sqrt(" + std::to_string(r_rad) + "), Lambda_theta1 = 2*sqrt(" +
                      std::to_string(t1_rad) + "), Lambda_theta2 = 2*sqrt(" +
                      std::to_string(t2_rad) + ")");
  out.notes.push_back("square-free parts: " + std::to_string(sf_r.c) + ", " +
                      std::to_string(sf_1.c) + ", " + std::to_string(sf_2.c));
  if (sf_r.c == 1) {
    out.branch = "integral-Lambda_r";
  } else if (sf_r.c != sf_1.c) {
    out.branch = "distinct-square-free-parts";
  } else {
    out.applicable = false;
    out.branch = "inapplicable";
    out.basis = "theorem inapplicable: Lambda_r irrational with the same square-free part as "
                "Lambda_theta1";
    return out;
  }
  out.basis = "T = 2 pi l, scored by fidelity";

  const auto params = CoronaParams::make(2 * m, 1, 2 * m - 2, 0);
  if (params.r_radicand() != 4 * r_rad) throw std::logic_error("Lambda_r radicand mismatch");
  const auto gdec = decompose(signless_laplacian(cocktail_party_graph(static_cast<std::size_t>(m))));
  const BaseAmplitude amplitude(gdec, params, 0, 1);

  out.fidelity = -1.0;
  for (std::int64_t l = 1; l <= l_bound; ++l) {
    const double time = 2.0 * std::numbers::pi * static_cast<double>(l);
    const double f = amplitude.fidelity(time);
    if (f > out.fidelity) {
      out.fidelity = f;
      out.best_l = l;
      out.time = time;
    }
    if (f >= 1.0 - epsilon) break;
  }
  out.achieved = out.fidelity >= 1.0 - epsilon;
  return out;
}

}  // namespace qwc
