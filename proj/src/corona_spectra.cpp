#include "qwc/corona_spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "qwc/errors.hpp"

namespace qwc {

namespace {

constexpr double kIntegralTol = 1e-9;

std::optional<std::int64_t> as_integer(double x) {
  const double r = std::nearbyint(x);
  if (std::abs(x - r) <= kIntegralTol * std::max(1.0, std::abs(x)))
    return static_cast<std::int64_t>(r);
  return std::nullopt;
}

// Closed-form pair (a +/- sqrt(radicand)) / 2.
std::pair<QuadExt, QuadExt> exact_pair(std::int64_t a, std::int64_t radicand) {
  // root = (ra + rb sqrt(c))/2 with ra, rb even
  const auto root = sqrt_quadext(static_cast<std::uint64_t>(radicand));
  return {QuadExt(a + root.a() / 2, root.b() / 2, root.delta()),
          QuadExt(a - root.a() / 2, -root.b() / 2, root.delta())};
}

}  // namespace

CoronaParams CoronaParams::make(std::int64_t n1, std::int64_t n2, std::int64_t r1,
                                std::int64_t r2) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("n1 and n2 must be positive");
  if (r1 < 0 || r1 > n1 - 1) throw std::invalid_argument("r1 must lie in [0, n1-1]");
  if (r2 < 0 || r2 > n2 - 1) throw std::invalid_argument("r2 must lie in [0, n2-1]");
  return {n1, n2, r1, r2, n1 + 2 * r2 - 1, n2 * (n1 - 1)};
}

std::int64_t CoronaParams::theta_radicand(std::int64_t theta) const {
  const auto x = theta - s + t;
  return x * x + 4 * n2;
}

std::int64_t CoronaParams::r_radicand() const {
  const auto x = 2 * r1 - s + t;
  return x * x + 4 * n2 * (n1 - 1) * (n1 - 1);
}

double CoronaParams::lambda_theta(double theta) const {
  const double x = theta - static_cast<double>(s) + static_cast<double>(t);
  return std::sqrt(x * x + 4.0 * static_cast<double>(n2));
}

double CoronaParams::lambda_r() const {
  return std::sqrt(static_cast<double>(r_radicand()));
}

std::string to_string(CoronaBranch kind) {
  switch (kind) {
    case CoronaBranch::h_shift: return "h-shift";
    case CoronaBranch::theta_plus: return "theta-plus";
    case CoronaBranch::theta_minus: return "theta-minus";
    case CoronaBranch::r_plus: return "r-plus";
    case CoronaBranch::r_minus: return "r-minus";
  }
  return "unknown";
}

CoronaSpectrum::CoronaSpectrum(CoronaParams params, SpectralDecomposition gdec,
                               SpectralDecomposition hdec, std::vector<CoronaEigenvalue> entries,
                               std::size_t top_index)
    : params_(params),
      gdec_(std::move(gdec)),
      hdec_(std::move(hdec)),
      entries_(std::move(entries)),
      top_(top_index) {}

Eigen::MatrixXd CoronaSpectrum::projector(std::size_t entry) const {
  const auto& e = entries_.at(entry);
  const auto n1 = static_cast<std::size_t>(params_.n1);
  const auto n2 = static_cast<std::size_t>(params_.n2);
  const auto n = static_cast<Eigen::Index>(order());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  auto idx = [&](std::size_t i, std::size_t x) {
    return static_cast<Eigen::Index>(corona_index(n1, n2, {i, x}));
  };

  if (e.kind == CoronaBranch::h_shift) {
    Eigen::MatrixXd block = hdec_.projectors[e.origin_index];
    if (std::abs(e.origin - 2.0 * static_cast<double>(params_.r2)) < 1e-7)
      block.array() -= 1.0 / static_cast<double>(n2);
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t x = 1; x <= n2; ++x)
        for (std::size_t y = 1; y <= n2; ++y)
          out(idx(i, x), idx(i, y)) = block(static_cast<Eigen::Index>(x - 1),
                                            static_cast<Eigen::Index>(y - 1));
    return out;
  }

  const bool r_branch = e.kind == CoronaBranch::r_plus || e.kind == CoronaBranch::r_minus;
  const double c = static_cast<double>(params_.s) - e.value;
  const double k = r_branch ? static_cast<double>(1 - params_.n1) : 1.0;
  const double w = 1.0 / (c * c + static_cast<double>(params_.n2) * k * k);
  const auto& fg = gdec_.projectors[e.origin_index];
  auto weight = [&](std::size_t x, std::size_t y) {
    if (x == 0 && y == 0) return c * c * w;
    if (x == 0 || y == 0) return c * k * w;
    return k * k * w;
  };
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j) {
      const double f = fg(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      for (std::size_t x = 0; x <= n2; ++x)
        for (std::size_t y = 0; y <= n2; ++y) out(idx(i, x), idx(j, y)) = f * weight(x, y);
    }
  return out;
}

SpectralDecomposition CoronaSpectrum::materialize(bool with_projectors, double merge_tol) const {
  std::vector<std::size_t> order(entries_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return entries_[a].value > entries_[b].value;
  });
  const double scale = std::max(1.0, entries_.empty() ? 1.0 : std::abs(entries_[order[0]].value));
  SpectralDecomposition dec;
  dec.smallest_gap = std::numeric_limits<double>::infinity();
  double group_sum = 0.0;
  std::size_t group_count = 0;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const auto& e = entries_[order[pos]];
    const bool joins = group_count > 0 &&
                       std::abs(dec.eigenvalues.back() - e.value) <= merge_tol * scale;
    if (!joins) {
      if (group_count > 0)
        dec.smallest_gap = std::min(dec.smallest_gap, dec.eigenvalues.back() - e.value);
      dec.eigenvalues.push_back(e.value);
      dec.multiplicities.push_back(0);
      if (with_projectors) {
        const auto n = static_cast<Eigen::Index>(this->order());
        dec.projectors.push_back(Eigen::MatrixXd::Zero(n, n));
      }
      group_sum = 0.0;
      group_count = 0;
    }
    group_sum += e.value;
    ++group_count;
    dec.eigenvalues.back() = group_sum / static_cast<double>(group_count);
    dec.multiplicities.back() += e.multiplicity;
    if (with_projectors) dec.projectors.back() += projector(order[pos]);
  }
  return dec;
}

CoronaSpectrum corona_spectrum(const SpectralDecomposition& gdec,
                               const SpectralDecomposition& hdec, const CoronaParams& p) {
  if (p.n1 < 2) throw PreconditionError("closed form requires n1 >= 2");
  if (gdec.order() != static_cast<std::size_t>(p.n1) ||
      hdec.order() != static_cast<std::size_t>(p.n2))
    throw PreconditionError("decomposition sizes do not match (n1, n2)");

  const double two_r1 = 2.0 * static_cast<double>(p.r1);
  if (gdec.size() == 0 || std::abs(gdec.eigenvalues.front() - two_r1) > 1e-7)
    throw PreconditionError("largest eigenvalue of Q(G) is not 2*r1 = " +
                            std::to_string(2 * p.r1));
  const Eigen::MatrixXd jn = Eigen::MatrixXd::Constant(p.n1, p.n1, 1.0 / static_cast<double>(p.n1));
  if (gdec.multiplicities.front() != 1 || (gdec.projectors.front() - jn).cwiseAbs().maxCoeff() > 1e-7)
    throw PreconditionError("G must be connected and regular");

  const double two_r2 = 2.0 * static_cast<double>(p.r2);
  const auto h_top = hdec.find(two_r2, 1e-7);
  if (h_top == hdec.size())
    throw PreconditionError("2*r2 is not an eigenvalue of Q(H); H is not r2-regular");
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(p.n2);
  if ((hdec.projectors[h_top] * ones - ones).cwiseAbs().maxCoeff() > 1e-7)
    throw PreconditionError("H must be regular");

  std::vector<CoronaEigenvalue> entries;
  const auto n1 = static_cast<std::size_t>(p.n1);

  for (std::size_t i = 0; i < hdec.size(); ++i) {
    const double mu = hdec.eigenvalues[i];
    const bool removes_ones = i == h_top;
    const std::size_t mult = n1 * (hdec.multiplicities[i] - (removes_ones ? 1 : 0));
    if (mult == 0) continue;
    CoronaEigenvalue e;
    e.kind = CoronaBranch::h_shift;
    e.value = static_cast<double>(p.n1 - 1) + mu;
    e.origin = mu;
    e.origin_index = i;
    e.multiplicity = mult;
    if (auto m = as_integer(mu)) e.exact = QuadExt::integer(p.n1 - 1 + *m);
    entries.push_back(e);
  }

  const double s = static_cast<double>(p.s), t = static_cast<double>(p.t);
  for (std::size_t i = 0; i < gdec.size(); ++i) {
    const double theta = gdec.eigenvalues[i];
    const bool top = i == 0;
    const double lambda = top ? p.lambda_r() : p.lambda_theta(theta);
    if (!(lambda > 0)) throw std::logic_error("Lambda vanished");
    const double centre = (top ? two_r1 : theta) + s + t;

    CoronaEigenvalue plus, minus;
    plus.kind = top ? CoronaBranch::r_plus : CoronaBranch::theta_plus;
    minus.kind = top ? CoronaBranch::r_minus : CoronaBranch::theta_minus;
    for (auto* e : {&plus, &minus}) {
      e->origin = top ? two_r1 : theta;
      e->origin_index = i;
      e->multiplicity = gdec.multiplicities[i];
      e->lambda = lambda;
    }
    plus.value = 0.5 * (centre + lambda);
    minus.value = 0.5 * (centre - lambda);

    if (auto th = as_integer(theta)) {
      const auto a = (top ? 2 * p.r1 : *th) + p.s + p.t;
      const auto radicand = top ? p.r_radicand() : p.theta_radicand(*th);
      auto [hi, lo] = exact_pair(a, radicand);
      plus.exact = hi;
      minus.exact = lo;
      plus.radicand = minus.radicand = radicand;
    }
    entries.push_back(plus);
    entries.push_back(minus);
  }

  std::size_t total = 0;
  for (const auto& e : entries) total += e.multiplicity;
  if (total != n1 * (1 + static_cast<std::size_t>(p.n2)))
    throw std::logic_error("closed-form multiplicities do not sum to the corona order");

  return CoronaSpectrum(p, gdec, hdec, std::move(entries), 0);
}

std::int64_t require_regular(const Graph& g, const std::string& which) {
  for (std::size_t v = 1; v < g.order(); ++v)
    if (g.degree(v) != g.degree(0))
      throw PreconditionError(which + " is not regular: vertex " + std::to_string(v) +
                              " has degree " + std::to_string(g.degree(v)) + ", vertex 0 has " +
                              std::to_string(g.degree(0)));
  return static_cast<std::int64_t>(g.degree(0));
}

CoronaSpectrum corona_spectrum(const Graph& g, const Graph& h, const SpectralOptions& opts) {
  const auto r1 = require_regular(g, "G");
  const auto r2 = require_regular(h, "H");
  if (!g.is_connected()) throw PreconditionError("G must be connected");
  const auto params = CoronaParams::make(static_cast<std::int64_t>(g.order()),
                                         static_cast<std::int64_t>(h.order()), r1, r2);
  return corona_spectrum(decompose(signless_laplacian(g), opts),
                         decompose(signless_laplacian(h), opts), params);
}

BaseAmplitude::BaseAmplitude(const SpectralDecomposition& gdec, const CoronaParams& p,
                             std::size_t u, std::size_t v)
    : s_plus_t_(static_cast<double>(p.s + p.t)) {
  if (u >= gdec.order() || v >= gdec.order()) throw std::out_of_range("vertex out of range");
  const double two_r1 = 2.0 * static_cast<double>(p.r1);
  if (gdec.size() == 0 || std::abs(gdec.eigenvalues.front() - two_r1) > 1e-7)
    throw PreconditionError("largest eigenvalue of Q(G) is not 2*r1");
  for (std::size_t i = 0; i < gdec.size(); ++i) {
    const bool top = i == 0;
    const double theta = top ? two_r1 : gdec.eigenvalues[i];
    Term term;
    term.theta = theta;
    term.shifted = theta - static_cast<double>(p.s) + static_cast<double>(p.t);
    term.lambda = top ? p.lambda_r() : p.lambda_theta(theta);
    if (!(term.lambda > 0)) throw std::logic_error("Lambda vanished");
    term.weight = gdec.projectors[i](static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v));
    terms_.push_back(term);
  }
}

Complex BaseAmplitude::operator()(double tau) const {
  Complex sum{0.0, 0.0};
  for (const auto& term : terms_) {
    const double half = 0.5 * term.lambda * tau;
    const Complex inner(std::cos(half), -(term.shifted / term.lambda) * std::sin(half));
    sum += std::polar(1.0, -0.5 * tau * (term.theta + s_plus_t_)) * inner * term.weight;
  }
  return sum;
}

Complex corona_transition_element(const SpectralDecomposition& gdec, const CoronaParams& params,
                                  std::size_t u, std::size_t v, double tau) {
  return BaseAmplitude(gdec, params, u, v)(tau);
}

Eigen::MatrixXd corona_full_q(const Graph& g, const Graph& h) {
  const auto n1 = static_cast<Eigen::Index>(g.order());
  const auto n2 = static_cast<Eigen::Index>(h.order());
  const Eigen::Index n = n1 * (1 + n2);
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
  q.topLeftCorner(n1, n1) = signless_laplacian(g) +
                            static_cast<double>((n1 - 1) * n2) * Eigen::MatrixXd::Identity(n1, n1);
  const Eigen::MatrixXd inner =
      signless_laplacian(h) + static_cast<double>(n1 - 1) * Eigen::MatrixXd::Identity(n2, n2);
  for (Eigen::Index i = 0; i < n1; ++i) {
    q.block(n1 + i * n2, n1 + i * n2, n2, n2) = inner;
    for (Eigen::Index j = 0; j < n1; ++j) {
      if (i == j) continue;
      // G-vertex j sees every vertex of copy i.
      q.block(j, n1 + i * n2, 1, n2).setOnes();
      q.block(n1 + i * n2, j, n2, 1).setOnes();
    }
  }
  return q;
}

PairIdentityReport verify_pair_identities(const CoronaSpectrum& spectrum) {
  PairIdentityReport report;
  const auto& p = spectrum.params();
  const auto& entries = spectrum.entries();
  const auto s = QuadRational::integer(p.s);
  for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
    const auto& hi = entries[i];
    const auto& lo = entries[i + 1];
    const bool theta_pair = hi.kind == CoronaBranch::theta_plus && lo.kind == CoronaBranch::theta_minus;
    const bool r_pair = hi.kind == CoronaBranch::r_plus && lo.kind == CoronaBranch::r_minus;
    if (!(theta_pair || r_pair) || !hi.exact || !lo.exact) continue;
    ++report.pairs_checked;
    const auto weight = r_pair ? p.n2 * (p.n1 - 1) * (p.n1 - 1) : p.n2;
    const auto origin = static_cast<std::int64_t>(std::llround(hi.origin));
    const QuadRational plus(*hi.exact), minus(*lo.exact);
    const auto label = to_string(hi.kind) + " pair of " + std::to_string(origin);

    if (plus + minus != QuadRational::integer(origin + p.s + p.t))
      report.failures.push_back(label + ": sum");
    const auto cp = s - plus, cm = s - minus;
    if (cp * cm != QuadRational::integer(-weight)) report.failures.push_back(label + ": product");
    const auto w = QuadRational::integer(weight);
    if ((cp * cp + w) * (cm * cm + w) != QuadRational::integer(weight * *hi.radicand))
      report.failures.push_back(label + ": normalisation product");
  }
  return report;
}

}  // namespace qwc
