#include "qwc/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qwc/errors.hpp"

namespace qwc {

namespace {

__extension__ typedef __int128 i128;

std::int64_t narrow(i128 x) {
  if (x > INT64_MAX || x < INT64_MIN)
    throw std::overflow_error("quadratic arithmetic overflow");
  return static_cast<std::int64_t>(x);
}

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const i128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

// ---------------------------------------------------------------- QuadExt

QuadExt::QuadExt(std::int64_t a, std::int64_t b, std::int64_t delta)
    : a_(a), b_(b), delta_(delta) {
  if (delta <= 0 || !is_square_free(static_cast<std::uint64_t>(delta)))
    throw std::invalid_argument("delta must be a positive square-free integer, got " +
                                std::to_string(delta));
  if (delta_ == 1) {
    a_ = narrow(static_cast<i128>(a_) + b_);
    b_ = 0;
  }
  if (b_ == 0) delta_ = 1;
}

std::int64_t QuadExt::integer_value() const {
  if (!is_integer()) throw std::domain_error(to_string() + " is not an integer");
  return a_ / 2;
}

long double QuadExt::value_ld() const {
  return (static_cast<long double>(a_) +
          static_cast<long double>(b_) * std::sqrt(static_cast<long double>(delta_))) /
         2.0L;
}

std::string QuadExt::to_string() const {
  std::ostringstream out;
  if (b_ == 0) {
    if (a_ % 2 == 0)
      out << a_ / 2;
    else
      out << a_ << "/2";
    return out.str();
  }
  const bool halves = (a_ % 2 != 0) || (b_ % 2 != 0);
  const std::int64_t ra = halves ? a_ : a_ / 2;
  const std::int64_t rb = halves ? b_ : b_ / 2;
  std::ostringstream body;
  if (ra != 0) body << ra << (rb < 0 ? "-" : "+");
  else if (rb < 0) body << "-";
  const auto mag = rb < 0 ? -rb : rb;
  if (mag != 1) body << mag << "*";
  body << "sqrt(" << delta_ << ")";
  if (halves)
    out << "(" << body.str() << ")/2";
  else
    out << body.str();
  return out.str();
}

bool operator<(const QuadExt& x, const QuadExt& y) {
  if (x == y) return false;
  // Exact when both share delta (or one is rational).
  if (x.delta() == y.delta() || x.b() == 0 || y.b() == 0) {
    const auto diff = QuadRational(x) - QuadRational(y);
    // sign of (p + q sqrt(d)) with den > 0
    const i128 p = diff.p(), q = diff.q();
    if (q == 0) return p < 0;
    if (p <= 0 && q <= 0) return true;
    if (p >= 0 && q >= 0) return false;
    // p and q of opposite sign: compare p^2 with q^2 delta
    const i128 lhs = p * p, rhs = q * q * diff.delta();
    return p < 0 ? lhs > rhs : lhs < rhs;
  }
  return x.value_ld() < y.value_ld();
}

// ----------------------------------------------------------- QuadRational

QuadRational::QuadRational(std::int64_t p, std::int64_t q, std::int64_t den,
                           std::int64_t delta)
    : p_(p), q_(q), den_(den), delta_(delta) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (delta <= 0 || !is_square_free(static_cast<std::uint64_t>(delta)))
    throw std::invalid_argument("delta must be a positive square-free integer");
  i128 pp = p, qq = q, dd = den;
  if (delta_ == 1) {
    pp += qq;
    qq = 0;
  }
  if (dd < 0) {
    pp = -pp;
    qq = -qq;
    dd = -dd;
  }
  i128 g = gcd128(gcd128(pp, qq), dd);
  if (g > 1) {
    pp /= g;
    qq /= g;
    dd /= g;
  }
  p_ = narrow(pp);
  q_ = narrow(qq);
  den_ = narrow(dd);
  if (q_ == 0) delta_ = 1;
}

QuadRational::QuadRational(const QuadExt& x) : QuadRational(x.a(), x.b(), 2, x.delta()) {}

long double QuadRational::value_ld() const {
  return (static_cast<long double>(p_) +
          static_cast<long double>(q_) * std::sqrt(static_cast<long double>(delta_))) /
         static_cast<long double>(den_);
}

namespace {

std::int64_t common_delta(const QuadRational& x, const QuadRational& y) {
  if (x.q() == 0) return y.delta();
  if (y.q() == 0) return x.delta();
  if (x.delta() != y.delta())
    throw std::domain_error("cannot combine sqrt(" + std::to_string(x.delta()) +
                            ") with sqrt(" + std::to_string(y.delta()) + ")");
  return x.delta();
}

// Builds from 128-bit parts, reducing before narrowing.
QuadRational make_reduced(i128 p, i128 q, i128 den, std::int64_t delta) {
  if (den < 0) {
    p = -p;
    q = -q;
    den = -den;
  }
  const i128 g = gcd128(gcd128(p, q), den);
  if (g > 1) {
    p /= g;
    q /= g;
    den /= g;
  }
  return QuadRational(narrow(p), narrow(q), narrow(den), q == 0 ? 1 : delta);
}

}  // namespace

QuadRational operator+(const QuadRational& x, const QuadRational& y) {
  const auto d = common_delta(x, y);
  const i128 p = static_cast<i128>(x.p_) * y.den_ + static_cast<i128>(y.p_) * x.den_;
  const i128 q = static_cast<i128>(x.q_) * y.den_ + static_cast<i128>(y.q_) * x.den_;
  return make_reduced(p, q, static_cast<i128>(x.den_) * y.den_, d);
}

QuadRational operator-(const QuadRational& x, const QuadRational& y) {
  return x + QuadRational(-y.p_, -y.q_, y.den_, y.delta_);
}

QuadRational operator*(const QuadRational& x, const QuadRational& y) {
  const auto d = common_delta(x, y);
  const i128 p = static_cast<i128>(x.p_) * y.p_ + static_cast<i128>(x.q_) * y.q_ * d;
  const i128 q = static_cast<i128>(x.p_) * y.q_ + static_cast<i128>(x.q_) * y.p_;
  return make_reduced(p, q, static_cast<i128>(x.den_) * y.den_, d);
}

// ---------------------------------------------------------- number theory

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && (r > n / r || r * r > n)) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

std::optional<std::uint64_t> exact_sqrt(std::uint64_t n) {
  const auto r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

bool is_square_free(std::uint64_t n) {
  if (n == 0) return false;
  return square_free_part(n).s == 1;
}

SquareFreeDecomposition square_free_part(std::uint64_t n, std::uint64_t ceiling) {
  if (n == 0) throw std::invalid_argument("square_free_part: n must be positive");
  SquareFreeDecomposition out;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p <= ceiling && p <= rest / p; p += (p == 2 ? 1 : 2)) {
    if (rest % p != 0) continue;
    unsigned exponent = 0;
    while (rest % p == 0) {
      rest /= p;
      ++exponent;
    }
    for (unsigned k = 0; k < exponent / 2; ++k) out.s *= p;
    if (exponent % 2) out.c *= p;
  }
  if (rest > 1) {
    const std::uint64_t bound = std::max<std::uint64_t>(ceiling, 1);
    const bool fully_factored = rest / bound < bound;  // rest < ceiling^2
    if (!fully_factored) {
      // Every prime factor left exceeds the ceiling. If rest < ceiling^3 it is
      // p, p*q or p^2; only the last contributes to s.
      const long double cube = static_cast<long double>(bound) * bound * bound;
      if (static_cast<long double>(rest) >= cube)
        throw std::range_error("square_free_part: cofactor " + std::to_string(rest) +
                               " exceeds trial-division ceiling");
      if (auto r = exact_sqrt(rest)) {
        out.s *= *r;
        return out;
      }
    }
    out.c *= rest;
  }
  return out;
}

QuadExt sqrt_quadext(std::uint64_t n) {
  if (n == 0) return QuadExt(0, 0, 1);
  const auto sf = square_free_part(n);
  return QuadExt(0, narrow(static_cast<i128>(2) * sf.s), static_cast<std::int64_t>(sf.c));
}

std::int64_t gcd_of(const std::vector<std::int64_t>& values) {
  std::int64_t g = 0;
  for (auto v : values) g = std::gcd(g, v < 0 ? -v : v);
  return g;
}

// ------------------------------------------------------------ recognition

Recognition recognize_quadext(double x, const RecognitionOptions& opts) {
  if (!(opts.tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  Recognition out;
  if (!std::isfinite(x)) return out;
  const long double twice = 2.0L * x;
  const long double tol2 = 2.0L * opts.tolerance;  // tolerance on 2x
  const auto bound = static_cast<long double>(opts.coeff_bound);

  const long double ra = std::nearbyint(twice);
  if (std::fabs(ra - twice) < tol2 && std::fabs(ra) <= bound) {
    out.status = Recognition::Status::matched;
    out.value = QuadExt(static_cast<std::int64_t>(ra), 0, 1);
    return out;
  }

  for (std::int64_t delta = 2; delta <= opts.delta_bound; ++delta) {
    if (!is_square_free(static_cast<std::uint64_t>(delta))) continue;
    const long double root = std::sqrt(static_cast<long double>(delta));
    const auto b_max = static_cast<std::int64_t>(
        std::min(bound, std::floor((bound + std::fabs(twice)) / root) + 1));
    for (std::int64_t b = 1; b <= b_max; ++b) {
      for (int sign : {1, -1}) {
        const long double irr = sign * b * root;
        const long double a = std::nearbyint(twice - irr);
        if (std::fabs(a) > bound) continue;
        if (std::fabs(a + irr - twice) < tol2)
          out.candidates.emplace_back(static_cast<std::int64_t>(a), sign * b, delta);
      }
    }
  }
  if (out.candidates.size() == 1) {
    out.status = Recognition::Status::matched;
    out.value = out.candidates.front();
  } else if (out.candidates.size() > 1) {
    out.status = Recognition::Status::ambiguous;
  }
  return out;
}

// --------------------------------------------------------- classification

bool SupportClassification::in_lambda_plus(const QuadExt& x) const {
  return std::find(lambda_plus.begin(), lambda_plus.end(), x) != lambda_plus.end();
}

SupportClassification classify_support(std::vector<QuadExt> support) {
  std::sort(support.begin(), support.end(),
            [](const QuadExt& x, const QuadExt& y) { return y < x; });
  support.erase(std::unique(support.begin(), support.end()), support.end());
  if (support.size() < 2)
    throw std::invalid_argument("classify_support needs at least two distinct values");

  SupportClassification out;
  out.support = support;
  std::vector<std::int64_t> deltas;
  for (const auto& x : support)
    if (x.b() != 0) deltas.push_back(x.delta());
  std::sort(deltas.begin(), deltas.end());
  deltas.erase(std::unique(deltas.begin(), deltas.end()), deltas.end());

  std::vector<std::int64_t> gaps;
  if (deltas.empty()) {
    for (const auto& x : support)
      if (!x.is_integer())
        throw InvalidSupportError("support value " + x.to_string() +
                                  " is rational but not an integer");
    const auto top = support.front().integer_value();
    for (const auto& x : support) gaps.push_back(top - x.integer_value());
  } else {
    if (deltas.size() > 1)
      throw InvalidSupportError("support mixes sqrt(" + std::to_string(deltas[0]) +
                                ") and sqrt(" + std::to_string(deltas[1]) + ")");
    out.delta = deltas.front();
    const auto a = support.front().a();
    for (const auto& x : support) {
      if (x.a() != a)
        throw InvalidSupportError("support values " + support.front().to_string() +
                                  " and " + x.to_string() +
                                  " do not share a common rational part");
      const auto diff = support.front().b() - x.b();
      if (diff % 2 != 0)
        throw InvalidSupportError("gap to " + x.to_string() +
                                  " is not an integer multiple of sqrt(delta)");
      gaps.push_back(diff / 2);
    }
  }
  out.g = gcd_of(gaps);
  for (std::size_t r = 0; r < support.size(); ++r) {
    const auto k = gaps[r] / out.g;
    out.scaled_gaps.push_back(k);
    (k % 2 == 0 ? out.lambda_plus : out.lambda_minus).push_back(support[r]);
  }
  return out;
}

}  // namespace qwc
