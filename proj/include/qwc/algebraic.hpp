#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qwc {

// The real number (a + b*sqrt(delta)) / 2 with delta square-free.
//
// Canonical form: b == 0 implies delta == 1, and delta == 1 folds b into a,
// so equal numbers compare equal componentwise.
class QuadExt {
 public:
  QuadExt() = default;
  // Throws std::invalid_argument if delta is not a positive square-free integer.
  QuadExt(std::int64_t a, std::int64_t b, std::int64_t delta);

  static QuadExt integer(std::int64_t k) { return QuadExt(2 * k, 0, 1); }

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t delta() const { return delta_; }

  bool is_rational() const { return b_ == 0; }
  bool is_integer() const { return b_ == 0 && a_ % 2 == 0; }
  // Requires is_integer().
  std::int64_t integer_value() const;

  long double value_ld() const;
  double value() const { return static_cast<double>(value_ld()); }

  // Human-readable form, e.g. "2+sqrt(2)", "(3-sqrt(5))/2", "12".
  std::string to_string() const;

  friend bool operator==(const QuadExt&, const QuadExt&) = default;
  // Orders by numeric value.
  friend bool operator<(const QuadExt& x, const QuadExt& y);

 private:
  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
  std::int64_t delta_ = 1;
};

// Exact element (p + q*sqrt(delta)) / den of Q(sqrt(delta)), reduced so that
// den > 0 and gcd(p, q, den) == 1. Used to verify closed-form identities.
class QuadRational {
 public:
  QuadRational() = default;
  QuadRational(std::int64_t p, std::int64_t q, std::int64_t den,
               std::int64_t delta);
  explicit QuadRational(const QuadExt& x);
  static QuadRational integer(std::int64_t k) { return {k, 0, 1, 1}; }

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  std::int64_t den() const { return den_; }
  std::int64_t delta() const { return delta_; }
  long double value_ld() const;

  // Mixing two different irrational deltas throws std::domain_error;
  // intermediate overflow throws std::overflow_error.
  friend QuadRational operator+(const QuadRational&, const QuadRational&);
  friend QuadRational operator-(const QuadRational&, const QuadRational&);
  friend QuadRational operator*(const QuadRational&, const QuadRational&);
  friend bool operator==(const QuadRational&, const QuadRational&) = default;

 private:
  std::int64_t p_ = 0;
  std::int64_t q_ = 0;
  std::int64_t den_ = 1;
  std::int64_t delta_ = 1;
};

struct SquareFreeDecomposition {
  std::uint64_t s = 1;  // n == s*s*c
  std::uint64_t c = 1;  // square-free
};

inline constexpr std::uint64_t kDefaultTrialDivisionCeiling = 10'000'000;

// Writes n = s^2 * c with c square-free, by trial division with divisors up to
// `ceiling`. Throws std::invalid_argument for n == 0 and std::range_error when
// the cofactor left after trial division cannot be certified.
SquareFreeDecomposition square_free_part(
    std::uint64_t n, std::uint64_t ceiling = kDefaultTrialDivisionCeiling);

bool is_square_free(std::uint64_t n);
// floor(sqrt(n)), exact.
std::uint64_t isqrt(std::uint64_t n);
// sqrt(n) if n is a perfect square.
std::optional<std::uint64_t> exact_sqrt(std::uint64_t n);

// sqrt(n) as s*sqrt(c) packed in a QuadExt: (0 + 2s*sqrt(c))/2.
QuadExt sqrt_quadext(std::uint64_t n);

struct RecognitionOptions {
  double tolerance = 1e-9;
  std::int64_t delta_bound = 10'000;
  std::int64_t coeff_bound = 1'000;
};

struct Recognition {
  enum class Status { matched, none, ambiguous };
  Status status = Status::none;
  std::optional<QuadExt> value;
  std::vector<QuadExt> candidates;  // every match found (ambiguous case)

  bool matched() const { return status == Status::matched; }
};

// Finds the QuadExt within `tolerance` of x with |a|,|b| <= coeff_bound and
// delta <= delta_bound. Rationals (b == 0) are tried first and win outright.
// Two or more irrational matches are reported as ambiguous.
Recognition recognize_quadext(double x, const RecognitionOptions& opts = {});

struct SupportClassification {
  std::vector<QuadExt> support;  // descending
  std::int64_t delta = 1;
  std::int64_t g = 1;
  std::vector<QuadExt> lambda_plus;
  std::vector<QuadExt> lambda_minus;
  // (theta_0 - theta_r) / (g*sqrt(delta)) per support element, same order.
  std::vector<std::int64_t> scaled_gaps;

  bool in_lambda_plus(const QuadExt& x) const;
};

// Checks that every element has the form (a + b_r sqrt(delta))/2 with common
// a and delta (or that all are integers), then classifies by the parity of
// (theta_0 - theta_r)/(g sqrt(delta)). Throws InvalidSupportError otherwise,
// std::invalid_argument if fewer than two elements are given.
SupportClassification classify_support(std::vector<QuadExt> support);

std::int64_t gcd_of(const std::vector<std::int64_t>& values);

}  // namespace qwc
