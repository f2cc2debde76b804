#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qm {

using Rational = mpq_class;

/// Raised by `monus(inf, inf)`; valid ball arithmetic never produces it.
class IndeterminateForm : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "p/q", "p" or "-p/q" into a canonical rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// 2^-k as an exact rational.
Rational dyadic(unsigned k);

/// A non-negative rational or +infinity.
///
/// Values are always canonical (lowest terms, positive denominator), so
/// equality of the stored representation is equality of the numbers.
class ExtReal {
 public:
  ExtReal() = default;
  ExtReal(const Rational& value);  // NOLINT(google-explicit-constructor)
  ExtReal(long value);             // NOLINT(google-explicit-constructor)

  static ExtReal infinity();
  static ExtReal parse(std::string_view text);

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  bool is_zero() const { return !infinite_ && sgn(value_) == 0; }

  /// The finite value; throws std::logic_error on infinity.
  const Rational& value() const;

  std::string to_string() const;

  friend bool operator==(const ExtReal& a, const ExtReal& b);
  friend std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b);

  friend ExtReal operator+(const ExtReal& a, const ExtReal& b);

  /// alpha * x for alpha >= 0, with alpha * inf = inf for every alpha
  /// (including 0), which keeps "alpha-Lipschitz" equivalent to the
  /// monotonicity of the lifted ball map.
  ExtReal scaled(const Rational& alpha) const;

 private:
  Rational value_{0};
  bool infinite_ = false;
};

enum class Ordering { Less, Equal, Greater };

Ordering compare(const ExtReal& a, const ExtReal& b);

/// Truncated subtraction max(a - b, 0).
ExtReal monus(const ExtReal& a, const ExtReal& b);

ExtReal min(const ExtReal& a, const ExtReal& b);
ExtReal max(const ExtReal& a, const ExtReal& b);

std::string to_string(const ExtReal& x);

}  // namespace qm
