// Exact scalars: arbitrary-precision integers, rationals, and Gaussian
// rationals re + i*im used as the coefficient field for polynomial work.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace kohn {

using Integer = mpz_class;
using Rational = mpq_class;

/// Serializes as "num/den" with den > 0, always including the denominator.
std::string to_string(const Rational& value);

/// Parses "num/den" or a bare integer. Result is canonicalized.
/// Throws std::invalid_argument on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned long k);
Integer binomial(long top, long bottom);  // 0 outside 0 <= bottom <= top

/// base^exponent for any integer exponent; base must be nonzero if exponent < 0.
Rational pow(const Rational& base, long exponent);

bool is_integer(const Rational& value);
double to_double(const Rational& value);

class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long re) : re_(re) {}  // NOLINT: implicit from integers is intended
  ExactScalar(Rational re) : re_(std::move(re)) {}  // NOLINT
  ExactScalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  ExactScalar conj() const { return {re_, -im_}; }
  /// |z|^2, always a nonnegative rational.
  Rational norm_squared() const { return re_ * re_ + im_ * im_; }

  ExactScalar& operator+=(const ExactScalar& rhs);
  ExactScalar& operator-=(const ExactScalar& rhs);
  ExactScalar& operator*=(const ExactScalar& rhs);
  ExactScalar& operator/=(const ExactScalar& rhs);  // throws std::domain_error on zero

  friend ExactScalar operator+(ExactScalar lhs, const ExactScalar& rhs) { return lhs += rhs; }
  friend ExactScalar operator-(ExactScalar lhs, const ExactScalar& rhs) { return lhs -= rhs; }
  friend ExactScalar operator*(ExactScalar lhs, const ExactScalar& rhs) { return lhs *= rhs; }
  friend ExactScalar operator/(ExactScalar lhs, const ExactScalar& rhs) { return lhs /= rhs; }
  ExactScalar operator-() const { return {-re_, -im_}; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

/// A quantity that is exact whenever the inputs allow it, with a double
/// approximation always populated.
struct MixedValue {
  std::optional<Rational> exact;
  double approx = 0.0;

  bool is_exact() const { return exact.has_value(); }
  static MixedValue from_exact(Rational value);
  static MixedValue from_float(double value) { return {std::nullopt, value}; }
};

}  // namespace kohn
