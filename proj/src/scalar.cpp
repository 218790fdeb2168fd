#include "kohn/scalar.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace kohn {

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  const auto slash = text.find('/');
  auto check_digits = [&](std::string_view part, bool allow_sign) {
    if (part.empty()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) ++i;
    if (i == part.size()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
      }
    }
  };
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  check_digits(num, true);
  check_digits(den, false);
  std::string num_str(num);
  if (num_str[0] == '+') num_str.erase(0, 1);
  Integer n(num_str, 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Integer factorial(unsigned long k) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), k);
  return out;
}

Integer binomial(long top, long bottom) {
  if (bottom < 0 || top < 0 || bottom > top) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
  return out;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (sgn(base) == 0) throw std::domain_error("zero to a negative power");
    return 1 / pow(base, -exponent);
  }
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(exponent));
  // Powers of coprime integers stay coprime, so no canonicalization is needed.
  Rational out;
  mpq_set_num(out.get_mpq_t(), num.get_mpz_t());
  mpq_set_den(out.get_mpq_t(), den.get_mpz_t());
  return out;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

// mpq_get_d truncates; this rounds to nearest. The quotient is formed with
// 55-56 significant bits and a sticky bit so the final conversion from
// uint64 performs the only rounding.
double to_double(const Rational& value) {
  if (sgn(value) == 0) return 0.0;
  Integer num = abs(value.get_num());
  Integer den = value.get_den();
  const long shift = 55 - (static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
                           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)));
  if (shift >= 0) {
    num <<= static_cast<mp_bitcnt_t>(shift);
  } else {
    den <<= static_cast<mp_bitcnt_t>(-shift);
  }
  Integer quotient;
  Integer remainder;
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  std::uint64_t bits = mpz_get_ui(quotient.get_mpz_t());
  if (sgn(remainder) != 0) bits |= 1U;
  const double magnitude = std::ldexp(static_cast<double>(bits), static_cast<int>(-shift));
  return sgn(value) < 0 ? -magnitude : magnitude;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& rhs) {
  if (is_real() && rhs.is_real()) {
    re_ *= rhs.re_;
    return *this;
  }
  Rational re = re_ * rhs.re_ - im_ * rhs.im_;
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero scalar");
  if (rhs.is_real()) {
    re_ /= rhs.re_;
    im_ /= rhs.re_;
    return *this;
  }
  const Rational denom = rhs.norm_squared();
  *this *= rhs.conj();
  re_ /= denom;
  im_ /= denom;
  return *this;
}

std::string ExactScalar::to_string() const {
  if (is_real()) return kohn::to_string(re_);
  return kohn::to_string(re_) + (sgn(im_) < 0 ? " - " : " + ") + kohn::to_string(abs(im_)) + "i";
}

MixedValue MixedValue::from_exact(Rational value) {
  const double approx = to_double(value);
  return {std::move(value), approx};
}

}  // namespace kohn
