#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace chaoslab {

// Exact reduced fraction with arbitrary-precision numerator and denominator.
// The denominator is always positive and coprime to the numerator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class q);

  // Accepts "a", "-a", "a/b". Throws InvalidInput on anything else or b == 0.
  static Rational parse(std::string_view text);

  // 2^e for any integer e.
  static Rational pow2(long e);

  // Exact value of a finite double.
  static Rational from_double(double d);

  const mpq_class& value() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  // "a" for integers, "a/b" otherwise.
  std::string str() const;
  // Always "a/b", including "0/1".
  std::string fraction_str() const;
  // Decimal rendering with `digits` significant digits, trailing zeros trimmed.
  std::string decimal(int digits = 17) const;
  double to_double() const { return q_.get_d(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

Rational abs(const Rational& r);
Rational floor_frac(const Rational& r);  // r - floor(r), in [0, 1)
mpz_class floor(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace chaoslab
