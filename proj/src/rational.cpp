#include "chaoslab/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <vector>

#include <mpfr.h>

#include "chaoslab/errors.hpp"

namespace chaoslab {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string digits(s);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
  if (q_.get_den() == 0) throw InvalidInput("rational with zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw InvalidInput("malformed rational '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(parse_integer(num), mpz_class(1));
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw InvalidInput("malformed rational '" + std::string(text) + "'");
  }
  return Rational(parse_integer(num), parse_integer(den));
}

Rational Rational::pow2(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(mpz_class(1), p) : Rational(p, mpz_class(1));
}

Rational Rational::from_double(double d) {
  if (!std::isfinite(d)) throw InvalidInput("non-finite double");
  return Rational(mpq_class(d));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.q_ == 0) throw InvalidInput("division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_str();
}

std::string Rational::fraction_str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
  if (q_ == 0) return "0";
  mpfr_t v;
  mpfr_init2(v, 320);
  mpfr_set_q(v, q_.get_mpq_t(), MPFR_RNDN);
  const int n = mpfr_snprintf(nullptr, 0, "%.*Rg", digits, v);
  std::vector<char> buf(static_cast<std::size_t>(n) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v);
  mpfr_clear(v);
  return std::string(buf.data(), static_cast<std::size_t>(n));
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

mpz_class floor(const Rational& r) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), r.value().get_num_mpz_t(), r.value().get_den_mpz_t());
  return f;
}

Rational floor_frac(const Rational& r) { return r - Rational(floor(r), mpz_class(1)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace chaoslab
