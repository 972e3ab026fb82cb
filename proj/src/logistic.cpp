#include <algorithm>

#include <mpfr.h>

#include "chaoslab/errors.hpp"
#include "chaoslab/interval_maps.hpp"

namespace chaoslab {

namespace {

constexpr mpfr_prec_t kPrecision = 256;
// Relative error budget for any value below: a handful of correctly rounded
// operations at 256 bits stays far under 2^-238.
constexpr long kRelErrorExponent = -238;
constexpr long kAbsErrorExponent = -240;

class Mpfr {
 public:
  Mpfr() { mpfr_init2(v_, kPrecision); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

const Rational kHalf(1, 2);

// |sin(pi t)|. Reduces t exactly to u in [0, 1/2] first, where sin(pi u) is
// well conditioned. Returns true when the value is exact (0 or 1).
bool abs_sin_pi(Mpfr& out, const Rational& t) {
  Rational u = floor_frac(t);
  if (u > kHalf) u = Rational(1) - u;
  if (u.sign() == 0) {
    mpfr_set_zero(out.get(), 1);
    return true;
  }
  if (u == kHalf) {
    mpfr_set_ui(out.get(), 1, MPFR_RNDN);
    return true;
  }
  Mpfr pi;
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  mpfr_set_q(out.get(), u.value().get_mpq_t(), MPFR_RNDN);
  mpfr_mul(out.get(), out.get(), pi.get(), MPFR_RNDN);
  mpfr_sin(out.get(), out.get(), MPFR_RNDN);
  return false;
}

// Outward-rounded double enclosure of a nonnegative value known to relative
// accuracy 2^kRelErrorExponent (or exactly).
Enclosure enclose(const Mpfr& v, bool exact) {
  if (exact) {
    const double d = mpfr_get_d(v.get(), MPFR_RNDN);
    return Enclosure{d, d};
  }
  Mpfr factor;
  Mpfr bound;
  mpfr_set_ui_2exp(factor.get(), 1, kRelErrorExponent, MPFR_RNDN);
  mpfr_ui_sub(factor.get(), 1, factor.get(), MPFR_RNDD);
  mpfr_mul(bound.get(), v.get(), factor.get(), MPFR_RNDD);
  const double lo = mpfr_get_d(bound.get(), MPFR_RNDD);

  mpfr_set_ui_2exp(factor.get(), 1, kRelErrorExponent, MPFR_RNDN);
  mpfr_add_ui(factor.get(), factor.get(), 1, MPFR_RNDU);
  mpfr_mul(bound.get(), v.get(), factor.get(), MPFR_RNDU);
  const double hi = mpfr_get_d(bound.get(), MPFR_RNDU);
  return Enclosure{std::max(lo, 0.0), hi};
}

// Least n with 2^n = +-1 (mod b), or plain 2^n = 1 when `plus_minus` is false.
std::optional<std::size_t> doubling_order(const mpz_class& b, bool plus_minus,
                                          std::size_t max_period) {
  if (b == 1) return 1;
  mpz_class r = 1;
  const mpz_class b_minus_1 = b - 1;
  for (std::size_t n = 1; n <= max_period; ++n) {
    r = (2 * r) % b;
    if (r == 1 || (plus_minus && r == b_minus_1)) return n;
  }
  return std::nullopt;
}

}  // namespace

Rational pi_upper() { return Rational(355, 113); }

AnglePoint::AnglePoint(Rational theta) : theta_(std::move(theta)) {
  if (theta_.sign() < 0 || theta_ >= Rational(1)) {
    throw DomainError("angle " + theta_.str() + " outside [0, 1)");
  }
}

AnglePoint AnglePoint::wrap(const Rational& theta) { return AnglePoint(floor_frac(theta)); }

AnglePoint AnglePoint::parse(std::string_view text) {
  constexpr std::string_view kPrefix = "theta=";
  if (text.substr(0, kPrefix.size()) != kPrefix) {
    throw InvalidInput("malformed angle '" + std::string(text) + "': expected theta=a/b");
  }
  return AnglePoint(Rational::parse(text.substr(kPrefix.size())));
}

AnglePoint angle_step(const AnglePoint& th) { return AnglePoint::wrap(Rational(2) * th.theta()); }

AnglePoint angle_iterate(const AnglePoint& th, std::size_t n) {
  const mpz_class b = th.theta().denominator();
  mpz_class c;
  const mpz_class base = 2;
  mpz_powm_ui(c.get_mpz_t(), base.get_mpz_t(), n, b.get_mpz_t());
  c = (c * th.theta().numerator()) % b;
  return AnglePoint(Rational(c, b));
}

std::optional<std::size_t> angle_period(const AnglePoint& th, std::size_t max_period) {
  const mpz_class b = th.theta().denominator();
  if (mpz_even_p(b.get_mpz_t())) return std::nullopt;
  return doubling_order(b, false, max_period);
}

bool same_logistic_state(const AnglePoint& a, const AnglePoint& b) {
  return a == b || a.theta() + b.theta() == Rational(1);
}

std::optional<std::size_t> logistic_period(const AnglePoint& th, std::size_t max_period) {
  // 2^n a/b = +-a/b (mod 1) with gcd(a, b) = 1  <=>  2^n = +-1 (mod b).
  const mpz_class b = th.theta().denominator();
  if (mpz_even_p(b.get_mpz_t())) return std::nullopt;
  return doubling_order(b, true, max_period);
}

Enclosure logistic_embed(const AnglePoint& th) {
  Mpfr s;
  const bool exact = abs_sin_pi(s, th.theta());
  mpfr_sqr(s.get(), s.get(), MPFR_RNDN);
  return enclose(s, exact);
}

DistanceValue logistic_distance(const AnglePoint& a, const AnglePoint& b) {
  // sin^2(pi a) - sin^2(pi b) = sin(pi (a + b)) sin(pi (a - b)); each factor
  // is evaluated on an exact rational argument, so tiny distances keep full
  // relative accuracy.
  Mpfr sum;
  Mpfr diff;
  const bool sum_exact = abs_sin_pi(sum, a.theta() + b.theta());
  const bool diff_exact = abs_sin_pi(diff, a.theta() - b.theta());
  const bool exact = (sum_exact && diff_exact) || (sum_exact && mpfr_zero_p(sum.get())) ||
                     (diff_exact && mpfr_zero_p(diff.get()));
  mpfr_mul(sum.get(), sum.get(), diff.get(), MPFR_RNDN);
  const Enclosure e = enclose(sum, exact);
  return DistanceValue::enclosure(e.lo, e.hi);
}

double conjugacy_residual(const AnglePoint& th) {
  Mpfr h;
  Mpfr h2;
  abs_sin_pi(h, th.theta());
  mpfr_sqr(h.get(), h.get(), MPFR_RNDN);
  abs_sin_pi(h2, Rational(2) * th.theta());
  mpfr_sqr(h2.get(), h2.get(), MPFR_RNDN);

  Mpfr lhs;
  mpfr_ui_sub(lhs.get(), 1, h.get(), MPFR_RNDN);
  mpfr_mul(lhs.get(), lhs.get(), h.get(), MPFR_RNDN);
  mpfr_mul_ui(lhs.get(), lhs.get(), 4, MPFR_RNDN);
  mpfr_sub(lhs.get(), lhs.get(), h2.get(), MPFR_RNDN);
  mpfr_abs(lhs.get(), lhs.get(), MPFR_RNDN);

  Mpfr slack;
  mpfr_set_ui_2exp(slack.get(), 1, kAbsErrorExponent, MPFR_RNDN);
  mpfr_add(lhs.get(), lhs.get(), slack.get(), MPFR_RNDU);
  return mpfr_get_d(lhs.get(), MPFR_RNDU);
}

AnglePoint nearest_logistic_periodic(const AnglePoint& th, const Rational& eps) {
  if (eps.sign() <= 0) throw InvalidInput("eps must be positive");
  const Rational pi = pi_upper();
  long n = 1;
  while (pi * Rational::pow2(-n + 1) >= eps) ++n;

  for (;; ++n) {
    const Rational scaled = th.theta() * Rational::pow2(n);
    const mpz_class leading = floor(scaled);
    mpz_class period_den = 0;
    mpz_setbit(period_den.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
    period_den -= 1;
    const AnglePoint candidate = AnglePoint::wrap(Rational(leading, period_den));
    if (logistic_distance(th, candidate).certainly_less(eps)) return candidate;
  }
}

std::vector<AnglePoint> logistic_periodic_points(std::size_t n) {
  if (n < 1 || n > 20) throw InvalidInput("logistic period must be in [1, 20]");
  // f^n(h(theta)) = h(theta)  <=>  theta (2^n -+ 1) is an integer.
  const long minus = (1L << n) - 1;
  const long plus = (1L << n) + 1;
  std::vector<AnglePoint> out;
  out.reserve(std::size_t{1} << n);
  for (long j = 0; 2 * j <= minus; ++j) out.emplace_back(Rational(j, minus));
  for (long j = 1; 2 * j <= plus; ++j) out.emplace_back(Rational(j, plus));
  std::sort(out.begin(), out.end(),
            [](const AnglePoint& a, const AnglePoint& b) { return a.theta() < b.theta(); });
  return out;
}

}  // namespace chaoslab
