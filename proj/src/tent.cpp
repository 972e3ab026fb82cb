#include <algorithm>
#include <cstdint>

#include "chaoslab/errors.hpp"
#include "chaoslab/interval_maps.hpp"

namespace chaoslab {

namespace {

const Rational kHalf(1, 2);

void require_unit_interval(const Rational& x) {
  if (x < Rational(0) || x > Rational(1)) {
    throw DomainError("tent state " + x.str() + " outside [0, 1]");
  }
}

}  // namespace

Rational tent_step(const Rational& x) {
  require_unit_interval(x);
  return x <= kHalf ? Rational(2) * x : Rational(2) - Rational(2) * x;
}

Rational tent_iterate(const Rational& x, std::size_t n) {
  require_unit_interval(x);
  const mpz_class a = x.numerator();
  const mpz_class two_b = 2 * x.denominator();
  mpz_class c;
  mpz_class base = 2;
  mpz_powm_ui(c.get_mpz_t(), base.get_mpz_t(), n, two_b.get_mpz_t());
  c = (c * a) % two_b;
  const mpz_class other = two_b - c;
  return Rational(c < other ? c : other, x.denominator());
}

Bits tent_itinerary(const Rational& x, std::size_t n) {
  require_unit_interval(x);
  Bits out;
  out.reserve(n);
  Rational y = x;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(y <= kHalf ? 0 : 1);
    y = tent_step(y);
  }
  return out;
}

AffineBranch tent_branch(const Bits& word) {
  mpz_class slope = 1;
  mpz_class offset = 0;
  for (auto bit : word) {
    if (bit == 0) {
      slope *= 2;
      offset *= 2;
    } else {
      slope *= -2;
      offset = 2 - 2 * offset;
    }
  }
  return AffineBranch{Rational(slope, mpz_class(1)), Rational(offset, mpz_class(1))};
}

std::vector<Rational> tent_periodic_points(std::size_t n) {
  if (n < 1 || n > 20) throw InvalidInput("tent period must be in [1, 20]");

  // Each length-n itinerary word gives one affine branch of T^n; its fixed
  // point is offset / (1 - slope). Integer arithmetic suffices for n <= 20.
  std::vector<Rational> points;
  points.reserve(std::size_t{1} << n);
  const std::uint64_t words = std::uint64_t{1} << n;
  for (std::uint64_t w = 0; w < words; ++w) {
    std::int64_t slope = 1;
    std::int64_t offset = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (((w >> (n - 1 - i)) & 1u) == 0) {
        slope *= 2;
        offset *= 2;
      } else {
        slope *= -2;
        offset = 2 - 2 * offset;
      }
    }
    std::int64_t num = offset;
    std::int64_t den = 1 - slope;
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num < 0 || num > den) continue;

    // Closed-cylinder membership: replay the itinerary on num/den.
    bool in_cylinder = true;
    std::int64_t y = num;
    for (std::size_t i = 0; i < n && in_cylinder; ++i) {
      const auto bit = static_cast<std::uint64_t>((w >> (n - 1 - i)) & 1u);
      const bool left = 2 * y <= den;
      const bool right = 2 * y >= den;
      in_cylinder = bit == 0 ? left : right;
      y = left ? 2 * y : 2 * den - 2 * y;
    }
    if (in_cylinder && y == num) points.emplace_back(num, den);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

Rational nearest_tent_periodic(const Rational& x, const Rational& eps) {
  require_unit_interval(x);
  if (eps.sign() <= 0) throw InvalidInput("eps must be positive");
  long n = 1;
  while (Rational::pow2(-n) >= eps) ++n;

  const AffineBranch branch = tent_branch(tent_itinerary(x, static_cast<std::size_t>(n)));
  const Rational p = branch.offset / (Rational(1) - branch.slope);
  if (!(abs(x - p) < eps)) {
    throw VerificationFailure("periodic point outside the requested radius");
  }
  return p;
}

std::optional<std::size_t> tent_period(const Rational& x, std::size_t max_period) {
  require_unit_interval(x);
  // T^n(x) = x  <=>  2^n x = +-x (mod 2). With x = a/b reduced this needs
  // a even, b odd and 2^n = +-1 (mod b).
  if (x.sign() == 0) return 1;
  const mpz_class a = x.numerator();
  const mpz_class b = x.denominator();
  if (mpz_odd_p(a.get_mpz_t()) || mpz_even_p(b.get_mpz_t())) return std::nullopt;
  mpz_class r = 1;
  const mpz_class b_minus_1 = b - 1;
  for (std::size_t n = 1; n <= max_period; ++n) {
    r = (2 * r) % b;
    if (r == 1 || r == b_minus_1) return n;
  }
  return std::nullopt;
}

}  // namespace chaoslab
