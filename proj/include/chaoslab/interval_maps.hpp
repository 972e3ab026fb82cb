#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chaoslab/distance.hpp"
#include "chaoslab/rational.hpp"
#include "chaoslab/symbolic.hpp"

namespace chaoslab {

// ---------------------------------------------------------------------------
// Tent map T(x) = 1 - |2x - 1| on [0, 1], exact over the rationals.
// ---------------------------------------------------------------------------

// Throws DomainError outside [0, 1].
Rational tent_step(const Rational& x);

// T^n(x). Uses T^n(x) = dist(2^n x, 2Z), so cost does not grow with n.
Rational tent_iterate(const Rational& x, std::size_t n);

// Bit i is 0 if T^i(x) <= 1/2, else 1. A tie at 1/2 codes 0.
Bits tent_itinerary(const Rational& x, std::size_t n);

// On the closed cylinder of `word`, T^|word| is x -> slope*x + offset,
// with slope = +-2^|word|, and maps the cylinder onto [0, 1].
struct AffineBranch {
  Rational slope;
  Rational offset;

  Rational apply(const Rational& x) const { return slope * x + offset; }
  Rational preimage(const Rational& y) const { return (y - offset) / slope; }
};
AffineBranch tent_branch(const Bits& word);

// Every solution of T^n(x) = x, sorted. 1 <= n <= 20, else InvalidInput.
std::vector<Rational> tent_periodic_points(std::size_t n);

// A periodic point p with |x - p| < eps, sharing x's itinerary of length n
// where n is least with 2^-n < eps.
Rational nearest_tent_periodic(const Rational& x, const Rational& eps);

// Least n >= 1 with T^n(x) = x, or nullopt if x is not periodic. Gives up
// (nullopt) past `max_period`.
std::optional<std::size_t> tent_period(const Rational& x, std::size_t max_period = 1u << 20);

// ---------------------------------------------------------------------------
// Logistic map f(x) = 4x(1 - x), iterated in angle coordinates:
// x = h(theta) = sin^2(pi theta), and f(h(theta)) = h(2 theta mod 1).
// ---------------------------------------------------------------------------

// Rational angle in [0, 1).
class AnglePoint {
 public:
  AnglePoint() = default;
  // Throws DomainError unless 0 <= theta < 1.
  explicit AnglePoint(Rational theta);
  // Reduces any rational mod 1.
  static AnglePoint wrap(const Rational& theta);

  // "theta=a/b"
  static AnglePoint parse(std::string_view text);
  std::string str() const { return "theta=" + theta_.str(); }

  const Rational& theta() const { return theta_; }

  friend bool operator==(const AnglePoint&, const AnglePoint&) = default;

 private:
  Rational theta_;
};

// 2 theta mod 1.
AnglePoint angle_step(const AnglePoint& th);
// 2^n theta mod 1.
AnglePoint angle_iterate(const AnglePoint& th, std::size_t n);

// Period of theta under doubling alone (the angle orbit), nullopt when theta
// is not purely periodic (even reduced denominator).
std::optional<std::size_t> angle_period(const AnglePoint& th, std::size_t max_period = 1u << 20);

// Both angles map to the same logistic state: theta' in {theta, 1 - theta}.
bool same_logistic_state(const AnglePoint& a, const AnglePoint& b);

// Least period of the logistic state h(theta): least n >= 1 with
// 2^n theta = +-theta mod 1.
std::optional<std::size_t> logistic_period(const AnglePoint& th, std::size_t max_period = 1u << 20);

// Enclosure of sin^2(pi theta), width <= 1e-12. Exact at theta = 0 and 1/2.
Enclosure logistic_embed(const AnglePoint& th);

// Enclosure of |h(a) - h(b)|.
DistanceValue logistic_distance(const AnglePoint& a, const AnglePoint& b);

// Upper bound on |4 h(1 - h) - h(2 theta mod 1)|.
double conjugacy_residual(const AnglePoint& th);

// Angle whose binary expansion repeats theta's first n bits, with n least such
// that pi 2^(-n+1) < eps; n is raised until the enclosure certifies
// |h(theta) - h(result)| < eps.
AnglePoint nearest_logistic_periodic(const AnglePoint& th, const Rational& eps);

// One representative angle in [0, 1/2] for each of the 2^n solutions of
// f^n(x) = x. 1 <= n <= 20.
std::vector<AnglePoint> logistic_periodic_points(std::size_t n);

// Rational upper bound on pi.
Rational pi_upper();

}  // namespace chaoslab
