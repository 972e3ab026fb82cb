#pragma once

#include <optional>
#include <string>

#include "chaoslab/rational.hpp"

namespace chaoslab {

// Closed interval [lo, hi] of doubles known to contain a real value.
struct Enclosure {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  double midpoint() const { return lo + (hi - lo) / 2; }
  bool contains(double v) const { return lo <= v && v <= hi; }
};

inline constexpr double kMaxEnclosureWidth = 1e-12;

// A distance known either exactly or through a certified enclosure.
// Strict comparisons are decided on the conservative side of the enclosure.
class DistanceValue {
 public:
  static DistanceValue exact(Rational value);
  // Throws InvalidInput unless lo <= hi, hi - lo <= 1e-12 and [lo,hi] meets [0,2].
  static DistanceValue enclosure(double lo, double hi);

  bool is_exact() const { return exact_.has_value(); }
  const Rational& exact_value() const;
  const Enclosure& enclosure_value() const;

  Rational lower() const;
  Rational upper() const;
  double midpoint() const;

  // value > bound, certified.
  bool certainly_greater(const Rational& bound) const { return lower() > bound; }
  // value < bound, certified.
  bool certainly_less(const Rational& bound) const { return upper() < bound; }

  // 17 significant digits of the exact value or the enclosure midpoint.
  std::string decimal() const;

  friend bool operator==(const DistanceValue& a, const DistanceValue& b);

 private:
  std::optional<Rational> exact_;
  std::optional<Enclosure> enclosure_;
};

}  // namespace chaoslab
