#include "chaoslab/distance.hpp"

#include <cmath>
#include <cstdio>

#include "chaoslab/errors.hpp"

namespace chaoslab {

DistanceValue DistanceValue::exact(Rational value) {
  if (value < Rational(0) || value > Rational(2)) {
    throw InvalidInput("distance " + value.str() + " outside [0, 2]");
  }
  DistanceValue d;
  d.exact_ = std::move(value);
  return d;
}

DistanceValue DistanceValue::enclosure(double lo, double hi) {
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo <= hi)) {
    throw InvalidInput("enclosure bounds are not ordered");
  }
  if (hi - lo > kMaxEnclosureWidth) throw InvalidInput("enclosure wider than 1e-12");
  if (hi < 0.0 || lo > 2.0) throw InvalidInput("enclosure outside [0, 2]");
  DistanceValue d;
  d.enclosure_ = Enclosure{lo, hi};
  return d;
}

const Rational& DistanceValue::exact_value() const {
  if (!exact_) throw InvalidInput("distance has no exact value");
  return *exact_;
}

const Enclosure& DistanceValue::enclosure_value() const {
  if (!enclosure_) throw InvalidInput("distance has no enclosure");
  return *enclosure_;
}

Rational DistanceValue::lower() const {
  return exact_ ? *exact_ : Rational::from_double(enclosure_->lo);
}

Rational DistanceValue::upper() const {
  return exact_ ? *exact_ : Rational::from_double(enclosure_->hi);
}

double DistanceValue::midpoint() const {
  return exact_ ? exact_->to_double() : enclosure_->midpoint();
}

std::string DistanceValue::decimal() const {
  if (exact_) return exact_->decimal(17);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", enclosure_->midpoint());
  return buf;
}

bool operator==(const DistanceValue& a, const DistanceValue& b) {
  if (a.is_exact() != b.is_exact()) return false;
  if (a.is_exact()) return *a.exact_ == *b.exact_;
  return a.enclosure_->lo == b.enclosure_->lo && a.enclosure_->hi == b.enclosure_->hi;
}

}  // namespace chaoslab
