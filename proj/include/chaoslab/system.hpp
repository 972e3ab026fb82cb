#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "chaoslab/distance.hpp"
#include "chaoslab/interval_maps.hpp"
#include "chaoslab/rational.hpp"
#include "chaoslab/symbolic.hpp"

namespace chaoslab {

enum class SystemId { kFullShift, kTent, kLogistic };

// A state of one of the three systems, in its native exact representation.
using Point = std::variant<EPWord, Rational, AnglePoint>;

// The pair (X, T) with the constants the witness construction relies on.
struct SystemHandle {
  SystemId id;
  Rational lipschitz_per_step;
  Rational diameter;
  Rational certified_delta;

  static const SystemHandle& full_shift();
  static const SystemHandle& tent();
  static const SystemHandle& logistic();
  static const SystemHandle& get(SystemId id);
  // "full-shift", "tent" or "logistic"; InvalidInput otherwise.
  static const SystemHandle& from_name(std::string_view name);

  std::string_view name() const;
};

std::string_view system_name(SystemId id);

// Text encodings: "pre:cycle" (full shift), "a/b" (tent), "theta=a/b" (logistic).
Point parse_point(const SystemHandle& sys, std::string_view text);
std::string point_str(const Point& p);

// Throws InvalidInput if p is not a valid state of sys.
void require_point(const SystemHandle& sys, const Point& p);

Point iterate(const SystemHandle& sys, const Point& p, std::size_t n);
DistanceValue distance(const SystemHandle& sys, const Point& p, const Point& q);
// State equality; for the logistic map this is equality of x = h(theta).
bool same_state(const SystemHandle& sys, const Point& p, const Point& q);
std::optional<std::size_t> period_of(const SystemHandle& sys, const Point& p);

// A periodic point p with distance(x, p) < eps, certified.
Point nearest_periodic(const SystemHandle& sys, const Point& x, const Rational& eps);

struct SensitivityWitness {
  Point y;
  Point z;
  std::size_t k = 0;
  DistanceValue separation;  // distance(T^k y, T^k z)
};

// Deterministic constructive sensitivity: y, z in B_eps(x) whose orbits are
// more than delta apart at time k. Requires 0 < delta <= certified_delta.
SensitivityWitness sensitivity_witness(const SystemHandle& sys, const Point& x,
                                       const Rational& eps, const Rational& delta);

}  // namespace chaoslab
