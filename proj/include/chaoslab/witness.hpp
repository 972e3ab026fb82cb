#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "chaoslab/system.hpp"

namespace chaoslab {

// A periodic pair inside B_r(center) whose orbits are more than delta apart
// at times k, k + L, k + 2L, ...
struct WitnessCertificate {
  SystemId system = SystemId::kFullShift;
  Point center;
  Rational radius;
  Rational delta;
  Point p;
  Point q;
  std::size_t period_p = 0;
  std::size_t period_q = 0;
  std::size_t k = 0;
  std::size_t L = 0;
  DistanceValue separation_at_k;
  Rational epsilon_used;
  Rational rho_used;
};

// Builds a certificate by replaying the sensitivity-plus-density argument:
// a sensitive pair (z, y) separating at time k, an epsilon margin, a
// continuity radius rho from the Lipschitz constant, and periodic points
// near z and y inside the ball. Throws UnsupportedDelta for delta above the
// system's certified constant, VerificationFailure if the recomputed
// separation does not exceed delta.
WitnessCertificate asymptotic_witness(const SystemHandle& sys, const Point& x, const Rational& r,
                                      const Rational& delta);

struct ClauseResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<ClauseResult> clauses;

  bool passed() const;
  const ClauseResult* find(std::string_view name) const;
};

// Independent recheck of a certificate: ball membership, exact periodicity,
// separation > delta at k + mL for m = 0..depth, and that every one of those
// separations is the same value. Recomputes everything it can; failures are
// report entries, never exceptions.
VerificationReport verify_certificate(const SystemHandle& sys, const WitnessCertificate& cert,
                                      std::size_t depth);

using SeparationSeries = std::vector<std::pair<std::size_t, DistanceValue>>;

// (n, distance(T^n p, T^n q)) for n = 0..steps.
SeparationSeries separation_series(const SystemHandle& sys, const Point& p, const Point& q,
                                   std::size_t steps);

}  // namespace chaoslab
