#include "chaoslab/witness.hpp"

#include <numeric>

#include "chaoslab/errors.hpp"

namespace chaoslab {

namespace {

Rational power(const Rational& base, std::size_t e) {
  Rational out(1);
  for (std::size_t i = 0; i < e; ++i) out *= base;
  return out;
}

ClauseResult clause(std::string name, bool passed, std::string detail = {}) {
  return ClauseResult{std::move(name), passed, std::move(detail)};
}

std::string distance_str(const DistanceValue& d) {
  if (d.is_exact()) return d.exact_value().str();
  return "[" + Rational::from_double(d.enclosure_value().lo).decimal() + ", " +
         Rational::from_double(d.enclosure_value().hi).decimal() + "]";
}

}  // namespace

WitnessCertificate asymptotic_witness(const SystemHandle& sys, const Point& x, const Rational& r,
                                      const Rational& delta) {
  require_point(sys, x);
  if (r.sign() <= 0) throw InvalidInput("radius must be positive");

  // (1) A sensitive pair in B_r(x). The oracle's y plays the proof's z.
  SensitivityWitness sens = sensitivity_witness(sys, x, r, delta);
  const Point& z = sens.y;
  const Point& y = sens.z;
  const std::size_t k = sens.k;
  const Rational s = sens.separation.lower();

  // (2) s - 4 eps > delta.
  const Rational eps = (s - delta) / Rational(5);
  // (3) T^k(B_rho(z)) is inside B_eps(T^k z).
  const Rational rho = eps / power(sys.lipschitz_per_step, k);

  // (4) Periodic points in B_r(x) intersected with B_rho(z), B_rho(y).
  const Rational room_z = r - distance(sys, x, z).upper();
  const Rational room_y = r - distance(sys, x, y).upper();
  Point p = nearest_periodic(sys, z, std::min(rho, room_z));
  Point q = nearest_periodic(sys, y, std::min(rho, room_y));

  // (5) Recompute the separation instead of trusting the inequality chain.
  DistanceValue sep = distance(sys, iterate(sys, p, k), iterate(sys, q, k));
  if (!sep.certainly_greater(delta)) {
    throw VerificationFailure("periodic pair does not separate beyond delta at time k");
  }
  if (!distance(sys, x, p).certainly_less(r) || !distance(sys, x, q).certainly_less(r)) {
    throw VerificationFailure("periodic pair left the ball");
  }

  // (6) Both orbits repeat with period L.
  const auto period_p = period_of(sys, p);
  const auto period_q = period_of(sys, q);
  if (!period_p || !period_q) throw VerificationFailure("approximant is not periodic");

  WitnessCertificate cert;
  cert.system = sys.id;
  cert.center = x;
  cert.radius = r;
  cert.delta = delta;
  cert.p = std::move(p);
  cert.q = std::move(q);
  cert.period_p = *period_p;
  cert.period_q = *period_q;
  cert.k = k;
  cert.L = std::lcm(*period_p, *period_q);
  cert.separation_at_k = std::move(sep);
  cert.epsilon_used = eps;
  cert.rho_used = rho;
  return cert;
}

bool VerificationReport::passed() const {
  for (const auto& c : clauses) {
    if (!c.passed) return false;
  }
  return !clauses.empty();
}

const ClauseResult* VerificationReport::find(std::string_view name) const {
  for (const auto& c : clauses) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

VerificationReport verify_certificate(const SystemHandle& sys, const WitnessCertificate& cert,
                                      std::size_t depth) {
  VerificationReport report;
  auto& out = report.clauses;

  if (cert.system != sys.id) {
    out.push_back(clause("system", false,
                         "certificate is for " + std::string(system_name(cert.system))));
    return report;
  }
  try {
    require_point(sys, cert.center);
    require_point(sys, cert.p);
    require_point(sys, cert.q);
  } catch (const std::exception& e) {
    out.push_back(clause("points", false, e.what()));
    return report;
  }

  const bool shape_ok = cert.k >= 1 && cert.period_p >= 1 && cert.period_q >= 1 &&
                        cert.L >= 1 && cert.L % cert.period_p == 0 && cert.L % cert.period_q == 0 &&
                        cert.radius.sign() > 0 && cert.delta.sign() > 0;
  out.push_back(clause("well_formed", shape_ok,
                       shape_ok ? "" : "need k, periods, L >= 1, L a common multiple, r, delta > 0"));
  if (!shape_ok) return report;

  const DistanceValue dp = distance(sys, cert.center, cert.p);
  const DistanceValue dq = distance(sys, cert.center, cert.q);
  out.push_back(clause("p_in_ball", dp.certainly_less(cert.radius), "d(x,p) = " + distance_str(dp)));
  out.push_back(clause("q_in_ball", dq.certainly_less(cert.radius), "d(x,q) = " + distance_str(dq)));

  out.push_back(clause("p_periodic", same_state(sys, iterate(sys, cert.p, cert.period_p), cert.p),
                       "T^" + std::to_string(cert.period_p) + "(p) = p"));
  out.push_back(clause("q_periodic", same_state(sys, iterate(sys, cert.q, cert.period_q), cert.q),
                       "T^" + std::to_string(cert.period_q) + "(q) = q"));

  // Direct evaluation of T^n at each recurrence time; iterate() does not
  // rely on the declared periods.
  bool separated = true;
  bool identical = true;
  std::string sep_detail;
  std::string rec_detail;
  std::optional<DistanceValue> first;
  for (std::size_t m = 0; m <= depth; ++m) {
    const std::size_t n = cert.k + m * cert.L;
    const DistanceValue d = distance(sys, iterate(sys, cert.p, n), iterate(sys, cert.q, n));
    if (separated && !d.certainly_greater(cert.delta)) {
      separated = false;
      sep_detail = "n = " + std::to_string(n) + ": distance " + distance_str(d) +
                   " not > " + cert.delta.str();
    }
    if (!first) {
      first = d;
    } else if (identical && !(d == *first)) {
      identical = false;
      rec_detail = "n = " + std::to_string(n) + " differs from n = " + std::to_string(cert.k);
    }
  }
  if (separated) {
    sep_detail = "all " + std::to_string(depth + 1) + " times exceed " + cert.delta.str();
  }
  if (identical) rec_detail = "value " + distance_str(*first) + " at every time";
  out.push_back(clause("separation", separated, sep_detail));
  out.push_back(clause("recurrence", identical, rec_detail));
  return report;
}

SeparationSeries separation_series(const SystemHandle& sys, const Point& p, const Point& q,
                                   std::size_t steps) {
  if (steps < 1) throw InvalidInput("series needs at least one step");
  SeparationSeries out;
  out.reserve(steps + 1);
  Point a = p;
  Point b = q;
  for (std::size_t n = 0; n <= steps; ++n) {
    out.emplace_back(n, distance(sys, a, b));
    a = iterate(sys, a, 1);
    b = iterate(sys, b, 1);
  }
  return out;
}

}  // namespace chaoslab
