#include "chaoslab/system.hpp"

#include "chaoslab/errors.hpp"

namespace chaoslab {

namespace {

const EPWord& as_word(const Point& p) { return std::get<EPWord>(p); }
const Rational& as_rational(const Point& p) { return std::get<Rational>(p); }
const AnglePoint& as_angle(const Point& p) { return std::get<AnglePoint>(p); }

void require_delta(const SystemHandle& sys, const Rational& delta) {
  if (delta.sign() <= 0) throw InvalidInput("delta must be positive");
  if (delta > sys.certified_delta) {
    throw UnsupportedDelta("delta " + delta.str() + " exceeds the certified constant " +
                           sys.certified_delta.str() + " for " + std::string(sys.name()));
  }
}

// Least m >= 1 with 2^(-m+1) < eps.
long shift_depth(const Rational& eps) {
  long m = 1;
  while (Rational::pow2(-m + 1) >= eps) ++m;
  return m;
}

SensitivityWitness full_shift_witness(const EPWord& x, const Rational& eps) {
  const long m = shift_depth(eps);
  const Bits prefix = x.prefix(static_cast<std::size_t>(m));
  EPWord y = EPWord::canonicalize(prefix, {0});
  EPWord z = EPWord::canonicalize(prefix, {1});
  const auto k = static_cast<std::size_t>(m);
  auto separation = DistanceValue::exact(metric(y.shift_by(k), z.shift_by(k)));
  return SensitivityWitness{std::move(y), std::move(z), k, std::move(separation)};
}

SensitivityWitness tent_witness(const Rational& x, const Rational& eps) {
  // Least m >= 1 with 2^m eps >= 2: x's closed m-cylinder has width
  // 2^-m <= eps/2, and T^m maps it affinely onto [0, 1].
  long m = 1;
  while (Rational::pow2(m) * eps < Rational(2)) ++m;
  const auto k = static_cast<std::size_t>(m);
  const AffineBranch branch = tent_branch(tent_itinerary(x, k));
  Rational y = branch.preimage(Rational(0));
  Rational z = branch.preimage(Rational(3, 4));
  auto separation = DistanceValue::exact(abs(tent_iterate(y, k) - tent_iterate(z, k)));
  return SensitivityWitness{std::move(y), std::move(z), k, std::move(separation)};
}

SensitivityWitness logistic_witness(const AnglePoint& x, const Rational& eps) {
  // Dyadic angle cylinders of width 2^-m are stretched onto the whole circle
  // by m doublings; inside x's cylinder take the preimages of angles 0 and
  // 1/2, i.e. logistic states 0 and 1.
  long m = 1;
  while (pi_upper() * Rational::pow2(-m) >= eps) ++m;
  for (;; ++m) {
    const Rational cell = Rational::pow2(-m);
    const mpz_class j = floor(x.theta() / cell);
    AnglePoint y(Rational(j, mpz_class(1)) * cell);
    AnglePoint z(Rational(2 * j + 1, mpz_class(2)) * cell);
    if (!logistic_distance(x, y).certainly_less(eps) ||
        !logistic_distance(x, z).certainly_less(eps)) {
      continue;
    }
    const auto k = static_cast<std::size_t>(m);
    auto separation = logistic_distance(angle_iterate(y, k), angle_iterate(z, k));
    return SensitivityWitness{std::move(y), std::move(z), k, std::move(separation)};
  }
}

}  // namespace

const SystemHandle& SystemHandle::full_shift() {
  static const SystemHandle h{SystemId::kFullShift, Rational(2), Rational(2), Rational(1)};
  return h;
}

const SystemHandle& SystemHandle::tent() {
  static const SystemHandle h{SystemId::kTent, Rational(2), Rational(1), Rational(1, 2)};
  return h;
}

const SystemHandle& SystemHandle::logistic() {
  static const SystemHandle h{SystemId::kLogistic, Rational(4), Rational(1), Rational(1, 2)};
  return h;
}

const SystemHandle& SystemHandle::get(SystemId id) {
  switch (id) {
    case SystemId::kFullShift: return full_shift();
    case SystemId::kTent: return tent();
    case SystemId::kLogistic: return logistic();
  }
  throw InvalidInput("unknown system id");
}

const SystemHandle& SystemHandle::from_name(std::string_view name) {
  if (name == "full-shift") return full_shift();
  if (name == "tent") return tent();
  if (name == "logistic") return logistic();
  throw InvalidInput("unknown system '" + std::string(name) +
                     "' (expected full-shift, tent or logistic)");
}

std::string_view SystemHandle::name() const { return system_name(id); }

std::string_view system_name(SystemId id) {
  switch (id) {
    case SystemId::kFullShift: return "full-shift";
    case SystemId::kTent: return "tent";
    case SystemId::kLogistic: return "logistic";
  }
  return "unknown";
}

Point parse_point(const SystemHandle& sys, std::string_view text) {
  switch (sys.id) {
    case SystemId::kFullShift: return EPWord::parse(text);
    case SystemId::kTent: {
      Rational x = Rational::parse(text);
      if (x.sign() < 0 || x > Rational(1)) {
        throw DomainError("tent state " + x.str() + " outside [0, 1]");
      }
      return x;
    }
    case SystemId::kLogistic: return AnglePoint::parse(text);
  }
  throw InvalidInput("unknown system id");
}

std::string point_str(const Point& p) {
  return std::visit([](const auto& v) { return v.str(); }, p);
}

void require_point(const SystemHandle& sys, const Point& p) {
  bool ok = false;
  switch (sys.id) {
    case SystemId::kFullShift: ok = std::holds_alternative<EPWord>(p); break;
    case SystemId::kTent:
      ok = std::holds_alternative<Rational>(p);
      if (ok && (as_rational(p).sign() < 0 || as_rational(p) > Rational(1))) {
        throw DomainError("tent state " + as_rational(p).str() + " outside [0, 1]");
      }
      break;
    case SystemId::kLogistic: ok = std::holds_alternative<AnglePoint>(p); break;
  }
  if (!ok) {
    throw InvalidInput("point kind mismatch for system " + std::string(sys.name()));
  }
}

Point iterate(const SystemHandle& sys, const Point& p, std::size_t n) {
  require_point(sys, p);
  switch (sys.id) {
    case SystemId::kFullShift: return as_word(p).shift_by(n);
    case SystemId::kTent: return tent_iterate(as_rational(p), n);
    case SystemId::kLogistic: return angle_iterate(as_angle(p), n);
  }
  throw InvalidInput("unknown system id");
}

DistanceValue distance(const SystemHandle& sys, const Point& p, const Point& q) {
  require_point(sys, p);
  require_point(sys, q);
  switch (sys.id) {
    case SystemId::kFullShift: return DistanceValue::exact(metric(as_word(p), as_word(q)));
    case SystemId::kTent: return DistanceValue::exact(abs(as_rational(p) - as_rational(q)));
    case SystemId::kLogistic: return logistic_distance(as_angle(p), as_angle(q));
  }
  throw InvalidInput("unknown system id");
}

bool same_state(const SystemHandle& sys, const Point& p, const Point& q) {
  require_point(sys, p);
  require_point(sys, q);
  if (sys.id == SystemId::kLogistic) return same_logistic_state(as_angle(p), as_angle(q));
  return p == q;
}

std::optional<std::size_t> period_of(const SystemHandle& sys, const Point& p) {
  require_point(sys, p);
  switch (sys.id) {
    case SystemId::kFullShift: return period_of(as_word(p));
    case SystemId::kTent: return tent_period(as_rational(p));
    case SystemId::kLogistic: return logistic_period(as_angle(p));
  }
  return std::nullopt;
}

Point nearest_periodic(const SystemHandle& sys, const Point& x, const Rational& eps) {
  require_point(sys, x);
  if (eps.sign() <= 0) throw InvalidInput("eps must be positive");
  Point p;
  switch (sys.id) {
    case SystemId::kFullShift:
      p = truncate_to_periodic(as_word(x), static_cast<std::size_t>(shift_depth(eps)));
      break;
    case SystemId::kTent: p = nearest_tent_periodic(as_rational(x), eps); break;
    case SystemId::kLogistic: p = nearest_logistic_periodic(as_angle(x), eps); break;
  }
  if (!distance(sys, x, p).certainly_less(eps)) {
    throw VerificationFailure("periodic approximation outside the requested radius");
  }
  return p;
}

SensitivityWitness sensitivity_witness(const SystemHandle& sys, const Point& x,
                                       const Rational& eps, const Rational& delta) {
  require_point(sys, x);
  require_delta(sys, delta);
  if (eps.sign() <= 0) throw InvalidInput("eps must be positive");

  SensitivityWitness w;
  switch (sys.id) {
    case SystemId::kFullShift: w = full_shift_witness(as_word(x), eps); break;
    case SystemId::kTent: w = tent_witness(as_rational(x), eps); break;
    case SystemId::kLogistic: w = logistic_witness(as_angle(x), eps); break;
  }
  if (!distance(sys, x, w.y).certainly_less(eps) || !distance(sys, x, w.z).certainly_less(eps) ||
      !w.separation.certainly_greater(delta)) {
    throw VerificationFailure("sensitivity witness failed its own check");
  }
  return w;
}

}  // namespace chaoslab
