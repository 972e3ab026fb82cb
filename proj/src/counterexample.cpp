#include "chaoslab/counterexample.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "chaoslab/errors.hpp"

namespace chaoslab {

namespace {

struct SampleResult {
  std::size_t bound = 0;
  bool bound_matches = false;
  bool zero_after_bound = false;
  bool sensitivity_ok = false;
  std::vector<std::string> periodic;
};

bool witness_ok(const AWord& center, const Rational& eps, const Rational& delta) {
  try {
    const SensitivityWitness w = a_sensitivity_witness(center, eps, delta);
    const auto& y = std::get<EPWord>(w.y);
    const auto& z = std::get<EPWord>(w.z);
    const EPWord x = center.word();
    const Rational sep = metric(y.shift_by(w.k), z.shift_by(w.k));
    return is_in_A(y) && is_in_A(z) && metric(x, y) < eps && metric(x, z) < eps &&
           sep >= Rational(1) && sep > delta;
  } catch (const std::exception&) {
    return false;
  }
}

SampleResult run_sample(std::uint64_t seed, std::size_t index, const Rational& delta) {
  auto gen = stream_for(seed, index);
  const AWord y = random_aword(gen);
  const AWord z = random_aword(gen);
  const Rational eps = Rational::pow2(-static_cast<long>(uniform_in(gen, 1, 20)));

  SampleResult r;
  r.sensitivity_ok = witness_ok(y, eps, delta) && witness_ok(z, eps, delta);

  const SeparationBound sb = separation_bound(y, z);
  r.bound = sb.bound;
  const EPWord wy = y.word();
  const EPWord wz = z.word();
  std::size_t last_nonzero_plus_one = 0;
  bool zero_after = true;
  for (std::size_t n = 0; n <= sb.bound + 8; ++n) {
    const bool nonzero = metric(wy.shift_by(n), wz.shift_by(n)).sign() != 0;
    if (nonzero) last_nonzero_plus_one = n + 1;
    if (nonzero && n >= sb.bound) zero_after = false;
  }
  const bool lengths_differ = y.support().size() != z.support().size();
  r.bound_matches = last_nonzero_plus_one == sb.least && sb.least <= sb.bound &&
                    (!lengths_differ || sb.least == sb.bound);
  r.zero_after_bound = zero_after;

  for (const EPWord* w : {&wy, &wz}) {
    if (period_of(*w)) r.periodic.push_back(w->str());
  }
  return r;
}

}  // namespace

AWord AWord::from_support(Bits support) {
  for (auto b : support) {
    if (b > 1) throw InvalidInput("bit value must be 0 or 1");
  }
  while (!support.empty() && support.back() == 0) support.pop_back();
  AWord a;
  a.support_ = std::move(support);
  return a;
}

AWord AWord::from_word(const EPWord& w) {
  if (!is_in_A(w)) throw InvalidInput("word " + w.str() + " is not eventually zero");
  return from_support(w.preperiod());
}

bool is_in_A(const EPWord& w) { return w.cycle() == Bits{0}; }

SeparationBound separation_bound(const AWord& y, const AWord& z) {
  const auto& a = y.support();
  const auto& b = z.support();
  SeparationBound out;
  out.bound = std::max(a.size(), b.size());
  for (std::size_t i = out.bound; i-- > 0;) {
    const auto ai = i < a.size() ? a[i] : 0;
    const auto bi = i < b.size() ? b[i] : 0;
    if (ai != bi) {
      out.least = i + 1;
      break;
    }
  }
  return out;
}

SensitivityWitness a_sensitivity_witness(const AWord& x, const Rational& eps,
                                         const Rational& delta) {
  if (eps.sign() <= 0) throw InvalidInput("eps must be positive");
  if (delta.sign() <= 0) throw InvalidInput("delta must be positive");
  if (delta >= Rational(1)) {
    throw UnsupportedDelta("delta " + delta.str() + " not below 1 for the eventually-zero shift");
  }
  long m = 1;
  while (Rational::pow2(-m + 1) >= eps) ++m;
  const auto k = static_cast<std::size_t>(m);

  const EPWord xw = x.word();
  Bits head = xw.prefix(k);
  EPWord y = EPWord::canonicalize(head, {0});
  head.push_back(1);
  EPWord z = EPWord::canonicalize(std::move(head), {0});
  auto separation = DistanceValue::exact(metric(y.shift_by(k), z.shift_by(k)));
  return SensitivityWitness{std::move(y), std::move(z), k, std::move(separation)};
}

AWord random_aword(std::mt19937_64& gen, std::size_t max_len) {
  const auto len = static_cast<std::size_t>(uniform_upto(gen, max_len));
  Bits bits(len);
  for (auto& b : bits) b = static_cast<std::uint8_t>(uniform_upto(gen, 1));
  return AWord::from_support(std::move(bits));
}

AReport a_report(std::size_t samples, std::uint64_t seed, const Rational& delta,
                 std::size_t threads) {
  if (samples < 1) throw InvalidInput("samples must be >= 1");
  if (delta.sign() <= 0 || delta >= Rational(1)) {
    throw UnsupportedDelta("delta must lie in (0, 1) for the eventually-zero shift");
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, samples);

  std::vector<SampleResult> results(samples);
  auto work = [&](std::size_t worker) {
    for (std::size_t i = worker; i < samples; i += threads) results[i] = run_sample(seed, i, delta);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }

  AReport report;
  report.delta = delta;
  report.samples = samples;
  report.seed = seed;
  report.all_bounds_finite = true;
  std::set<std::string> periodic;
  for (const auto& r : results) {
    report.max_bound = std::max(report.max_bound, r.bound);
    if (!r.sensitivity_ok) ++report.sensitivity_failures;
    if (!r.bound_matches) ++report.bound_mismatches;
    if (!r.zero_after_bound) report.all_bounds_finite = false;
    periodic.insert(r.periodic.begin(), r.periodic.end());
  }
  report.periodic_in_A.assign(periodic.begin(), periodic.end());
  return report;
}

}  // namespace chaoslab
