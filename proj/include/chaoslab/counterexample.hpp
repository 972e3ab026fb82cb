#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "chaoslab/random.hpp"
#include "chaoslab/rational.hpp"
#include "chaoslab/symbolic.hpp"
#include "chaoslab/system.hpp"

namespace chaoslab {

// A point of the subshift A of eventually-zero strings: support followed by
// 0^inf. The support never ends in 0.
class AWord {
 public:
  AWord() = default;
  static AWord from_support(Bits support);
  // InvalidInput unless w is eventually zero.
  static AWord from_word(const EPWord& w);

  const Bits& support() const { return support_; }
  EPWord word() const { return EPWord::canonicalize(support_, {0}); }

  friend bool operator==(const AWord&, const AWord&) = default;

 private:
  Bits support_;
};

bool is_in_A(const EPWord& w);

struct SeparationBound {
  // max(|support(y)|, |support(z)|): S^n y = S^n z = 0^inf for every n >= bound.
  std::size_t bound = 0;
  // Least n0 with d(S^n y, S^n z) = 0 for all n >= n0. Equals `bound`
  // whenever the supports have different lengths.
  std::size_t least = 0;
};

SeparationBound separation_bound(const AWord& y, const AWord& z);

// Both outputs lie in A and in B_eps(x); d(S^k y, S^k z) = 1. Requires
// 0 < delta < 1 (UnsupportedDelta otherwise) and eps > 0.
SensitivityWitness a_sensitivity_witness(const AWord& x, const Rational& eps,
                                         const Rational& delta);

inline const Rational& certified_delta_A() {
  static const Rational d(1, 2);
  return d;
}

struct AReport {
  Rational delta;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  bool all_bounds_finite = false;
  std::size_t max_bound = 0;
  std::size_t sensitivity_failures = 0;
  std::size_t bound_mismatches = 0;
  std::vector<std::string> periodic_in_A;  // sorted, unique encodings

  bool sensitive() const { return sensitivity_failures == 0; }
  bool asymptotically_sensitive() const { return !all_bounds_finite; }
};

// Random AWord with support length uniform in [0, max_len] and uniform bits.
AWord random_aword(std::mt19937_64& gen, std::size_t max_len = 64);

// Samples `samples` pairs from A and checks, per pair: the sensitivity
// construction around both points; separation_bound against a brute-force
// scan of d(S^n y, S^n z) for n = 0..bound+8; and which sampled points are
// periodic. `threads` = 0 picks the hardware concurrency.
AReport a_report(std::size_t samples, std::uint64_t seed, const Rational& delta,
                 std::size_t threads = 1);

}  // namespace chaoslab
