#pragma once

// Random generators and brute-force oracles shared by the test suites. The
// oracles deliberately avoid the library's closed forms.

#include <cstdint>
#include <random>

#include "chaoslab/interval_maps.hpp"
#include "chaoslab/random.hpp"
#include "chaoslab/rational.hpp"
#include "chaoslab/symbolic.hpp"

namespace chaoslab::test_support {

inline Bits random_bits(std::mt19937_64& gen, std::size_t min_len, std::size_t max_len) {
  Bits bits(uniform_in(gen, min_len, max_len));
  for (auto& b : bits) b = static_cast<std::uint8_t>(uniform_upto(gen, 1));
  return bits;
}

inline EPWord random_word(std::mt19937_64& gen, std::size_t max_pre = 16,
                          std::size_t max_cycle = 8) {
  Bits pre = random_bits(gen, 0, max_pre);
  Bits cycle = random_bits(gen, 1, max_cycle);
  return EPWord::canonicalize(std::move(pre), std::move(cycle));
}

// Uniform-ish rational in [0, 1] with denominator up to max_den.
inline Rational random_unit_rational(std::mt19937_64& gen, std::uint64_t max_den = 1000000) {
  const auto den = static_cast<long>(uniform_in(gen, 1, max_den));
  const auto num = static_cast<long>(uniform_upto(gen, static_cast<std::uint64_t>(den)));
  return Rational(num, den);
}

inline AnglePoint random_angle(std::mt19937_64& gen, std::uint64_t max_den = 1000000) {
  const auto den = static_cast<long>(uniform_in(gen, 1, max_den));
  const auto num = static_cast<long>(uniform_upto(gen, static_cast<std::uint64_t>(den - 1)));
  return AnglePoint(Rational(num, den));
}

// Random radius in [2^-max_exp, 1/2]: N / 2^20 with N in [2^(20-max_exp), 2^19].
inline Rational random_radius(std::mt19937_64& gen, int max_exp) {
  const auto lo = std::uint64_t{1} << (20 - max_exp);
  const auto n = static_cast<long>(uniform_in(gen, lo, std::uint64_t{1} << 19));
  return Rational(n, 1L << 20);
}

// sum_{i < terms} D(a_i, b_i) / 2^i; the true metric lies within 2^(-terms+1).
inline Rational metric_partial_sum(const EPWord& a, const EPWord& b, std::size_t terms) {
  Rational s(0);
  for (std::size_t i = 0; i < terms; ++i) {
    if (a.bit(i) != b.bit(i)) s += Rational::pow2(-static_cast<long>(i));
  }
  return s;
}

inline Rational tent_by_steps(Rational x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x = tent_step(x);
  return x;
}

inline Rational angle_by_steps(Rational theta, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    theta = theta * Rational(2);
    if (theta >= Rational(1)) theta -= Rational(1);
  }
  return theta;
}

// Number of roots of T^n(x) - x on [0, 1] by sign changes on a uniform grid
// of 2^(n+2) cells plus exact zeros at grid nodes.
inline std::size_t tent_root_count_on_grid(std::size_t n) {
  const long cells = 1L << (n + 2);
  std::size_t roots = 0;
  int prev_sign = 0;
  for (long j = 0; j <= cells; ++j) {
    const Rational x(j, cells);
    const int s = (tent_by_steps(x, n) - x).sign();
    if (s == 0) {
      ++roots;
    } else if (prev_sign != 0 && s != prev_sign) {
      ++roots;
    }
    prev_sign = s;
  }
  return roots;
}

}  // namespace chaoslab::test_support
