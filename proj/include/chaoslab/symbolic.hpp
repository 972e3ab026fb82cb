#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chaoslab/rational.hpp"

namespace chaoslab {

using Bits = std::vector<std::uint8_t>;

// Eventually periodic one-sided binary string: preperiod followed by the
// cycle repeated forever. Always held in canonical form:
//   - the cycle is primitive (not a power of a shorter word);
//   - the last preperiod bit differs from the last cycle bit.
// Two words denote the same string iff their canonical forms are identical,
// so equality is structural.
class EPWord {
 public:
  // 0^inf
  EPWord() : cycle_{0} {}

  // Throws InvalidInput if `cycle` is empty or any entry is not 0/1.
  static EPWord canonicalize(Bits preperiod, Bits cycle);
  static EPWord periodic(Bits cycle) { return canonicalize({}, std::move(cycle)); }
  static EPWord zeros() { return EPWord(); }
  static EPWord ones() { return periodic({1}); }

  // "pre:cycle", e.g. "0001:01" or ":0".
  static EPWord parse(std::string_view text);
  std::string str() const;

  const Bits& preperiod() const { return pre_; }
  const Bits& cycle() const { return cycle_; }

  std::uint8_t bit(std::size_t i) const;
  Bits prefix(std::size_t n) const;

  EPWord shift() const { return shift_by(1); }
  EPWord shift_by(std::size_t n) const;

  friend bool operator==(const EPWord&, const EPWord&) = default;

 private:
  Bits pre_;
  Bits cycle_;
};

// d(a,b) = sum_i D(a_i, b_i) / 2^i, exact.
Rational metric(const EPWord& a, const EPWord& b);

// The purely periodic word repeating w's first n bits. Requires n >= 1.
EPWord truncate_to_periodic(const EPWord& w, std::size_t n);

// Least period when w is purely periodic, otherwise nullopt.
std::optional<std::size_t> period_of(const EPWord& w);

}  // namespace chaoslab
