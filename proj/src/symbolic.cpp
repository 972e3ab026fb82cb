#include "chaoslab/symbolic.hpp"

#include <algorithm>
#include <numeric>

#include "chaoslab/errors.hpp"

namespace chaoslab {

namespace {

// Smallest d dividing |w| with w == (w[0..d))^(|w|/d).
std::size_t primitive_length(const Bits& w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = (w[i] == w[i - d]);
    if (ok) return d;
  }
  return n;
}

void check_bits(const Bits& bits) {
  for (auto b : bits) {
    if (b > 1) throw InvalidInput("bit value must be 0 or 1");
  }
}

Bits parse_bits(std::string_view s) {
  Bits out;
  out.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') {
      throw InvalidInput("malformed shift point: expected bits, got '" + std::string(1, c) + "'");
    }
    out.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return out;
}

}  // namespace

EPWord EPWord::canonicalize(Bits preperiod, Bits cycle) {
  if (cycle.empty()) throw InvalidInput("cycle must be nonempty");
  check_bits(preperiod);
  check_bits(cycle);

  cycle.resize(primitive_length(cycle));
  // Trailing preperiod bits equal to the cycle's last bit fold into the cycle
  // by rotating it right.
  while (!preperiod.empty() && preperiod.back() == cycle.back()) {
    preperiod.pop_back();
    std::rotate(cycle.rbegin(), cycle.rbegin() + 1, cycle.rend());
  }

  EPWord w;
  w.pre_ = std::move(preperiod);
  w.cycle_ = std::move(cycle);
  return w;
}

EPWord EPWord::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || text.find(':', colon + 1) != std::string_view::npos) {
    throw InvalidInput("malformed shift point '" + std::string(text) + "': expected pre:cycle");
  }
  Bits cycle = parse_bits(text.substr(colon + 1));
  if (cycle.empty()) {
    throw InvalidInput("malformed shift point '" + std::string(text) + "': empty cycle");
  }
  return canonicalize(parse_bits(text.substr(0, colon)), std::move(cycle));
}

std::string EPWord::str() const {
  std::string s;
  s.reserve(pre_.size() + cycle_.size() + 1);
  for (auto b : pre_) s.push_back(static_cast<char>('0' + b));
  s.push_back(':');
  for (auto b : cycle_) s.push_back(static_cast<char>('0' + b));
  return s;
}

std::uint8_t EPWord::bit(std::size_t i) const {
  if (i < pre_.size()) return pre_[i];
  return cycle_[(i - pre_.size()) % cycle_.size()];
}

Bits EPWord::prefix(std::size_t n) const {
  Bits out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = bit(i);
  return out;
}

EPWord EPWord::shift_by(std::size_t n) const {
  EPWord w;
  if (n <= pre_.size()) {
    w.pre_.assign(pre_.begin() + static_cast<std::ptrdiff_t>(n), pre_.end());
    w.cycle_ = cycle_;
    return w;
  }
  // Any rotation of a primitive cycle is primitive; the preperiod is empty.
  const std::size_t r = (n - pre_.size()) % cycle_.size();
  w.cycle_ = cycle_;
  std::rotate(w.cycle_.begin(), w.cycle_.begin() + static_cast<std::ptrdiff_t>(r), w.cycle_.end());
  return w;
}

Rational metric(const EPWord& a, const EPWord& b) {
  // Head: bits 0..P-1 where P covers both preperiods. Tail: one aligned
  // common cycle of length C = lcm of the cycle lengths, summed as a
  // geometric series.
  //   d = head + tail_block * 2^C / (2^C - 1)
  // with head = H / 2^P and tail_block = T / 2^(P+C-1), so
  //   d = (H (2^C - 1) + 2 T) / (2^P (2^C - 1)).
  const std::size_t p = std::max(a.preperiod().size(), b.preperiod().size());
  const std::size_t c = std::lcm(a.cycle().size(), b.cycle().size());

  mpz_class head = 0;
  for (std::size_t i = 0; i < p; ++i) {
    if (a.bit(i) != b.bit(i)) mpz_setbit(head.get_mpz_t(), p - i);
  }
  mpz_class tail = 0;
  for (std::size_t j = 0; j < c; ++j) {
    if (a.bit(p + j) != b.bit(p + j)) mpz_setbit(tail.get_mpz_t(), c - 1 - j);
  }
  mpz_class cycle_den = 0;
  mpz_setbit(cycle_den.get_mpz_t(), c);
  cycle_den -= 1;
  mpz_class head_den = 0;
  mpz_setbit(head_den.get_mpz_t(), p);

  return Rational(head * cycle_den + 2 * tail, head_den * cycle_den);
}

EPWord truncate_to_periodic(const EPWord& w, std::size_t n) {
  if (n == 0) throw InvalidInput("truncation length must be >= 1");
  return EPWord::periodic(w.prefix(n));
}

std::optional<std::size_t> period_of(const EPWord& w) {
  if (!w.preperiod().empty()) return std::nullopt;
  return w.cycle().size();
}

}  // namespace chaoslab
