#pragma once

#include <chanorder/channel.hpp>

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

namespace chanorder {

// splitmix64: tiny, fully specified, identical on every platform. The
// <random> distributions are implementation-defined, which would break
// byte-identical reproduction of the seeded suites.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform-ish in [0, bound); modulo bias is irrelevant for test data.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

// p/q with q in [1, max_den] and p in [0, q]; lands in [0, 1].
inline Rational random_unit_rational(SplitMix64& gen, std::uint64_t max_den = 8) {
  const std::uint64_t q = 1 + gen.below(max_den);
  const std::uint64_t p = gen.below(q + 1);
  return Rational(p) / Rational(q);
}

// p/q with |p| <= span * q; lands in [-span, span].
inline Rational random_signed_rational(SplitMix64& gen, std::uint64_t span = 3,
                                       std::uint64_t max_den = 4) {
  const std::uint64_t q = 1 + gen.below(max_den);
  const std::int64_t bound = static_cast<std::int64_t>(span * q);
  const std::int64_t p = static_cast<std::int64_t>(gen.below(2 * span * q + 1)) - bound;
  return Rational(p) / Rational(q);
}

// Columns are independently drawn probability vectors with single-digit
// numerators, normalized exactly by their sum.
inline RMatrix random_column_stochastic(SplitMix64& gen, std::size_t rows, std::size_t cols) {
  RMatrix out(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<std::uint64_t> raw(rows);
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < rows; ++i) sum += raw[i] = gen.below(10);
    if (sum == 0) {
      raw[gen.below(rows)] = 1;
      sum = 1;
    }
    for (std::size_t i = 0; i < rows; ++i) out(i, j) = Rational(raw[i]) / Rational(sum);
  }
  return out;
}

inline Channel random_channel(SplitMix64& gen, std::size_t outputs, std::size_t inputs) {
  return Channel(random_column_stochastic(gen, outputs, inputs));
}

// 2x2 channel whose entries have denominator <= max_den; handy when an
// oracle scans a bounded-denominator grid.
inline Channel random_channel_2x2(SplitMix64& gen, std::uint64_t max_den = 8) {
  RMatrix m(2, 2);
  for (std::size_t j = 0; j < 2; ++j) {
    const Rational top = random_unit_rational(gen, max_den);
    m(0, j) = top;
    m(1, j) = Rational(1) - top;
  }
  return Channel(m);
}

inline UtilityMatrix random_utility(SplitMix64& gen, std::size_t inputs, std::size_t actions) {
  RMatrix m(inputs, actions);
  for (std::size_t i = 0; i < inputs; ++i) {
    for (std::size_t j = 0; j < actions; ++j) m(i, j) = random_signed_rational(gen);
  }
  return UtilityMatrix(m);
}

inline InputDistribution random_distribution(SplitMix64& gen, std::size_t n) {
  std::vector<std::uint64_t> raw(n);
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < n; ++i) sum += raw[i] = 1 + gen.below(9);
  std::vector<Rational> weights(n);
  for (std::size_t i = 0; i < n; ++i) weights[i] = Rational(raw[i]) / Rational(sum);
  return InputDistribution(std::move(weights));
}

inline RMatrix random_permutation_matrix(SplitMix64& gen, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = n; i-- > 1;) {
    std::size_t j = gen.below(i + 1);
    std::swap(perm[i], perm[j]);
  }
  RMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = 1;
  return p;
}

// Random convex combination of permutation matrices: a doubly stochastic
// matrix by Birkhoff's theorem.
inline RMatrix random_birkhoff_mixture(SplitMix64& gen, std::size_t n, std::size_t terms = 3) {
  std::vector<std::uint64_t> raw(terms);
  std::uint64_t sum = 0;
  for (std::size_t t = 0; t < terms; ++t) sum += raw[t] = 1 + gen.below(9);
  RMatrix out(n, n);
  for (std::size_t t = 0; t < terms; ++t) {
    out = out + random_permutation_matrix(gen, n).scaled(Rational(raw[t]) / Rational(sum));
  }
  return out;
}

}  // namespace chanorder
