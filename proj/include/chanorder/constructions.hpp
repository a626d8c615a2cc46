#pragma once

#include <chanorder/channel.hpp>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chanorder {

// Block embedding of an (m-1) x k channel into an m x n channel with
// n = 2^(m-2) + 1 and k = 2^(m-3) + 1: the first k columns carry z padded
// with a zero last entry, the remaining columns are the last coordinate
// vector. Garblings transport through this embedding blockwise.
inline Channel embed_channel(const Channel& z, std::size_t m) {
  if (m < 3) throw std::invalid_argument("embedding requires at least 3 output letters");
  const std::size_t k = (std::size_t{1} << (m - 3)) + 1;
  const std::size_t n = (std::size_t{1} << (m - 2)) + 1;
  if (z.outputs() != m - 1 || z.inputs() != k) {
    throw std::invalid_argument("inner channel must be " + std::to_string(m - 1) + "x" +
                                std::to_string(k) + " for an embedding into " +
                                std::to_string(m) + " outputs");
  }
  RMatrix out(m, n);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) out(i, j) = z.matrix()(i, j);
  }
  for (std::size_t j = k; j < n; ++j) out(m - 1, j) = 1;
  return Channel(std::move(out));
}

enum class OrderingDirection { FirstLeq, FirstGeq };

// A row permutation that moves k rows agreeing on the order of their first
// two entries to the top. permutation * u satisfies the stated direction on
// its first k rows.
struct OrderingReport {
  bool satisfied = false;
  OrderingDirection direction = OrderingDirection::FirstLeq;
  RMatrix permutation;
};

// Among n = 2k - 1 rows at least k share a direction between columns 1 and
// 2 (each row satisfies <= or >=, so one side reaches k). Deterministic
// choice: prefer the <= direction and keep rows in their original order.
inline OrderingReport ordering_normalize(const UtilityMatrix& u, std::size_t k) {
  const std::size_t n = u.inputs();
  if (u.actions() < 2) throw std::invalid_argument("ordering requires at least two actions");
  if (k == 0 || k > n) throw std::invalid_argument("row quota out of range");
  std::vector<std::size_t> leq_rows;
  std::vector<std::size_t> geq_rows;
  for (std::size_t i = 0; i < n; ++i) {
    if (u.matrix()(i, 0) <= u.matrix()(i, 1)) leq_rows.push_back(i);
    if (u.matrix()(i, 0) >= u.matrix()(i, 1)) geq_rows.push_back(i);
  }
  const bool use_leq = leq_rows.size() >= k;
  if (!use_leq && geq_rows.size() < k) {
    // Impossible when n >= 2k - 1; reachable only for inconsistent k.
    return OrderingReport{false, OrderingDirection::FirstLeq, RMatrix::identity(n)};
  }
  const std::vector<std::size_t>& chosen = use_leq ? leq_rows : geq_rows;

  std::vector<bool> on_top(n, false);
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t t = 0; t < k; ++t) {
    order.push_back(chosen[t]);
    on_top[chosen[t]] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!on_top[i]) order.push_back(i);
  }
  RMatrix permutation(n, n);
  for (std::size_t i = 0; i < n; ++i) permutation(i, order[i]) = 1;
  return OrderingReport{true,
                        use_leq ? OrderingDirection::FirstLeq : OrderingDirection::FirstGeq,
                        std::move(permutation)};
}

struct ReducedUtility {
  UtilityMatrix utility;  // k x (m-1): first column is the merged max column
  Rational tail;          // max over actions of the summed dropped rows
};

// Merges the first two utility columns by row-wise max over the first k rows
// and drops the remaining rows into the constant `tail`. Requires the
// ordering condition on the first k rows, which makes the merge lossless:
// max_A tr(embed(z) u A) = max_B tr(z ubar B) + tail for every inner z.
inline ReducedUtility reduce_utility(const UtilityMatrix& u, std::size_t k,
                                     OrderingDirection direction) {
  const std::size_t n = u.inputs();
  const std::size_t m = u.actions();
  if (m < 2) throw std::invalid_argument("reduction requires at least two actions");
  if (k == 0 || k > n) throw std::invalid_argument("row quota out of range");
  for (std::size_t i = 0; i < k; ++i) {
    const bool ok = direction == OrderingDirection::FirstLeq
                        ? u.matrix()(i, 0) <= u.matrix()(i, 1)
                        : u.matrix()(i, 0) >= u.matrix()(i, 1);
    if (!ok) throw std::invalid_argument("ordering condition violated in row " + std::to_string(i));
  }
  RMatrix reduced(k, m - 1);
  for (std::size_t i = 0; i < k; ++i) {
    reduced(i, 0) = std::max(u.matrix()(i, 0), u.matrix()(i, 1));
    for (std::size_t j = 2; j < m; ++j) reduced(i, j - 1) = u.matrix()(i, j);
  }
  Rational tail = 0;
  for (std::size_t j = 0; j < m; ++j) {
    Rational column = 0;
    for (std::size_t i = k; i < n; ++i) column += u.matrix()(i, j);
    if (j == 0 || column > tail) tail = column;
  }
  return ReducedUtility{UtilityMatrix(std::move(reduced)), std::move(tail)};
}

// The mutual-garbling counterexample family: two channels that are Shannon
// garblings of each other (post identity, pre swap) yet separate under the
// antidiagonal utility [[0, eps1], [eps2, 0]] whenever eps1 * eps2 > 0 and
// eps1 != eps2.
struct MutualGarblingFamily {
  Channel c1;
  Channel c2;
  UtilityMatrix utility;
  Rational value1;  // maximal expected utility of c1 under the utility
  Rational value2;  // same for c2
};

inline MutualGarblingFamily mutual_garbling_family(const Rational& eps1, const Rational& eps2) {
  if (eps1 * eps2 <= 0 || eps1 == eps2) {
    throw std::invalid_argument("family requires eps1 * eps2 > 0 and eps1 != eps2");
  }
  Channel c1(rmx({{"1", "1/2"}, {"0", "1/2"}}));
  Channel c2(rmx({{"1/2", "1"}, {"1/2", "0"}}));
  RMatrix u(2, 2);
  u(0, 1) = eps1;
  u(1, 0) = eps2;

  Rational v1;
  Rational v2;
  const Rational zero(0);
  if (eps1 > eps2 && eps2 > 0) {
    const Rational overshoot = eps2 / 2 - eps1 / 4;
    v1 = eps1 / 2 + eps2 / 4;
    v2 = eps1 / 2 + std::max(zero, overshoot);
  } else if (eps2 > eps1 && eps1 > 0) {
    const Rational overshoot = eps2 / 4 - eps1 / 2;
    v1 = eps1 / 2 + eps2 / 4 + std::max(zero, overshoot);
    v2 = eps2 / 2 + eps1 / 4;
  } else {
    // Negative branch: both maxima follow from the G = C Pi U row maxima at
    // the uniform alphabet.
    const Rational q1 = eps2 / 4;
    const Rational q2 = eps1 / 2;
    const Rational q3 = eps2 / 2;
    const Rational q4 = eps1 / 4;
    v1 = std::max(q1, q2) + std::max(q1, zero);
    v2 = std::max(q3, q4) + std::max(q4, zero);
  }
  return MutualGarblingFamily{std::move(c1), std::move(c2), UtilityMatrix(std::move(u)),
                              std::move(v1), std::move(v2)};
}

// Rescales a utility meant for the distribution pibar into one that yields
// the same maximal expected utility under the uniform distribution:
// n * diag(pibar) * ubar.
inline UtilityMatrix pi_rescale(const UtilityMatrix& ubar, const InputDistribution& pibar,
                                std::size_t n) {
  if (pibar.size() != n || ubar.inputs() != n) {
    throw std::invalid_argument("rescaling dimensions are inconsistent");
  }
  RMatrix out = ubar.matrix();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < out.cols(); ++i) out(j, i) *= Rational(n) * pibar.weights()[j];
  }
  return UtilityMatrix(std::move(out));
}

}  // namespace chanorder
