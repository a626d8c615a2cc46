#pragma once

#include <chanorder/constructions.hpp>
#include <chanorder/report.hpp>
#include <chanorder/rng.hpp>
#include <chanorder/values.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace chanorder {

enum class UtilityClassTag { Indifferent, Exact, Oblivious, DoublyStochasticMultiple };

// Every class the matrix belongs to. Exact matrices (positive multiples of a
// permutation) are by definition also oblivious and doubly-stochastic
// multiples; the recognizers preserve that containment.
inline std::set<UtilityClassTag> classify(const UtilityMatrix& u) {
  const RMatrix& m = u.matrix();
  std::set<UtilityClassTag> tags;

  bool indifferent = true;
  for (std::size_t j = 1; j < m.cols() && indifferent; ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (m(i, j) != m(i, 0)) {
        indifferent = false;
        break;
      }
    }
  }
  if (indifferent) tags.insert(UtilityClassTag::Indifferent);

  // oblivious: alpha * (coordinate-vector columns) with alpha > 0, i.e.
  // exactly one nonzero per column and all nonzeros equal and positive.
  bool oblivious = true;
  Rational alpha = 0;
  for (std::size_t j = 0; j < m.cols() && oblivious; ++j) {
    std::size_t nonzeros = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (m(i, j) == 0) continue;
      ++nonzeros;
      if (alpha == 0) {
        alpha = m(i, j);
      } else if (m(i, j) != alpha) {
        oblivious = false;
      }
    }
    if (nonzeros != 1) oblivious = false;
  }
  oblivious = oblivious && alpha > 0;
  if (oblivious) tags.insert(UtilityClassTag::Oblivious);

  if (m.rows() == m.cols()) {
    if (oblivious) {
      bool rows_covered = true;
      for (std::size_t i = 0; i < m.rows() && rows_covered; ++i) {
        std::size_t nonzeros = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
          if (m(i, j) != 0) ++nonzeros;
        }
        if (nonzeros != 1) rows_covered = false;
      }
      if (rows_covered) tags.insert(UtilityClassTag::Exact);
    }

    bool nonneg = true;
    for (const Rational& e : m.entries()) {
      if (e < 0) {
        nonneg = false;
        break;
      }
    }
    if (nonneg) {
      const Rational total = m.column_sum(0);
      bool doubly = total > 0;
      for (std::size_t j = 1; j < m.cols() && doubly; ++j) {
        if (m.column_sum(j) != total) doubly = false;
      }
      for (std::size_t i = 0; i < m.rows() && doubly; ++i) {
        Rational row_sum = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) row_sum += m(i, j);
        if (row_sum != total) doubly = false;
      }
      if (doubly) tags.insert(UtilityClassTag::DoublyStochasticMultiple);
    }
  }
  return tags;
}

// Sum of row maxima of the channel matrix. Under a uniform input alphabet,
// every utility alpha * P (P a permutation) scores the channel as
// (alpha / n) times this number, independent of P — so comparing scores
// decides dominance over the whole exact class.
inline Rational exact_class_score(const Channel& c) {
  Rational score = 0;
  for (std::size_t i = 0; i < c.outputs(); ++i) {
    Rational best = c.matrix()(i, 0);
    for (std::size_t j = 1; j < c.inputs(); ++j) {
      if (c.matrix()(i, j) > best) best = c.matrix()(i, j);
    }
    score += best;
  }
  return score;
}

// All n! permutation matrices, lexicographic in the underlying permutation.
inline std::vector<RMatrix> all_permutation_matrices(std::size_t n,
                                                     std::size_t max_dim = kDefaultMaxEnum) {
  if (n > max_dim) {
    throw enumeration_limit_error("permutation enumeration of size " + std::to_string(n) +
                                  " exceeds the configured limit of " + std::to_string(max_dim));
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<RMatrix> out;
  do {
    RMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = 1;
    out.push_back(std::move(p));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

enum class DominanceAnswer { Dominates, DominatedStrictlyAt, Unknown };

struct ReducedComparison {
  DominanceAnswer answer = DominanceAnswer::Unknown;
  std::optional<UtilityMatrix> witness;  // set for DominatedStrictlyAt
  Rational value_left = 0;               // value of c under the witness
  Rational value_right = 0;              // value of cbar under the witness
};

namespace detail {

// Value of c under utility u at distribution pi, routed through the
// uniform-distribution rescaling when pi is not uniform (the closed-form
// class arguments are stated for uniform alphabets).
inline Rational class_value(const Channel& c, const UtilityMatrix& u,
                            const InputDistribution& pi) {
  if (pi.is_uniform()) return blackwell_value(c, u, pi);
  const UtilityMatrix rescaled = pi_rescale(u, pi, pi.size());
  return blackwell_value(c, rescaled, InputDistribution::uniform(pi.size()));
}

inline std::optional<ReducedComparison> refute_with(const Channel& c, const Channel& cbar,
                                                    const UtilityMatrix& u,
                                                    const InputDistribution& pi) {
  Rational left = class_value(c, u, pi);
  Rational right = class_value(cbar, u, pi);
  if (left < right) {
    return ReducedComparison{DominanceAnswer::DominatedStrictlyAt, u, std::move(left),
                             std::move(right)};
  }
  return std::nullopt;
}

}  // namespace detail

// Reduced dominance of c over cbar with respect to one utility class.
//   Indifferent: always dominates (values are channel-independent).
//   Exact: complete — score comparison under a uniform alphabet, full
//     permutation sweep otherwise. Positive scaling preserves every
//     inequality, so alpha = 1 witnesses suffice.
//   Oblivious: complete — sweep of all n^m coordinate-column utilities.
//   DoublyStochasticMultiple: sound refutation only — permutations, their
//     pairwise midpoints, and seeded random Birkhoff mixtures are probed;
//     no violation yields Unknown, never Dominates.
inline ReducedComparison compare_reduced(const Channel& c, const Channel& cbar,
                                         UtilityClassTag cls, const InputDistribution& pi,
                                         std::size_t max_enum = kDefaultMaxEnum,
                                         std::size_t random_probes = 64,
                                         std::uint64_t probe_seed = 0x715d7a1e0f8ull) {
  require_same_shape(c, cbar);
  if (pi.size() != c.inputs()) {
    throw std::invalid_argument("input distribution length must match the input alphabet");
  }
  const std::size_t m = c.outputs();
  const std::size_t n = c.inputs();

  switch (cls) {
    case UtilityClassTag::Indifferent:
      return ReducedComparison{DominanceAnswer::Dominates, std::nullopt, 0, 0};

    case UtilityClassTag::Exact: {
      if (m != n) {
        // Exact utilities are square; the class is empty for m != n.
        return ReducedComparison{DominanceAnswer::Dominates, std::nullopt, 0, 0};
      }
      if (pi.is_uniform()) {
        if (exact_class_score(c) >= exact_class_score(cbar)) {
          return ReducedComparison{DominanceAnswer::Dominates, std::nullopt, 0, 0};
        }
        const UtilityMatrix witness(RMatrix::identity(n));
        return ReducedComparison{DominanceAnswer::DominatedStrictlyAt, witness,
                                 blackwell_value(c, witness, pi),
                                 blackwell_value(cbar, witness, pi)};
      }
      for (const RMatrix& p : all_permutation_matrices(n, max_enum)) {
        if (auto refuted = detail::refute_with(c, cbar, UtilityMatrix(p), pi)) return *refuted;
      }
      return ReducedComparison{DominanceAnswer::Dominates, std::nullopt, 0, 0};
    }

    case UtilityClassTag::Oblivious: {
      const std::size_t count = deterministic_count(n, m, max_enum);
      for (std::size_t t = 0; t < count; ++t) {
        const UtilityMatrix candidate(deterministic_matrix(n, m, t));
        if (auto refuted = detail::refute_with(c, cbar, candidate, pi)) return *refuted;
      }
      return ReducedComparison{DominanceAnswer::Dominates, std::nullopt, 0, 0};
    }

    case UtilityClassTag::DoublyStochasticMultiple: {
      if (m != n) return ReducedComparison{DominanceAnswer::Unknown, std::nullopt, 0, 0};
      const std::vector<RMatrix> perms = all_permutation_matrices(n, max_enum);
      for (const RMatrix& p : perms) {
        if (auto refuted = detail::refute_with(c, cbar, UtilityMatrix(p), pi)) return *refuted;
      }
      const Rational half(1, 2);
      for (std::size_t i = 0; i < perms.size(); ++i) {
        for (std::size_t j = i + 1; j < perms.size(); ++j) {
          const UtilityMatrix candidate((perms[i] + perms[j]).scaled(half));
          if (auto refuted = detail::refute_with(c, cbar, candidate, pi)) return *refuted;
        }
      }
      SplitMix64 gen(probe_seed);
      for (std::size_t t = 0; t < random_probes; ++t) {
        const UtilityMatrix candidate(random_birkhoff_mixture(gen, n, 2 + gen.below(3)));
        if (auto refuted = detail::refute_with(c, cbar, candidate, pi)) return *refuted;
      }
      return ReducedComparison{DominanceAnswer::Unknown, std::nullopt, 0, 0};
    }
  }
  return ReducedComparison{DominanceAnswer::Unknown, std::nullopt, 0, 0};
}

// Seeded property harness: squaring off random garblings cbar = M * c * N
// against the exact-class score, which must never increase.
inline SuiteReport exact_score_monotonicity_suite(std::uint64_t seed, std::size_t count,
                                                  std::size_t dim = 3) {
  SplitMix64 gen(seed);
  SuiteReport report;
  report.total = count;
  for (std::size_t t = 0; t < count; ++t) {
    const Channel c = random_channel(gen, dim, dim);
    const RMatrix post = random_column_stochastic(gen, dim, dim);
    const RMatrix pre = random_column_stochastic(gen, dim, dim);
    const Channel cbar(post * c.matrix() * pre);
    if (exact_class_score(c) < exact_class_score(cbar)) {
      report.failures.push_back("instance " + std::to_string(t) +
                                ": score increased under garbling");
    }
  }
  return report;
}

}  // namespace chanorder
