#pragma once

#include <chanorder/channel.hpp>

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace chanorder {

// Optimal reaction to a channel: the value max tr(U A C Pi) over
// column-stochastic A together with a deterministic maximizer A.
struct PolicyOptimum {
  Rational value;
  RMatrix strategy;  // m x m, deterministic
};

// Same, with an optimal deterministic input coding R (pre-garbling).
struct PreGarblingOptimum {
  Rational value;
  RMatrix strategy;       // m x m, deterministic
  RMatrix pre_garbling;   // n x n, deterministic
};

namespace detail {

// C with column j scaled by pi_j, i.e. C * diag(pi).
inline RMatrix column_weighted(const RMatrix& c, const InputDistribution& pi) {
  RMatrix out = c;
  for (std::size_t j = 0; j < out.cols(); ++j) {
    for (std::size_t i = 0; i < out.rows(); ++i) out(i, j) *= pi.weights()[j];
  }
  return out;
}

}  // namespace detail

// Exact value of tr(U A C Pi) for a fixed strategy A.
inline Rational expected_utility(const RMatrix& strategy, const Channel& c,
                                 const UtilityMatrix& u, const InputDistribution& pi) {
  require_compatible(c, u, pi);
  if (strategy.rows() != c.outputs() || strategy.cols() != c.outputs()) {
    throw std::invalid_argument("strategy must be square over the output alphabet");
  }
  return (u.matrix() * strategy * detail::column_weighted(c.matrix(), pi)).trace();
}

// Exact value of tr(U A C R Pi) for a fixed strategy A and input coding R.
inline Rational expected_utility_pre(const RMatrix& strategy, const RMatrix& pre_garbling,
                                     const Channel& c, const UtilityMatrix& u,
                                     const InputDistribution& pi) {
  const Channel coded(c.matrix() * pre_garbling);
  return expected_utility(strategy, coded, u, pi);
}

// max over column-stochastic A of tr(U A C Pi). Writing G = C Pi U, the
// optimum is the sum of row maxima of G and is attained by a deterministic
// A whose column l selects the smallest maximizing column index of row l.
inline PolicyOptimum blackwell_optimum(const Channel& c, const UtilityMatrix& u,
                                       const InputDistribution& pi) {
  require_compatible(c, u, pi);
  const std::size_t m = c.outputs();
  const RMatrix g = detail::column_weighted(c.matrix(), pi) * u.matrix();
  RMatrix strategy(m, m);
  Rational value = 0;
  for (std::size_t l = 0; l < m; ++l) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < m; ++k) {
      if (g(l, k) > g(l, best)) best = k;
    }
    strategy(best, l) = 1;
    value += g(l, best);
  }
  return PolicyOptimum{std::move(value), std::move(strategy)};
}

inline Rational blackwell_value(const Channel& c, const UtilityMatrix& u,
                                const InputDistribution& pi) {
  return blackwell_optimum(c, u, pi).value;
}

// max over stochastic pairs (A, B) of tr(U A C B Pi). The functional is
// linear in B for fixed A, so the optimum is attained at a deterministic
// pre-garbling; enumerating those reduces each candidate to blackwell_optimum.
inline PreGarblingOptimum shannon_optimum(const Channel& c, const UtilityMatrix& u,
                                          const InputDistribution& pi,
                                          std::size_t max_enum = kDefaultMaxEnum) {
  require_compatible(c, u, pi);
  const std::size_t n = c.inputs();
  const std::size_t count = deterministic_count(n, n, max_enum);
  PreGarblingOptimum best{Rational(0), RMatrix(1, 1), RMatrix(1, 1)};
  bool have = false;
  for (std::size_t t = 0; t < count; ++t) {
    RMatrix r = deterministic_matrix(n, n, t);
    PolicyOptimum candidate = blackwell_optimum(Channel(c.matrix() * r), u, pi);
    if (!have || candidate.value > best.value) {
      best = PreGarblingOptimum{std::move(candidate.value), std::move(candidate.strategy),
                                std::move(r)};
      have = true;
    }
  }
  return best;
}

inline Rational shannon_value(const Channel& c, const UtilityMatrix& u,
                              const InputDistribution& pi,
                              std::size_t max_enum = kDefaultMaxEnum) {
  return shannon_optimum(c, u, pi, max_enum).value;
}

// max over the convexified policy space. A linear functional attains its
// maximum over the convex hull at a vertex L C R, so the value coincides
// with shannon_optimum.
inline PreGarblingOptimum cs_optimum(const Channel& c, const UtilityMatrix& u,
                                     const InputDistribution& pi,
                                     std::size_t max_enum = kDefaultMaxEnum) {
  return shannon_optimum(c, u, pi, max_enum);
}

inline Rational cs_value(const Channel& c, const UtilityMatrix& u, const InputDistribution& pi,
                         std::size_t max_enum = kDefaultMaxEnum) {
  return cs_optimum(c, u, pi, max_enum).value;
}

// For a utility with identical columns the expected utility does not depend
// on the channel or the strategy; it equals sum_j pi_j u_j.
inline Rational indifferent_value(const UtilityMatrix& u, const InputDistribution& pi) {
  if (pi.size() != u.inputs()) {
    throw std::invalid_argument("input distribution length must match the utility rows");
  }
  for (std::size_t j = 1; j < u.actions(); ++j) {
    for (std::size_t i = 0; i < u.inputs(); ++i) {
      if (u.matrix()(i, j) != u.matrix()(i, 0)) {
        throw std::invalid_argument("utility matrix is not indifferent");
      }
    }
  }
  Rational value = 0;
  for (std::size_t j = 0; j < u.inputs(); ++j) value += pi.weights()[j] * u.matrix()(j, 0);
  return value;
}

}  // namespace chanorder
