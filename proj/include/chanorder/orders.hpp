#pragma once

#include <chanorder/lp.hpp>
#include <chanorder/report.hpp>
#include <chanorder/rng.hpp>
#include <chanorder/values.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace chanorder {

enum class Answer { Yes, No, Unknown };

// Yes certificate: cbar = post * c * pre exactly (pre is the identity for
// the Blackwell order).
struct GarblingPair {
  RMatrix post;
  RMatrix pre;
};

struct MixtureTerm {
  Rational weight;
  RMatrix post;
  RMatrix pre;
};

// Yes certificate for the convexified order: cbar = sum of weighted
// post * c * pre terms, weights forming a probability distribution.
struct Mixture {
  std::vector<MixtureTerm> terms;
};

// No certificate: a utility under which cbar strictly beats c, refuting the
// claimed order. value_left / value_right are the two maximal expected
// utilities demonstrating the gap (right > left).
struct Witness {
  UtilityMatrix utility;
  Rational value_left;
  Rational value_right;
};

struct Verdict {
  Answer answer = Answer::Unknown;
  std::variant<std::monostate, GarblingPair, Mixture, Witness> certificate;

  const GarblingPair* garbling() const { return std::get_if<GarblingPair>(&certificate); }
  const Mixture* mixture() const { return std::get_if<Mixture>(&certificate); }
  const Witness* witness() const { return std::get_if<Witness>(&certificate); }
};

inline bool verify_garbling(const Channel& c, const Channel& cbar, const GarblingPair& pair) {
  return is_column_stochastic(pair.post) && is_column_stochastic(pair.pre) &&
         pair.post * c.matrix() * pair.pre == cbar.matrix();
}

inline bool verify_mixture(const Channel& c, const Channel& cbar, const Mixture& mixture) {
  if (mixture.terms.empty()) return false;
  Rational total = 0;
  RMatrix sum(cbar.outputs(), cbar.inputs());
  for (const MixtureTerm& term : mixture.terms) {
    if (term.weight <= 0) return false;
    if (!is_column_stochastic(term.post) || !is_column_stochastic(term.pre)) return false;
    total += term.weight;
    sum = sum + (term.post * c.matrix() * term.pre).scaled(term.weight);
  }
  return total == 1 && sum == cbar.matrix();
}

namespace detail {

// Feasibility of post-garbling: find column-stochastic M with M * base =
// target. Variables are M entries row-major; constraint rows are the
// target entries row-major, then the column-sum rows. The row order matters:
// the Farkas vector of an infeasible system is reshaped by that order.
inline LPOutcome post_garbling_feasibility(const RMatrix& base, const RMatrix& target) {
  const std::size_t m = target.rows();
  StandardFormBuilder lp;
  for (std::size_t v = 0; v < m * m; ++v) lp.add_variable();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < target.cols(); ++j) {
      StandardFormBuilder::Terms terms;
      for (std::size_t k = 0; k < m; ++k) {
        if (base(k, j) != 0) terms.emplace_back(i * m + k, base(k, j));
      }
      lp.add_eq(std::move(terms), target(i, j));
    }
  }
  for (std::size_t k = 0; k < m; ++k) {
    StandardFormBuilder::Terms terms;
    for (std::size_t i = 0; i < m; ++i) terms.emplace_back(i * m + k, Rational(1));
    lp.add_eq(std::move(terms), Rational(1));
  }
  return solve(lp.build());
}

// Feasibility of pre-garbling: find column-stochastic N with base * N =
// target. Variables are N entries row-major.
inline LPOutcome pre_garbling_feasibility(const RMatrix& base, const RMatrix& target) {
  const std::size_t n = target.cols();
  StandardFormBuilder lp;
  for (std::size_t v = 0; v < n * n; ++v) lp.add_variable();
  for (std::size_t i = 0; i < target.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      StandardFormBuilder::Terms terms;
      for (std::size_t k = 0; k < n; ++k) {
        if (base(i, k) != 0) terms.emplace_back(k * n + j, base(i, k));
      }
      lp.add_eq(std::move(terms), target(i, j));
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    StandardFormBuilder::Terms terms;
    for (std::size_t k = 0; k < n; ++k) terms.emplace_back(k * n + j, Rational(1));
    lp.add_eq(std::move(terms), Rational(1));
  }
  return solve(lp.build());
}

inline RMatrix unpack_square(const std::vector<Rational>& solution, std::size_t dim) {
  RMatrix out(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t k = 0; k < dim; ++k) out(i, k) = solution[i * dim + k];
  }
  return out;
}

// The Farkas functional of an infeasible membership system, reshaped to the
// m x n entry grid and turned into the separating utility Pi^-1 * U^T.
inline UtilityMatrix separation_witness(const std::vector<Rational>& farkas, std::size_t m,
                                        std::size_t n, const InputDistribution& pi) {
  RMatrix ubar(n, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) ubar(j, i) = farkas[i * n + j] / pi.weights()[j];
  }
  return UtilityMatrix(ubar);
}

// Least L1 distance || target - M * base ||_1 over column-stochastic M,
// with a minimizer. Always feasible and bounded.
inline std::pair<Rational, RMatrix> l1_fit_post(const RMatrix& base, const RMatrix& target) {
  const std::size_t m = target.rows();
  const std::size_t n = target.cols();
  StandardFormBuilder lp;
  for (std::size_t v = 0; v < m * m + 2 * m * n; ++v) lp.add_variable();
  const std::size_t pos = m * m;        // positive residuals
  const std::size_t neg = m * m + m * n;  // negative residuals
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      StandardFormBuilder::Terms terms;
      for (std::size_t k = 0; k < m; ++k) {
        if (base(k, j) != 0) terms.emplace_back(i * m + k, base(k, j));
      }
      terms.emplace_back(pos + i * n + j, Rational(1));
      terms.emplace_back(neg + i * n + j, Rational(-1));
      lp.add_eq(std::move(terms), target(i, j));
    }
  }
  for (std::size_t k = 0; k < m; ++k) {
    StandardFormBuilder::Terms terms;
    for (std::size_t i = 0; i < m; ++i) terms.emplace_back(i * m + k, Rational(1));
    lp.add_eq(std::move(terms), Rational(1));
  }
  for (std::size_t v = pos; v < pos + 2 * m * n; ++v) lp.set_objective(v, Rational(-1));
  LPOutcome out = solve(lp.build());
  if (out.status != LPStatus::Optimal) throw std::logic_error("L1 fit must be solvable");
  return {Rational(-out.objective_value), unpack_square(out.solution, m)};
}

inline std::pair<Rational, RMatrix> l1_fit_pre(const RMatrix& base, const RMatrix& target) {
  const std::size_t m = target.rows();
  const std::size_t n = target.cols();
  StandardFormBuilder lp;
  for (std::size_t v = 0; v < n * n + 2 * m * n; ++v) lp.add_variable();
  const std::size_t pos = n * n;
  const std::size_t neg = n * n + m * n;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      StandardFormBuilder::Terms terms;
      for (std::size_t k = 0; k < n; ++k) {
        if (base(i, k) != 0) terms.emplace_back(k * n + j, base(i, k));
      }
      terms.emplace_back(pos + i * n + j, Rational(1));
      terms.emplace_back(neg + i * n + j, Rational(-1));
      lp.add_eq(std::move(terms), target(i, j));
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    StandardFormBuilder::Terms terms;
    for (std::size_t k = 0; k < n; ++k) terms.emplace_back(k * n + j, Rational(1));
    lp.add_eq(std::move(terms), Rational(1));
  }
  for (std::size_t v = pos; v < pos + 2 * m * n; ++v) lp.set_objective(v, Rational(-1));
  LPOutcome out = solve(lp.build());
  if (out.status != LPStatus::Optimal) throw std::logic_error("L1 fit must be solvable");
  return {Rational(-out.objective_value), unpack_square(out.solution, n)};
}

// Alternating L1 descent over (M, N) from every deterministic start of N.
// Sound only: a pair is returned just when the distance hits exactly zero.
inline std::optional<GarblingPair> alternating_descent(const Channel& c, const Channel& cbar,
                                                       std::size_t max_enum,
                                                       std::size_t rounds = 20) {
  const std::size_t n = c.inputs();
  const std::size_t starts = deterministic_count(n, n, max_enum);
  for (std::size_t t = 0; t < starts; ++t) {
    RMatrix pre = deterministic_matrix(n, n, t);
    std::optional<Rational> last;
    for (std::size_t round = 0; round < rounds; ++round) {
      auto [dist_post, post] = l1_fit_post(c.matrix() * pre, cbar.matrix());
      if (dist_post == 0) return GarblingPair{std::move(post), std::move(pre)};
      auto [dist_pre, next_pre] = l1_fit_pre(post * c.matrix(), cbar.matrix());
      if (dist_pre == 0) return GarblingPair{std::move(post), std::move(next_pre)};
      if (last && dist_pre >= *last) break;
      last = dist_pre;
      pre = std::move(next_pre);
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Blackwell order: is cbar a garbling M * c? Complete — the policy space is
// a polytope, so LP feasibility either exhibits M or yields a Farkas
// functional that becomes a strict separating utility.
inline Verdict blackwell_check(const Channel& c, const Channel& cbar,
                               const InputDistribution& pi) {
  require_same_shape(c, cbar);
  if (pi.size() != c.inputs()) {
    throw std::invalid_argument("input distribution length must match the input alphabet");
  }
  const std::size_t m = c.outputs();
  const std::size_t n = c.inputs();
  if (c == cbar) {
    return Verdict{Answer::Yes, GarblingPair{RMatrix::identity(m), RMatrix::identity(n)}};
  }
  LPOutcome out = detail::post_garbling_feasibility(c.matrix(), cbar.matrix());
  if (out.status == LPStatus::Optimal) {
    GarblingPair pair{detail::unpack_square(out.solution, m), RMatrix::identity(n)};
    if (!verify_garbling(c, cbar, pair)) {
      throw std::logic_error("solver returned an invalid garbling certificate");
    }
    return Verdict{Answer::Yes, std::move(pair)};
  }
  UtilityMatrix witness = detail::separation_witness(out.farkas, m, n, pi);
  Rational left = blackwell_value(c, witness, pi);
  Rational right = blackwell_value(cbar, witness, pi);
  if (!(right > left)) throw std::logic_error("Farkas witness failed to separate");
  return Verdict{Answer::No, Witness{std::move(witness), std::move(left), std::move(right)}};
}

// Convexified Shannon order: membership of cbar in the convex hull of the
// finitely many products L * c * R over deterministic L, R. Complete.
// Identical products are merged before the LP and certificate weights are
// reported against the first (L, R) pair in canonical order.
inline Verdict cs_check(const Channel& c, const Channel& cbar, const InputDistribution& pi,
                        std::size_t max_enum = kDefaultMaxEnum) {
  require_same_shape(c, cbar);
  if (pi.size() != c.inputs()) {
    throw std::invalid_argument("input distribution length must match the input alphabet");
  }
  const std::size_t m = c.outputs();
  const std::size_t n = c.inputs();
  const std::size_t post_count = deterministic_count(m, m, max_enum);
  const std::size_t pre_count = deterministic_count(n, n, max_enum);
  if (post_count > kMaxEnumeratedProducts / pre_count) {
    throw enumeration_limit_error("convexified membership would enumerate " +
                                  std::to_string(post_count) + " * " +
                                  std::to_string(pre_count) + " vertex products");
  }

  struct Vertex {
    RMatrix product;
    std::size_t post_index;
    std::size_t pre_index;
  };
  std::vector<Vertex> vertices;
  std::map<std::vector<Rational>, std::size_t> seen;
  for (std::size_t li = 0; li < post_count; ++li) {
    const RMatrix lc = deterministic_matrix(m, m, li) * c.matrix();
    for (std::size_t ri = 0; ri < pre_count; ++ri) {
      RMatrix product = lc * deterministic_matrix(n, n, ri);
      auto [it, inserted] = seen.try_emplace(product.entries(), vertices.size());
      if (inserted) vertices.push_back(Vertex{std::move(product), li, ri});
    }
  }

  StandardFormBuilder lp;
  for (std::size_t v = 0; v < vertices.size(); ++v) lp.add_variable();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      StandardFormBuilder::Terms terms;
      for (std::size_t v = 0; v < vertices.size(); ++v) {
        if (vertices[v].product(i, j) != 0) terms.emplace_back(v, vertices[v].product(i, j));
      }
      lp.add_eq(std::move(terms), cbar.matrix()(i, j));
    }
  }
  {
    StandardFormBuilder::Terms terms;
    for (std::size_t v = 0; v < vertices.size(); ++v) terms.emplace_back(v, Rational(1));
    lp.add_eq(std::move(terms), Rational(1));
  }

  LPOutcome out = solve(lp.build());
  if (out.status == LPStatus::Optimal) {
    Mixture mixture;
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      if (out.solution[v] > 0) {
        mixture.terms.push_back(MixtureTerm{out.solution[v],
                                            deterministic_matrix(m, m, vertices[v].post_index),
                                            deterministic_matrix(n, n, vertices[v].pre_index)});
      }
    }
    if (!verify_mixture(c, cbar, mixture)) {
      throw std::logic_error("solver returned an invalid mixture certificate");
    }
    return Verdict{Answer::Yes, std::move(mixture)};
  }
  UtilityMatrix witness = detail::separation_witness(out.farkas, m, n, pi);
  Rational left = cs_value(c, witness, pi, max_enum);
  Rational right = cs_value(cbar, witness, pi, max_enum);
  if (!(right > left)) throw std::logic_error("Farkas witness failed to separate");
  return Verdict{Answer::No, Witness{std::move(witness), std::move(left), std::move(right)}};
}

// Complete decision of the 2x2 Shannon order. A 2x2 column-stochastic
// matrix is its first row: c has first-row entries (a0, b0), cbar has
// (abar, bbar). cbar = M * c * N holds for stochastic M, N iff either the
// target columns coincide, or some a != b in I = [min(a0,b0), max(a0,b0)]
// admits an affine map f with f(a), f(b) hitting the targets and
// f(0), f(1) in [0, 1]. Scaling the interpolation constraints by b - a makes
// them linear, so each branch is one exact LP maximizing the slack b - a.
inline Verdict shannon_2x2_exact(const Channel& c, const Channel& cbar) {
  if (c.outputs() != 2 || c.inputs() != 2 || cbar.outputs() != 2 || cbar.inputs() != 2) {
    throw std::invalid_argument("shannon_2x2_exact requires 2x2 channels");
  }
  const Rational a0 = c.matrix()(0, 0);
  const Rational b0 = c.matrix()(0, 1);
  const Rational abar = cbar.matrix()(0, 0);
  const Rational bbar = cbar.matrix()(0, 1);

  if (abar == bbar) {
    // Constant target: pre-garble everything onto one column, post-garble
    // that point to the target column.
    RMatrix post(2, 2);
    post(0, 0) = post(0, 1) = abar;
    post(1, 0) = post(1, 1) = Rational(1) - abar;
    GarblingPair pair{std::move(post), RMatrix::identity(2)};
    if (!verify_garbling(c, cbar, pair)) throw std::logic_error("constant garbling must verify");
    return Verdict{Answer::Yes, std::move(pair)};
  }

  const Rational lo = a0 < b0 ? a0 : b0;
  const Rational hi = a0 < b0 ? b0 : a0;

  for (int branch = 0; branch < 2; ++branch) {
    // branch 0 interpolates f(a) = abar, f(b) = bbar; branch 1 swaps the
    // targets, which covers the pairs with a > b in the original roles.
    const Rational ta = branch == 0 ? abar : bbar;
    const Rational tb = branch == 0 ? bbar : abar;

    StandardFormBuilder lp;
    const std::size_t va = lp.add_variable();
    const std::size_t vb = lp.add_variable();
    lp.add_ge({{va, Rational(1)}}, lo);
    lp.add_le({{va, Rational(1)}}, hi);
    lp.add_ge({{vb, Rational(1)}}, lo);
    lp.add_le({{vb, Rational(1)}}, hi);
    // g = ta*b - tb*a equals f(0) * (b - a); the four rows pin
    // 0 <= g <= b - a and 0 <= g + (tb - ta) <= b - a.
    lp.add_ge({{vb, ta}, {va, -tb}}, Rational(0));
    lp.add_le({{vb, ta - 1}, {va, 1 - tb}}, Rational(0));
    lp.add_ge({{vb, ta}, {va, -tb}}, ta - tb);
    lp.add_le({{vb, ta - 1}, {va, 1 - tb}}, ta - tb);
    lp.set_objective(vb, Rational(1));
    lp.set_objective(va, Rational(-1));

    LPOutcome out = solve(lp.build());
    if (out.status != LPStatus::Optimal || !(out.objective_value > 0)) continue;

    const Rational a = out.solution[va];
    const Rational b = out.solution[vb];
    const Rational gap = b - a;
    const Rational f0 = (ta * b - tb * a) / gap;
    const Rational f1 = f0 + (tb - ta) / gap;
    RMatrix post(2, 2);
    post(0, 0) = f1;
    post(0, 1) = f0;
    post(1, 0) = Rational(1) - f1;
    post(1, 1) = Rational(1) - f0;
    // Column 1 of c * N needs the point mapped to abar: a on branch 0, b on
    // branch 1. The columns of c * N are convex combinations of c's columns.
    const Rational x1 = branch == 0 ? a : b;
    const Rational x2 = branch == 0 ? b : a;
    RMatrix pre(2, 2);
    for (std::size_t j = 0; j < 2; ++j) {
      const Rational& target = j == 0 ? x1 : x2;
      const Rational lambda = (target - b0) / (a0 - b0);  // a0 != b0 since gap > 0
      pre(0, j) = lambda;
      pre(1, j) = Rational(1) - lambda;
    }
    GarblingPair pair{std::move(post), std::move(pre)};
    if (!verify_garbling(c, cbar, pair)) {
      throw std::logic_error("2x2 decision procedure produced an invalid certificate");
    }
    return Verdict{Answer::Yes, std::move(pair)};
  }
  return Verdict{Answer::No, std::monostate{}};
}

// Shannon order, three-valued with documented soundness:
//   Yes  if a deterministic pre (or post) factor makes the remaining factor
//        LP-feasible, or the alternating descent lands on an exact pair;
//   No   if the convexified order already fails (a superset refutation),
//        carrying the convexified witness;
//   complete Yes/No for 2x2 via shannon_2x2_exact;
//   Unknown otherwise — bilinear feasibility has no exact general procedure
//        here.
inline Verdict shannon_check(const Channel& c, const Channel& cbar, const InputDistribution& pi,
                             std::size_t max_enum = kDefaultMaxEnum) {
  require_same_shape(c, cbar);
  if (pi.size() != c.inputs()) {
    throw std::invalid_argument("input distribution length must match the input alphabet");
  }
  const std::size_t m = c.outputs();
  const std::size_t n = c.inputs();
  if (c == cbar) {
    return Verdict{Answer::Yes, GarblingPair{RMatrix::identity(m), RMatrix::identity(n)}};
  }

  const std::size_t pre_count = deterministic_count(n, n, max_enum);
  for (std::size_t t = 0; t < pre_count; ++t) {
    RMatrix pre = deterministic_matrix(n, n, t);
    LPOutcome out = detail::post_garbling_feasibility(c.matrix() * pre, cbar.matrix());
    if (out.status == LPStatus::Optimal) {
      GarblingPair pair{detail::unpack_square(out.solution, m), std::move(pre)};
      if (!verify_garbling(c, cbar, pair)) {
        throw std::logic_error("solver returned an invalid garbling certificate");
      }
      return Verdict{Answer::Yes, std::move(pair)};
    }
  }
  const std::size_t post_count = deterministic_count(m, m, max_enum);
  for (std::size_t t = 0; t < post_count; ++t) {
    RMatrix post = deterministic_matrix(m, m, t);
    LPOutcome out = detail::pre_garbling_feasibility(post * c.matrix(), cbar.matrix());
    if (out.status == LPStatus::Optimal) {
      GarblingPair pair{std::move(post), detail::unpack_square(out.solution, n)};
      if (!verify_garbling(c, cbar, pair)) {
        throw std::logic_error("solver returned an invalid garbling certificate");
      }
      return Verdict{Answer::Yes, std::move(pair)};
    }
  }

  Verdict convexified = cs_check(c, cbar, pi, max_enum);
  if (convexified.answer == Answer::No) {
    return convexified;  // the Shannon set is contained in the convexified one
  }

  if (m == 2 && n == 2) return shannon_2x2_exact(c, cbar);

  if (auto pair = detail::alternating_descent(c, cbar, max_enum)) {
    if (!verify_garbling(c, cbar, *pair)) {
      throw std::logic_error("descent returned an invalid garbling certificate");
    }
    return Verdict{Answer::Yes, std::move(*pair)};
  }
  return Verdict{Answer::Unknown, std::monostate{}};
}

// Seeded consistency harness for the order/usefulness equivalence: every No
// must carry a verified strict-gap witness, and every Yes must survive
// random-utility falsification.
inline SuiteReport blackwell_equivalence_suite(std::uint64_t seed, std::size_t count) {
  SplitMix64 gen(seed);
  SuiteReport report;
  report.total = count;
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t m = 2 + gen.below(2);
    const std::size_t n = 2 + gen.below(2);
    const Channel c = random_channel(gen, m, n);
    const Channel cbar = (t % 2 == 0)
                             ? random_channel(gen, m, n)
                             : Channel(random_column_stochastic(gen, m, m) * c.matrix());
    const InputDistribution pi =
        (t % 3 == 0) ? random_distribution(gen, n) : InputDistribution::uniform(n);
    const std::string tag = "instance " + std::to_string(t);

    Verdict verdict = blackwell_check(c, cbar, pi);
    if (verdict.answer == Answer::Yes) {
      const GarblingPair* pair = verdict.garbling();
      if (pair == nullptr || !verify_garbling(c, cbar, *pair)) {
        report.failures.push_back(tag + ": Yes certificate failed verification");
        continue;
      }
      for (std::size_t probe = 0; probe < 20; ++probe) {
        const UtilityMatrix u = random_utility(gen, n, m);
        if (blackwell_value(c, u, pi) < blackwell_value(cbar, u, pi)) {
          report.failures.push_back(tag + ": Yes contradicted by a utility gap");
          break;
        }
      }
    } else if (verdict.answer == Answer::No) {
      const Witness* w = verdict.witness();
      if (w == nullptr || !(blackwell_value(cbar, w->utility, pi) >
                            blackwell_value(c, w->utility, pi))) {
        report.failures.push_back(tag + ": No witness does not show a strict gap");
      }
      if (t % 2 == 1) {
        report.failures.push_back(tag + ": constructed garbling judged No");
      }
    } else {
      report.failures.push_back(tag + ": unexpected Unknown");
    }
  }
  return report;
}

}  // namespace chanorder
