#pragma once

#include <chanorder/constructions.hpp>
#include <chanorder/orders.hpp>
#include <chanorder/report.hpp>
#include <chanorder/rng.hpp>
#include <chanorder/values.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace chanorder {

namespace detail {

// Brute-force maximum of tr(h * D) over all deterministic dim x dim matrices
// D, evaluated the dumb way (build the matrix, multiply, take the trace) so
// it stays independent of the row-max closed form it cross-checks.
inline Rational brute_max_trace(const RMatrix& h, std::size_t dim, std::size_t max_dim) {
  const std::size_t count = deterministic_count(dim, dim, max_dim);
  Rational best = 0;
  bool have = false;
  for (std::size_t t = 0; t < count; ++t) {
    const Rational value = (h * deterministic_matrix(dim, dim, t)).trace();
    if (!have || value > best) {
      best = value;
      have = true;
    }
  }
  return best;
}

inline RMatrix block_diagonal(const RMatrix& top, std::size_t pad) {
  RMatrix out(top.rows() + pad, top.cols() + pad);
  for (std::size_t i = 0; i < top.rows(); ++i) {
    for (std::size_t j = 0; j < top.cols(); ++j) out(i, j) = top(i, j);
  }
  for (std::size_t i = 0; i < pad; ++i) out(top.rows() + i, top.cols() + i) = 1;
  return out;
}

}  // namespace detail

// Value lattice: reacting to the raw channel can never beat reacting to an
// optimally coded one, and the convexified optimum is attained at a vertex.
inline SuiteReport value_lattice_suite(std::uint64_t seed, std::size_t count) {
  SplitMix64 gen(seed);
  SuiteReport report;
  report.total = count;
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t m = 2 + gen.below(2);
    const std::size_t n = 2 + gen.below(2);
    const Channel c = random_channel(gen, m, n);
    const UtilityMatrix u = random_utility(gen, n, m);
    const InputDistribution pi =
        (t % 2 == 0) ? InputDistribution::uniform(n) : random_distribution(gen, n);
    const Rational blackwell = blackwell_value(c, u, pi);
    const Rational shannon = shannon_value(c, u, pi);
    const Rational convexified = cs_value(c, u, pi);
    if (!(blackwell <= shannon)) {
      report.failures.push_back("instance " + std::to_string(t) +
                                ": blackwell value exceeds shannon value");
    }
    if (shannon != convexified) {
      report.failures.push_back("instance " + std::to_string(t) +
                                ": shannon and convexified values differ");
    }
  }
  return report;
}

// Convexified order vs. usefulness: No witnesses must realize strict value
// gaps, constructed mixtures must be recognized, and recognized memberships
// must survive random-utility falsification.
inline SuiteReport cs_equivalence_suite(std::uint64_t seed, std::size_t count,
                                        std::size_t max_enum = kDefaultMaxEnum) {
  SplitMix64 gen(seed);
  SuiteReport report;
  report.total = count;
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t m = 2 + gen.below(2);
    const std::size_t n = 2 + gen.below(2);
    const Channel c = random_channel(gen, m, n);
    const bool constructed = (t % 2 == 1);
    Channel cbar = c;
    if (constructed) {
      const std::size_t terms = 1 + gen.below(3);
      std::vector<std::uint64_t> raw(terms);
      std::uint64_t sum = 0;
      for (std::size_t i = 0; i < terms; ++i) sum += raw[i] = 1 + gen.below(9);
      RMatrix mix(m, n);
      for (std::size_t i = 0; i < terms; ++i) {
        const RMatrix post = random_column_stochastic(gen, m, m);
        const RMatrix pre = random_column_stochastic(gen, n, n);
        mix = mix + (post * c.matrix() * pre).scaled(Rational(raw[i]) / Rational(sum));
      }
      cbar = Channel(std::move(mix));
    } else {
      cbar = random_channel(gen, m, n);
    }
    const InputDistribution pi =
        (t % 3 == 0) ? random_distribution(gen, n) : InputDistribution::uniform(n);
    const std::string tag = "instance " + std::to_string(t);

    const Verdict verdict = cs_check(c, cbar, pi, max_enum);
    if (verdict.answer == Answer::Yes) {
      const Mixture* mixture = verdict.mixture();
      if (mixture == nullptr || !verify_mixture(c, cbar, *mixture)) {
        report.failures.push_back(tag + ": Yes certificate failed verification");
        continue;
      }
      for (std::size_t probe = 0; probe < 50; ++probe) {
        const UtilityMatrix u = random_utility(gen, n, m);
        if (cs_value(c, u, pi, max_enum) < cs_value(cbar, u, pi, max_enum)) {
          report.failures.push_back(tag + ": Yes contradicted by a utility gap");
          break;
        }
      }
    } else if (verdict.answer == Answer::No) {
      if (constructed) {
        report.failures.push_back(tag + ": constructed mixture judged No");
        continue;
      }
      const Witness* w = verdict.witness();
      if (w == nullptr ||
          !(cs_value(cbar, w->utility, pi, max_enum) > cs_value(c, w->utility, pi, max_enum))) {
        report.failures.push_back(tag + ": No witness does not show a strict gap");
      }
    } else {
      report.failures.push_back(tag + ": unexpected Unknown");
    }
  }
  return report;
}

// Mixing elements of the policy space of a mixture stays inside the policy
// space of the original channel (closure under composition).
inline SuiteReport composition_closure_suite(std::uint64_t seed, std::size_t count,
                                             std::size_t max_enum = kDefaultMaxEnum) {
  SplitMix64 gen(seed);
  SuiteReport report;
  report.total = count;
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t m = 2 + gen.below(2);
    const std::size_t n = 2 + gen.below(2);
    const Channel c = random_channel(gen, m, n);
    const auto random_mixture_of = [&](const Channel& base) {
      const std::size_t terms = 1 + gen.below(2);
      std::vector<std::uint64_t> raw(terms);
      std::uint64_t sum = 0;
      for (std::size_t i = 0; i < terms; ++i) sum += raw[i] = 1 + gen.below(9);
      RMatrix mix(m, n);
      for (std::size_t i = 0; i < terms; ++i) {
        const RMatrix post = random_column_stochastic(gen, m, m);
        const RMatrix pre = random_column_stochastic(gen, n, n);
        mix = mix + (post * base.matrix() * pre).scaled(Rational(raw[i]) / Rational(sum));
      }
      return Channel(std::move(mix));
    };
    const Channel cbar = random_mixture_of(c);
    const Channel d = random_mixture_of(cbar);
    if (cs_check(c, d, InputDistribution::uniform(n), max_enum).answer != Answer::Yes) {
      report.failures.push_back("instance " + std::to_string(t) +
                                ": composed mixture not recognized as a member");
    }
  }
  return report;
}

// The column-merge reduction is lossless: for every inner channel z,
// max_A tr(embed(z) u A) = max_B tr(z ubar B) + tail, both sides by brute
// enumeration of deterministic strategies.
inline SuiteReport reduce_identity_suite(std::uint64_t seed, std::size_t count,
                                         std::size_t max_enum = kDefaultMaxEnum) {
  SplitMix64 gen(seed);
  SuiteReport report;
  report.total = count;
  const std::size_t m = 3;
  const std::size_t k = 2;
  const std::size_t n = 3;
  for (std::size_t t = 0; t < count; ++t) {
    const UtilityMatrix raw = random_utility(gen, n, m);
    const OrderingReport ordering = ordering_normalize(raw, k);
    if (!ordering.satisfied) {
      report.failures.push_back("instance " + std::to_string(t) + ": ordering not found");
      continue;
    }
    const UtilityMatrix u(ordering.permutation * raw.matrix());
    const ReducedUtility reduced = reduce_utility(u, k, ordering.direction);
    const Channel z = random_channel(gen, m - 1, k);
    const Channel embedded = embed_channel(z, m);

    const Rational left =
        detail::brute_max_trace(embedded.matrix() * u.matrix(), m, max_enum);
    const Rational right =
        detail::brute_max_trace(z.matrix() * reduced.utility.matrix(), m - 1, max_enum) +
        reduced.tail;
    if (left != right) {
      report.failures.push_back("instance " + std::to_string(t) +
                                ": reduction identity violated");
    }
  }
  return report;
}

// Garbling transport through the block embedding: an inner garbling becomes
// a block garbling of the embedded channels, hence a convexified membership;
// conversely a convexified refutation of the embeddings forces the inner
// 2x2 decision to be No.
inline SuiteReport embedding_transport_suite(std::uint64_t seed, std::size_t count,
                                             std::size_t max_enum = kDefaultMaxEnum) {
  SplitMix64 gen(seed);
  SuiteReport report;
  report.total = count;
  const std::size_t m = 3;
  const std::size_t k = 2;
  for (std::size_t t = 0; t < count; ++t) {
    const std::string tag = "instance " + std::to_string(t);
    const Channel z = random_channel(gen, m - 1, k);
    const bool deterministic_factors = (t % 2 == 1);
    const RMatrix post = deterministic_factors
                             ? deterministic_matrix(m - 1, m - 1, gen.below(4))
                             : random_column_stochastic(gen, m - 1, m - 1);
    const RMatrix pre = deterministic_factors ? deterministic_matrix(k, k, gen.below(4))
                                              : random_column_stochastic(gen, k, k);
    const Channel zbar(post * z.matrix() * pre);
    const Channel embedded = embed_channel(z, m);
    const Channel embedded_bar = embed_channel(zbar, m);

    const GarblingPair block{detail::block_diagonal(post, 1),
                             detail::block_diagonal(pre, 1)};
    if (!verify_garbling(embedded, embedded_bar, block)) {
      report.failures.push_back(tag + ": block certificate does not transport");
      continue;
    }
    const InputDistribution pi = InputDistribution::uniform(embedded.inputs());
    if (cs_check(embedded, embedded_bar, pi, max_enum).answer != Answer::Yes) {
      report.failures.push_back(tag + ": embedded garbling not a convexified member");
    }
    if (deterministic_factors &&
        shannon_check(embedded, embedded_bar, pi, max_enum).answer != Answer::Yes) {
      report.failures.push_back(tag + ": embedded deterministic garbling not recognized");
    }

    // Contrapositive on an unrelated pair: a convexified refutation of the
    // embeddings rules out any inner garbling.
    const Channel w = random_channel(gen, m - 1, k);
    const Channel wbar = random_channel(gen, m - 1, k);
    const Channel we = embed_channel(w, m);
    const Channel wbar_e = embed_channel(wbar, m);
    if (cs_check(we, wbar_e, InputDistribution::uniform(we.inputs()), max_enum).answer ==
            Answer::No &&
        shannon_2x2_exact(w, wbar).answer != Answer::No) {
      report.failures.push_back(tag + ": convexified refutation contradicts the 2x2 decision");
    }
  }
  return report;
}

// Rescaled utilities must reproduce the general-distribution value at the
// uniform distribution, exactly.
inline SuiteReport pi_rescale_suite(std::uint64_t seed, std::size_t count) {
  SplitMix64 gen(seed);
  SuiteReport report;
  report.total = count;
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t m = 2 + gen.below(2);
    const std::size_t n = 2 + gen.below(2);
    const Channel c = random_channel(gen, m, n);
    const UtilityMatrix u = random_utility(gen, n, m);
    const InputDistribution pibar = random_distribution(gen, n);
    const Rational direct = blackwell_value(c, u, pibar);
    const Rational routed =
        blackwell_value(c, pi_rescale(u, pibar, n), InputDistribution::uniform(n));
    if (direct != routed) {
      report.failures.push_back("instance " + std::to_string(t) +
                                ": rescaled value differs from the direct value");
    }
  }
  return report;
}

namespace detail {

// Small-denominator fraction with int64 cross arithmetic; the oracle's grid
// values and 2x2 channel entries keep every product far inside the range.
struct Frac {
  long long num;
  long long den;  // > 0
};

inline Frac frac_of(const Rational& r) {
  return Frac{numerator(r).convert_to<long long>(), denominator(r).convert_to<long long>()};
}

inline Frac frac_sub(const Frac& a, const Frac& b) {
  return Frac{a.num * b.den - b.num * a.den, a.den * b.den};
}

inline Frac frac_mul(const Frac& a, const Frac& b) { return Frac{a.num * b.num, a.den * b.den}; }

inline int frac_cmp(const Frac& a, const Frac& b) {
  const long long lhs = a.num * b.den;
  const long long rhs = b.num * a.den;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

// Exhaustive search for an exact 2x2 garbling witness over grid points
// (s, t) with denominators <= max_den: accepts when the affine map through
// (s, ta), (t, tb) keeps 0 and 1 inside [0, 1]. Sound detector only — grid
// misses do not certify No.
inline bool grid_2x2_garbling(const Channel& c, const Channel& cbar, unsigned max_den) {
  const Rational a0 = c.matrix()(0, 0);
  const Rational b0 = c.matrix()(0, 1);
  const Rational abar = cbar.matrix()(0, 0);
  const Rational bbar = cbar.matrix()(0, 1);
  if (abar == bbar) return true;
  const Rational lo = a0 < b0 ? a0 : b0;
  const Rational hi = a0 < b0 ? b0 : a0;
  if (lo == hi) return false;

  std::vector<Frac> grid;
  for (unsigned den = 1; den <= max_den; ++den) {
    for (unsigned num = 0; num <= den; ++num) {
      const Rational value = Rational(num) / Rational(den);
      if (value < lo || value > hi) continue;
      const Frac candidate{num, den};
      bool duplicate = false;
      for (const Frac& g : grid) {
        if (frac_cmp(g, candidate) == 0) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) grid.push_back(candidate);
    }
  }

  const Frac fa = frac_of(abar);
  const Frac fb = frac_of(bbar);
  const Frac zero{0, 1};
  for (std::size_t si = 0; si < grid.size(); ++si) {
    for (std::size_t ti = 0; ti < grid.size(); ++ti) {
      if (si == ti) continue;
      const Frac& s = grid[si];
      const Frac& t = grid[ti];
      for (int assignment = 0; assignment < 2; ++assignment) {
        const Frac& ta = assignment == 0 ? fa : fb;
        const Frac& tb = assignment == 0 ? fb : fa;
        // f(s) = ta, f(t) = tb; g = ta*t - tb*s = f(0) * (t - s)
        const Frac gap = frac_sub(t, s);
        if (gap.num == 0) continue;
        Frac g = frac_sub(frac_mul(ta, t), frac_mul(tb, s));
        Frac g_shift = frac_sub(g, frac_sub(ta, tb));  // g + (tb - ta)
        if (gap.num < 0) {
          g = Frac{-g.num, g.den};
          g_shift = Frac{-g_shift.num, g_shift.den};
        }
        const Frac span{gap.num < 0 ? -gap.num : gap.num, gap.den};
        if (frac_cmp(g, zero) >= 0 && frac_cmp(g, span) <= 0 && frac_cmp(g_shift, zero) >= 0 &&
            frac_cmp(g_shift, span) <= 0) {
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace detail

// Validation of the 2x2 decision procedure: grid witnesses force Yes, Yes
// certificates verify, a one-sided deterministic garbling forces Yes, and a
// convexified refutation forces No.
inline SuiteReport shannon_2x2_validation_suite(std::uint64_t seed, std::size_t count,
                                                unsigned max_den = 32) {
  SplitMix64 gen(seed);
  SuiteReport report;
  report.total = count;
  for (std::size_t t = 0; t < count; ++t) {
    const std::string tag = "instance " + std::to_string(t);
    const Channel c = random_channel_2x2(gen);
    const Channel cbar = random_channel_2x2(gen);
    const InputDistribution pi = InputDistribution::uniform(2);

    const Verdict verdict = shannon_2x2_exact(c, cbar);
    if (verdict.answer == Answer::Yes) {
      const GarblingPair* pair = verdict.garbling();
      if (pair == nullptr || !verify_garbling(c, cbar, *pair)) {
        report.failures.push_back(tag + ": Yes certificate failed verification");
        continue;
      }
      if (cs_check(c, cbar, pi).answer != Answer::Yes) {
        report.failures.push_back(tag + ": Yes contradicted by convexified membership");
      }
    } else {
      if (detail::grid_2x2_garbling(c, cbar, max_den)) {
        report.failures.push_back(tag + ": grid search found a garbling the decision missed");
        continue;
      }
      bool one_sided = false;
      for (std::size_t idx = 0; idx < 4 && !one_sided; ++idx) {
        const RMatrix pre = deterministic_matrix(2, 2, idx);
        if (detail::post_garbling_feasibility(c.matrix() * pre, cbar.matrix()).status ==
            LPStatus::Optimal) {
          one_sided = true;
        }
      }
      if (one_sided) {
        report.failures.push_back(tag + ": deterministic-coding garbling contradicts No");
      }
    }
    if (cs_check(c, cbar, pi).answer == Answer::No && verdict.answer != Answer::No) {
      report.failures.push_back(tag + ": convexified refutation contradicts the decision");
    }
  }
  return report;
}

}  // namespace chanorder
