#include <catch2/catch_amalgamated.hpp>

#include <chanorder/chanorder.hpp>

#include "oracles.hpp"

using namespace chanorder;

TEST_CASE("rational parsing is canonical") {
  CHECK(to_string(parse_rational("28/20")) == "7/5");
  CHECK(to_string(parse_rational("-3/6")) == "-1/2");
  CHECK(to_string(parse_rational("5")) == "5");
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK(parse_rational("9/10") + parse_rational("1/10") == 1);

  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("matrix arithmetic") {
  const RMatrix a = rmx({{"1", "2"}, {"3", "4"}});
  const RMatrix b = rmx({{"0", "1"}, {"1", "0"}});
  CHECK(a * b == rmx({{"2", "1"}, {"4", "3"}}));
  CHECK((a * b).transposed() == rmx({{"2", "4"}, {"1", "3"}}));
  CHECK(a.trace() == 5);
  CHECK(a + b == rmx({{"1", "3"}, {"4", "4"}}));
  CHECK(a - a == RMatrix(2, 2));
  CHECK(a.scaled(parse_rational("1/2")) == rmx({{"1/2", "1"}, {"3/2", "2"}}));
  CHECK_THROWS_AS(RMatrix(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(a * RMatrix(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(rmx({{"1", "2"}, {"3"}}), std::invalid_argument);
}

TEST_CASE("column stochasticity predicates") {
  CHECK(is_column_stochastic(RMatrix::identity(2)));
  CHECK(is_column_stochastic(rmx({{"9/10", "0"}, {"1/10", "1"}})));
  CHECK_FALSE(is_column_stochastic(rmx({{"1/2", "0"}, {"1/2", "1/2"}})));
  CHECK_FALSE(is_column_stochastic(rmx({{"3/2", "0"}, {"-1/2", "1"}})));

  CHECK(is_deterministic(RMatrix::identity(3)));
  CHECK_FALSE(is_deterministic(rmx({{"1/2", "0"}, {"1/2", "1"}})));
  CHECK(stochastic_kind(RMatrix::identity(2)) == StochasticKind::Deterministic);
  CHECK(stochastic_kind(rmx({{"1/2", "1/2"}, {"1/2", "1/2"}})) == StochasticKind::General);
}

TEST_CASE("deterministic matrix enumeration") {
  CHECK(deterministic_count(2, 2) == 4);
  CHECK(deterministic_count(3, 3) == 27);
  CHECK_THROWS_AS(deterministic_count(7, 7), enumeration_limit_error);

  std::vector<RMatrix> all;
  for (std::size_t t = 0; t < 4; ++t) {
    RMatrix d = deterministic_matrix(2, 2, t);
    CHECK(is_deterministic(d));
    for (const RMatrix& seen : all) CHECK(seen != d);
    all.push_back(std::move(d));
  }
}

TEST_CASE("domain type invariants") {
  CHECK_THROWS_AS(Channel(rmx({{"1/2", "0"}, {"1/2", "1/2"}})), std::invalid_argument);
  CHECK_THROWS_AS(Channel(rmx({{"3/2", "0"}, {"-1/2", "1"}})), std::invalid_argument);

  CHECK_THROWS_AS(InputDistribution({Rational(1), Rational(1)}), std::invalid_argument);
  CHECK_THROWS_AS(InputDistribution({Rational(0), Rational(1)}), std::invalid_argument);
  CHECK_NOTHROW(InputDistribution({Rational(1), Rational(1)}, /*allow_unnormalized=*/true));
  CHECK(InputDistribution::uniform(4).weights()[0] == parse_rational("1/4"));
  CHECK(InputDistribution::uniform(3).is_uniform());
  CHECK_FALSE(InputDistribution({parse_rational("1/4"), parse_rational("3/4")}).is_uniform());
}

TEST_CASE("reacting to the channel: pinned values") {
  const Channel c(rmx({{"9/10", "0"}, {"1/10", "1"}}));
  const Channel cbar(rmx({{"0", "9/10"}, {"1", "1/10"}}));
  const UtilityMatrix u(rmx({{"2", "0"}, {"0", "1"}}));
  const InputDistribution pi = InputDistribution::uniform(2);

  CHECK(blackwell_value(c, u, pi) == parse_rational("28/20"));
  CHECK(blackwell_value(cbar, u, pi) == parse_rational("29/20"));

  const UtilityMatrix indifferent(rmx({{"1", "1"}, {"2", "2"}}));
  CHECK(blackwell_value(c, indifferent, pi) == parse_rational("3/2"));
  CHECK(blackwell_value(cbar, indifferent, pi) == parse_rational("3/2"));

  const Channel eye(RMatrix::identity(2));
  CHECK(blackwell_value(eye, UtilityMatrix(RMatrix::identity(2)), pi) == 1);

  CHECK_THROWS_AS(blackwell_value(c, UtilityMatrix(RMatrix(3, 2)), pi), std::invalid_argument);
}

TEST_CASE("optimal strategy certificate") {
  SplitMix64 gen(11);
  for (int t = 0; t < 30; ++t) {
    const std::size_t m = 2 + gen.below(3);
    const std::size_t n = 2 + gen.below(2);
    const Channel c = random_channel(gen, m, n);
    const UtilityMatrix u = random_utility(gen, n, m);
    const InputDistribution pi = random_distribution(gen, n);
    const PolicyOptimum opt = blackwell_optimum(c, u, pi);
    CHECK(is_deterministic(opt.strategy));
    CHECK(expected_utility(opt.strategy, c, u, pi) == opt.value);
    CHECK(oracle::trace_value(opt.strategy, c, u, pi) == opt.value);
  }
}

TEST_CASE("row-max closed form agrees with brute enumeration up to m = 4") {
  SplitMix64 gen(12);
  for (int t = 0; t < 40; ++t) {
    const std::size_t m = 2 + gen.below(3);
    const std::size_t n = 2 + gen.below(2);
    const Channel c = random_channel(gen, m, n);
    const UtilityMatrix u = random_utility(gen, n, m);
    const InputDistribution pi =
        (t % 2 == 0) ? InputDistribution::uniform(n) : random_distribution(gen, n);
    CHECK(blackwell_value(c, u, pi) == oracle::brute_blackwell(c, u, pi));
  }
  SplitMix64 gen4(13);
  for (int t = 0; t < 6; ++t) {
    const Channel c = random_channel(gen4, 4, 2);
    const UtilityMatrix u = random_utility(gen4, 2, 4);
    const InputDistribution pi = InputDistribution::uniform(2);
    CHECK(blackwell_value(c, u, pi) == oracle::brute_blackwell(c, u, pi));
  }
}

TEST_CASE("optimally coded values: pinned examples") {
  const Channel c(rmx({{"9/10", "0"}, {"1/10", "1"}}));
  const Channel cbar(rmx({{"0", "9/10"}, {"1", "1/10"}}));
  const UtilityMatrix u(rmx({{"2", "0"}, {"0", "1"}}));
  const InputDistribution pi = InputDistribution::uniform(2);

  CHECK(shannon_value(c, u, pi) == parse_rational("29/20"));
  CHECK(shannon_value(cbar, u, pi) == parse_rational("29/20"));
  CHECK(cs_value(c, u, pi) == parse_rational("29/20"));

  const PreGarblingOptimum opt = shannon_optimum(c, u, pi);
  CHECK(is_deterministic(opt.strategy));
  CHECK(is_deterministic(opt.pre_garbling));
  CHECK(expected_utility_pre(opt.strategy, opt.pre_garbling, c, u, pi) == opt.value);

  const Channel eye(RMatrix::identity(2));
  CHECK(shannon_value(eye, UtilityMatrix(RMatrix::identity(2)), pi) == 1);
}

TEST_CASE("coding cannot help a channel with identical columns") {
  const Channel c(rmx({{"1/2", "1/2"}, {"1/2", "1/2"}}));
  const InputDistribution pi = InputDistribution::uniform(2);
  SplitMix64 gen(14);
  for (int t = 0; t < 10; ++t) {
    const UtilityMatrix u = random_utility(gen, 2, 2);
    Rational expected = (u.matrix()(0, 0) + u.matrix()(1, 0)) / 2;
    const Rational alt = (u.matrix()(0, 1) + u.matrix()(1, 1)) / 2;
    if (alt > expected) expected = alt;
    CHECK(cs_value(c, u, pi) == expected);
  }
}

TEST_CASE("per-unit exact-class value of the 2x2 pair") {
  const Channel c(rmx({{"1", "1/2"}, {"0", "1/2"}}));
  const InputDistribution pi = InputDistribution::uniform(2);
  const UtilityMatrix eye(RMatrix::identity(2));
  const UtilityMatrix swap(rmx({{"0", "1"}, {"1", "0"}}));
  CHECK(cs_value(c, eye, pi) == parse_rational("3/4"));
  CHECK(cs_value(c, swap, pi) == parse_rational("3/4"));
}

TEST_CASE("enumeration guard on the coding search") {
  RMatrix wide(2, 7);
  for (std::size_t j = 0; j < 7; ++j) {
    wide(0, j) = 1;
  }
  const Channel c(wide);
  const UtilityMatrix u(RMatrix(7, 2));
  CHECK_THROWS_AS(shannon_value(c, u, InputDistribution::uniform(7)), enumeration_limit_error);
}

TEST_CASE("value lattice and oracle agreement on random instances") {
  SplitMix64 gen(15);
  for (int t = 0; t < 25; ++t) {
    const std::size_t m = 2 + gen.below(2);
    const std::size_t n = 2 + gen.below(2);
    const Channel c = random_channel(gen, m, n);
    const UtilityMatrix u = random_utility(gen, n, m);
    const InputDistribution pi =
        (t % 2 == 0) ? InputDistribution::uniform(n) : random_distribution(gen, n);
    const Rational blackwell = blackwell_value(c, u, pi);
    const Rational shannon = shannon_value(c, u, pi);
    CHECK(blackwell <= shannon);
    CHECK(shannon == cs_value(c, u, pi));
    CHECK(shannon == oracle::brute_shannon(c, u, pi));
  }
}

TEST_CASE("indifferent utilities") {
  const UtilityMatrix u(rmx({{"1", "1"}, {"2", "2"}}));
  CHECK(indifferent_value(u, InputDistribution::uniform(2)) == parse_rational("3/2"));
  CHECK(indifferent_value(UtilityMatrix(RMatrix(2, 2)), InputDistribution::uniform(2)) == 0);
  CHECK(indifferent_value(u, InputDistribution({parse_rational("1/4"), parse_rational("3/4")})) ==
        parse_rational("7/4"));
  CHECK_THROWS_AS(indifferent_value(UtilityMatrix(rmx({{"1", "2"}, {"2", "2"}})),
                                    InputDistribution::uniform(2)),
                  std::invalid_argument);

  SplitMix64 gen(16);
  for (int t = 0; t < 20; ++t) {
    const std::size_t m = 2 + gen.below(2);
    const std::size_t n = 2 + gen.below(2);
    const Channel c = random_channel(gen, m, n);
    RMatrix k(n, m);
    for (std::size_t j = 0; j < n; ++j) {
      const Rational row = random_signed_rational(gen);
      for (std::size_t i = 0; i < m; ++i) k(j, i) = row;
    }
    const UtilityMatrix indifferent(k);
    const InputDistribution pi = random_distribution(gen, n);
    const Rational expected = indifferent_value(indifferent, pi);
    CHECK(blackwell_value(c, indifferent, pi) == expected);
    CHECK(shannon_value(c, indifferent, pi) == expected);
    CHECK(cs_value(c, indifferent, pi) == expected);
  }
}

TEST_CASE("adding an indifferent utility shifts the value by its weighted column") {
  SplitMix64 gen(17);
  for (int t = 0; t < 20; ++t) {
    const std::size_t m = 2 + gen.below(2);
    const std::size_t n = 2 + gen.below(2);
    const Channel c = random_channel(gen, m, n);
    const UtilityMatrix u = random_utility(gen, n, m);
    const InputDistribution pi = random_distribution(gen, n);
    RMatrix k(n, m);
    Rational shift = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational row = random_signed_rational(gen);
      for (std::size_t i = 0; i < m; ++i) k(j, i) = row;
      shift += pi.weights()[j] * row;
    }
    CHECK(blackwell_value(c, UtilityMatrix(u.matrix() + k), pi) ==
          blackwell_value(c, u, pi) + shift);
  }
}

TEST_CASE("permutation utilities score the channel by its row maxima") {
  SplitMix64 gen(18);
  const Rational alpha = parse_rational("3/2");
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 2 + gen.below(2);
    const Channel c = random_channel(gen, n, n);
    const RMatrix p = random_permutation_matrix(gen, n);
    const Rational expected = alpha / Rational(n) * exact_class_score(c);
    CHECK(blackwell_value(c, UtilityMatrix(p.scaled(alpha)), InputDistribution::uniform(n)) ==
          expected);
  }
}
