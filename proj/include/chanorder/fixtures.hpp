#pragma once

#include <chanorder/channel.hpp>
#include <chanorder/constructions.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace chanorder {

// A pinned channel pair with a utility, a distribution, and the two expected
// maximal expected utilities (or scores) used by the reproduction command.
// The ids are part of the CLI contract.
struct ReferenceFixture {
  std::string id;
  Channel c;
  Channel cbar;
  UtilityMatrix utility;
  InputDistribution pi;
  Rational expected_left;   // value of c
  Rational expected_right;  // value of cbar
};

inline std::vector<std::string> reference_fixture_ids() {
  return {"ex-rauh", "ex-randd-1", "ex-randd-2", "ex-exactsmall", "lemma-2x2", "thm-embed"};
}

inline ReferenceFixture reference_fixture(const std::string& id) {
  if (id == "ex-rauh") {
    return ReferenceFixture{id,
                            Channel(rmx({{"9/10", "0"}, {"1/10", "1"}})),
                            Channel(rmx({{"0", "9/10"}, {"1", "1/10"}})),
                            UtilityMatrix(rmx({{"2", "0"}, {"0", "1"}})),
                            InputDistribution::uniform(2),
                            parse_rational("28/20"),
                            parse_rational("29/20")};
  }
  if (id == "ex-randd-1") {
    return ReferenceFixture{
        id,
        Channel(rmx({{"0", "0", "1"}, {"1/2", "1/2", "0"}, {"1/2", "1/2", "0"}})),
        Channel(rmx({{"1", "0", "0"}, {"0", "1/2", "1/2"}, {"0", "1/2", "1/2"}})),
        UtilityMatrix(rmx({{"1", "1", "0"}, {"0", "0", "1"}, {"0", "0", "0"}})),
        InputDistribution::uniform(3),
        parse_rational("1/3"),
        parse_rational("2/3")};
  }
  if (id == "ex-randd-2") {
    return ReferenceFixture{
        id,
        Channel(rmx({{"0", "0", "1"}, {"1/2", "1/2", "0"}, {"1/2", "1/2", "0"}})),
        Channel(rmx({{"1", "0", "0"}, {"0", "1/2", "1/2"}, {"0", "1/2", "1/2"}})),
        UtilityMatrix(rmx({{"1", "0", "0"}, {"0", "1/2", "1/2"}, {"0", "1/2", "1/2"}})),
        InputDistribution::uniform(3),
        parse_rational("1/2"),
        parse_rational("2/3")};
  }
  if (id == "ex-exactsmall") {
    // Expected values are the per-unit exact-class values (score / n).
    return ReferenceFixture{id,
                            Channel(rmx({{"1", "1/2"}, {"0", "1/2"}})),
                            Channel(rmx({{"1/4", "3/4"}, {"3/4", "1/4"}})),
                            UtilityMatrix(RMatrix::identity(2)),
                            InputDistribution::uniform(2),
                            parse_rational("3/4"),
                            parse_rational("3/4")};
  }
  if (id == "lemma-2x2") {
    MutualGarblingFamily family = mutual_garbling_family(Rational(2), Rational(1));
    return ReferenceFixture{id,
                            family.c1,
                            family.c2,
                            family.utility,
                            InputDistribution::uniform(2),
                            parse_rational("5/4"),
                            parse_rational("1")};
  }
  if (id == "thm-embed") {
    const Channel inner(RMatrix::identity(2));
    const Channel inner_swapped(rmx({{"0", "1"}, {"1", "0"}}));
    return ReferenceFixture{id,
                            embed_channel(inner, 3),
                            embed_channel(inner_swapped, 3),
                            UtilityMatrix(RMatrix::identity(3)),
                            InputDistribution::uniform(3),
                            parse_rational("1"),
                            parse_rational("1")};
  }
  throw std::invalid_argument("unknown fixture id \"" + id + '"');
}

}  // namespace chanorder
