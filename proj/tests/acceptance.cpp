// Acceptance suite: every criterion is exact (tolerance zero, rational
// arithmetic throughout) and prints exactly one PASS/FAIL line. The process
// exits nonzero if any criterion fails.

#include <chanorder/chanorder.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace chanorder;

namespace {

int failures = 0;

void report(int index, const std::string& label, bool pass, const std::string& detail = "") {
  std::cout << (pass ? "PASS" : "FAIL") << "  " << index << "  " << label;
  if (!pass && !detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << '\n';
  if (!pass) ++failures;
}

std::string suite_detail(const SuiteReport& report) {
  if (report.ok()) return {};
  std::ostringstream out;
  out << report.failures.size() << " failure(s); first: " << report.failures.front();
  return out.str();
}

bool criterion_mutual_pair_values_and_orders(std::string& detail) {
  const ReferenceFixture fx = reference_fixture("ex-rauh");
  if (blackwell_value(fx.c, fx.utility, fx.pi) != parse_rational("28/20")) {
    detail = "value of C differs from 28/20";
    return false;
  }
  if (blackwell_value(fx.cbar, fx.utility, fx.pi) != parse_rational("29/20")) {
    detail = "value of C-bar differs from 29/20";
    return false;
  }
  const Verdict shannon = shannon_check(fx.c, fx.cbar, fx.pi);
  if (shannon.answer != Answer::Yes || shannon.garbling() == nullptr ||
      !verify_garbling(fx.c, fx.cbar, *shannon.garbling())) {
    detail = "swap coding not certified";
    return false;
  }
  const Verdict blackwell = blackwell_check(fx.c, fx.cbar, fx.pi);
  if (blackwell.answer != Answer::No || blackwell.witness() == nullptr) {
    detail = "plain garbling not refuted";
    return false;
  }
  const Witness& w = *blackwell.witness();
  if (!(blackwell_value(fx.cbar, w.utility, fx.pi) > blackwell_value(fx.c, w.utility, fx.pi))) {
    detail = "witness gap does not verify";
    return false;
  }
  return true;
}

bool criterion_class_refutations(std::string& detail) {
  const ReferenceFixture oblivious = reference_fixture("ex-randd-1");
  if (blackwell_value(oblivious.c, oblivious.utility, oblivious.pi) != parse_rational("1/3") ||
      blackwell_value(oblivious.cbar, oblivious.utility, oblivious.pi) != parse_rational("2/3")) {
    detail = "coordinate-column utility values differ from 1/3 and 2/3";
    return false;
  }
  const auto first = compare_reduced(oblivious.c, oblivious.cbar, UtilityClassTag::Oblivious,
                                     oblivious.pi);
  if (first.answer != DominanceAnswer::DominatedStrictlyAt ||
      first.value_left != parse_rational("1/3") || first.value_right != parse_rational("2/3")) {
    detail = "coordinate-column comparison did not refute at 1/3 vs 2/3";
    return false;
  }

  const ReferenceFixture doubly = reference_fixture("ex-randd-2");
  if (blackwell_value(doubly.c, doubly.utility, doubly.pi) != parse_rational("1/2") ||
      blackwell_value(doubly.cbar, doubly.utility, doubly.pi) != parse_rational("2/3")) {
    detail = "doubly-stochastic utility values differ from 1/2 and 2/3";
    return false;
  }
  const auto second = compare_reduced(doubly.c, doubly.cbar,
                                      UtilityClassTag::DoublyStochasticMultiple, doubly.pi);
  if (second.answer != DominanceAnswer::DominatedStrictlyAt ||
      second.value_left != parse_rational("1/2") || second.value_right != parse_rational("2/3")) {
    detail = "doubly-stochastic comparison did not refute at 1/2 vs 2/3";
    return false;
  }
  return true;
}

bool criterion_incomparable_pair(std::string& detail) {
  const ReferenceFixture fx = reference_fixture("ex-exactsmall");
  if (exact_class_score(fx.c) != parse_rational("3/2") ||
      exact_class_score(fx.cbar) != parse_rational("3/2")) {
    detail = "row-max scores differ from 3/2";
    return false;
  }
  if (blackwell_value(fx.c, fx.utility, fx.pi) != parse_rational("3/4") ||
      blackwell_value(fx.cbar, fx.utility, fx.pi) != parse_rational("3/4")) {
    detail = "per-unit values differ from 3/4";
    return false;
  }
  if (shannon_2x2_exact(fx.c, fx.cbar).answer != Answer::No ||
      shannon_2x2_exact(fx.cbar, fx.c).answer != Answer::No) {
    detail = "2x2 decision did not refuse both directions";
    return false;
  }
  const Verdict cs = cs_check(fx.c, fx.cbar, fx.pi);
  if (cs.answer != Answer::Yes || cs.mixture() == nullptr) {
    detail = "convexified membership missing";
    return false;
  }
  const Mixture& mix = *cs.mixture();
  if (mix.terms.size() != 2 || mix.terms[0].weight != parse_rational("1/2") ||
      mix.terms[1].weight != parse_rational("1/2") || !verify_mixture(fx.c, fx.cbar, mix)) {
    detail = "mixture is not the verified half/half certificate";
    return false;
  }
  return true;
}

bool criterion_family(std::string& detail) {
  const InputDistribution pi = InputDistribution::uniform(2);
  struct Case {
    int e1, e2;
    const char* v1;
    const char* v2;
  };
  for (const Case& cs : {Case{2, 1, "5/4", "1"}, Case{1, 2, "1", "5/4"}}) {
    const MutualGarblingFamily fam = mutual_garbling_family(Rational(cs.e1), Rational(cs.e2));
    if (fam.value1 != parse_rational(cs.v1) || fam.value2 != parse_rational(cs.v2)) {
      detail = "family formulas disagree with pinned values";
      return false;
    }
    if (blackwell_value(fam.c1, fam.utility, pi) != fam.value1 ||
        blackwell_value(fam.c2, fam.utility, pi) != fam.value2) {
      detail = "evaluator disagrees with family formulas";
      return false;
    }
    const Verdict forward = shannon_check(fam.c1, fam.c2, pi);
    const Verdict backward = shannon_check(fam.c2, fam.c1, pi);
    if (forward.answer != Answer::Yes || backward.answer != Answer::Yes ||
        !verify_garbling(fam.c1, fam.c2, *forward.garbling()) ||
        !verify_garbling(fam.c2, fam.c1, *backward.garbling())) {
      detail = "mutual garbling certificates failed";
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  std::string detail;

  detail.clear();
  report(1, "mutual 2x2 pair: pinned values, coding certificate, garbling refutation",
         criterion_mutual_pair_values_and_orders(detail), detail);

  detail.clear();
  report(2, "3x3 pair: coordinate-column and doubly-stochastic refutations",
         criterion_class_refutations(detail), detail);

  detail.clear();
  report(3, "incomparable 2x2 pair: equal scores, double refusal, half/half mixture",
         criterion_incomparable_pair(detail), detail);

  detail.clear();
  report(4, "mutual-garbling family values and certificates", criterion_family(detail), detail);

  const SuiteReport blackwell = blackwell_equivalence_suite(1, 50);
  report(5, "order/usefulness equivalence on 50 seeded pairs", blackwell.ok(),
         suite_detail(blackwell));

  const SuiteReport convexified = cs_equivalence_suite(2, 50);
  report(6, "convexified equivalence on 50 seeded pairs", convexified.ok(),
         suite_detail(convexified));

  const SuiteReport lattice = value_lattice_suite(3, 100);
  report(7, "value lattice on 100 seeded instances", lattice.ok(), suite_detail(lattice));

  const SuiteReport reduction = reduce_identity_suite(4, 100);
  const SuiteReport transport = embedding_transport_suite(5, 50);
  const bool eight = reduction.ok() && transport.ok();
  report(8, "column-merge identity (100) and embedding transport (50)", eight,
         reduction.ok() ? suite_detail(transport) : suite_detail(reduction));

  const SuiteReport rescale = pi_rescale_suite(6, 100);
  report(9, "distribution rescaling equality on 100 seeded triples", rescale.ok(),
         suite_detail(rescale));

  const SuiteReport validation = shannon_2x2_validation_suite(7, 200);
  report(10, "2x2 decision vs grid search and membership on 200 seeded pairs", validation.ok(),
         suite_detail(validation));

  if (failures != 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
