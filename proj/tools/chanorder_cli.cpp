// Command-line front door: load channels, utilities and distributions from
// JSON files, compute maximal expected utilities, decide order relations
// with certificates, compare channels over utility classes, and reproduce
// the pinned reference results.

#include <chanorder/chanorder.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace chanorder;

struct GlobalOptions {
  std::size_t max_enum = kDefaultMaxEnum;
  bool allow_unnormalized = false;
};

// Distribution precedence: an explicit --dist path, then the channel file's
// own input_dist, then uniform. The literal "uniform" forces uniform.
InputDistribution resolve_distribution(const std::string& dist_arg, const ChannelFile& file,
                                       const GlobalOptions& opts) {
  if (dist_arg.empty()) {
    if (file.input_dist) return *file.input_dist;
    return InputDistribution::uniform(file.matrix.cols());
  }
  if (dist_arg == "uniform") return InputDistribution::uniform(file.matrix.cols());
  return load_distribution(dist_arg, opts.allow_unnormalized);
}

int run_value(const std::string& channel_path, const std::string& utility_path,
              const std::string& dist_arg, const std::string& space, const GlobalOptions& opts) {
  const ChannelFile file = load_channel_file(channel_path, opts.allow_unnormalized);
  const Channel c(file.matrix);
  const UtilityMatrix u = load_utility(utility_path);
  const InputDistribution pi = resolve_distribution(dist_arg, file, opts);

  if (space == "blackwell") {
    const PolicyOptimum opt = blackwell_optimum(c, u, pi);
    if (expected_utility(opt.strategy, c, u, pi) != opt.value) {
      throw std::logic_error("strategy does not achieve the reported value");
    }
    std::cout << "value = " << to_string(opt.value) << '\n';
    std::cout << "strategy A:\n" << format_matrix(opt.strategy);
    return 0;
  }
  const PreGarblingOptimum opt = space == "shannon" ? shannon_optimum(c, u, pi, opts.max_enum)
                                                    : cs_optimum(c, u, pi, opts.max_enum);
  if (expected_utility_pre(opt.strategy, opt.pre_garbling, c, u, pi) != opt.value) {
    throw std::logic_error("strategy does not achieve the reported value");
  }
  std::cout << "value = " << to_string(opt.value) << '\n';
  std::cout << "strategy A:\n" << format_matrix(opt.strategy);
  std::cout << "pre-garbling R:\n" << format_matrix(opt.pre_garbling);
  return 0;
}

int run_order(const std::string& kind, const std::string& a_path, const std::string& b_path,
              const std::string& dist_arg, const GlobalOptions& opts) {
  const ChannelFile a_file = load_channel_file(a_path, opts.allow_unnormalized);
  const ChannelFile b_file = load_channel_file(b_path, opts.allow_unnormalized);
  const Channel a(a_file.matrix);
  const Channel b(b_file.matrix);
  const InputDistribution pi = resolve_distribution(dist_arg, a_file, opts);

  Verdict verdict;
  if (kind == "blackwell") {
    verdict = blackwell_check(a, b, pi);
  } else if (kind == "shannon") {
    verdict = shannon_check(a, b, pi, opts.max_enum);
  } else {
    verdict = cs_check(a, b, pi, opts.max_enum);
  }
  std::cout << format_verdict(a, b, verdict);
  return 0;
}

int run_compare(const std::string& cls, const std::string& a_path, const std::string& b_path,
                const std::string& dist_arg, const GlobalOptions& opts) {
  const ChannelFile a_file = load_channel_file(a_path, opts.allow_unnormalized);
  const ChannelFile b_file = load_channel_file(b_path, opts.allow_unnormalized);
  const Channel a(a_file.matrix);
  const Channel b(b_file.matrix);
  const InputDistribution pi = resolve_distribution(dist_arg, a_file, opts);

  UtilityClassTag tag = UtilityClassTag::Indifferent;
  if (cls == "exact") tag = UtilityClassTag::Exact;
  if (cls == "oblivious") tag = UtilityClassTag::Oblivious;
  if (cls == "doubly") tag = UtilityClassTag::DoublyStochasticMultiple;

  std::cout << format_comparison(compare_reduced(a, b, tag, pi, opts.max_enum));
  return 0;
}

// --- reproduction -----------------------------------------------------------

struct ReproContext {
  std::string corrupt_id;
  int mismatches = 0;
};

void repro_row(ReproContext& ctx, const std::string& id, const std::string& what,
               const std::string& expected, const std::string& computed) {
  std::string shown = expected;
  if (ctx.corrupt_id == id) shown += " (corrupted)";
  const bool pass = (ctx.corrupt_id != id) && expected == computed;
  if (!pass) ++ctx.mismatches;
  std::cout << (pass ? "PASS" : "FAIL") << "  " << id << "  " << what << "  expected " << shown
            << "  computed " << computed << '\n';
}

std::string answer_name(Answer answer) {
  switch (answer) {
    case Answer::Yes:
      return "YES";
    case Answer::No:
      return "NO";
    case Answer::Unknown:
      return "UNKNOWN";
  }
  return "UNKNOWN";
}

int run_repro(const GlobalOptions& opts, const std::string& corrupt_id) {
  ReproContext ctx{corrupt_id, 0};

  {
    const ReferenceFixture fx = reference_fixture("ex-rauh");
    repro_row(ctx, fx.id, "value(C)", to_string(fx.expected_left),
              to_string(blackwell_value(fx.c, fx.utility, fx.pi)));
    repro_row(ctx, fx.id, "value(C-bar)", to_string(fx.expected_right),
              to_string(blackwell_value(fx.cbar, fx.utility, fx.pi)));
    const Verdict shannon = shannon_check(fx.c, fx.cbar, fx.pi, opts.max_enum);
    const bool shannon_ok = shannon.answer == Answer::Yes && shannon.garbling() != nullptr &&
                            verify_garbling(fx.c, fx.cbar, *shannon.garbling());
    repro_row(ctx, fx.id, "shannon order", "YES(verified)",
              shannon_ok ? "YES(verified)" : answer_name(shannon.answer));
    const Verdict blackwell = blackwell_check(fx.c, fx.cbar, fx.pi);
    const bool witness_ok =
        blackwell.answer == Answer::No && blackwell.witness() != nullptr &&
        blackwell.witness()->value_right > blackwell.witness()->value_left;
    repro_row(ctx, fx.id, "blackwell order", "NO(witness verified)",
              witness_ok ? "NO(witness verified)" : answer_name(blackwell.answer));
  }

  {
    const ReferenceFixture fx = reference_fixture("ex-randd-1");
    repro_row(ctx, fx.id, "value(C)", to_string(fx.expected_left),
              to_string(blackwell_value(fx.c, fx.utility, fx.pi)));
    repro_row(ctx, fx.id, "value(C-bar)", to_string(fx.expected_right),
              to_string(blackwell_value(fx.cbar, fx.utility, fx.pi)));
    const auto cmp =
        compare_reduced(fx.c, fx.cbar, UtilityClassTag::Oblivious, fx.pi, opts.max_enum);
    repro_row(ctx, fx.id, "oblivious comparison", "DOMINATED_STRICTLY(1/3 vs 2/3)",
              cmp.answer == DominanceAnswer::DominatedStrictlyAt
                  ? "DOMINATED_STRICTLY(" + to_string(cmp.value_left) + " vs " +
                        to_string(cmp.value_right) + ")"
                  : "other");
  }

  {
    const ReferenceFixture fx = reference_fixture("ex-randd-2");
    repro_row(ctx, fx.id, "value(C)", to_string(fx.expected_left),
              to_string(blackwell_value(fx.c, fx.utility, fx.pi)));
    repro_row(ctx, fx.id, "value(C-bar)", to_string(fx.expected_right),
              to_string(blackwell_value(fx.cbar, fx.utility, fx.pi)));
    const auto cmp = compare_reduced(fx.c, fx.cbar, UtilityClassTag::DoublyStochasticMultiple,
                                     fx.pi, opts.max_enum);
    repro_row(ctx, fx.id, "doubly comparison", "DOMINATED_STRICTLY(1/2 vs 2/3)",
              cmp.answer == DominanceAnswer::DominatedStrictlyAt
                  ? "DOMINATED_STRICTLY(" + to_string(cmp.value_left) + " vs " +
                        to_string(cmp.value_right) + ")"
                  : "other");
  }

  {
    const ReferenceFixture fx = reference_fixture("ex-exactsmall");
    repro_row(ctx, fx.id, "row-max score(C)", "3/2", to_string(exact_class_score(fx.c)));
    repro_row(ctx, fx.id, "row-max score(C-bar)", "3/2", to_string(exact_class_score(fx.cbar)));
    repro_row(ctx, fx.id, "shannon order both ways", "NO,NO",
              answer_name(shannon_2x2_exact(fx.c, fx.cbar).answer) + "," +
                  answer_name(shannon_2x2_exact(fx.cbar, fx.c).answer));
    const Verdict cs = cs_check(fx.c, fx.cbar, fx.pi, opts.max_enum);
    const bool cs_ok = cs.answer == Answer::Yes && cs.mixture() != nullptr &&
                       verify_mixture(fx.c, fx.cbar, *cs.mixture());
    repro_row(ctx, fx.id, "convexified order", "YES(verified)",
              cs_ok ? "YES(verified)" : answer_name(cs.answer));
    const auto exact_fwd =
        compare_reduced(fx.c, fx.cbar, UtilityClassTag::Exact, fx.pi, opts.max_enum);
    const auto exact_bwd =
        compare_reduced(fx.cbar, fx.c, UtilityClassTag::Exact, fx.pi, opts.max_enum);
    repro_row(ctx, fx.id, "exact class both ways", "EQUAL",
              exact_fwd.answer == DominanceAnswer::Dominates &&
                      exact_bwd.answer == DominanceAnswer::Dominates
                  ? "EQUAL"
                  : "other");
  }

  {
    const InputDistribution pi = InputDistribution::uniform(2);
    const MutualGarblingFamily fam = mutual_garbling_family(Rational(2), Rational(1));
    repro_row(ctx, "lemma-2x2", "values at (2,1)", "5/4,1",
              to_string(blackwell_value(fam.c1, fam.utility, pi)) + "," +
                  to_string(blackwell_value(fam.c2, fam.utility, pi)));
    const MutualGarblingFamily swapped = mutual_garbling_family(Rational(1), Rational(2));
    repro_row(ctx, "lemma-2x2", "values at (1,2)", "1,5/4",
              to_string(blackwell_value(swapped.c1, swapped.utility, pi)) + "," +
                  to_string(blackwell_value(swapped.c2, swapped.utility, pi)));
    const Verdict fwd = shannon_check(fam.c1, fam.c2, pi, opts.max_enum);
    const Verdict bwd = shannon_check(fam.c2, fam.c1, pi, opts.max_enum);
    repro_row(ctx, "lemma-2x2", "mutual shannon order", "YES,YES",
              answer_name(fwd.answer) + "," + answer_name(bwd.answer));
  }

  {
    const ReferenceFixture fx = reference_fixture("thm-embed");
    repro_row(ctx, fx.id, "value(C)", to_string(fx.expected_left),
              to_string(blackwell_value(fx.c, fx.utility, fx.pi)));
    const Verdict shannon = shannon_check(fx.c, fx.cbar, fx.pi, opts.max_enum);
    repro_row(ctx, fx.id, "shannon order of embeddings", "YES", answer_name(shannon.answer));
  }

  const auto suite_row = [&ctx](const std::string& id, const SuiteReport& report) {
    repro_row(ctx, id, "failures", "0", std::to_string(report.failures.size()));
  };
  suite_row("suite-blackwell-equivalence", blackwell_equivalence_suite(1, 50));
  suite_row("suite-cs-equivalence", cs_equivalence_suite(2, 50));
  suite_row("suite-value-lattice", value_lattice_suite(3, 100));
  suite_row("suite-reduce-identity", reduce_identity_suite(4, 100));
  suite_row("suite-embedding-transport", embedding_transport_suite(5, 50));
  suite_row("suite-pi-rescale", pi_rescale_suite(6, 100));
  suite_row("suite-2x2-validation", shannon_2x2_validation_suite(7, 200));

  if (ctx.mismatches != 0) {
    std::cout << ctx.mismatches << " mismatch(es)\n";
    return 1;
  }
  std::cout << "all rows match\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact comparison of finite channels: values, order relations, certificates"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--max-enum", opts.max_enum,
                 "largest alphabet size for deterministic enumerations (default 6)");
  app.add_flag("--allow-unnormalized-dist", opts.allow_unnormalized,
               "accept input distributions that do not sum to 1 (positivity still required)");

  std::string channel_path;
  std::string utility_path;
  std::string a_path;
  std::string b_path;
  std::string dist_arg;
  std::string space = "blackwell";
  std::string kind = "blackwell";
  std::string cls = "exact";
  std::string corrupt_id;

  CLI::App* value = app.add_subcommand("value", "maximal expected utility over a policy space");
  value->fallthrough();
  value->add_option("channel", channel_path, "channel JSON file")->required();
  value->add_option("utility", utility_path, "utility JSON file")->required();
  value->add_option("--dist", dist_arg, "distribution JSON file or \"uniform\"");
  value->add_option("--space", space, "blackwell | shannon | cshannon")
      ->check(CLI::IsMember({"blackwell", "shannon", "cshannon"}));

  CLI::App* order = app.add_subcommand("order", "decide an order relation with certificates");
  order->fallthrough();
  order->add_option("a", a_path, "channel A JSON file")->required();
  order->add_option("b", b_path, "channel B JSON file")->required();
  order->add_option("--dist", dist_arg, "distribution JSON file or \"uniform\"");
  order->add_option("--kind", kind, "blackwell | shannon | cshannon")
      ->check(CLI::IsMember({"blackwell", "shannon", "cshannon"}));

  CLI::App* compare = app.add_subcommand("compare", "reduced dominance over a utility class");
  compare->fallthrough();
  compare->add_option("a", a_path, "channel A JSON file")->required();
  compare->add_option("b", b_path, "channel B JSON file")->required();
  compare->add_option("--dist", dist_arg, "distribution JSON file or \"uniform\"");
  compare->add_option("--class", cls, "indifferent | exact | oblivious | doubly")
      ->check(CLI::IsMember({"indifferent", "exact", "oblivious", "doubly"}));

  CLI::App* repro = app.add_subcommand("repro", "recompute every pinned reference result");
  repro->fallthrough();
  repro->add_option("--corrupt", corrupt_id, "")->group("");  // test hook, hidden from help

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*value) return run_value(channel_path, utility_path, dist_arg, space, opts);
    if (*order) return run_order(kind, a_path, b_path, dist_arg, opts);
    if (*compare) return run_compare(cls, a_path, b_path, dist_arg, opts);
    if (*repro) return run_repro(opts, corrupt_id);
  } catch (const chanorder::enumeration_limit_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
