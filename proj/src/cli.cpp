#include "dsq/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "dsq/bounds.hpp"
#include "dsq/error.hpp"
#include "dsq/harness.hpp"

namespace dsq::cli {

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string fmt(double x, int digits = 10) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

int emit(const std::vector<VerificationResult>& results, ReportFormat format, std::ostream& out) {
  out << render(results, format);
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; }) ? 0 : kExitFail;
}

int run_counterexample(int n, std::ostream& out) {
  const auto c = counterexample_star(n);
  const bool q1_ok = std::abs(c.q1 - n) <= 1e-8 * n;
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  out << "star S_" << n << "\n"
      << "  q1                                   " << fmt(c.q1) << (q1_ok ? "  (= n ✓)" : "  (!= n ✗)") << "\n"
      << "  bipartite semi-regular               " << yes(c.bipartite_semiregular) << "\n"
      << "  regular                              " << yes(c.regular) << "\n"
      << "  pairwise bound, s_i = sum of neighbour degrees   " << fmt(c.pairwise_bound) << "\n"
      << "  pairwise bound, s_1 = n-1, s_k = 2n-3            " << fmt(c.quoted_pairwise_bound) << "\n"
      << "  gap (bound - q1)                     " << fmt(c.pairwise_bound - c.q1) << "\n"
      << "  equality                             " << (c.equality_observed ? "holds" : "fails") << "\n"
      << "  condition 'regular or bipartite semi-regular'  "
      << (c.semiregular_condition_correct ? "consistent ✓" : "contradicted ✗") << "\n"
      << "  condition 'regular'                            "
      << (c.regular_condition_correct ? "consistent ✓" : "contradicted ✗") << "\n";
  return q1_ok ? 0 : kExitFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral radius bounds for signless and distance signless Laplacians", "dsq"};
  app.require_subcommand(1);

  std::string format_name = "text";
  const std::vector<std::string> formats{"text", "json", "csv"};

  auto* analyze = app.add_subcommand("analyze", "Bound report for a graph read from an edge-list file");
  std::string input_path;
  analyze->add_option("file", input_path, "Edge-list file")->required();
  analyze->add_option("--format", format_name, "text, json or csv")->check(CLI::IsMember(formats));

  auto* family = app.add_subcommand("family", "Bound report for a named graph family");
  std::string kind_name;
  int family_n = 0;
  int family_a = 0;
  family->add_option("--kind", kind_name, "complete, cycle, path, star or complete-bipartite")
      ->required()
      ->check(CLI::IsMember({"complete", "cycle", "path", "star", "complete-bipartite"}));
  family->add_option("--n", family_n, "Order")->required();
  family->add_option("--a", family_a, "First part size (complete-bipartite; default n/2)");
  family->add_option("--format", format_name, "text, json or csv")->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "Verification sweep over families or a random corpus");
  bool use_random = false;
  bool use_families = false;
  bool no_timing = false;
  RandomSettings random;
  int max_n = 30;
  std::string out_path;
  std::string verify_format = "json";
  unsigned threads = 0;
  auto* random_flag = verify->add_flag("--random", use_random, "Seeded random connected graphs");
  auto* families_flag = verify->add_flag("--families", use_families, "K_n, C_n, P_n, S_n, K_{n/2,n/2}");
  random_flag->excludes(families_flag);
  verify->add_option("--n-min", random.n_min, "Smallest order")->needs(random_flag);
  verify->add_option("--n-max", random.n_max, "Largest order")->needs(random_flag);
  verify->add_option("--p", random.p, "Edge probability (repeatable)")->needs(random_flag)->delimiter(',');
  verify->add_option("--count", random.count, "Number of graphs")->needs(random_flag);
  verify->add_option("--seed", random.seed, "Base seed")->needs(random_flag);
  verify->add_option("--max-n", max_n, "Largest family order")->needs(families_flag);
  verify->add_option("--out", out_path, "Report file");
  verify->add_option("--format", verify_format, "Report format: json or csv")->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--threads", threads, "Worker threads (0: all cores)");
  verify->add_flag("--no-timing", no_timing, "Omit elapsed_ms fields from JSON reports");

  auto* counter = app.add_subcommand("counterexample", "Star graph against the degree-based pairwise bound");
  int counter_n = 4;
  counter->add_option("--n", counter_n, "Order of the star (>= 3)")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      std::ifstream in(input_path);
      if (!in) {
        err << "error: cannot open " << input_path << "\n";
        return kExitUsage;
      }
      Graph g = parse_edge_list(in);
      const auto label = std::filesystem::path(input_path).stem().string();
      return emit({verify_graph(g, label)}, report_format_from_string(format_name), out);
    }
    if (family->parsed()) {
      FamilySpec spec{family_kind_from_string(kind_name), family_n, family_a};
      if (spec.kind == FamilyKind::CompleteBipartite && family_a == 0) spec.a = family_n / 2;
      const Graph g = generate_family(spec);
      return emit({verify_graph(g, family_label(spec), spec)}, report_format_from_string(format_name), out);
    }
    if (verify->parsed()) {
      if (!use_random && !use_families) {
        err << "error: verify needs --random or --families\n\n" << verify->help();
        return kExitUsage;
      }
      SweepSettings settings;
      settings.threads = threads;
      if (use_random) settings.random = random;
      if (use_families) {
        settings.families = {{FamilyKind::Complete, 2, max_n},
                             {FamilyKind::Cycle, 3, max_n},
                             {FamilyKind::Path, 2, max_n},
                             {FamilyKind::Star, 3, max_n},
                             {FamilyKind::CompleteBipartite, 2, max_n}};
      }
      const auto result = sweep(settings);
      const auto format = report_format_from_string(verify_format);
      const std::string report = format == ReportFormat::Json ? to_json(result.results, !no_timing) : to_csv(result.results);
      if (out_path.empty()) {
        out << report;
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!(file << report)) {
          err << "error: cannot write " << out_path << "\n";
          return kExitUsage;
        }
        const auto& s = result.summary;
        out << "verified " << s.total << " graphs: " << s.passed << " passed, " << s.failed << " failed, "
            << s.sandwich_failures << " sandwich failures, " << s.findings << " findings\n"
            << "report written to " << out_path << "\n";
      }
      return result.summary.failed == 0 ? 0 : kExitFail;
    }
    if (counter->parsed()) return run_counterexample(counter_n, out);
  } catch (const ParseError& e) {
    err << "error: " << input_path << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace dsq::cli
