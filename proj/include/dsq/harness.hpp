#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dsq/bounds.hpp"
#include "dsq/graph.hpp"

namespace dsq {

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Everything known about one verified graph.
struct VerificationResult {
  std::string graph;                   ///< descriptor, e.g. "K5" or "G(12,0.5,#3)"
  int n = 0;
  std::optional<FamilySpec> family;
  std::optional<double> closed_form;   ///< exact delta1Q when the family has one
  BoundReport q;          ///< degree-form bounds on q_1
  BoundReport dsl;        ///< bounds on the distance signless Laplacian radius
  BoundReport distance;   ///< transmission bounds on the distance radius
  BoundReport q_matrix;   ///< generic matrix bounds on Q = A + diag(degrees), names prefixed "Q:"
  BoundReport dq_matrix;  ///< generic matrix bounds on DQ = D + diag(transmissions), names prefixed "DQ:"
  std::vector<CheckOutcome> checks;
  /// Observed equalities the bound does not predict where only the forward
  /// direction is asserted. Informational only.
  std::vector<std::string> findings;
  bool pass = false;
  std::string error;                   ///< set when the graph could not be verified
  double elapsed_ms = 0.0;

  std::vector<const BoundReport*> reports() const { return {&q, &dsl, &distance, &q_matrix, &dq_matrix}; }
};

/// Runs every bound report and property check on g. A disconnected or trivial
/// graph yields a failed result with `error` set.
VerificationResult verify_graph(const Graph& g, const std::string& descriptor,
                                std::optional<FamilySpec> family = std::nullopt);

struct FamilyRange {
  FamilyKind kind;
  int n_min;
  int n_max;
};

struct RandomSettings {
  int n_min = 10;
  int n_max = 20;
  std::vector<double> p{0.5};
  int count = 0;
  std::uint64_t seed = 1;
};

struct SweepSettings {
  std::vector<FamilyRange> families;
  std::optional<RandomSettings> random;
  unsigned threads = 0;  ///< 0: hardware concurrency
};

/// Per-graph parameters of the random corpus. Graph k uses seed
/// splitmix64(base seed + k), order n_min + (that seed mod span) and edge
/// probability p[k mod |p|].
struct RandomCase {
  int n;
  double p;
  std::uint64_t seed;
};
std::vector<RandomCase> random_cases(const RandomSettings& settings);

struct SweepSummary {
  int total = 0;
  int passed = 0;
  int failed = 0;
  int sandwich_failures = 0;
  int findings = 0;
  int closed_form_matches = 0;
  int closed_form_total = 0;
};

struct SweepResult {
  std::vector<VerificationResult> results;  ///< input order
  SweepSummary summary;
};

/// Families first (in the order given, each n ascending), then the random
/// corpus. Graphs are verified on a worker pool; results keep input order.
SweepResult sweep(const SweepSettings& settings);
SweepSummary summarize(const std::vector<VerificationResult>& results);

/// Tightest upper bound of a report: the smallest upper value and its name.
std::pair<std::string, double> tightest_upper(const BoundReport& report);

enum class ReportFormat { Json, Csv, Text };
ReportFormat report_format_from_string(const std::string& name);

/// JSON document {"results": [...], "summary": {...}}. `with_timing` controls
/// the elapsed_ms fields.
std::string to_json(const std::vector<VerificationResult>& results, bool with_timing = true);
/// Header plus one row per (graph, bound); floats with 17 significant digits.
std::string to_csv(const std::vector<VerificationResult>& results);
std::string to_text(const std::vector<VerificationResult>& results);
std::string render(const std::vector<VerificationResult>& results, ReportFormat format);

/// Throws std::runtime_error naming the path on I/O failure.
void write_report(const std::vector<VerificationResult>& results, ReportFormat format,
                  const std::filesystem::path& path);

/// The subset of a JSON report the schema guarantees.
struct ParsedBound {
  std::string name;
  std::string side;
  double value = 0.0;
  bool equality_predicted = false;
  bool equality_observed = false;
};
struct ParsedResult {
  std::string graph;
  std::optional<double> q1, lambda1, delta1Q, delta1;
  std::vector<ParsedBound> bounds;
  bool pass = false;
};
/// Throws std::runtime_error on schema violations.
std::vector<ParsedResult> read_report_json(const std::string& text);

/// Removes every "elapsed_ms" key so reports can be compared for determinism.
std::string strip_timing(const std::string& json_text);

}  // namespace dsq
