#include "dsq/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "dsq/error.hpp"
#include "dsq/metrics.hpp"
#include "dsq/rng.hpp"
#include "dsq/spectra.hpp"

namespace dsq {

namespace {

using json = nlohmann::ordered_json;

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_short(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

CheckOutcome check(std::string name, bool passed, std::string detail = {}) {
  return {std::move(name), passed, std::move(detail)};
}

void prefix_names(BoundReport& report, const std::string& prefix) {
  for (auto& b : report.bounds) b.name = prefix + b.name;
}

void add_report_checks(VerificationResult& r, const BoundReport& report, const std::string& label) {
  std::string sandwich_detail;
  std::string soundness_detail;
  std::string converse_detail;
  for (const auto& b : report.bounds) {
    if (!brackets(b, report.radius)) {
      sandwich_detail += b.name + "=" + fmt17(b.value) + " vs " + fmt17(report.radius) + "; ";
    }
    if (b.equality_predicted && !b.equality_observed) soundness_detail += b.name + "; ";
    for (const auto& d : b.index_detail) {
      if (d.equality_predicted && !attains(d.value, report.radius)) {
        soundness_detail += b.name + "[i=" + std::to_string(d.index) + "]; ";
      }
    }
    if (b.equality_observed && !b.equality_predicted) {
      if (b.equality_iff) {
        converse_detail += b.name + "; ";
      } else {
        r.findings.push_back(r.graph + ": " + b.name + " attains " + report.target + " = " + fmt17(report.radius) +
                             " without its predicted equality condition");
      }
    }
  }
  r.checks.push_back(check("sandwich:" + label, sandwich_detail.empty(), sandwich_detail));
  r.checks.push_back(check("equality-soundness:" + label, soundness_detail.empty(), soundness_detail));
  r.checks.push_back(check("equality-converse:" + label, converse_detail.empty(), converse_detail));
}

CheckOutcome oracle_check(const std::string& label, const SymMatrix& m, double jacobi_radius) {
  const auto power = power_spectral_radius(m);
  const double diff = std::abs(power.spectral_radius - jacobi_radius);
  const bool ok = diff <= 1e-8 * std::max(1.0, jacobi_radius);
  return check("oracle:" + label, ok,
               "power " + fmt17(power.spectral_radius) + " jacobi " + fmt17(jacobi_radius) +
                   (power.used_fallback ? " (fallback)" : ""));
}

}  // namespace

VerificationResult verify_graph(const Graph& g, const std::string& descriptor, std::optional<FamilySpec> family) {
  const auto start = std::chrono::steady_clock::now();
  VerificationResult r;
  r.graph = descriptor;
  r.n = g.order();
  r.family = family;
  if (family) r.closed_form = try_closed_form_dsl(*family);

  try {
    if (g.order() < 2) throw ContractError("graph needs at least 2 vertices");
    if (!is_connected(g)) throw ContractError("graph not connected");
    const auto dd = all_pairs_distances(g);
    const auto adjacency = adjacency_matrix(g);
    const auto q = signless_laplacian(g);
    const auto dist = distance_matrix(dd);
    const auto dq = distance_signless_laplacian(dd);

    r.q = q_bounds(g, descriptor);
    r.dsl = dsl_bounds(g, descriptor);
    r.distance = distance_radius_bounds(g, descriptor);
    r.q_matrix = matrix_bounds(adjacency, descriptor);
    r.q_matrix.target = "q1";
    prefix_names(r.q_matrix, "Q:");
    r.dq_matrix = matrix_bounds(dist, descriptor);
    r.dq_matrix.target = "delta1Q";
    prefix_names(r.dq_matrix, "DQ:");

    add_report_checks(r, r.q, "q1");
    add_report_checks(r, r.dsl, "delta1Q");
    add_report_checks(r, r.distance, "delta1");
    add_report_checks(r, r.q_matrix, "Q");
    add_report_checks(r, r.dq_matrix, "DQ");

    const auto q_spec = jacobi_eigenvalues(q);
    const auto dq_spec = jacobi_eigenvalues(dq);
    const double n = g.order();

    r.checks.push_back(check("psd:Q", check_psd(q)));
    r.checks.push_back(check("psd:DQ", check_psd(dq)));
    r.checks.push_back(check("majorization:Q", majorization_check(q_spec.eigenvalues, q.diagonal())));
    r.checks.push_back(check("majorization:DQ", majorization_check(dq_spec.eigenvalues, dq.diagonal())));

    const double trace = dq.trace();
    double eig_sum = 0.0;
    for (double x : dq_spec.eigenvalues) eig_sum += x;
    r.checks.push_back(check("trace:DQ", std::abs(eig_sum - trace) <= 1e-8 * std::max(1.0, std::abs(trace)),
                             "sum " + fmt17(eig_sum) + " trace " + fmt17(trace)));

    // Minimum over connected graphs of every eigenvalue is attained by K_n.
    const double tol = bound_tolerance(dq_spec.spectral_radius);
    bool lower_ok = dq_spec.eigenvalues[0] >= 2 * (n - 1) - tol;
    for (std::size_t i = 1; i < dq_spec.eigenvalues.size(); ++i) lower_ok = lower_ok && dq_spec.eigenvalues[i] >= n - 2 - tol;
    r.checks.push_back(check("complete-minimizes-spectrum", lower_ok));
    const bool second_at_minimum = std::abs(dq_spec.eigenvalues[1] - (n - 2)) <= tol;
    r.checks.push_back(check("second-eigenvalue-minimum-only-complete", second_at_minimum == is_complete(g),
                             "delta2Q " + fmt17(dq_spec.eigenvalues[1])));

    r.checks.push_back(oracle_check("A", adjacency, r.q.radius_named("lambda1").value()));
    r.checks.push_back(oracle_check("Q", q, q_spec.spectral_radius));
    r.checks.push_back(oracle_check("D", dist, r.dsl.radius_named("delta1").value()));
    r.checks.push_back(oracle_check("DQ", dq, dq_spec.spectral_radius));

    const double t32 = r.dsl.bound("T3.2-upper").value;
    r.checks.push_back(check("ratio-bound-below-rowsum-bound", r.dsl.bound("T3.8-upper").value <= t32 + bound_tolerance(t32)));
    const double first_index = r.dsl.bound("T3.7").index_detail.front().value;
    r.checks.push_back(check("indexed-first-equals-rowsum-bound", std::abs(first_index - t32) <= bound_tolerance(t32)));

    if (r.closed_form) {
      const double cf = *r.closed_form;
      r.checks.push_back(check("closed-form", std::abs(r.dsl.radius - cf) <= 1e-8 * std::max(1.0, cf),
                               "closed form " + fmt_short(cf) + " computed " + fmt17(r.dsl.radius)));
    }
    r.pass = std::all_of(r.checks.begin(), r.checks.end(), [](const auto& c) { return c.passed; });
  } catch (const std::exception& e) {
    r.error = e.what();
    r.pass = false;
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<RandomCase> random_cases(const RandomSettings& settings) {
  if (settings.n_min < 2 || settings.n_max < settings.n_min) throw ContractError("invalid random order range");
  if (settings.p.empty()) throw ContractError("random settings need at least one edge probability");
  if (settings.count < 0) throw ContractError("count must be nonnegative");
  std::vector<RandomCase> cases;
  const auto span = static_cast<std::uint64_t>(settings.n_max - settings.n_min + 1);
  for (int k = 0; k < settings.count; ++k) {
    std::uint64_t state = settings.seed + static_cast<std::uint64_t>(k);
    const std::uint64_t seed = Xoshiro256::splitmix64(state);
    cases.push_back({settings.n_min + static_cast<int>(seed % span), settings.p[static_cast<std::size_t>(k) % settings.p.size()], seed});
  }
  return cases;
}

SweepSummary summarize(const std::vector<VerificationResult>& results) {
  SweepSummary s;
  for (const auto& r : results) {
    ++s.total;
    (r.pass ? s.passed : s.failed) += 1;
    s.findings += static_cast<int>(r.findings.size());
    for (const auto& c : r.checks)
      if (c.name.rfind("sandwich:", 0) == 0 && !c.passed) {
        ++s.sandwich_failures;
        break;
      }
    if (r.closed_form) {
      ++s.closed_form_total;
      for (const auto& c : r.checks)
        if (c.name == "closed-form" && c.passed) ++s.closed_form_matches;
    }
  }
  return s;
}

SweepResult sweep(const SweepSettings& settings) {
  struct Job {
    std::string descriptor;
    std::optional<FamilySpec> family;
    std::optional<RandomCase> random;
  };
  std::vector<Job> jobs;
  for (const auto& range : settings.families) {
    for (int n = range.n_min; n <= range.n_max; ++n) {
      FamilySpec spec{range.kind, n, range.kind == FamilyKind::CompleteBipartite ? n / 2 : 0};
      jobs.push_back({family_label(spec), spec, std::nullopt});
    }
  }
  if (settings.random) {
    for (const auto& c : random_cases(*settings.random)) {
      jobs.push_back({"G(" + std::to_string(c.n) + "," + fmt_short(c.p) + "," + std::to_string(c.seed) + ")",
                      std::nullopt, c});
    }
  }

  SweepResult out;
  out.results.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      const auto& job = jobs[k];
      try {
        const Graph g = job.family ? generate_family(*job.family) : random_connected(job.random->n, job.random->p, job.random->seed);
        out.results[k] = verify_graph(g, job.descriptor, job.family);
      } catch (const std::exception& e) {
        out.results[k].graph = job.descriptor;
        out.results[k].error = e.what();
      }
    }
  };
  unsigned threads = settings.threads ? settings.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, jobs.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  out.summary = summarize(out.results);
  return out;
}

std::pair<std::string, double> tightest_upper(const BoundReport& report) {
  std::pair<std::string, double> best{"", 0.0};
  for (const auto& b : report.bounds) {
    if (b.side != Side::Upper) continue;
    if (best.first.empty() || b.value < best.second) best = {b.name, b.value};
  }
  return best;
}

ReportFormat report_format_from_string(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "text") return ReportFormat::Text;
  throw ContractError("unknown format '" + name + "'");
}

namespace {

json bound_json(const BoundValue& b, const std::string& target) {
  json j;
  j["name"] = b.name;
  j["target"] = target;
  j["side"] = to_string(b.side);
  j["value"] = b.value;
  j["equality_predicted"] = b.equality_predicted;
  j["equality_observed"] = b.equality_observed;
  j["equality_iff"] = b.equality_iff;
  if (!b.index_detail.empty()) {
    json details = json::array();
    for (const auto& d : b.index_detail) {
      json e;
      e["index"] = d.index;
      if (d.other_index) e["other_index"] = d.other_index;
      e["vertex"] = d.vertex;
      if (d.other_vertex >= 0) e["other_vertex"] = d.other_vertex;
      e["value"] = d.value;
      e["equality_predicted"] = d.equality_predicted;
      details.push_back(std::move(e));
    }
    j["index_detail"] = std::move(details);
  }
  return j;
}

json summary_json(const SweepSummary& s) {
  json j;
  j["total"] = s.total;
  j["passed"] = s.passed;
  j["failed"] = s.failed;
  j["sandwich_failures"] = s.sandwich_failures;
  j["findings"] = s.findings;
  j["closed_form_matches"] = s.closed_form_matches;
  j["closed_form_total"] = s.closed_form_total;
  return j;
}

}  // namespace

std::string to_json(const std::vector<VerificationResult>& results, bool with_timing) {
  json doc;
  json arr = json::array();
  for (const auto& r : results) {
    json j;
    j["graph"] = r.graph;
    j["n"] = r.n;
    if (r.family) j["family"] = {{"kind", to_string(r.family->kind)}, {"n", r.family->n}, {"a", r.family->a}};
    if (!r.error.empty()) j["error"] = r.error;
    if (r.error.empty()) {
      j["q1"] = r.q.radius;
      j["lambda1"] = r.q.radius_named("lambda1").value_or(0.0);
      j["delta1Q"] = r.dsl.radius;
      j["delta1"] = r.distance.radius;
    }
    if (r.closed_form) j["closed_form"] = *r.closed_form;
    json bounds = json::array();
    json tightest = json::object();
    for (const auto* report : r.reports()) {
      if (report->target.empty()) continue;
      for (const auto& b : report->bounds) bounds.push_back(bound_json(b, report->target));
    }
    if (r.error.empty()) {
      auto [name, value] = tightest_upper(r.dsl);
      tightest = {{"name", name}, {"value", value}};
    }
    j["bounds"] = std::move(bounds);
    j["tightest_upper_delta1Q"] = std::move(tightest);
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.passed}, {"detail", c.detail}});
    j["checks"] = std::move(checks);
    j["findings"] = r.findings;
    j["pass"] = r.pass;
    if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
    arr.push_back(std::move(j));
  }
  doc["results"] = std::move(arr);
  doc["summary"] = summary_json(summarize(results));
  return doc.dump(2) + "\n";
}

std::string to_csv(const std::vector<VerificationResult>& results) {
  std::string out = "graph,bound,value,side,target,radius,equality_predicted,equality_observed,brackets\n";
  for (const auto& r : results) {
    for (const auto* report : r.reports()) {
      if (report->target.empty()) continue;
      for (const auto& b : report->bounds) {
        out += r.graph.find(',') == std::string::npos ? r.graph : "\"" + r.graph + "\"";
        out += "," + b.name + "," + fmt17(b.value) + "," + to_string(b.side) + "," + report->target + "," +
               fmt17(report->radius) + "," + (b.equality_predicted ? "true" : "false") + "," +
               (b.equality_observed ? "true" : "false") + "," + (brackets(b, report->radius) ? "true" : "false") + "\n";
      }
    }
  }
  return out;
}

std::string to_text(const std::vector<VerificationResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    out << "== " << r.graph << " (n = " << r.n << ")\n";
    if (!r.error.empty()) {
      out << "error: " << r.error << "\n\n";
      continue;
    }
    out << "q1 = " << fmt_short(r.q.radius) << "  lambda1 = " << fmt_short(r.q.radius_named("lambda1").value_or(0.0))
        << "  delta1Q = " << fmt_short(r.dsl.radius) << "  delta1 = " << fmt_short(r.distance.radius) << "\n";
    if (r.closed_form) {
      const bool match = std::abs(r.dsl.radius - *r.closed_form) <= 1e-8 * std::max(1.0, *r.closed_form);
      out << "closed form: " << fmt_short(*r.closed_form) << (match ? " (match)" : " (MISMATCH)") << "\n";
    }
    for (const auto* report : r.reports()) {
      out << "  bounds on " << report->target << " = " << fmt_short(report->radius) << "\n";
      for (const auto& b : report->bounds) {
        char line[160];
        std::snprintf(line, sizeof line, "    %-16s %-5s %20.12f  %s predicted %s observed%s\n", b.name.c_str(),
                      to_string(b.side).c_str(), b.value, b.equality_predicted ? "✓" : "✗",
                      b.equality_observed ? "✓" : "✗", brackets(b, report->radius) ? "" : "  VIOLATED");
        out << line;
      }
    }
    int failed = 0;
    for (const auto& c : r.checks)
      if (!c.passed) {
        ++failed;
        out << "  check failed: " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
      }
    out << "  checks: " << r.checks.size() - static_cast<std::size_t>(failed) << "/" << r.checks.size() << " passed\n";
    for (const auto& f : r.findings) out << "  finding: " << f << "\n";
    out << (r.pass ? "PASS" : "FAIL") << "\n\n";
  }
  const auto s = summarize(results);
  out << "summary: " << s.passed << "/" << s.total << " passed, " << s.sandwich_failures << " sandwich failures, "
      << s.findings << " findings\n";
  return out.str();
}

std::string render(const std::vector<VerificationResult>& results, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: return to_json(results);
    case ReportFormat::Csv: return to_csv(results);
    case ReportFormat::Text: return to_text(results);
  }
  return {};
}

void write_report(const std::vector<VerificationResult>& results, ReportFormat format, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open report file " + path.string());
  file << render(results, format);
  file.close();
  if (!file) throw std::runtime_error("failed writing report file " + path.string());
}

std::vector<ParsedResult> read_report_json(const std::string& text) {
  std::vector<ParsedResult> out;
  try {
    const auto doc = json::parse(text);
    for (const auto& j : doc.at("results")) {
      ParsedResult r;
      r.graph = j.at("graph").get<std::string>();
      auto opt = [&](const char* key) -> std::optional<double> {
        if (j.contains(key)) return j.at(key).get<double>();
        return std::nullopt;
      };
      r.q1 = opt("q1");
      r.lambda1 = opt("lambda1");
      r.delta1Q = opt("delta1Q");
      r.delta1 = opt("delta1");
      for (const auto& b : j.at("bounds")) {
        r.bounds.push_back({b.at("name").get<std::string>(), b.at("side").get<std::string>(), b.at("value").get<double>(),
                            b.at("equality_predicted").get<bool>(), b.at("equality_observed").get<bool>()});
      }
      r.pass = j.at("pass").get<bool>();
      out.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("report schema error: ") + e.what());
  }
  return out;
}

std::string strip_timing(const std::string& json_text) {
  auto doc = json::parse(json_text);
  for (auto& r : doc.at("results")) r.erase("elapsed_ms");
  return doc.dump(2);
}

}  // namespace dsq
