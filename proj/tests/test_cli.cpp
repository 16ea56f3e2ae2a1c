#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dsq/cli.hpp"
#include "dsq/harness.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = dsq::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("family command") {
  auto k6 = run({"family", "--kind", "complete", "--n", "6"});
  CHECK(k6.code == 0);
  CHECK(k6.out.find("closed form: 10 (match)") != std::string::npos);

  auto p3 = run({"family", "--kind", "path", "--n", "3", "--format", "json"});
  CHECK(p3.code == 0);
  auto parsed = dsq::read_report_json(p3.out);
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0].graph == "P3");
  CHECK(*parsed[0].delta1Q == doctest::Approx((7.0 + std::sqrt(17.0)) / 2.0));

  auto kab = run({"family", "--kind", "complete-bipartite", "--n", "8", "--format", "csv"});
  CHECK(kab.code == 0);
  CHECK(kab.out.find("\"K4,4\",T3.2-upper,20,") != std::string::npos);
}

TEST_CASE("analyze command") {
  const auto path = std::filesystem::temp_directory_path() / "dsq_cli_c5.txt";
  {
    std::ofstream f(path);
    f << "# five-cycle\n5\n0 1\n1 2\n2 3\n3 4\n4 0\n";
  }
  auto ok = run({"analyze", path.string(), "--format", "json"});
  CHECK(ok.code == 0);
  CHECK(*dsq::read_report_json(ok.out).at(0).delta1Q == doctest::Approx(12.0));

  {
    std::ofstream f(path);
    f << "4\n0 1\n2 3\n";
  }
  auto split = run({"analyze", path.string()});
  CHECK(split.code == 1);
  CHECK(split.out.find("graph not connected") != std::string::npos);

  {
    std::ofstream f(path);
    f << "3\n0 x\n";
  }
  auto bad = run({"analyze", path.string()});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 2") != std::string::npos);
  std::filesystem::remove(path);

  auto missing = run({"analyze", "/nonexistent/graph.txt"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("cannot open") != std::string::npos);
}

TEST_CASE("counterexample command") {
  auto s5 = run({"counterexample", "--n", "5"});
  CHECK(s5.code == 0);
  CHECK(s5.out.find("star S_5") != std::string::npos);
  CHECK(s5.out.find("equality                             holds") != std::string::npos);
  CHECK(run({"counterexample", "--n", "2"}).code == 2);
}

TEST_CASE("verify command") {
  auto a = run({"verify", "--random", "--n-min", "6", "--n-max", "9", "--p", "0.3,0.7", "--count", "12", "--seed", "4"});
  auto b = run({"verify", "--random", "--n-min", "6", "--n-max", "9", "--p", "0.3,0.7", "--count", "12", "--seed", "4",
                "--threads", "1"});
  CHECK(a.code == 0);
  CHECK(dsq::strip_timing(a.out) == dsq::strip_timing(b.out));
  CHECK(dsq::read_report_json(a.out).size() == 12);

  auto fam = run({"verify", "--families", "--max-n", "6", "--format", "csv", "--no-timing"});
  CHECK(fam.code == 0);
  CHECK(fam.out.rfind("graph,bound,", 0) == 0);

  const auto out = std::filesystem::temp_directory_path() / "dsq_cli_report.json";
  auto written = run({"verify", "--families", "--max-n", "4", "--out", out.string()});
  CHECK(written.code == 0);
  CHECK(std::filesystem::exists(out));
  std::filesystem::remove(out);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"family", "--kind", "wheel", "--n", "5"}).code == 2);
  CHECK(run({"family", "--kind", "cycle", "--n", "5", "--bogus"}).code == 2);
  CHECK(run({"verify", "--max-n", "5"}).code == 2);
}
