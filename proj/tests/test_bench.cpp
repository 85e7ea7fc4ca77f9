#include <doctest.h>

#include <cmath>
#include <sstream>

#include "braidwp/bench.hpp"

using namespace braidwp;

namespace {

std::string verdict_columns(const BenchReport& r) {
  std::string out;
  for (const auto& row : r.rows) {
    out += row.operation + "," + std::to_string(row.n) + "," + std::to_string(row.size) + "," +
           std::to_string(row.l1) + "," + std::to_string(row.l2) + "," + row.verdict + "\n";
  }
  return out;
}

}  // namespace

TEST_CASE("fit_loglog_slope") {
  std::vector<std::pair<double, double>> linear, quadratic;
  for (double x = 1; x <= 64; x *= 2) {
    linear.emplace_back(x, 3 * x);
    quadratic.emplace_back(x, 0.5 * x * x);
  }
  CHECK(*fit_loglog_slope(linear) == doctest::Approx(1.0));
  CHECK(*fit_loglog_slope(quadratic) == doctest::Approx(2.0));
  CHECK_FALSE(fit_loglog_slope({{1, 1}}));
  CHECK_FALSE(fit_loglog_slope({{1, 1}, {2, 2}, {4, 4}}));  // two doublings
}

TEST_CASE("codec bench: small sizes, zero size skipped, round trips hold") {
  CodecBenchConfig cfg;
  cfg.path_links = {0, 500, 1000, 2000, 4000, 8000};
  cfg.word_letters = {0, 101, 201, 401, 801, 1601};
  cfg.reps = 3;
  const auto r = bench_codec(cfg);
  CHECK(r.rows.size() == 10);
  CHECK(r.notices.size() == 2);  // the two zero sizes
  for (const auto& row : r.rows) CHECK(row.verdict == "roundtrip-ok");
  REQUIRE(r.slope("path_to_syntactic"));
  REQUIRE(r.slope("syntactic_to_path"));
  CHECK(std::isfinite(*r.slope("path_to_syntactic")));
}

TEST_CASE("multiply bench: empty grid gives an empty report") {
  MultiplyBenchConfig cfg;
  cfg.sizes.clear();
  const auto r = bench_multiply(cfg);
  CHECK(r.rows.empty());
  CHECK(r.slopes.empty());
}

TEST_CASE("multiply bench verdicts") {
  MultiplyBenchConfig cfg;
  cfg.sizes = {{30, 30}, {60, 60}, {120, 120}};
  cfg.reps = 2;
  const auto r = bench_multiply(cfg);
  CHECK(r.rows.size() == 6);
  for (const auto& row : r.rows) CHECK(row.verdict.find("FAIL") == std::string::npos);
  for (const auto& row : r.rows) {
    if (row.operation == "multiply") CHECK(row.l1 >= 30);
  }
}

TEST_CASE("wordproblem bench: pipelines agree and syntactic is not slower") {
  WordProblemBenchConfig cfg;
  cfg.lengths = {0, 12, 24};
  cfg.words_per_length = 6;
  cfg.reps = 3;
  const auto r = bench_wordproblem(cfg);
  REQUIRE(r.rows.size() == 6);
  for (const auto& row : r.rows) {
    CHECK(row.verdict == "agree");
    REQUIRE(row.ratio);
    if (row.size == 0) {
      CHECK(*row.ratio == 1.0);
    } else {
      CHECK(*row.ratio >= 0.9);
    }
  }
}

TEST_CASE("same seed, same workload and verdicts") {
  WordProblemBenchConfig cfg;
  cfg.lengths = {4, 8};
  cfg.words_per_length = 3;
  cfg.reps = 1;
  MultiplyBenchConfig mcfg;
  mcfg.sizes = {{20, 20}, {40, 40}};
  mcfg.reps = 1;
  CHECK(verdict_columns(bench_wordproblem(cfg)) == verdict_columns(bench_wordproblem(cfg)));
  CHECK(verdict_columns(bench_multiply(mcfg)) == verdict_columns(bench_multiply(mcfg)));
}

TEST_CASE("csv layout") {
  BenchReport r;
  r.rows.push_back({"multiply", 4, 100, 10, 10, 3, 1234.4, 10.0, std::nullopt, "ok"});
  r.slopes.emplace_back("multiply", 0.97);
  std::ostringstream os;
  write_csv(r, os);
  CHECK(os.str() ==
        "operation,n,size,l1,l2,reps,median_ns,spread_ns,slope,ratio,verdict\n"
        "multiply,4,100,10,10,3,1234,10,0.970,,ok\n");
}
