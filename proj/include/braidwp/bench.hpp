#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace braidwp {

// One measured case.  `size` is the parameter the operation's slope is
// fitted against (links, letters, or l1*l2).
struct BenchRow {
  std::string operation;
  int n = 0;
  std::size_t size = 0;
  std::size_t l1 = 0;
  std::size_t l2 = 0;
  std::size_t reps = 0;
  double median_ns = 0;
  double spread_ns = 0;  // interquartile range
  std::optional<double> ratio;
  std::string verdict;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<std::pair<std::string, double>> slopes;  // in fitting order
  std::vector<std::string> notices;

  std::optional<double> slope(const std::string& operation) const;
  void append(const BenchReport& other);
};

struct CodecBenchConfig {
  int n = 8;
  std::vector<std::size_t> path_links{6250, 12500, 25000, 50000, 100000};
  std::vector<std::size_t> word_letters{625, 1250, 2500, 5000, 10000};
  std::size_t reps = 9;
  std::uint64_t seed = 20240601;
};

struct MultiplyBenchConfig {
  int n = 4;
  // target serialized list lengths (l1, l2)
  std::vector<std::pair<std::size_t, std::size_t>> sizes{
      {150, 150}, {300, 300}, {600, 600}, {1200, 1200}, {2400, 2400}};
  std::size_t reps = 5;
  std::uint64_t seed = 20240601;
};

struct WordProblemBenchConfig {
  int n = 4;
  std::vector<std::size_t> lengths{0, 8, 16, 24, 32};
  std::size_t words_per_length = 12;
  std::size_t reps = 5;
  std::uint64_t seed = 20240601;
};

// path_to_syntactic vs list length and syntactic_to_path vs word length.
BenchReport bench_codec(const CodecBenchConfig& cfg);
// multiply vs l1*l2 at fixed n, plus identity x G vs |G|.
BenchReport bench_multiply(const MultiplyBenchConfig& cfg);
// Geometric (stand-in for list maintenance) vs syntactic word processing.
BenchReport bench_wordproblem(const WordProblemBenchConfig& cfg);

// Least-squares slope of log(y) on log(x); nullopt with fewer than two points
// or when x spans fewer than three doublings.
std::optional<double> fit_loglog_slope(const std::vector<std::pair<double, double>>& points);

void write_csv(const BenchReport& report, std::ostream& out);
void write_text(const BenchReport& report, std::ostream& out);

}  // namespace braidwp
