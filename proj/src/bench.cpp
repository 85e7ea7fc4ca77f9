#include "braidwp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>

#include "braidwp/braid.hpp"
#include "braidwp/error.hpp"
#include "braidwp/path_codec.hpp"
#include "braidwp/workload.hpp"

namespace braidwp {

namespace {

using Clock = std::chrono::steady_clock;

// Keep results observable so the optimizer cannot drop the timed call.
volatile std::size_t g_sink = 0;

double quantile(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  const double pos = q * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = static_cast<std::size_t>(std::ceil(pos));
  return v[lo] + (v[hi] - v[lo]) * (pos - static_cast<double>(lo));
}

struct Timing {
  double median_ns;
  double spread_ns;
};

// Per-call nanoseconds.  Calls are batched until a batch lasts ~50us so that
// tiny inputs are not swamped by clock resolution.
Timing measure(const std::function<std::size_t()>& fn, std::size_t reps) {
  std::size_t batch = 1;
  for (;;) {
    const auto t0 = Clock::now();
    for (std::size_t k = 0; k < batch; ++k) g_sink = g_sink + fn();
    const auto dt = std::chrono::duration<double, std::nano>(Clock::now() - t0).count();
    if (dt >= 50'000.0 || batch >= (1u << 20)) break;
    batch *= 2;
  }
  std::vector<double> samples;
  samples.reserve(reps);
  for (std::size_t r = 0; r < std::max<std::size_t>(reps, 1); ++r) {
    const auto t0 = Clock::now();
    for (std::size_t k = 0; k < batch; ++k) g_sink = g_sink + fn();
    const auto dt = std::chrono::duration<double, std::nano>(Clock::now() - t0).count();
    samples.push_back(dt / static_cast<double>(batch));
  }
  return {quantile(samples, 0.5), quantile(samples, 0.75) - quantile(samples, 0.25)};
}

void fit_operation(BenchReport& report, const std::string& op) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : report.rows) {
    if (r.operation == op && r.size > 0 && r.median_ns > 0) {
      pts.emplace_back(static_cast<double>(r.size), r.median_ns);
    }
  }
  if (auto s = fit_loglog_slope(pts)) {
    report.slopes.emplace_back(op, *s);
  } else {
    report.notices.push_back(op + ": too few size doublings to fit a slope");
  }
}

FGWord word_with_links(std::mt19937_64& rng, int n, std::size_t target_links) {
  // links emitted per prefix letter is roughly constant; calibrate once
  const std::size_t pilot_prefix = 1000;
  const auto pilot = syntactic_to_path(random_conjugate_word(rng, n, pilot_prefix));
  const double per_letter = static_cast<double>(pilot.size()) / pilot_prefix;
  const auto prefix = static_cast<std::size_t>(static_cast<double>(target_links) / per_letter);
  return random_conjugate_word(rng, n, std::max<std::size_t>(prefix, 1));
}

std::size_t gbase_links(const SyntacticGBase& g) {
  std::size_t total = 1;
  for (const auto& e : g.elements()) total += syntactic_to_path(e).size();
  return total;
}

struct GrownBraid {
  BraidWord word;
  SyntacticGBase gbase;
  std::size_t links;
};

// Prepends random letters (one braid move each) until the serialized g-base
// reaches the target length, rejecting moves that overshoot by more than half.
GrownBraid grow_braid(std::mt19937_64& rng, int n, std::size_t target) {
  std::vector<BraidLetter> reversed;
  SyntacticGBase g = SyntacticGBase::standard(n);
  std::size_t links = gbase_links(g);
  std::uniform_int_distribution<int> index(1, n - 1);
  std::bernoulli_distribution negative(0.5);
  int rejected = 0;
  while (links < target) {
    const BraidLetter l(index(rng), negative(rng) ? -1 : 1);
    if (!reversed.empty() && reversed.back() == l.inverse()) continue;
    SyntacticGBase candidate = braid_move(g, l.index(), l.sign());
    const std::size_t size = gbase_links(candidate);
    if (size * 2 > target * 3 && rejected < 40) {
      ++rejected;
      continue;
    }
    rejected = 0;
    reversed.push_back(l);
    g = std::move(candidate);
    links = size;
  }
  std::reverse(reversed.begin(), reversed.end());
  return {BraidWord(n, std::move(reversed)), std::move(g), links};
}

}  // namespace

std::optional<double> BenchReport::slope(const std::string& operation) const {
  for (const auto& [op, s] : slopes) {
    if (op == operation) return s;
  }
  return std::nullopt;
}

void BenchReport::append(const BenchReport& other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
  slopes.insert(slopes.end(), other.slopes.begin(), other.slopes.end());
  notices.insert(notices.end(), other.notices.begin(), other.notices.end());
}

std::optional<double> fit_loglog_slope(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) return std::nullopt;
  double xmin = points.front().first;
  double xmax = xmin;
  for (const auto& [x, y] : points) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
  }
  if (xmin <= 0 || xmax / xmin < 8.0) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : points) {
    const double lx = std::log(x);
    const double ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const auto m = static_cast<double>(points.size());
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

BenchReport bench_codec(const CodecBenchConfig& cfg) {
  BenchReport report;
  auto rng = make_rng(cfg.seed, 1);

  for (std::size_t target : cfg.path_links) {
    if (target == 0) {
      report.notices.push_back("path_to_syntactic: size 0 skipped");
      continue;
    }
    const FGWord w = word_with_links(rng, cfg.n, target);
    const PathList path = syntactic_to_path(w);
    const bool ok = path_to_syntactic(path) == w;
    const Timing t = measure([&] { return path_to_syntactic(path).size(); }, cfg.reps);
    report.rows.push_back({"path_to_syntactic", cfg.n, path.size(), 0, 0, cfg.reps, t.median_ns,
                           t.spread_ns, std::nullopt, ok ? "roundtrip-ok" : "roundtrip-FAIL"});
  }

  for (std::size_t target : cfg.word_letters) {
    if (target == 0) {
      report.notices.push_back("syntactic_to_path: size 0 skipped");
      continue;
    }
    const FGWord w = random_conjugate_word(rng, cfg.n, (target - 1) / 2);
    const bool ok = path_to_syntactic(syntactic_to_path(w)) == w;
    const Timing t = measure([&] { return syntactic_to_path(w).size(); }, cfg.reps);
    report.rows.push_back({"syntactic_to_path", cfg.n, w.size(), 0, 0, cfg.reps, t.median_ns,
                           t.spread_ns, std::nullopt, ok ? "roundtrip-ok" : "roundtrip-FAIL"});
  }

  fit_operation(report, "path_to_syntactic");
  fit_operation(report, "syntactic_to_path");
  return report;
}

BenchReport bench_multiply(const MultiplyBenchConfig& cfg) {
  BenchReport report;
  if (cfg.sizes.empty()) return report;
  if (cfg.n < 2) throw AmbientMismatch("multiply benchmark needs n >= 2");
  auto rng = make_rng(cfg.seed, 2);
  const GBase identity = standard_gbase(cfg.n);

  for (const auto& [t1, t2] : cfg.sizes) {
    if (t1 == 0 || t2 == 0) {
      report.notices.push_back("multiply: size 0 skipped");
      continue;
    }
    const GrownBraid b1 = grow_braid(rng, cfg.n, t1);
    const GrownBraid b2 = grow_braid(rng, cfg.n, t2);
    const GBase g1 = to_geometric(b1.gbase);
    const GBase g2 = to_geometric(b2.gbase);

    const GBase product = multiply(g1, g2);
    const bool hom = to_syntactic(product) == process_word_syntactic(concat(b1.word, b2.word));
    const Timing t = measure([&] { return multiply(g1, g2).paths().size(); }, cfg.reps);
    report.rows.push_back({"multiply", cfg.n, b1.links * b2.links, b1.links, b2.links, cfg.reps,
                           t.median_ns, t.spread_ns, std::nullopt,
                           hom ? "homomorphism-ok" : "homomorphism-FAIL"});

    const bool id_ok = multiply(identity, g2) == g2;
    const Timing ti = measure([&] { return multiply(identity, g2).paths().size(); }, cfg.reps);
    report.rows.push_back({"multiply_identity", cfg.n, b2.links, static_cast<std::size_t>(identity.punctures()) * 2 + 1,
                           b2.links, cfg.reps, ti.median_ns, ti.spread_ns, std::nullopt,
                           id_ok ? "identity-ok" : "identity-FAIL"});
  }

  fit_operation(report, "multiply");
  fit_operation(report, "multiply_identity");
  return report;
}

BenchReport bench_wordproblem(const WordProblemBenchConfig& cfg) {
  BenchReport report;
  if (cfg.n < 2) throw AmbientMismatch("word problem benchmark needs n >= 2");
  auto rng = make_rng(cfg.seed, 3);
  const ProcessOptions raw{false};  // isolate the pipelines from pre-cancellation

  for (std::size_t len : cfg.lengths) {
    std::vector<double> syn_ns, geo_ns, ratios;
    bool agree = true;
    for (std::size_t k = 0; k < cfg.words_per_length; ++k) {
      const BraidWord w = random_braid_word(rng, cfg.n, len);
      agree = agree &&
              to_syntactic(process_word_geometric(w, raw)) == process_word_syntactic(w, raw);
      const Timing ts =
          measure([&] { return process_word_syntactic(w, raw).total_length(); }, cfg.reps);
      const Timing tg =
          measure([&] { return process_word_geometric(w, raw).paths().size(); }, cfg.reps);
      syn_ns.push_back(ts.median_ns);
      geo_ns.push_back(tg.median_ns);
      ratios.push_back(tg.median_ns / ts.median_ns);
    }
    if (syn_ns.empty()) continue;
    const double ratio = len == 0 ? 1.0 : quantile(ratios, 0.5);
    const std::string verdict = agree ? "agree" : "DISAGREE";
    report.rows.push_back({"wordproblem_syntactic", cfg.n, len, 0, 0, cfg.reps,
                           quantile(syn_ns, 0.5), quantile(syn_ns, 0.75) - quantile(syn_ns, 0.25),
                           ratio, verdict});
    report.rows.push_back({"wordproblem_geometric", cfg.n, len, 0, 0, cfg.reps,
                           quantile(geo_ns, 0.5), quantile(geo_ns, 0.75) - quantile(geo_ns, 0.25),
                           ratio, verdict});
  }
  report.notices.push_back(
      "wordproblem_geometric stands in for list-maintaining processing: it keeps the g-base as "
      "path lists and round-trips the two touched elements through the codec per move");
  return report;
}

void write_csv(const BenchReport& report, std::ostream& out) {
  out << "operation,n,size,l1,l2,reps,median_ns,spread_ns,slope,ratio,verdict\n";
  char buf[64];
  for (const auto& r : report.rows) {
    out << r.operation << ',' << r.n << ',' << r.size << ',' << r.l1 << ',' << r.l2 << ','
        << r.reps << ',';
    std::snprintf(buf, sizeof buf, "%.0f,%.0f,", r.median_ns, r.spread_ns);
    out << buf;
    if (auto s = report.slope(r.operation)) {
      std::snprintf(buf, sizeof buf, "%.3f", *s);
      out << buf;
    }
    out << ',';
    if (r.ratio) {
      std::snprintf(buf, sizeof buf, "%.3f", *r.ratio);
      out << buf;
    }
    out << ',' << r.verdict << '\n';
  }
}

void write_text(const BenchReport& report, std::ostream& out) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-22s %3s %12s %14s %12s %8s  %s\n", "operation", "n", "size",
                "median_ns", "spread_ns", "ratio", "verdict");
  out << buf;
  for (const auto& r : report.rows) {
    std::snprintf(buf, sizeof buf, "%-22s %3d %12zu %14.0f %12.0f %8s  %s\n",
                  r.operation.c_str(), r.n, r.size, r.median_ns, r.spread_ns,
                  r.ratio ? std::to_string(*r.ratio).substr(0, 6).c_str() : "-",
                  r.verdict.c_str());
    out << buf;
  }
  for (const auto& [op, s] : report.slopes) {
    std::snprintf(buf, sizeof buf, "slope %-22s %.3f\n", op.c_str(), s);
    out << buf;
  }
  for (const auto& n : report.notices) out << "note: " << n << '\n';
}

}  // namespace braidwp
