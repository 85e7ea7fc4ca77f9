#include "braidwp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>

#include "braidwp/bench.hpp"
#include "braidwp/error.hpp"
#include "braidwp/oracle.hpp"
#include "braidwp/path_codec.hpp"

namespace braidwp::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

int require_strands(const RunConfig& cfg) {
  if (cfg.strands < 1) throw UsageError("--strands N is required for this subcommand");
  return cfg.strands;
}

int max_word_index(std::string_view text) {
  // parse against a generous rank just to find the largest generator
  const FGWord w = parse_word(text, 1 << 20);
  int m = 1;
  for (auto l : w.letters()) m = std::max(m, l.index());
  return m;
}

int max_point(const std::vector<Link>& links) {
  int m = 1;
  for (const auto& l : links) m = std::max(m, l.point);
  return m;
}

SyntacticGBase normal_form(const BraidWord& w, const RunConfig& cfg) {
  const ProcessOptions p{cfg.pre_cancel};
  if (cfg.pipeline == Pipeline::geometric) return to_syntactic(process_word_geometric(w, p));
  return process_word_syntactic(w, p);
}

int cmd_eq(const RunConfig& cfg, const std::string& a, const std::string& b, std::ostream& out) {
  const int n = require_strands(cfg);
  const bool eq = words_equal(parse_braid(a, n), parse_braid(b, n),
                              EqualityOptions{cfg.pipeline, cfg.pre_cancel});
  out << (eq ? "equal" : "not-equal") << '\n';
  return eq ? kExitOk : kExitFalse;
}

int cmd_normal(const RunConfig& cfg, const std::string& word, std::ostream& out) {
  const int n = require_strands(cfg);
  out << format_syntactic_gbase(normal_form(parse_braid(word, n), cfg));
  return kExitOk;
}

int cmd_convert(const RunConfig& cfg, const std::string& direction, const std::string& payload,
                std::ostream& out) {
  if (direction == "path2word" || direction == "p2w") {
    const auto links = parse_links(payload);
    const int n = cfg.strands > 0 ? cfg.strands : max_point(links);
    auto trimmed = links;
    if (trimmed.size() >= 2 && trimmed.back().is_base()) trimmed.pop_back();
    out << format_word(path_to_syntactic(PathList(n, std::move(trimmed)))) << '\n';
    return kExitOk;
  }
  if (direction == "word2path" || direction == "w2p") {
    const int n = cfg.strands > 0 ? cfg.strands : max_word_index(payload);
    out << format_path(syntactic_to_path(parse_word(payload, n)), true) << '\n';
    return kExitOk;
  }
  throw UsageError("convert direction must be path2word or word2path");
}

int cmd_multiply(const RunConfig& cfg, const std::string& a, const std::string& b,
                 std::ostream& out) {
  const int n = require_strands(cfg);
  out << format_gbase(multiply(parse_gbase(a, n), parse_gbase(b, n))) << '\n';
  return kExitOk;
}

int cmd_render(const RunConfig& cfg, const std::string& payload, const std::string& output,
               std::ostream& out) {
  const auto links = parse_links(payload);
  if (links.empty()) throw UsageError("render needs a path or g-base payload");
  const auto separators = static_cast<int>(std::count(links.begin(), links.end(), Link::base()));

  std::vector<PathList> paths;
  if (separators >= 3 && links.back().is_base()) {
    const int n = separators - 1;
    const GBase g(split_gbase(links, n));
    paths.assign(g.paths().begin(), g.paths().end());
  } else {
    const int n = cfg.strands > 0 ? cfg.strands : max_point(links);
    paths.push_back(parse_path(payload, n));
  }
  const std::string svg = render_svg(paths);
  if (output.empty() || output == "-") {
    out << svg;
  } else {
    std::ofstream file(output);
    if (!file) throw Error("cannot open " + output + " for writing");
    file << svg;
    if (!file) throw Error("write to " + output + " failed");
  }
  return kExitOk;
}

int cmd_oracle_check(const RunConfig& cfg, CampaignConfig campaign, std::ostream& out) {
  campaign.seed = cfg.seed;
  const CampaignReport r = run_oracle_campaign(campaign);
  if (r.failures == 0) {
    out << "oracle-check: PASS " << r.checked << "/" << r.checked << " words agree (seed "
        << cfg.seed << ")\n";
    return kExitOk;
  }
  out << "oracle-check: FAIL " << r.failures << "/" << r.checked << " words disagree (seed "
      << cfg.seed << ")\n";
  if (r.counterexample) {
    out << "counterexample: strands=" << r.counterexample->strands() << " word=\""
        << format_braid(*r.counterexample) << "\"\n";
  }
  return kExitFalse;
}

int cmd_bench(const RunConfig& cfg, const std::string& which, bool quick, std::ostream& out) {
  BenchReport report;
  const bool all = which == "all";
  if (all || which == "codec") {
    CodecBenchConfig c;
    c.seed = cfg.seed;
    if (quick) {
      c.path_links = {1000, 2000, 4000, 8000, 16000};
      c.word_letters = {125, 250, 500, 1000, 2000};
      c.reps = 5;
    }
    report.append(bench_codec(c));
  }
  if (all || which == "multiply") {
    MultiplyBenchConfig c;
    c.seed = cfg.seed;
    if (quick) {
      c.sizes = {{40, 40}, {80, 80}, {160, 160}, {320, 320}};
      c.reps = 3;
    }
    report.append(bench_multiply(c));
  }
  if (all || which == "wordproblem") {
    WordProblemBenchConfig c;
    c.seed = cfg.seed;
    if (cfg.strands >= 2) c.n = cfg.strands;
    if (quick) {
      c.lengths = {0, 4, 8, 12};
      c.words_per_length = 4;
      c.reps = 3;
    }
    report.append(bench_wordproblem(c));
  }
  if (!all && which != "codec" && which != "multiply" && which != "wordproblem") {
    throw UsageError("bench --which must be codec, multiply, wordproblem, or all");
  }
  if (cfg.format == OutputFormat::csv) {
    write_csv(report, out);
  } else {
    write_text(report, out);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Braid word problem engine over the free fundamental group", "braidwp"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string pipeline = "syn";
  std::string pre_cancel = "on";
  std::string format = "text";
  app.add_option("--strands,-n", cfg.strands, "Strand / puncture count N");
  app.add_option("--seed", cfg.seed, "Seed for randomized campaigns")->capture_default_str();
  app.add_option("--pipeline", pipeline, "Word processing pipeline")
      ->check(CLI::IsMember({"geo", "syn"}))
      ->capture_default_str();
  app.add_option("--pre-cancel", pre_cancel, "Cancel sigma_i sigma_i^-1 pairs first")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "svg", "csv"}))
      ->capture_default_str();

  std::string w1, w2, direction, payload, output;
  auto* eq = app.add_subcommand("eq", "Decide whether two braid words are equal");
  eq->add_option("w1", w1, "First braid word, e.g. \"1 -2 1\"")->required();
  eq->add_option("w2", w2, "Second braid word")->required();

  auto* normal = app.add_subcommand("normal", "Print the reduced g-base of a braid word");
  normal->add_option("word", w1, "Braid word")->required();

  auto* convert = app.add_subcommand("convert", "Convert between path lists and words");
  convert->add_option("direction", direction, "path2word | word2path")->required();
  convert->add_option("payload", payload, "Path list or word text")->required();

  auto* mult = app.add_subcommand("multiply", "Multiply two serialized g-bases");
  mult->add_option("lhs", w1, "Serialized g-base of the left braid")->required();
  mult->add_option("rhs", w2, "Serialized g-base of the right braid")->required();

  auto* render = app.add_subcommand("render", "Draw a path or g-base as SVG");
  render->add_option("payload", payload, "Path list or serialized g-base")->required();
  render->add_option("-o,--output", output, "Output file (stdout when omitted)");

  CampaignConfig campaign;
  auto* oracle = app.add_subcommand("oracle-check", "Differential check against the oracle");
  oracle->add_option("--count", campaign.count)->capture_default_str();
  oracle->add_option("--max-strands", campaign.max_strands)->capture_default_str();
  oracle->add_option("--max-length", campaign.max_length)->capture_default_str();
  oracle->add_option("--threads", campaign.threads)->capture_default_str();

  std::string which = "all";
  bool quick = false;
  auto* bench = app.add_subcommand("bench", "Run the complexity benchmarks");
  bench->add_option("--which", which, "codec | multiply | wordproblem | all")
      ->capture_default_str();
  bench->add_flag("--quick", quick, "Small sizes for a fast smoke run");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  cfg.pipeline = pipeline == "geo" ? Pipeline::geometric : Pipeline::syntactic;
  cfg.pre_cancel = pre_cancel == "on";
  cfg.format = format == "csv" ? OutputFormat::csv
               : format == "svg" ? OutputFormat::svg
                                 : OutputFormat::text;

  try {
    if (*eq) return cmd_eq(cfg, w1, w2, out);
    if (*normal) return cmd_normal(cfg, w1, out);
    if (*convert) return cmd_convert(cfg, direction, payload, out);
    if (*mult) return cmd_multiply(cfg, w1, w2, out);
    if (*render) return cmd_render(cfg, payload, output, out);
    if (*oracle) return cmd_oracle_check(cfg, campaign, out);
    if (*bench) return cmd_bench(cfg, which, quick, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace braidwp::cli
