#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "braidwp/braid.hpp"

namespace braidwp::cli {

enum class OutputFormat { text, svg, csv };

// Global flags shared by every subcommand.
struct RunConfig {
  int strands = 0;  // 0: not given; convert and render infer it from the payload
  std::uint64_t seed = 20240601;
  Pipeline pipeline = Pipeline::syntactic;
  bool pre_cancel = true;
  OutputFormat format = OutputFormat::text;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;  // eq: not-equal, oracle-check: mismatch
inline constexpr int kExitUsage = 2;

// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidwp::cli
