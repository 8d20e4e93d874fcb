#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "netsel/madm_methods.hpp"

namespace netsel::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kIo = 3,
  kValidation = 4,
  kNumeric = 5,
};

enum class Format { Text, Json, Csv };

struct RunConfig {
  /// "table2" or a CSV path.
  std::string matrix = "table2";
  /// Comma list (B,C,...) or a path to a JSON sidecar; empty uses the default
  /// for the network header.
  std::string directions;
  /// preset:<service>, pairwise:<csv>, or a weights file (.csv / .json).
  std::string weights = "preset:voip";
  std::vector<Method> methods{Method::Msaw};
  TiePolicy tie = TiePolicy::MeanRank;
  std::optional<unsigned> alpha;
  Format format = Format::Text;
  std::uint64_t seed = 0;
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace netsel::cli
