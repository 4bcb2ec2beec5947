#pragma once

#include <map>
#include <optional>
#include <string>

#include "repring/workspace.hpp"

namespace repring {

/// Exit codes per the command contract: 0 success, 1 input error,
/// 2 mathematical-assertion failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitMathCheckFailed = 2;

struct CommandOutcome {
  int exit_code = kExitOk;
  Json report;
  std::string summary;  // one-line human text for stderr
};

CommandOutcome cmd_classes(const Workspace& ws, const std::string& amalgam_name,
                           bool check_oracle = false);

CommandOutcome cmd_ring(const Workspace& ws, const std::string& amalgam_name,
                        std::optional<long> prime);

CommandOutcome cmd_chartab(const Workspace& ws, const std::string& group_name);

CommandOutcome cmd_ktheory(const Workspace& ws, const std::string& amalgam_name, long prime);

CommandOutcome cmd_glrank(std::optional<long> p, std::optional<long> class_number,
                          std::vector<long> orbit_sizes);

struct VerifyArgs {
  std::string presentation;
  std::optional<std::string> against;
  std::optional<long> prime;
  std::map<std::string, std::string> generator_map;  // generator -> "c1,c2,..."
  bool search_degree_one = false;
};

CommandOutcome cmd_verify(const Workspace& ws, const VerifyArgs& args);

}  // namespace repring
