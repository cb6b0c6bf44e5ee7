#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spinforge::cli {

inline constexpr std::uint64_t kDefaultSeed = 42;

/// exitCode: 0 all checks pass (or nothing was checked), 1 some check
/// failed, 2 usage or parse error. `payload` goes to stdout, `diagnostic`
/// to stderr.
struct CommandOutcome {
  int exitCode = 0;
  std::string payload;
  std::string diagnostic;
};

/// argv without the program name.
CommandOutcome run(const std::vector<std::string>& args);

/// SPINFORGE_SEED if set and numeric, else kDefaultSeed.
std::uint64_t default_seed();

}  // namespace spinforge::cli
