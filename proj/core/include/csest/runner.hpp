#pragma once

#include <filesystem>
#include <ostream>

#include "csest/config.hpp"

namespace csest {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitRuntime = 3;

struct RunContext {
  std::filesystem::path out_dir = ".";
  int threads = 1;
  std::ostream* log = nullptr;  // summary lines; nullptr for silence
};

struct RunOutcome {
  int status = kExitOk;
  std::filesystem::path artifact;
  std::filesystem::path metadata;
  std::string message;  // diagnostic when status != 0
};

// Executes one command, writing `<output>` and `<output>.meta.json` into
// ctx.out_dir. Library errors map to kExitRuntime. The artifact bytes depend
// only on the config (including its seed), never on the thread count.
RunOutcome run(const ExperimentConfig& cfg, const RunContext& ctx);

}  // namespace csest
