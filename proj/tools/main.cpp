#include <CLI11.hpp>
#include <cstdint>
#include <iostream>

#include "csest/errors.hpp"
#include "csest/io.hpp"
#include "csest/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Convex support estimation experiments"};
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_dir = ".";
  int threads = 1;
  bool allow_nontheoretical = false;
  app.add_option("--config", config_path, "Experiment config (JSON)")->required();
  app.add_option("--seed", seed, "Override the seed root");
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 1024));
  app.add_flag("--allow-nontheoretical", allow_nontheoretical,
               "Accept constants below the theoretical thresholds");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? csest::kExitOk : csest::kExitConfig;
  }

  csest::ExperimentConfig cfg;
  try {
    cfg = csest::parse_config(csest::io::read_text(config_path), {seed, allow_nontheoretical});
  } catch (const csest::Error& e) {
    std::cerr << "csest: " << e.what() << '\n';
    return csest::kExitConfig;
  }

  const auto outcome = csest::run(cfg, {out_dir, threads, &std::cout});
  if (outcome.status != csest::kExitOk) {
    std::cerr << "csest: " << outcome.message << '\n';
    return outcome.status;
  }
  std::cout << "wrote " << outcome.artifact.string() << '\n';
  return csest::kExitOk;
}
