#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tgcc/harness.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "tgcc: moving-region geometric control lab.\n"
      "Usage: tgcc <command> [key=value ...]\n"
      "Commands: trace check t0 sweep counterexample replay wave1d shell\n"
      "All angles are radians; lengths are in domain units (unit interval,\n"
      "unit disk/square/sphere); time is in units of the unit wave speed.\n"
      "Ranges (sweep) are start:stop:step."};
  std::string config_path, out_dir = ".";
  unsigned long long seed = 0;
  int threads = 0;
  bool svg = false;
  app.add_option("--config", config_path, "sectioned key=value config file");
  app.add_option("--out", out_dir, "output directory for CSV/SVG artifacts");
  app.add_option("--seed", seed, "sampling jitter seed");
  app.add_option("--threads", threads,
                 "worker threads for sweeps (default: TGCC_THREADS or 1)");
  app.add_flag("--svg", svg, "emit SVG diagrams alongside CSV output");
  app.allow_extras();
  CLI11_PARSE(app, argc, argv);

  tgcc::SweepConfig cfg;
  cfg.out_dir = out_dir;
  cfg.seed = seed;
  cfg.svg = svg;
  if (threads > 0) {
    cfg.threads = threads;
  } else if (const char* env = std::getenv("TGCC_THREADS")) {
    cfg.threads = std::max(1, std::atoi(env));
  }
  try {
    std::vector<std::string> tokens = app.remaining();
    tgcc::apply_kv_args(cfg, tokens);
    if (!config_path.empty()) tgcc::apply_config_file(cfg, config_path);
    if (cfg.command.empty()) {
      std::cerr << "config error: no command given\n";
      return 2;
    }
    return tgcc::run(cfg, std::cout);
  } catch (const tgcc::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
