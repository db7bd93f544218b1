#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "heis/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Check KLR and affine Hecke identities in cyclotomic Hecke algebras"};
  std::string config_path, out_path;
  std::vector<std::string> suites;
  std::optional<std::uint64_t> seed;
  std::optional<int> precision;
  app.add_option("--config", config_path, "run configuration (JSON)")->required();
  app.add_option("--suite", suites, "suite to run (repeatable); default: all");
  app.add_option("--seed", seed, "seed for randomized property checks (default 0)");
  app.add_option("--precision", precision, "series precision override");
  app.add_option("--out", out_path, "write the report here instead of stdout");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  heis::RunConfig cfg;
  try {
    std::ifstream in(config_path);
    if (!in) throw heis::Error(heis::Errc::ConfigError, "cannot open " + config_path);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw heis::Error(heis::Errc::ConfigError, std::string("invalid JSON: ") + e.what());
    }
    if (!suites.empty()) j["suites"] = suites;
    if (seed) j["seed"] = *seed;
    if (precision) j["precision"] = *precision;
    cfg = heis::parse_config(j);
  } catch (const heis::Error& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }

  heis::RunResult res = heis::run(cfg);
  if (res.exit_code == 2) std::cerr << "configuration error: " << res.report.value("error", std::string()) << "\n";
  std::string text = res.report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 2;
    }
    out << text;
  }
  return res.exit_code;
}
