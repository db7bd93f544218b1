#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "heis/gcq.hpp"

namespace heis {

struct RunConfig {
  LocalRing ring;
  QuantumParam param;
  MonicPoly m, n;
  int d_max = 2;
  std::vector<std::string> suites;
  std::optional<int> precision;
  SqrtConvention sqrt;
  bool allow_cyclic = false;
  std::uint64_t seed = 0;
  nlohmann::json echo;

  int effective_precision() const;
};

const std::vector<std::string>& suite_names();

// Validates a JSON run configuration; throws Error on invalid input.
RunConfig parse_config(const nlohmann::json& j);

struct RunResult {
  nlohmann::json report;
  int exit_code = 0;
};
// Level data errors (InvalidLevelData, NotSplit, NoSquareRoot) surface as exit code 2.
RunResult run(const RunConfig& cfg);

// Random split monic polynomials over Z: prod (u - r_j) with integer roots in
// [lo, hi] (skipping 0 when nonzero is set), plus a J-valued perturbation below the top.
MonicPoly random_split_monic(const LocalRing& r, int degree, std::mt19937_64& rng, int lo = -3, int hi = 3,
                             bool nonzero = false);

// Property suites shared by the CLI and the tests.
Report hensel_property(const LocalRing& r, int count, int max_degree, std::uint64_t seed);
Report series_property(const LocalRing& r, int count, int max_r, std::uint64_t seed);
Report bubble_property(const QuantumParam& p, const LocalRing& r, int count, int precision, std::uint64_t seed);

}  // namespace heis
