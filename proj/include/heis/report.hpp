#pragma once

#include <string>
#include <vector>

namespace heis {

struct Check {
  std::string relation;
  std::string kase;
  std::vector<std::string> tuple;
  std::vector<int> indices;
  bool pass = true;
  std::string witness;  // difference element when the check fails

  std::string key() const {
    std::string k = relation;
    if (!kase.empty()) k += "/" + kase;
    if (!tuple.empty()) {
      k += " i=(";
      for (std::size_t j = 0; j < tuple.size(); ++j) k += (j ? "," : "") + tuple[j];
      k += ")";
    }
    if (!indices.empty()) {
      k += " r=";
      for (std::size_t j = 0; j < indices.size(); ++j) k += (j ? "," : "") + std::to_string(indices[j]);
    }
    return k;
  }
};

struct Report {
  std::vector<Check> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  int failures() const {
    int n = 0;
    for (const auto& c : checks) n += !c.pass;
    return n;
  }
  void append(const Report& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
};

}  // namespace heis
