#pragma once

#include <stdexcept>
#include <string>

namespace heis {

enum class Errc {
  ConfigError,
  NotAUnit,
  NoSquareRoot,
  NotNilpotent,
  NotCoprime,
  FactorizationMismatch,
  NotSplit,
  NotInvertible,
  SingularSeries,
  SignAmbiguity,
  InvalidLevelData,
  ZeroBlock,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace heis
