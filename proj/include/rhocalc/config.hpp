#pragma once

#include <cstdint>
#include <string>

#include "rhocalc/error.hpp"
#include "rhocalc/scalar.hpp"

namespace rhocalc {

/// Knobs shared by evaluation, null testing and the theorem checks.
struct Config {
  Exponent order = kDefaultOrder;
  double tau = kDefaultTau;
  std::uint64_t seed = 42;
  std::size_t samples = 20;
  std::size_t deriv_depth = 3;
  // Only the Gaussian kernel is implemented; the field is the hook for others.
  std::string mollifier = "gaussian";

  void validate() const {
    if (!(order > 0)) throw Error("order must be positive");
    if (!(tau > 0.0)) throw Error("tau must be positive");
    if (samples < 1) throw Error("samples must be at least 1");
    if (mollifier != "gaussian") throw Error("unsupported mollifier '" + mollifier + "'");
  }
};

}  // namespace rhocalc
