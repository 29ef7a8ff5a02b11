#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "steklov/charpoly.hpp"

namespace steklov {

struct Root {
  double t = 0;
  bool tangential = false;  // P' vanishes there too (no sign change for even order)
};

struct RootList {
  std::vector<Root> roots;
  double horizon = 0;
  double step = 0;
};

// Roots of P on [0, T]. The default step is pi / (8 f_max); a step above
// pi / (2 f_max) raises ResolutionError.
RootList roots(const TrigPoly& p, double horizon, std::optional<double> step = std::nullopt);

struct SpectrumComparison {
  double max_gap = 0;
  std::size_t count_mismatch = 0;
  std::size_t compared = 0;
};

// Index-aligned comparison; the horizons must agree.
SpectrumComparison compare_spectra(const RootList& a, const RootList& b);

}  // namespace steklov
