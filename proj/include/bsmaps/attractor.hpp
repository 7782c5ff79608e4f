#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "bsmaps/boundary_maps.hpp"

namespace bsmaps {

struct AttractorOptions {
  int iterations = 50;
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  double tol = kEpsilon;
};

/// Exploratory: how much of S × S the iterates of F_A carry into Ω_A.
struct AttractorReport {
  static constexpr std::array<const char*, 6> bin_names = {
      "inside", "(0,1e-9]", "(1e-9,1e-6]", "(1e-6,1e-3]", "(1e-3,1e-1]", ">1e-1"};

  int iterations = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t diagonal_skipped = 0;
  std::size_t collapsed = 0;  // orbit reached the diagonal
  double baseline_fraction = 0;
  double converged_fraction = 0;
  std::array<std::size_t, 6> histogram{};

  // gating: orbits started in Ω_A stay in Ω_A
  std::size_t invariance_samples = 0;
  std::size_t invariance_escapes = 0;
  bool invariance_pass = false;
};

AttractorReport attractor_experiment(const SurfaceGroup& s, const ExtremalParams& params,
                                     const RectDomain& omega_a, const AttractorOptions& opts = {});

}  // namespace bsmaps
