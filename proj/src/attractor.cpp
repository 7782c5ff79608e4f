#include "bsmaps/attractor.hpp"

#include <random>

namespace bsmaps {

namespace {

std::size_t bin_of(double d) {
  if (d <= 0) return 0;
  if (d <= 1e-9) return 1;
  if (d <= 1e-6) return 2;
  if (d <= 1e-3) return 3;
  if (d <= 1e-1) return 4;
  return 5;
}

}  // namespace

AttractorReport attractor_experiment(const SurfaceGroup& s, const ExtremalParams& params,
                                     const RectDomain& omega_a, const AttractorOptions& opts) {
  AttractorReport rep;
  rep.iterations = opts.iterations;
  rep.seed = opts.seed;
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi<double>);

  std::size_t baseline = 0, converged = 0;
  for (std::size_t n = 0; n < opts.samples; ++n) {
    BoundaryPair p{CirclePointd::from_angle(angle(rng)), CirclePointd::from_angle(angle(rng))};
    if (coincident(p.u, p.w, opts.tol)) {
      ++rep.diagonal_skipped;
      continue;
    }
    ++rep.samples;
    if (omega_a.distance(p) <= opts.tol) ++baseline;
    try {
      for (int t = 0; t < opts.iterations; ++t) p = F_A(s, params, p, opts.tol).pair;
    } catch (const DegenerateError&) {
      ++rep.collapsed;
      continue;
    }
    const double d = omega_a.contains(p, opts.tol) ? 0.0 : omega_a.distance(p);
    ++rep.histogram[bin_of(d)];
    if (d <= opts.tol) ++converged;
  }
  if (rep.samples > 0) {
    rep.baseline_fraction = static_cast<double>(baseline) / rep.samples;
    rep.converged_fraction = static_cast<double>(converged) / rep.samples;
  }

  for (std::size_t n = 0; n < opts.samples; ++n) {
    BoundaryPair p = omega_a.sample(rng);
    ++rep.invariance_samples;
    for (int t = 0; t < opts.iterations; ++t) {
      p = F_A(s, params, p, opts.tol).pair;
      if (!omega_a.contains(p, opts.tol) && omega_a.distance(p) > opts.tol) {
        ++rep.invariance_escapes;
        break;
      }
    }
  }
  rep.invariance_pass = rep.invariance_samples > 0 && rep.invariance_escapes == 0;
  return rep;
}

}  // namespace bsmaps
