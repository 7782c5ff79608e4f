#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bsmaps/boundary_maps.hpp"

namespace bsmaps {

/// (T_i u, T_i w) where i is the side through which u → w leaves the polygon.
PairMapResult F_geo(const SurfaceGroup& s, const BoundaryPair& p, double tol = kEpsilon);

/// Bounding boxes of bulges and corners.
class RegionTable {
 public:
  RegionTable(const SurfaceGroup& s, const RectDomain& omega_a);

  /// [Q_{i+1}, Q_{i+2}] × [P_i, P_{i+1}]; holds B_i and C_i.
  const LabeledRect& lower_box(int i) const { return lower_[wrap_index(i, n_) - 1]; }
  /// [P_{i−1}, P_i] × [Q_i, Q_{i+1}]; holds B^i and C^i.
  const LabeledRect& upper_box(int i) const { return upper_[wrap_index(i, n_) - 1]; }
  int size() const { return n_; }

 private:
  int n_;
  std::vector<LabeledRect> lower_;
  std::vector<LabeledRect> upper_;
};

struct Region {
  enum class Kind { core, lower_bulge, upper_bulge, outside, boundary, unlocated };
  Kind kind = Kind::outside;
  int index = 0;
};

Region locate_region(const SurfaceGroup& s, const RectDomain& omega_a, const RegionTable& regions,
                     const BoundaryPair& p, double tol = kEpsilon);

/// Result of Φ: the image and the U-index applied (0 for the identity).
struct PhiResult {
  BoundaryPair pair;
  int map_index = 0;
};

/// Identity on Ω_geo ∩ Ω_A, U_{τ(i)+1} on B_i, U_{τ(i)} on B^i.
PhiResult apply_phi(const SurfaceGroup& s, const SolvedParams& solved, const RectDomain& omega_a,
                    const RegionTable& regions, const BoundaryPair& p, double tol = kEpsilon);

/// Identity on Ω_A ∩ Ω_geo, U_m⁻¹ on C^m, U_{m+1}⁻¹ on C_m.
PhiResult apply_phi_inverse(const SurfaceGroup& s, const SolvedParams& solved,
                            const RectDomain& omega_a, const RegionTable& regions,
                            const BoundaryPair& p, double tol = kEpsilon);

/// A-reduced representative of a geodesic crossing the polygon.
PhiResult reduce_geodesic(const SurfaceGroup& s, const SolvedParams& solved,
                          const RectDomain& omega_a, const BoundaryPair& p, double tol = kEpsilon);

/// Uniform sample of Ω_geo by rejection from S × S.
std::optional<BoundaryPair> sample_omega_geo(const SurfaceGroup& s, std::mt19937_64& rng,
                                             int max_attempts = 1000, double tol = kEpsilon);

struct ConjugacyOptions {
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  double tol = kEpsilon;
  double margin = 1e-6;
};

struct ConjugacyReport {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t skipped_boundary = 0;
  std::size_t unlocated = 0;
  std::size_t phi_outside_omega = 0;
  std::size_t mismatches = 0;
  std::size_t inverse_mismatches = 0;
  double max_deviation = 0;
  bool pass = false;
};

/// Φ ∘ F_geo = F_A ∘ Φ and Φ ∘ F_geo ∘ Φ⁻¹ = F_A on sampled points.
ConjugacyReport verify_conjugacy(const SurfaceGroup& s, const ExtremalParams& params,
                                 const SolvedParams& solved, const RectDomain& omega_a,
                                 const ConjugacyOptions& opts = {});

/// Symbols n_k = σ(i) with w_k ∈ [A_i, A_{i+1}).
struct CodingSeq {
  BoundaryPair center;
  std::vector<int> future;  // n_0, n_1, ...
  std::vector<int> past;    // n_−1, n_−2, ...
  bool truncated_future = false;
  bool truncated_past = false;
};

CodingSeq code_geodesic(const SurfaceGroup& s, const ExtremalParams& params,
                        const RectDomain& omega_a, const BoundaryPair& p, int n_future,
                        int n_past, double tol = kEpsilon);

}  // namespace bsmaps
