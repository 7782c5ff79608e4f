#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bsmaps/boundary_maps.hpp"

namespace bsmaps {

/// D̄ = (D_1, …, D_N) of a solved extremal choice.
struct DualParams {
  std::vector<SolvedPoint> points;
  std::string source_params;

  std::vector<CirclePointd> circle_points() const;
  const SolvedPoint& point(int i) const {
    return points[wrap_index(i, static_cast<int>(points.size())) - 1];
  }
};

DualParams dual_params(const ExtremalParams& params, const SolvedParams& solved);

/// P/Q word when every D_i coincides with P_i or Q_i.
std::optional<std::string> extremal_word(const DualParams& dual, const SurfaceGroup& s,
                                         double tol = kEpsilon);

/// Horizontal view R_i, R_i^u, R_i^l and vertical view V_i, V′_i of one set.
struct DualDomain {
  RectDomain horizontal;
  RectDomain vertical;
};

/// R_i = [Q_{i+2}, P_{i−1}) × [D_i, D_{i+1}), R_i^u = [P_{i−1}, P_i) × [H_i, D_{i+1}),
/// R_i^l = [Q_{i+1}, Q_{i+2}) × [D_i, G_i); V_i = φ(R″_i), V′_i = φ(R′_i).
/// Throws StructureError naming the strip when the two views disagree.
DualDomain build_omega_dual(const SurfaceGroup& s, const ExtremalParams& params,
                            const SolvedParams& solved, double tol = kEpsilon);

struct DualMapResult {
  BoundaryPair pair;
  int index = 0;
  /// w within tol of some D_i.
  bool boundary = false;
};

DualMapResult F_dual(const SurfaceGroup& s, const DualParams& dual, const BoundaryPair& p,
                     double tol = kEpsilon);

struct DualityOptions {
  std::size_t samples = 10000;
  std::size_t code_samples = 200;
  int code_length = 5;
  std::uint64_t seed = 1;
  double tol = kEpsilon;
  double margin = 1e-6;
};

struct DualityReport {
  std::uint64_t seed = 0;
  bool structure_pass = true;
  std::vector<std::string> structure_failures;

  std::size_t flip_samples = 0;
  std::size_t flip_failures = 0;
  std::size_t partition_failures = 0;

  std::size_t identity_samples = 0;
  std::size_t skipped_boundary = 0;
  std::size_t skipped_near_dual = 0;
  std::size_t identity_mismatches = 0;
  double max_deviation = 0;

  std::size_t code_checks = 0;
  std::size_t code_mismatches = 0;

  bool pass = false;
};

/// φ(Ω_A) = Ω_D, φ(F_A⁻¹(p)) = F_D(φ(p)), and past A-digits equal forward D-indices.
DualityReport verify_duality(const SurfaceGroup& s, const ExtremalParams& params,
                             const SolvedParams& solved, const DualParams& dual,
                             const DualityOptions& opts = {});

struct FamilyEntry {
  std::string name;
  std::string source;
  std::string expected_dual;
  double max_pointwise_deviation = 0;
  bool pointwise_ok = false;
  bool double_dual_ok = false;
  DualityReport duality;
};

struct FamilyReport {
  int genus = 0;
  std::vector<FamilyEntry> entries;
  bool pass = false;
};

/// P̄ ↔ Q̄, alternating pair, and the self-dual words PPQQ… and QQPP….
FamilyReport dual_family_check(int genus, const DualityOptions& opts = {});

}  // namespace bsmaps
