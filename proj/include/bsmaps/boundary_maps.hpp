#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bsmaps/rect_domain.hpp"
#include "bsmaps/surface.hpp"
#include "bsmaps/words.hpp"

namespace bsmaps {

enum class Endpoint : char { P = 'P', Q = 'Q' };

/// Extremal choice A_i ∈ {P_i, Q_i} for every side.
class ExtremalParams {
 public:
  /// Word over {P, Q} of length N; position i is the choice for A_i.
  static ExtremalParams parse(std::string_view word, const SurfaceGroup& s);
  static ExtremalParams from_choices(std::vector<Endpoint> choices, const SurfaceGroup& s);

  int size() const { return static_cast<int>(choices_.size()); }
  Endpoint choice(int i) const { return choices_[wrap_index(i, size()) - 1]; }
  const CirclePointd& point(int i) const { return points_[wrap_index(i, size()) - 1]; }
  const std::vector<CirclePointd>& points() const { return points_; }
  std::string word() const;
  /// [A_i, A_{i+1}).
  Arcd interval(int i) const { return Arcd::half_open(point(i), point(i + 1)); }

 private:
  std::vector<Endpoint> choices_;
  std::vector<CirclePointd> points_;
};

/// Any point list treated as partition points (extremal or dual).
/// Index i with x ∈ [A_i, A_{i+1}).
int partition_index(std::span<const CirclePointd> points, const CirclePointd& x,
                    double tol = kEpsilon);
/// Distance from x to the nearest partition point.
double partition_clearance(std::span<const CirclePointd> points, const CirclePointd& x);

enum class IndexType { Type1 = 1, Type2 = 2, Type3 = 3, Type4 = 4 };

IndexType classify_type(int i, const ExtremalParams& params, const SideIndexMaps& maps);

/// A solved point together with the word that produces it.
struct SolvedPoint {
  GroupWord word;
  CirclePointd point;
};

struct SolvedParams {
  std::vector<IndexType> types;
  std::vector<SolvedPoint> G;
  std::vector<SolvedPoint> H;
  std::vector<SolvedPoint> D;
  std::vector<Moebiusd> U;
  /// Longest Type2/Type4 chain followed by the solver.
  int chain_depth = 0;

  const SolvedPoint& g(int i) const { return G[wrap_index(i, static_cast<int>(G.size())) - 1]; }
  const SolvedPoint& h(int i) const { return H[wrap_index(i, static_cast<int>(H.size())) - 1]; }
  const SolvedPoint& d(int i) const { return D[wrap_index(i, static_cast<int>(D.size())) - 1]; }
  const Moebiusd& u(int i) const { return U[wrap_index(i, static_cast<int>(U.size())) - 1]; }
  std::vector<CirclePointd> d_points() const;
};

/// G_1, …, G_N.  `order` lists the indices in processing order (default 1..N).
std::vector<SolvedPoint> solve_G(const SurfaceGroup& s, const ExtremalParams& params,
                                 std::span<const int> order = {}, double tol = kEpsilon,
                                 int* chain_depth = nullptr);

/// Fills H, D and U from G and checks their invariants.
void compute_H_D(const SurfaceGroup& s, SolvedParams& solved, double tol = kEpsilon);

/// solve_G followed by compute_H_D.
SolvedParams solve(const SurfaceGroup& s, const ExtremalParams& params, double tol = kEpsilon);

struct MapIndexResult {
  CirclePointd point;
  int index = 0;
};

MapIndexResult f_A(const SurfaceGroup& s, const ExtremalParams& params, const CirclePointd& x,
                   double tol = kEpsilon);

struct PairMapResult {
  BoundaryPair pair;
  int index = 0;
};

/// (T_i u, T_i w) with w ∈ [A_i, A_{i+1}).
PairMapResult F_A(const SurfaceGroup& s, const ExtremalParams& params, const BoundaryPair& p,
                  double tol = kEpsilon);

/// Same rule with arbitrary partition points.
PairMapResult F_partition(const SurfaceGroup& s, std::span<const CirclePointd> points,
                          const BoundaryPair& p, double tol = kEpsilon);

/// R″_i = [H_{i+1}, G_{i−2}) × [P_i, Q_i) and R′_i = [H_{i+1}, G_{i−1}) × [Q_i, P_{i+1}).
RectDomain build_omega_A(const SurfaceGroup& s, const SolvedParams& solved, double tol = kEpsilon);

/// Breakpoints P_1, Q_1, …, Q_N with their names.
std::vector<std::string> breakpoint_names(const SurfaceGroup& s);

struct BijectivityOptions {
  bool analytic = true;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  double tol = kEpsilon;
  /// Samples within this distance of any boundary are skipped and counted.
  double margin = 1e-6;
  bool measure_check = true;
};

struct BijectivityReport {
  bool analytic_run = false;
  bool analytic_pass = true;
  std::vector<std::string> analytic_failures;
  double max_corner_deviation = 0;

  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t skipped_boundary = 0;
  std::size_t image_outside = 0;
  std::size_t injectivity_violations = 0;
  std::size_t preimage_failures = 0;
  bool monte_carlo_pass = true;

  // exploratory, never gating
  bool measure_run = false;
  double max_measure_relative_error = 0;

  bool pass() const { return analytic_pass && monte_carlo_pass; }
};

BijectivityReport verify_bijectivity(const SurfaceGroup& s, const ExtremalParams& params,
                                     const SolvedParams& solved, const RectDomain& domain,
                                     const BijectivityOptions& opts = {});

/// Unique (u′, w′) ∈ Ω_A with F_A(u′, w′) = (u, w).
BoundaryPair F_A_inverse(const SurfaceGroup& s, const ExtremalParams& params,
                         const RectDomain& domain, const BoundaryPair& p, double tol = kEpsilon);

/// ∫∫ du dw / (4 sin²((u − w)/2)) over a rectangle; |u − w|² for unit-circle chords.
double invariant_measure(const LabeledRect& r, int segments = 8);

}  // namespace bsmaps
