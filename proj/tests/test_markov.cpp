#include <doctest.h>

#include <random>
#include <set>

#include "bsmaps/coding.hpp"
#include "bsmaps/markov.hpp"

using namespace bsmaps;

namespace {

// Elementary interval I_k containing x, scanning P_1, Q_1, P_2, ... directly.
int elementary_index(const SurfaceGroup& s, const CirclePointd& x) {
  const auto pts = s.boundary_points();
  const std::size_t m = pts.size();
  for (std::size_t k = 0; k < m; ++k)
    if (ccw_offset(pts[k], x) < ccw_offset(pts[k], pts[(k + 1) % m])) return static_cast<int>(k) + 1;
  return 0;
}

// Oracle: the columns hit by f_A on dense samples of I_k.
std::set<int> sampled_row(const SurfaceGroup& s, const ExtremalParams& params, int k, int samples) {
  const auto pts = s.boundary_points();
  const auto& a = pts[k - 1];
  const auto& b = pts[k % pts.size()];
  const double len = ccw_offset(a, b);
  std::set<int> hit;
  for (int j = 0; j < samples; ++j) {
    const double t = (j + 0.5) / samples;
    const auto x = CirclePointd::from_angle(a.angle() + t * len);
    hit.insert(elementary_index(s, f_A(s, params, x).point));
  }
  return hit;
}

}  // namespace

TEST_CASE("interval numbering") {
  CHECK(odd_interval(1, 12) == 1);
  CHECK(even_interval(1, 12) == 2);
  CHECK(odd_interval(13, 12) == 1);
  CHECK(even_interval(0, 12) == 24);
}

TEST_CASE("rows match dense sampling of f_A") {
  const SurfaceGroup s = SurfaceGroup::regular(2);
  for (const char* w : {"PPPPQPQQPPQQ", "PPPPPPPPPPPP", "QQQQQQQQQQQQ", "PQPQPQPQPQPQ"}) {
    CAPTURE(w);
    const ExtremalParams params = ExtremalParams::parse(w, s);
    const TransitionMatrix m = markov_transition_matrix(s, params);
    REQUIRE(m.size() == 24);
    for (int k = 1; k <= m.size(); ++k) {
      CAPTURE(k);
      const std::vector<int> row = m.row(k);
      const std::set<int> oracle = sampled_row(s, params, k, 40000);
      CHECK(std::set<int>(row.begin(), row.end()) == oracle);
    }
  }
}

TEST_CASE("row counts: odd rows 2, even rows 2N - 7") {
  for (int g = 2; g <= 3; ++g) {
    const SurfaceGroup s = SurfaceGroup::regular(g);
    std::mt19937_64 rng(g);
    std::bernoulli_distribution coin(0.5);
    for (int rep = 0; rep < 5; ++rep) {
      std::string w(s.size(), 'P');
      for (auto& c : w) c = coin(rng) ? 'Q' : 'P';
      const TransitionMatrix m = markov_transition_matrix(s, ExtremalParams::parse(w, s));
      for (int k = 1; k <= m.size(); ++k)
        CHECK(m.row_count(k) == (k % 2 ? 2 : 2 * s.size() - 7));
    }
  }
}

TEST_CASE("sofic amalgamation refines back to the Markov matrix") {
  const SurfaceGroup s = SurfaceGroup::regular(2);
  const ExtremalParams params = ExtremalParams::parse("PPPPQPQQPPQQ", s);
  const TransitionMatrix m = markov_transition_matrix(s, params);
  const SoficGraph g = sofic_amalgamate(m);
  CHECK(g.letters == s.size());
  CHECK(g.refine() == m.entries);
  CHECK(g.strongly_connected());
  const Eigen::MatrixXi adj = g.letter_adjacency();
  CHECK(adj.rows() == s.size());
  CHECK(adj.minCoeff() >= 0);
}

TEST_CASE("orbit codes are accepted by the code presentation") {
  const SurfaceGroup s = SurfaceGroup::regular(2);
  const ExtremalParams params = ExtremalParams::parse("PPPPQPQQPPQQ", s);
  const SolvedParams solved = solve(s, params);
  const RectDomain omega = build_omega_A(s, solved);
  const TransitionMatrix m = markov_transition_matrix(s, params);
  const SoficGraph g = code_presentation(m, s, params);
  std::mt19937_64 rng(3);
  std::size_t accepted = 0, checked = 0;
  for (int k = 0; k < 300; ++k) {
    const BoundaryPair p = omega.sample(rng);
    if (omega.boundary_clearance(p) < 1e-6) continue;
    const CodingSeq code = code_geodesic(s, params, omega, p, 12, 0);
    if (code.truncated_future) continue;
    ++checked;
    accepted += g.accepts(code.future);
  }
  CHECK(checked > 250);
  CHECK(accepted == checked);
  // a symbol followed by its own inverse generator never occurs: T_i then T_{σ(i)}
  const std::vector<int> backtrack = {1, 7};
  CHECK_FALSE(g.accepts(backtrack));
}
