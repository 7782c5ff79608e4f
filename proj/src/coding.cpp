#include "bsmaps/coding.hpp"

#include <algorithm>
#include <random>

namespace bsmaps {

PairMapResult F_geo(const SurfaceGroup& s, const BoundaryPair& p, double tol) {
  const int i = exit_side(s, p.u, p.w, tol);
  return {apply(s.T(i), p), i};
}

RegionTable::RegionTable(const SurfaceGroup& s, const RectDomain& /*omega_a*/) : n_(s.size()) {
  for (int i = 1; i <= n_; ++i) {
    lower_.push_back({Arcd::closed(s.Q(i + 1), s.Q(i + 2)), Arcd::closed(s.P(i), s.P(i + 1)), i,
                      RectKind::R, false});
    upper_.push_back({Arcd::closed(s.P(i - 1), s.P(i)), Arcd::closed(s.Q(i), s.Q(i + 1)), i,
                      RectKind::R, false});
  }
}

Region locate_region(const SurfaceGroup& s, const RectDomain& omega_a, const RegionTable& regions,
                     const BoundaryPair& p, double tol) {
  const PolygonHit hit = geodesic_intersects_polygon(s, p.u, p.w, tol);
  if (hit == PolygonHit::outside) return {Region::Kind::outside, 0};
  if (hit == PolygonHit::boundary || omega_a.boundary_clearance(p) <= tol)
    return {Region::Kind::boundary, 0};
  if (omega_a.contains(p, tol)) return {Region::Kind::core, 0};
  for (int i = 1; i <= regions.size(); ++i) {
    if (regions.lower_box(i).contains(p, tol)) return {Region::Kind::lower_bulge, i};
    if (regions.upper_box(i).contains(p, tol)) return {Region::Kind::upper_bulge, i};
  }
  return {Region::Kind::unlocated, 0};
}

PhiResult apply_phi(const SurfaceGroup& s, const SolvedParams& solved, const RectDomain& omega_a,
                    const RegionTable& regions, const BoundaryPair& p, double tol) {
  if (geodesic_intersects_polygon(s, p.u, p.w, tol) == PolygonHit::outside)
    throw DomainError("geodesic does not meet the polygon");
  if (omega_a.contains(p, tol)) return {p, 0};
  for (int i = 1; i <= regions.size(); ++i) {
    if (regions.lower_box(i).contains(p, tol)) {
      const int j = s.wrap(s.tau(i) + 1);
      return {apply(solved.u(j), p), j};
    }
    if (regions.upper_box(i).contains(p, tol)) {
      const int j = s.tau(i);
      return {apply(solved.u(j), p), j};
    }
  }
  throw StructureError("point of the geodesic domain lies in no bulge");
}

PhiResult apply_phi_inverse(const SurfaceGroup& s, const SolvedParams& solved,
                            const RectDomain& omega_a, const RegionTable& regions,
                            const BoundaryPair& p, double tol) {
  if (omega_a.distance(p) > tol) throw DomainError("point outside the domain");
  if (geodesic_intersects_polygon(s, p.u, p.w, tol) != PolygonHit::outside) return {p, 0};
  for (int m = 1; m <= regions.size(); ++m) {
    if (regions.upper_box(m).contains(p, tol)) return {apply(solved.u(m).inverse(), p), m};
    if (regions.lower_box(m).contains(p, tol)) {
      const int j = s.wrap(m + 1);
      return {apply(solved.u(j).inverse(), p), j};
    }
  }
  throw StructureError("point of the domain lies in no corner");
}

PhiResult reduce_geodesic(const SurfaceGroup& s, const SolvedParams& solved,
                          const RectDomain& omega_a, const BoundaryPair& p, double tol) {
  const RegionTable regions(s, omega_a);
  return apply_phi(s, solved, omega_a, regions, p, tol);
}

std::optional<BoundaryPair> sample_omega_geo(const SurfaceGroup& s, std::mt19937_64& rng,
                                             int max_attempts, double tol) {
  std::uniform_real_distribution<double> angle(0.0, kTwoPi<double>);
  for (int k = 0; k < max_attempts; ++k) {
    const BoundaryPair p{CirclePointd::from_angle(angle(rng)), CirclePointd::from_angle(angle(rng))};
    if (coincident(p.u, p.w, tol)) continue;
    if (geodesic_intersects_polygon(s, p.u, p.w, tol) == PolygonHit::inside) return p;
  }
  return std::nullopt;
}

ConjugacyReport verify_conjugacy(const SurfaceGroup& s, const ExtremalParams& params,
                                 const SolvedParams& solved, const RectDomain& omega_a,
                                 const ConjugacyOptions& opts) {
  ConjugacyReport rep;
  rep.seed = opts.seed;
  const double tol = opts.tol;
  const RegionTable regions(s, omega_a);
  const auto named = s.boundary_points();
  std::mt19937_64 rng(opts.seed);

  auto near_named = [&](const BoundaryPair& x) {
    return partition_clearance(named, x.u) < opts.margin ||
           partition_clearance(named, x.w) < opts.margin;
  };
  auto unclear = [&](const BoundaryPair& x) {
    return vertex_clearance(s, x.u, x.w) < opts.margin ||
           omega_a.boundary_clearance(x) < opts.margin || near_named(x);
  };

  const std::size_t max_attempts = 20 * opts.samples + 100;
  for (std::size_t attempt = 0; attempt < max_attempts && rep.samples < opts.samples; ++attempt) {
    const auto sample = sample_omega_geo(s, rng, 1000, tol);
    if (!sample) break;
    const BoundaryPair p = *sample;
    try {
      if (unclear(p)) {
        ++rep.skipped_boundary;
        continue;
      }
      const BoundaryPair q = F_geo(s, p, tol).pair;
      if (unclear(q)) {
        ++rep.skipped_boundary;
        continue;
      }
      const PhiResult phi_p = apply_phi(s, solved, omega_a, regions, p, tol);
      const PhiResult phi_q = apply_phi(s, solved, omega_a, regions, q, tol);
      if (unclear(phi_p.pair) ||
          partition_clearance(params.points(), phi_p.pair.w) < opts.margin) {
        ++rep.skipped_boundary;
        continue;
      }
      ++rep.samples;
      if (!omega_a.contains(phi_p.pair, tol)) ++rep.phi_outside_omega;
      const BoundaryPair rhs = F_A(s, params, phi_p.pair, tol).pair;
      const double dev = pair_distance(phi_q.pair, rhs);
      rep.max_deviation = std::max(rep.max_deviation, dev);
      if (dev > tol) ++rep.mismatches;

      const BoundaryPair back =
          apply_phi_inverse(s, solved, omega_a, regions, phi_p.pair, tol).pair;
      const BoundaryPair round =
          apply_phi(s, solved, omega_a, regions, F_geo(s, back, tol).pair, tol).pair;
      if (pair_distance(back, p) > tol || pair_distance(round, rhs) > tol)
        ++rep.inverse_mismatches;
    } catch (const StructureError&) {
      ++rep.unlocated;
    } catch (const DegenerateError&) {
      ++rep.skipped_boundary;
    }
  }
  rep.pass = rep.samples > 0 && rep.mismatches == 0 && rep.unlocated == 0 &&
             rep.phi_outside_omega == 0 && rep.inverse_mismatches == 0;
  return rep;
}

CodingSeq code_geodesic(const SurfaceGroup& s, const ExtremalParams& params,
                        const RectDomain& omega_a, const BoundaryPair& p, int n_future,
                        int n_past, double tol) {
  if (omega_a.distance(p) > tol) throw DomainError("geodesic is not reduced");
  CodingSeq out;
  out.center = p;
  BoundaryPair cur = p;
  for (int k = 0; k < n_future; ++k) {
    if (partition_clearance(params.points(), cur.w) <= tol) {
      out.truncated_future = true;
      break;
    }
    const int i = partition_index(params.points(), cur.w, tol);
    out.future.push_back(s.sigma(i));
    cur = apply(s.T(i), cur);
  }
  cur = p;
  for (int k = 0; k < n_past; ++k) {
    BoundaryPair prev;
    try {
      prev = F_A_inverse(s, params, omega_a, cur, tol);
    } catch (const Error&) {
      out.truncated_past = true;
      break;
    }
    if (partition_clearance(params.points(), prev.w) <= tol) {
      out.truncated_past = true;
      break;
    }
    out.past.push_back(s.sigma(partition_index(params.points(), prev.w, tol)));
    cur = prev;
  }
  return out;
}

}  // namespace bsmaps
