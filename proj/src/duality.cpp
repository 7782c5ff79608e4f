#include "bsmaps/duality.hpp"

#include <algorithm>
#include <random>

#include "bsmaps/coding.hpp"

namespace bsmaps {

std::vector<CirclePointd> DualParams::circle_points() const {
  std::vector<CirclePointd> out;
  for (const auto& p : points) out.push_back(p.point);
  return out;
}

DualParams dual_params(const ExtremalParams& params, const SolvedParams& solved) {
  return {solved.D, params.word()};
}

std::optional<std::string> extremal_word(const DualParams& dual, const SurfaceGroup& s,
                                         double tol) {
  std::string w;
  for (int i = 1; i <= s.size(); ++i) {
    const auto& x = dual.point(i).point;
    if (coincident(x, s.P(i), tol)) w += 'P';
    else if (coincident(x, s.Q(i), tol)) w += 'Q';
    else return std::nullopt;
  }
  return w;
}

namespace {

bool same_rect(const LabeledRect& a, const LabeledRect& b, double tol) {
  return coincident(a.x.start, b.x.start, tol) && coincident(a.x.end, b.x.end, tol) &&
         coincident(a.y.start, b.y.start, tol) && coincident(a.y.end, b.y.end, tol);
}

}  // namespace

DualDomain build_omega_dual(const SurfaceGroup& s, const ExtremalParams& params,
                            const SolvedParams& solved, double tol) {
  std::vector<LabeledRect> horizontal, vertical;
  for (int i = 1; i <= s.size(); ++i) {
    const int sg = s.sigma(i);
    const auto& d0 = solved.d(i).point;
    const auto& d1 = solved.d(i + 1).point;

    LabeledRect r{Arcd::half_open(s.Q(i + 2), s.P(i - 1)), Arcd::half_open(d0, d1), i,
                  RectKind::R, false};
    r.degenerate = r.x.degenerate(tol) || r.y.degenerate(tol);

    LabeledRect ru{Arcd::half_open(s.P(i - 1), s.P(i)), Arcd::half_open(solved.h(i).point, d1), i,
                   RectKind::Ru, params.choice(sg + 1) == Endpoint::P};
    if (ru.degenerate && !ru.y.degenerate(tol))
      throw StructureError("strip " + std::to_string(i) + ": Ru should be empty but H_" +
                           std::to_string(i) + " differs from D_" + std::to_string(s.wrap(i + 1)));

    LabeledRect rl{Arcd::half_open(s.Q(i + 1), s.Q(i + 2)), Arcd::half_open(d0, solved.g(i).point),
                   i, RectKind::Rl, params.choice(sg) == Endpoint::Q};
    if (rl.degenerate && !rl.y.degenerate(tol))
      throw StructureError("strip " + std::to_string(i) + ": Rl should be empty but G_" +
                           std::to_string(i) + " differs from D_" + std::to_string(i));
    horizontal.insert(horizontal.end(), {r, ru, rl});

    vertical.push_back({Arcd::half_open(s.P(i), s.Q(i)),
                        Arcd::half_open(solved.h(i + 1).point, solved.g(i - 2).point), i,
                        RectKind::V, false});
    vertical.push_back({Arcd::half_open(s.Q(i), s.P(i + 1)),
                        Arcd::half_open(solved.h(i + 1).point, solved.g(i - 1).point), i,
                        RectKind::V1, false});
  }

  const RectDomain omega_a = build_omega_A(s, solved, tol);
  for (std::size_t k = 0; k < vertical.size(); ++k)
    if (!same_rect(omega_a.rects()[k].flipped(), vertical[k], tol))
      throw StructureError("strip " + std::to_string(vertical[k].strip) + ": flip of " +
                           omega_a.rects()[k].label() + " differs from " + vertical[k].label());

  // Columns of the horizontal view must tile the vertical strips.
  std::vector<LabeledRect> hf, vf;
  for (const auto& r : horizontal) hf.push_back(r.flipped());
  for (const auto& r : vertical) vf.push_back(r.flipped());
  const auto issues = compare_rows(hf, vf, s.boundary_points(), breakpoint_names(s), tol);
  if (!issues.empty())
    throw StructureError("column " + issues.front().strip + ": " + issues.front().message);

  return {RectDomain(std::move(horizontal)), RectDomain(std::move(vertical))};
}

DualMapResult F_dual(const SurfaceGroup& s, const DualParams& dual, const BoundaryPair& p,
                     double tol) {
  const auto pts = dual.circle_points();
  const PairMapResult r = F_partition(s, pts, p, tol);
  return {r.pair, r.index, partition_clearance(pts, p.w) <= tol};
}

DualityReport verify_duality(const SurfaceGroup& s, const ExtremalParams& params,
                             const SolvedParams& solved, const DualParams& dual,
                             const DualityOptions& opts) {
  DualityReport rep;
  rep.seed = opts.seed;
  const double tol = opts.tol;
  const auto dpts = dual.circle_points();
  const RectDomain omega_a = build_omega_A(s, solved, tol);

  DualDomain od;
  try {
    od = build_omega_dual(s, params, solved, tol);
  } catch (const StructureError& e) {
    rep.structure_pass = false;
    rep.structure_failures.push_back(e.what());
  }

  if (rep.structure_pass) {
    // F_D carries R_i onto V′_σ(i), R^l_i onto V_σ(i) and R^u_i onto V_{σ(i)+1}.
    std::vector<LabeledRect> images;
    for (const auto& r : od.horizontal.rects()) {
      if (r.degenerate) continue;
      const int sg = s.sigma(r.strip);
      const CirclePointd mid = CirclePointd::from_angle(r.y.start.angle() + r.y.length() / 2);
      const int l = partition_index(dpts, mid, tol);
      const Moebiusd& t = s.T(l);
      LabeledRect img{Arcd::half_open(t.apply(r.x.start), t.apply(r.x.end)),
                      Arcd::half_open(t.apply(r.y.start), t.apply(r.y.end)), r.strip, r.kind,
                      false};
      const std::size_t target = r.kind == RectKind::R    ? 2 * (sg - 1) + 1
                                 : r.kind == RectKind::Rl ? 2 * (sg - 1)
                                                          : 2 * (s.wrap(sg + 1) - 1);
      const LabeledRect& v = od.vertical.rects()[target];
      if (l != r.strip || !same_rect(img, v, tol))
        rep.structure_failures.push_back("T_" + std::to_string(l) + " " + r.label() +
                                         " is not " + v.label());
      images.push_back(img);
    }
    std::vector<LabeledRect> pf, vf;
    for (const auto& r : images) pf.push_back(r.flipped());
    for (const auto& r : od.vertical.rects()) vf.push_back(r.flipped());
    for (const auto& issue : compare_rows(pf, vf, s.boundary_points(), breakpoint_names(s), tol))
      rep.structure_failures.push_back("column " + issue.strip + ": " + issue.message);
    rep.structure_pass = rep.structure_failures.empty();
  }

  std::mt19937_64 rng(opts.seed);
  if (rep.structure_pass) {
    for (std::size_t n = 0; n < opts.samples; ++n) {
      const BoundaryPair p = omega_a.sample(rng);
      const BoundaryPair q = od.vertical.sample(rng);
      if (omega_a.boundary_clearance(p) < opts.margin || od.vertical.boundary_clearance(q) < opts.margin ||
          od.horizontal.boundary_clearance(flip(p)) < opts.margin ||
          od.horizontal.boundary_clearance(q) < opts.margin) {
        ++rep.skipped_boundary;
        continue;
      }
      ++rep.flip_samples;
      if (!od.horizontal.contains(flip(p), tol) || !od.vertical.contains(flip(p), tol) ||
          !omega_a.contains(flip(q), tol))
        ++rep.flip_failures;
      if (od.horizontal.count_containing(q, tol) != 1) ++rep.partition_failures;
    }
  }

  std::size_t code_budget = opts.code_samples;
  for (std::size_t n = 0; n < opts.samples; ++n) {
    const BoundaryPair p = omega_a.sample(rng);
    if (omega_a.boundary_clearance(p) < opts.margin) {
      ++rep.skipped_boundary;
      continue;
    }
    if (partition_clearance(dpts, p.u) < opts.margin) {
      ++rep.skipped_near_dual;
      continue;
    }
    try {
      const BoundaryPair pre = F_A_inverse(s, params, omega_a, p, tol);
      if (omega_a.boundary_clearance(pre) < opts.margin) {
        ++rep.skipped_boundary;
        continue;
      }
      ++rep.identity_samples;
      const BoundaryPair lhs = flip(pre);
      const BoundaryPair rhs = F_dual(s, dual, flip(p), tol).pair;
      const double dev = pair_distance(lhs, rhs);
      rep.max_deviation = std::max(rep.max_deviation, dev);
      if (dev > tol) ++rep.identity_mismatches;
    } catch (const Error&) {
      ++rep.identity_mismatches;
      continue;
    }

    if (code_budget == 0) continue;
    const CodingSeq code = code_geodesic(s, params, omega_a, p, 0, opts.code_length, tol);
    if (code.truncated_past) continue;
    BoundaryPair x = flip(p);
    bool clean = true;
    std::vector<int> forward;
    for (int m = 0; m < opts.code_length; ++m) {
      if (partition_clearance(dpts, x.w) < opts.margin) {
        clean = false;
        break;
      }
      const DualMapResult step = F_dual(s, dual, x, tol);
      forward.push_back(step.index);
      x = step.pair;
    }
    if (!clean) continue;
    --code_budget;
    ++rep.code_checks;
    if (forward != code.past) ++rep.code_mismatches;
  }

  rep.pass = rep.structure_pass && rep.flip_failures == 0 && rep.partition_failures == 0 &&
             rep.identity_samples > 0 && rep.identity_mismatches == 0 && rep.code_mismatches == 0;
  return rep;
}

FamilyReport dual_family_check(int genus, const DualityOptions& opts) {
  const SurfaceGroup s = SurfaceGroup::regular(genus);
  const int n = s.size();
  auto periodic = [n](const std::string& pattern) {
    std::string w;
    for (int i = 0; i < n; ++i) w += pattern[i % pattern.size()];
    return w;
  };
  struct Family {
    std::string name, source, dual;
  };
  const std::vector<Family> families = {
      {"(a) all-P", periodic("P"), periodic("Q")},
      {"(a) all-Q", periodic("Q"), periodic("P")},
      {"(b) alternating PQ", periodic("PQ"), periodic("QP")},
      {"(b) alternating QP", periodic("QP"), periodic("PQ")},
      {"(c) self-dual PPQQ", periodic("PPQQ"), periodic("PPQQ")},
      {"(d) self-dual QQPP", periodic("QQPP"), periodic("QQPP")},
  };

  FamilyReport rep;
  rep.genus = genus;
  rep.pass = true;
  for (const auto& f : families) {
    FamilyEntry e;
    e.name = f.name;
    e.source = f.source;
    e.expected_dual = f.dual;
    const ExtremalParams params = ExtremalParams::parse(f.source, s);
    const SolvedParams solved = solve(s, params, opts.tol);
    const DualParams dual = dual_params(params, solved);
    const ExtremalParams expected = ExtremalParams::parse(f.dual, s);
    for (int i = 1; i <= n; ++i)
      e.max_pointwise_deviation = std::max(
          e.max_pointwise_deviation, circle_distance(dual.point(i).point, expected.point(i)));
    e.pointwise_ok = e.max_pointwise_deviation <= opts.tol;
    e.duality = verify_duality(s, params, solved, dual, opts);

    if (const auto w = extremal_word(dual, s, opts.tol)) {
      const ExtremalParams back = ExtremalParams::parse(*w, s);
      const DualParams dd = dual_params(back, solve(s, back, opts.tol));
      e.double_dual_ok = true;
      for (int i = 1; i <= n; ++i)
        if (!coincident(dd.point(i).point, params.point(i), opts.tol)) e.double_dual_ok = false;
    }
    rep.pass = rep.pass && e.pointwise_ok && e.double_dual_ok && e.duality.pass;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace bsmaps
