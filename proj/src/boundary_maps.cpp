#include "bsmaps/boundary_maps.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>

namespace bsmaps {

// ---------------------------------------------------------------- parameters

ExtremalParams ExtremalParams::parse(std::string_view word, const SurfaceGroup& s) {
  if (static_cast<int>(word.size()) != s.size())
    throw ParseError("parameter word must have length " + std::to_string(s.size()) + ", got " +
                     std::to_string(word.size()));
  std::vector<Endpoint> choices;
  for (char c : word) {
    if (c != 'P' && c != 'Q')
      throw ParseError(std::string("parameter word may contain only P and Q, got '") + c + "'");
    choices.push_back(static_cast<Endpoint>(c));
  }
  return from_choices(std::move(choices), s);
}

ExtremalParams ExtremalParams::from_choices(std::vector<Endpoint> choices, const SurfaceGroup& s) {
  if (static_cast<int>(choices.size()) != s.size())
    throw ParseError("expected " + std::to_string(s.size()) + " choices");
  ExtremalParams out;
  out.choices_ = std::move(choices);
  for (int i = 1; i <= s.size(); ++i)
    out.points_.push_back(out.choice(i) == Endpoint::P ? s.P(i) : s.Q(i));
  return out;
}

std::string ExtremalParams::word() const {
  std::string w;
  for (Endpoint e : choices_) w += static_cast<char>(e);
  return w;
}

int partition_index(std::span<const CirclePointd> points, const CirclePointd& x, double tol) {
  const int n = static_cast<int>(points.size());
  for (int i = 1; i <= n; ++i)
    if (Arcd::half_open(points[i - 1], points[i % n]).contains(x, tol)) return i;
  throw DomainError("point not covered by the partition");
}

double partition_clearance(std::span<const CirclePointd> points, const CirclePointd& x) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& a : points) best = std::min(best, circle_distance(a, x));
  return best;
}

IndexType classify_type(int i, const ExtremalParams& params, const SideIndexMaps& maps) {
  if (params.choice(maps.sigma(i)) == Endpoint::P)
    return params.choice(i + 2) == Endpoint::P ? IndexType::Type1 : IndexType::Type2;
  return params.choice(maps.tau(i)) == Endpoint::Q ? IndexType::Type3 : IndexType::Type4;
}

std::vector<CirclePointd> SolvedParams::d_points() const {
  std::vector<CirclePointd> out;
  for (const auto& d : D) out.push_back(d.point);
  return out;
}

// ---------------------------------------------------------------- solver

namespace {

class GSolver {
 public:
  GSolver(const SurfaceGroup& s, const ExtremalParams& params, double tol)
      : s_(s), params_(params), tol_(tol), memo_(s.size()), visiting_(s.size(), false) {}

  const SolvedPoint& resolve(int i, int depth) {
    i = s_.wrap(i);
    auto& slot = memo_[i - 1];
    if (slot) return *slot;
    if (visiting_[i - 1] || depth > s_.size())
      throw ContradictionError("recursion for G_" + std::to_string(i) + " does not terminate");
    max_depth_ = std::max(max_depth_, depth);
    visiting_[i - 1] = true;

    const int g = s_.genus();
    const IndexType type = classify_type(i, params_, s_.maps());
    SolvedPoint out;
    switch (type) {
      case IndexType::Type1:
        out.word = {{}, {BaseKind::P, s_.wrap(i + 1)}};
        out.point = s_.P(i + 1);
        break;
      case IndexType::Type3:
        out.word = {{}, {BaseKind::P, i}};
        out.point = s_.P(i);
        break;
      case IndexType::Type2: {
        const int j = s_.wrap(i + 4 * g);
        if (classify_type(j, params_, s_.maps()) == IndexType::Type4)
          throw ContradictionError("Type 2 chain from index " + std::to_string(i) +
                                   " reaches Type 4 index " + std::to_string(j));
        const SolvedPoint& next = resolve(j, depth + 1);
        const std::vector<int> outer = {s_.sigma(i), s_.wrap(s_.tau(i) + 3)};
        out.word = s_.reduce(prepend(outer, next.word));
        out.point = s_.product(outer).apply(next.point);
        break;
      }
      case IndexType::Type4: {
        const int j = s_.wrap(i - 4 * g);
        if (classify_type(j, params_, s_.maps()) == IndexType::Type2)
          throw ContradictionError("Type 4 chain from index " + std::to_string(i) +
                                   " reaches Type 2 index " + std::to_string(j));
        const SolvedPoint& next = resolve(j, depth + 1);
        const std::vector<int> outer = {s_.wrap(s_.tau(s_.sigma(i)) + 1), s_.tau(i)};
        out.word = s_.reduce(prepend(outer, next.word));
        out.point = s_.product(outer).apply(next.point);
        break;
      }
    }
    if (!Arcd::closed(s_.P(i), s_.P(i + 1)).contains(out.point, tol_))
      throw RangeError("G_" + std::to_string(i) + " lies outside [P_" + std::to_string(i) +
                       ", P_" + std::to_string(s_.wrap(i + 1)) + "]");
    visiting_[i - 1] = false;
    slot = out;
    return *slot;
  }

  int max_depth() const { return max_depth_; }

 private:
  const SurfaceGroup& s_;
  const ExtremalParams& params_;
  double tol_;
  std::vector<std::optional<SolvedPoint>> memo_;
  std::vector<bool> visiting_;
  int max_depth_ = 0;
};

}  // namespace

std::vector<SolvedPoint> solve_G(const SurfaceGroup& s, const ExtremalParams& params,
                                 std::span<const int> order, double tol, int* chain_depth) {
  if (params.size() != s.size()) throw ParseError("parameter size does not match the surface");
  GSolver solver(s, params, tol);
  if (order.empty()) {
    for (int i = 1; i <= s.size(); ++i) solver.resolve(i, 0);
  } else {
    for (int i : order) solver.resolve(i, 0);
  }
  std::vector<SolvedPoint> out;
  for (int i = 1; i <= s.size(); ++i) out.push_back(solver.resolve(i, 0));
  if (chain_depth) *chain_depth = solver.max_depth();
  return out;
}

void compute_H_D(const SurfaceGroup& s, SolvedParams& solved, double tol) {
  const int n = s.size();
  solved.U.clear();
  solved.H.clear();
  solved.D.clear();
  for (int i = 1; i <= n; ++i) {
    const std::vector<int> one = {s.sigma(i - 1), s.tau(i)};
    const std::vector<int> two = {s.sigma(i), s.wrap(s.tau(i) - 1)};
    const Moebiusd u = s.product(one);
    if ((u * s.product(two).inverse()).identity_deviation() > tol)
      throw RangeError("U_" + std::to_string(i) + " differs between its two expressions");
    solved.U.push_back(u);

    const SolvedPoint& gh = solved.g(s.tau(i) - 1);
    solved.H.push_back({s.reduce(prepend(one, gh.word)), u.apply(gh.point)});

    const int ts = s.tau(s.sigma(i));
    const SolvedPoint& gd = solved.g(ts);
    const int letter = s.wrap(ts + 1);
    solved.D.push_back({s.reduce(prepend(letter, gd.word)), s.T(letter).apply(gd.point)});
  }
  for (int i = 1; i <= n; ++i) {
    const std::string is = std::to_string(i);
    if (!Arcd::closed(s.P(i), s.Q(i)).contains(solved.d(i).point, tol))
      throw RangeError("D_" + is + " lies outside [P_" + is + ", Q_" + is + "]");
    if (!Arcd::closed(s.Q(i), s.Q(i + 1)).contains(solved.h(i).point, tol))
      throw RangeError("H_" + is + " lies outside [Q_" + is + ", Q_" + std::to_string(s.wrap(i + 1)) + "]");
    const CirclePointd image = s.T(s.sigma(i)).apply(solved.h(s.sigma(i) + 1).point);
    if (!coincident(image, solved.d(i).point, tol))
      throw RangeError("D_" + is + " differs from T_{sigma(" + is + ")} H_{sigma(" + is + ")+1}");
  }
}

SolvedParams solve(const SurfaceGroup& s, const ExtremalParams& params, double tol) {
  SolvedParams out;
  for (int i = 1; i <= s.size(); ++i) out.types.push_back(classify_type(i, params, s.maps()));
  out.G = solve_G(s, params, {}, tol, &out.chain_depth);
  compute_H_D(s, out, tol);
  return out;
}

// ---------------------------------------------------------------- maps

MapIndexResult f_A(const SurfaceGroup& s, const ExtremalParams& params, const CirclePointd& x,
                   double tol) {
  const int i = partition_index(params.points(), x, tol);
  return {s.T(i).apply(x), i};
}

PairMapResult F_partition(const SurfaceGroup& s, std::span<const CirclePointd> points,
                          const BoundaryPair& p, double tol) {
  if (coincident(p.u, p.w, tol)) throw DegenerateError("u and w coincide");
  const int i = partition_index(points, p.w, tol);
  return {apply(s.T(i), p), i};
}

PairMapResult F_A(const SurfaceGroup& s, const ExtremalParams& params, const BoundaryPair& p,
                  double tol) {
  return F_partition(s, params.points(), p, tol);
}

RectDomain build_omega_A(const SurfaceGroup& s, const SolvedParams& solved, double tol) {
  std::vector<LabeledRect> rects;
  for (int i = 1; i <= s.size(); ++i) {
    LabeledRect r2{Arcd::half_open(solved.h(i + 1).point, solved.g(i - 2).point),
                   Arcd::half_open(s.P(i), s.Q(i)), i, RectKind::R2, false};
    LabeledRect r1{Arcd::half_open(solved.h(i + 1).point, solved.g(i - 1).point),
                   Arcd::half_open(s.Q(i), s.P(i + 1)), i, RectKind::R1, false};
    for (auto* r : {&r2, &r1}) {
      r->degenerate = r->x.degenerate(tol) || r->y.degenerate(tol);
      rects.push_back(*r);
    }
  }
  return RectDomain(std::move(rects));
}

std::vector<std::string> breakpoint_names(const SurfaceGroup& s) {
  std::vector<std::string> out;
  for (int i = 1; i <= s.size(); ++i) {
    out.push_back("P" + std::to_string(i));
    out.push_back("Q" + std::to_string(i));
  }
  return out;
}

BoundaryPair F_A_inverse(const SurfaceGroup& s, const ExtremalParams& params,
                         const RectDomain& domain, const BoundaryPair& p, double tol) {
  if (!domain.contains(p, tol) && domain.distance(p) > tol)
    throw DomainError("point outside the domain");
  std::vector<BoundaryPair> candidates(s.size());
  std::vector<BoundaryPair> exact;
  for (int i = 1; i <= s.size(); ++i) {
    candidates[i - 1] = apply(s.T(s.sigma(i)), p);
    const BoundaryPair& c = candidates[i - 1];
    if (params.interval(i).contains(c.w, tol) && domain.contains(c, tol)) exact.push_back(c);
  }
  if (exact.size() == 1) return exact.front();
  if (exact.size() > 1) {
    for (const auto& c : exact)
      if (pair_distance(c, exact.front()) > tol)
        throw BijectivityError("point has " + std::to_string(exact.size()) + " preimages");
    return exact.front();
  }
  // Rounding at a rectangle edge: accept the nearest candidate within a few ε.
  std::optional<BoundaryPair> nearest;
  double nearest_gap = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= s.size(); ++i) {
    const BoundaryPair& c = candidates[i - 1];
    const double gap = std::max(params.interval(i).distance(c.w), domain.distance(c));
    if (gap < nearest_gap) {
      nearest_gap = gap;
      nearest = c;
    }
  }
  if (nearest && nearest_gap <= 10 * tol) return *nearest;
  throw BijectivityError("point has no preimage in the domain");
}

// ---------------------------------------------------------------- verification

double invariant_measure(const LabeledRect& r, int segments) {
  if (r.degenerate) return 0;
  static constexpr std::array<double, 8> nodes = {
      -0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
      0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975363};
  static constexpr std::array<double, 8> weights = {
      0.1012285362903763, 0.2223810344533745, 0.3137066278720119, 0.3626837833783620,
      0.3626837833783620, 0.3137066278720119, 0.2223810344533745, 0.1012285362903763};
  auto abscissae = [&](const Arcd& a) {
    std::vector<std::pair<double, double>> out;
    const double len = a.length();
    const double h = len / segments;
    for (int k = 0; k < segments; ++k) {
      const double mid = a.start.angle() + (k + 0.5) * h;
      for (std::size_t j = 0; j < nodes.size(); ++j)
        out.push_back({mid + 0.5 * h * nodes[j], 0.5 * h * weights[j]});
    }
    return out;
  };
  const auto xs = abscissae(r.x), ys = abscissae(r.y);
  double total = 0;
  for (const auto& [u, wu] : xs)
    for (const auto& [w, ww] : ys) {
      const double s = std::sin((u - w) / 2);
      total += wu * ww / (4 * s * s);
    }
  return total;
}

namespace {

struct ImageSpec {
  int map_index;
  // expected corners: x-start, x-end, y-start, y-end
  std::array<CirclePointd, 4> expected;
  std::array<std::string, 4> expected_names;
};

}  // namespace

BijectivityReport verify_bijectivity(const SurfaceGroup& s, const ExtremalParams& params,
                                     const SolvedParams& solved, const RectDomain& domain,
                                     const BijectivityOptions& opts) {
  BijectivityReport rep;
  rep.seed = opts.seed;
  const double tol = opts.tol;
  const auto str = [](int k) { return std::to_string(k); };

  std::vector<LabeledRect> images;
  if (opts.analytic) {
    rep.analytic_run = true;
    for (const LabeledRect& r : domain.rects()) {
      const int i = r.strip;
      const int sg = s.sigma(i);
      const CirclePointd mid_w = CirclePointd::from_angle(r.y.start.angle() + r.y.length() / 2);
      const int l = partition_index(params.points(), mid_w, tol);
      ImageSpec spec;
      if (r.kind == RectKind::R1) {
        spec = {i,
                {solved.d(sg).point, solved.d(sg + 1).point, s.Q(sg + 2), s.P(sg - 1)},
                {"D_" + str(sg), "D_" + str(s.wrap(sg + 1)), "Q_" + str(s.wrap(sg + 2)),
                 "P_" + str(s.wrap(sg - 1))}};
      } else if (params.choice(i) == Endpoint::P) {
        spec = {i,
                {solved.d(sg).point, solved.g(sg).point, s.Q(sg + 1), s.Q(sg + 2)},
                {"D_" + str(sg), "G_" + str(sg), "Q_" + str(s.wrap(sg + 1)),
                 "Q_" + str(s.wrap(sg + 2))}};
      } else {
        const int ts = s.tau(sg);
        spec = {s.wrap(i - 1),
                {solved.h(ts + 1).point, solved.d(ts + 2).point, s.P(ts), s.P(ts + 1)},
                {"H_" + str(s.wrap(ts + 1)), "D_" + str(s.wrap(ts + 2)), "P_" + str(ts),
                 "P_" + str(s.wrap(ts + 1))}};
      }
      const std::string name = "T_" + str(l) + " " + r.label();
      if (l != spec.map_index) {
        rep.analytic_pass = false;
        rep.analytic_failures.push_back(name + ": branch index " + str(l) + ", expected " +
                                        str(spec.map_index));
      }
      const Moebiusd& t = s.T(l);
      const std::array<CirclePointd, 4> got = {t.apply(r.x.start), t.apply(r.x.end),
                                               t.apply(r.y.start), t.apply(r.y.end)};
      static const std::array<const char*, 4> corner = {"x-start", "x-end", "y-start", "y-end"};
      for (int k = 0; k < 4; ++k) {
        const double dev = circle_distance(got[k], spec.expected[k]);
        rep.max_corner_deviation = std::max(rep.max_corner_deviation, dev);
        if (dev > tol) {
          rep.analytic_pass = false;
          rep.analytic_failures.push_back(name + " " + corner[k] + ": expected " +
                                          spec.expected_names[k] + ", off by " +
                                          std::to_string(dev));
        }
      }
      LabeledRect img{Arcd::half_open(got[0], got[1]), Arcd::half_open(got[2], got[3]), r.strip,
                      r.kind, r.degenerate};
      images.push_back(img);
    }
    const auto bps = s.boundary_points();
    const auto names = breakpoint_names(s);
    for (const auto& issue : compare_rows(images, domain.rects(), bps, names, tol)) {
      rep.analytic_pass = false;
      rep.analytic_failures.push_back("strip " + issue.strip + ": " + issue.message);
    }
  }

  if (opts.measure_check && !images.empty()) {
    rep.measure_run = true;
    for (std::size_t k = 0; k < images.size(); ++k) {
      const double before = invariant_measure(domain.rects()[k]);
      if (before <= 0) continue;
      const double after = invariant_measure(images[k]);
      rep.max_measure_relative_error =
          std::max(rep.max_measure_relative_error, std::abs(after - before) / before);
    }
  }

  if (opts.samples > 0) {
    std::mt19937_64 rng(opts.seed);
    std::vector<BoundaryPair> targets;
    targets.reserve(opts.samples);
    for (std::size_t n = 0; n < opts.samples; ++n) {
      const BoundaryPair p = domain.sample(rng);
      if (domain.boundary_clearance(p) < opts.margin ||
          partition_clearance(params.points(), p.w) < opts.margin) {
        ++rep.skipped_boundary;
        continue;
      }
      const BoundaryPair q = F_A(s, params, p, tol).pair;
      if (domain.boundary_clearance(q) < opts.margin) {
        ++rep.skipped_boundary;
        continue;
      }
      ++rep.samples;
      if (!domain.contains(q, tol)) ++rep.image_outside;
      targets.push_back(q);
    }
    std::sort(targets.begin(), targets.end(), [](const BoundaryPair& a, const BoundaryPair& b) {
      return a.u.angle() < b.u.angle();
    });
    for (std::size_t a = 0; a < targets.size(); ++a)
      for (std::size_t b = a + 1;
           b < targets.size() && targets[b].u.angle() - targets[a].u.angle() <= tol; ++b)
        if (pair_distance(targets[a], targets[b]) <= tol) ++rep.injectivity_violations;

    for (std::size_t n = 0; n < opts.samples; ++n) {
      const BoundaryPair q = domain.sample(rng);
      if (domain.boundary_clearance(q) < opts.margin) {
        ++rep.skipped_boundary;
        continue;
      }
      try {
        const BoundaryPair pre = F_A_inverse(s, params, domain, q, tol);
        if (!domain.contains(pre, tol) || pair_distance(F_A(s, params, pre, tol).pair, q) > tol)
          ++rep.preimage_failures;
      } catch (const Error&) {
        ++rep.preimage_failures;
      }
    }
    rep.monte_carlo_pass =
        rep.image_outside == 0 && rep.injectivity_violations == 0 && rep.preimage_failures == 0;
  }
  return rep;
}

}  // namespace bsmaps
