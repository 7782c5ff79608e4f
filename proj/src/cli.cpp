#include "bsmaps/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <random>
#include <set>
#include <thread>

#include "bsmaps/render.hpp"
#include "bsmaps/serialize.hpp"

namespace bsmaps {

std::vector<std::string> all_extremal_words(int genus) {
  const int n = side_count(genus);
  if (n > 24) throw RangeError("exhaustive enumeration is limited to 2^24 words");
  std::vector<std::string> words;
  words.reserve(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    std::string w(n, 'P');
    for (int k = 0; k < n; ++k)
      if (mask & (std::uint32_t{1} << (n - 1 - k))) w[k] = 'Q';
    words.push_back(std::move(w));
  }
  return words;
}

std::vector<std::string> random_extremal_words(int genus, std::size_t count, std::uint64_t seed) {
  const int n = side_count(genus);
  if (n < 64 && count > (std::uint64_t{1} << n)) throw RangeError("more words requested than exist");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::set<std::string> seen;
  std::vector<std::string> words;
  while (words.size() < count) {
    std::string w(n, 'P');
    for (auto& c : w) c = coin(rng) ? 'Q' : 'P';
    if (seen.insert(w).second) words.push_back(std::move(w));
  }
  return words;
}

namespace {

struct Common {
  int genus = 2;
  std::string params;
  double tol = kEpsilon;
  std::uint64_t seed = 1;
  std::size_t samples = 0;  // 0 selects the per-command default
  double offset = std::numeric_limits<double>::quiet_NaN();
};

std::string default_params(int genus) {
  if (genus == 2) return "PPPPQPQQPPQQ";
  return std::string(side_count(genus), 'P');
}

void add_common(CLI::App* cmd, Common& c, bool with_params = true) {
  cmd->add_option("--genus,-g", c.genus, "surface genus (>= 2)")->capture_default_str();
  if (with_params)
    cmd->add_option("--params,-p", c.params,
                    "extremal word over {P,Q} of length 8g-4 (default PPPPQPQQPPQQ at genus 2, all P otherwise)");
  cmd->add_option("--tol", c.tol, "tolerance epsilon")
      ->envname("BSMAPS_TOLERANCE")
      ->capture_default_str();
  cmd->add_option("--seed", c.seed, "seed for every sampled check")->capture_default_str();
  cmd->add_option("--samples,-k", c.samples, "sample count (0 = command default)");
  cmd->add_option("--offset", c.offset, "angle of the first polygon vertex (default pi/N)");
}

// Everything downstream of the parameter word.
struct Pipeline {
  SurfaceGroup surface;
  ExtremalParams params;
  SolvedParams solved;
  RectDomain omega;
};

SurfaceGroup build_surface(const Common& c) {
  std::optional<double> offset;
  if (!std::isnan(c.offset)) offset = c.offset;
  return SurfaceGroup::regular(c.genus, offset, c.tol);
}

Pipeline build_pipeline(const Common& c) {
  SurfaceGroup s = build_surface(c);
  const std::string word = c.params.empty() ? default_params(c.genus) : c.params;
  ExtremalParams params = ExtremalParams::parse(word, s);
  SolvedParams solved = solve(s, params, c.tol);
  RectDomain omega = build_omega_A(s, solved, c.tol);
  return {std::move(s), std::move(params), std::move(solved), std::move(omega)};
}

std::size_t samples_or(const Common& c, std::size_t fallback) {
  return c.samples ? c.samples : fallback;
}

void print(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int verdict(bool pass) { return pass ? kExitPass : kExitFail; }

int cmd_surface(const Common& c, std::ostream& out) {
  const SurfaceGroup s = build_surface(c);
  const RelationReport rel = verify_group_relations(s, c.tol);
  const GeometryReport geo = verify_geometry(s, c.tol);
  Json j = to_json(s);
  j["relations"] = to_json(rel);
  j["geometry"] = to_json(geo);
  print(out, j);
  return verdict(rel.pass && geo.pass());
}

int cmd_solve(const Common& c, std::ostream& out) {
  const Pipeline p = build_pipeline(c);
  print(out, solution_json(p.surface, p.params, p.solved));
  return kExitPass;
}

int cmd_omega(const Common& c, std::ostream& out) {
  const Pipeline p = build_pipeline(c);
  Json j;
  j["genus"] = c.genus;
  j["params"] = p.params.word();
  j["rectangles"] = to_json(p.omega);
  j["area"] = p.omega.area();
  print(out, j);
  return kExitPass;
}

int cmd_dual(const Common& c, std::ostream& out) {
  const Pipeline p = build_pipeline(c);
  const DualParams dual = dual_params(p.params, p.solved);
  const DualDomain domain = build_omega_dual(p.surface, p.params, p.solved, c.tol);
  print(out, dual_json(p.surface, dual, domain));
  return kExitPass;
}

int cmd_markov(const Common& c, const std::string& format, std::ostream& out) {
  const Pipeline p = build_pipeline(c);
  const TransitionMatrix m = markov_transition_matrix(p.surface, p.params, c.tol);
  if (format == "text") {
    out << to_text(m);
    return kExitPass;
  }
  Json j = to_json(m);
  j["params"] = p.params.word();
  j["sofic"] = to_json(code_presentation(m, p.surface, p.params));
  print(out, j);
  return kExitPass;
}

Json markov_summary(const TransitionMatrix& m) {
  std::size_t odd_min = SIZE_MAX, odd_max = 0, even_min = SIZE_MAX, even_max = 0;
  for (int k = 1; k <= m.size(); ++k) {
    const std::size_t n = m.row_count(k);
    auto& lo = (k % 2) ? odd_min : even_min;
    auto& hi = (k % 2) ? odd_max : even_max;
    lo = std::min(lo, n);
    hi = std::max(hi, n);
  }
  return {{"odd_row_entries", {odd_min, odd_max}}, {"even_row_entries", {even_min, even_max}}};
}

int cmd_verify(const Common& c, const std::string& what, std::ostream& out) {
  if (what == "relations" || what == "geometry") return cmd_surface(c, out);
  if (what == "families") {
    DualityOptions opts;
    opts.samples = samples_or(c, opts.samples);
    opts.seed = c.seed;
    opts.tol = c.tol;
    const FamilyReport r = dual_family_check(c.genus, opts);
    print(out, to_json(r));
    return verdict(r.pass);
  }
  const Pipeline p = build_pipeline(c);
  if (what == "bijectivity") {
    BijectivityOptions opts;
    opts.samples = samples_or(c, opts.samples);
    opts.seed = c.seed;
    opts.tol = c.tol;
    const BijectivityReport r = verify_bijectivity(p.surface, p.params, p.solved, p.omega, opts);
    print(out, to_json(r));
    return verdict(r.pass());
  }
  if (what == "conjugacy") {
    ConjugacyOptions opts;
    opts.samples = samples_or(c, opts.samples);
    opts.seed = c.seed;
    opts.tol = c.tol;
    const ConjugacyReport r = verify_conjugacy(p.surface, p.params, p.solved, p.omega, opts);
    print(out, to_json(r));
    return verdict(r.pass);
  }
  if (what == "duality") {
    DualityOptions opts;
    opts.samples = samples_or(c, opts.samples);
    opts.seed = c.seed;
    opts.tol = c.tol;
    const DualParams dual = dual_params(p.params, p.solved);
    const DualityReport r = verify_duality(p.surface, p.params, p.solved, dual, opts);
    print(out, to_json(r));
    return verdict(r.pass);
  }
  // markov: the closed forms are validated numerically while the matrix is built
  Json j;
  j["params"] = p.params.word();
  try {
    const TransitionMatrix m = markov_transition_matrix(p.surface, p.params, c.tol);
    j["pass"] = true;
    j.update(markov_summary(m));
  } catch (const MarkovError& e) {
    j["pass"] = false;
    j["error"] = e.what();
  }
  print(out, j);
  return verdict(j["pass"].get<bool>());
}

int cmd_code(const Common& c, double u, double w, int future, int past, std::ostream& out,
             std::ostream& err) {
  const Pipeline p = build_pipeline(c);
  BoundaryPair pair{CirclePointd::from_angle(u), CirclePointd::from_angle(w)};
  int reducer = 0;
  if (p.omega.distance(pair) > c.tol) {
    if (geodesic_intersects_polygon(p.surface, pair.u, pair.w, c.tol) != PolygonHit::inside) {
      err << "code: (u, w) is neither in the reduced domain nor a geodesic crossing the polygon\n";
      return kExitUsage;
    }
    const PhiResult r = reduce_geodesic(p.surface, p.solved, p.omega, pair, c.tol);
    pair = r.pair;
    reducer = r.map_index;
  }
  Json j = to_json(code_geodesic(p.surface, p.params, p.omega, pair, future, past, c.tol));
  j["params"] = p.params.word();
  j["input"] = Json::array({u, w});
  j["reduced_by_U"] = reducer;
  print(out, j);
  return kExitPass;
}

int cmd_sweep(const Common& c, std::size_t random_count, unsigned threads, std::ostream& out,
              std::ostream& err) {
  std::vector<std::string> words;
  if (random_count > 0) {
    words = random_extremal_words(c.genus, random_count, c.seed);
  } else if (c.genus == 2) {
    words = all_extremal_words(2);
  } else {
    err << "sweep: exhaustive sweeps run at genus 2 only; pass --random K for genus "
        << c.genus << "\n";
    return kExitUsage;
  }
  const SurfaceGroup s = build_surface(c);
  struct Outcome {
    bool bijective = false;
    bool markov = false;
    std::string error;
  };
  std::vector<Outcome> outcomes(words.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < words.size();) {
      Outcome& o = outcomes[k];
      try {
        const ExtremalParams params = ExtremalParams::parse(words[k], s);
        const SolvedParams solved = solve(s, params, c.tol);
        const RectDomain omega = build_omega_A(s, solved, c.tol);
        BijectivityOptions opts;
        opts.samples = samples_or(c, opts.samples);
        opts.seed = c.seed + k;
        opts.tol = c.tol;
        opts.measure_check = false;
        o.bijective = verify_bijectivity(s, params, solved, omega, opts).pass();
        markov_transition_matrix(s, params, c.tol);
        o.markov = true;
      } catch (const Error& e) {
        o.error = e.what();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  Json list = Json::array();
  std::size_t passed = 0;
  for (std::size_t k = 0; k < words.size(); ++k) {
    const Outcome& o = outcomes[k];
    const bool ok = o.bijective && o.markov;
    passed += ok;
    Json e = {{"word", words[k]}, {"pass", ok}, {"bijectivity", o.bijective}, {"markov", o.markov}};
    if (!o.error.empty()) e["error"] = o.error;
    list.push_back(e);
  }
  print(out, {{"genus", c.genus},
              {"seed", c.seed},
              {"attempted", words.size()},
              {"passed", passed},
              {"failed", words.size() - passed},
              {"words", list}});
  return verdict(passed == words.size());
}

int cmd_attractor(const Common& c, int iterations, std::ostream& out) {
  const Pipeline p = build_pipeline(c);
  AttractorOptions opts;
  opts.iterations = iterations;
  opts.samples = samples_or(c, opts.samples);
  opts.seed = c.seed;
  opts.tol = c.tol;
  const AttractorReport r = attractor_experiment(p.surface, p.params, p.omega, opts);
  Json j = to_json(r);
  j["params"] = p.params.word();
  print(out, j);
  // the converged fraction is never gating
  return verdict(r.invariance_pass);
}

int cmd_render(const Common& c, const std::string& what, const std::string& path, int size,
               std::ostream& out, std::ostream& err) {
  RenderSpec spec;
  if (what == "polygon") {
    spec = polygon_spec(build_surface(c), size);
  } else {
    spec.width = spec.height = size;
    if (what == "omega-geo") {
      const SurfaceGroup s = build_surface(c);
      spec.title = "Omega_geo boundary, genus " + std::to_string(c.genus);
      spec.layers = {omega_geo_layer(s), tick_layer(s)};
    } else {
      const Pipeline p = build_pipeline(c);
      if (what == "omega") {
        spec.title = "Omega_A for " + p.params.word();
        spec.layers = {domain_layer(p.omega, "omega-A", p.surface.size()), tick_layer(p.surface)};
      } else {
        const DualDomain d = build_omega_dual(p.surface, p.params, p.solved, c.tol);
        spec.title = "Omega_D dual to " + p.params.word();
        spec.layers = {domain_layer(d.horizontal, "omega-D", p.surface.size()),
                       tick_layer(p.surface)};
      }
    }
  }
  const std::string svg = render_svg(spec);
  if (path.empty() || path == "-") {
    out << svg;
    return kExitPass;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "render: cannot open " << path << "\n";
    return kExitUsage;
  }
  file << svg;
  return file ? kExitPass : kExitFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extremal Bowen-Series boundary maps for genus-g surfaces", "bsmaps"};
  app.require_subcommand(1);
  Common c;

  auto* surface = app.add_subcommand("surface", "fundamental polygon, generators and relation checks");
  add_common(surface, c, false);
  auto* solve_cmd = app.add_subcommand("solve", "solve G_i, H_i, D_i for an extremal word");
  add_common(solve_cmd, c);
  auto* omega = app.add_subcommand("omega", "rectangles of the reduced domain Omega_A");
  add_common(omega, c);
  auto* dual = app.add_subcommand("dual", "dual parameters and the dual domain");
  add_common(dual, c);

  std::string what;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("what", what, "suite")
      ->required()
      ->check(CLI::IsMember({"bijectivity", "conjugacy", "duality", "markov", "relations",
                             "geometry", "families"}));
  add_common(verify, c);

  double u = 0, w = 0;
  int future = 10, past = 10;
  auto* code = app.add_subcommand("code", "arithmetic code of the geodesic u -> w");
  code->add_option("--u", u, "backward endpoint angle")->required();
  code->add_option("--w", w, "forward endpoint angle")->required();
  code->add_option("--future", future, "future symbols")->capture_default_str()->check(CLI::NonNegativeNumber);
  code->add_option("--past", past, "past symbols")->capture_default_str()->check(CLI::NonNegativeNumber);
  add_common(code, c);

  std::string format = "json";
  auto* markov = app.add_subcommand("markov", "Markov transition matrix and sofic presentation");
  markov->add_option("--format", format)->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  add_common(markov, c);

  std::size_t random_count = 0;
  unsigned threads = 0;
  auto* sweep = app.add_subcommand("sweep", "bijectivity and Markov checks over many words");
  sweep->add_option("--random", random_count, "seeded random words instead of all 2^N");
  sweep->add_option("--threads", threads, "worker threads (0 = all cores)");
  add_common(sweep, c, false);

  int iterations = 50;
  auto* attractor = app.add_subcommand("attractor", "exploratory attractor experiment");
  attractor->add_option("--iters,-t", iterations)->capture_default_str()->check(CLI::NonNegativeNumber);
  add_common(attractor, c);

  std::string render_what = "omega", render_out;
  int size = 800;
  auto* render = app.add_subcommand("render", "SVG rendering");
  render->add_option("--what", render_what)
      ->check(CLI::IsMember({"omega", "omega-dual", "omega-geo", "polygon"}))
      ->capture_default_str();
  render->add_option("--out,-o", render_out, "output file (stdout if omitted)");
  render->add_option("--size", size, "width and height in pixels")->capture_default_str()->check(CLI::Range(64, 8192));
  add_common(render, c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code_ = app.exit(e, out, err);
    return code_ == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*surface) return cmd_surface(c, out);
    if (*solve_cmd) return cmd_solve(c, out);
    if (*omega) return cmd_omega(c, out);
    if (*dual) return cmd_dual(c, out);
    if (*verify) return cmd_verify(c, what, out);
    if (*code) return cmd_code(c, u, w, future, past, out, err);
    if (*markov) return cmd_markov(c, format, out);
    if (*sweep) return cmd_sweep(c, random_count, threads, out, err);
    if (*attractor) return cmd_attractor(c, iterations, out);
    if (*render) return cmd_render(c, render_what, render_out, size, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IndexError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace bsmaps
