#include "bsmaps/markov.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace bsmaps {

int odd_interval(int j, int n) { return wrap_index(2 * j - 1, 2 * n); }
int even_interval(int j, int n) { return wrap_index(2 * j, 2 * n); }

std::vector<int> TransitionMatrix::row(int k) const {
  std::vector<int> out;
  for (int j = 1; j <= size(); ++j)
    if (entries(k - 1, j - 1)) out.push_back(j);
  return out;
}

namespace {

CirclePointd midpoint(const Arcd& a) {
  return CirclePointd::from_angle(a.start.angle() + a.length() / 2);
}

}  // namespace

TransitionMatrix markov_transition_matrix(const SurfaceGroup& s, const ExtremalParams& params,
                                          double tol) {
  const int n = s.size();
  const int m = 2 * n;
  TransitionMatrix out;
  out.genus = s.genus();
  out.entries = Eigen::MatrixXi::Zero(m, m);
  for (int i = 1; i <= n; ++i) {
    out.intervals.push_back(Arcd::open(s.P(i), s.Q(i)));
    out.intervals.push_back(Arcd::open(s.Q(i), s.P(i + 1)));
  }

  for (int i = 1; i <= n; ++i) {
    const int sg = s.sigma(i);
    struct Row {
      int k;
      int map;
      CirclePointd lo, hi;
      std::vector<int> cols;
    };
    std::vector<Row> rows;

    Row even{2 * i, i, s.Q(sg + 2), s.P(sg - 1), {}};
    for (int j = even_interval(sg + 2, n);; j = wrap_index(j + 1, m)) {
      even.cols.push_back(j);
      if (j == even_interval(sg - 2, n)) break;
    }
    rows.push_back(even);

    if (params.choice(i) == Endpoint::P) {
      rows.push_back({2 * i - 1, i, s.Q(sg + 1), s.Q(sg + 2),
                      {even_interval(sg + 1, n), odd_interval(sg + 2, n)}});
    } else {
      const int ts = s.tau(sg);
      rows.push_back({2 * i - 1, s.wrap(i - 1), s.P(ts), s.P(ts + 1),
                      {odd_interval(ts, n), even_interval(ts, n)}});
    }

    for (const Row& r : rows) {
      const Arcd& source = out.intervals[r.k - 1];
      const std::string name = "row " + std::to_string(r.k);
      const int l = partition_index(params.points(), midpoint(source), tol);
      if (l != r.map)
        throw MarkovError(name + ": interval is moved by T_" + std::to_string(l) + ", expected T_" +
                          std::to_string(r.map));
      const CirclePointd lo = s.T(l).apply(source.start);
      const CirclePointd hi = s.T(l).apply(source.end);
      if (!coincident(lo, r.lo, tol) || !coincident(hi, r.hi, tol))
        throw MarkovError(name + ": endpoint images differ from the closed form");
      const Arcd image = Arcd::open(lo, hi);
      std::set<int> numeric;
      for (int j = 1; j <= m; ++j)
        if (image.contains(midpoint(out.intervals[j - 1]), tol)) numeric.insert(j);
      if (numeric != std::set<int>(r.cols.begin(), r.cols.end()))
        throw MarkovError(name + ": numeric image covers a different set of intervals");
      for (int j : r.cols) out.entries(r.k - 1, j - 1) = 1;
    }
  }
  return out;
}

Eigen::MatrixXi SoficGraph::letter_adjacency() const {
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(letters, letters);
  for (const auto& e : edges) a(e.from_letter - 1, e.to_letter - 1) = 1;
  return a;
}

Eigen::MatrixXi SoficGraph::refine() const {
  const int size = static_cast<int>(state_label.size());
  Eigen::MatrixXi m = Eigen::MatrixXi::Zero(size, size);
  for (const auto& e : edges) m(e.from_state - 1, e.to_state - 1) = 1;
  return m;
}

bool SoficGraph::strongly_connected() const {
  const Eigen::MatrixXi a = letter_adjacency();
  auto reach = [&](bool forward) {
    std::vector<bool> seen(letters, false);
    std::vector<int> stack = {0};
    seen[0] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < letters; ++w)
        if ((forward ? a(v, w) : a(w, v)) && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  };
  return letters > 0 && reach(true) && reach(false);
}

bool SoficGraph::accepts(std::span<const int> word) const {
  if (word.empty()) return true;
  const int size = static_cast<int>(state_label.size());
  std::vector<bool> current(size, false);
  for (int k = 0; k < size; ++k) current[k] = state_label[k] == word[0];
  for (std::size_t t = 1; t < word.size(); ++t) {
    std::vector<bool> next(size, false);
    for (int a = 0; a < size; ++a) {
      if (!current[a]) continue;
      for (int b = 0; b < size; ++b)
        if (states(a, b) && state_label[b] == word[t]) next[b] = true;
    }
    current = std::move(next);
  }
  return std::any_of(current.begin(), current.end(), [](bool b) { return b; });
}

namespace {

SoficGraph labeled_graph(const TransitionMatrix& m, std::vector<int> labels, int letters) {
  SoficGraph g;
  g.letters = letters;
  g.state_label = std::move(labels);
  g.states = m.entries;
  for (int a = 1; a <= m.size(); ++a)
    for (int b = 1; b <= m.size(); ++b)
      if (m.entries(a - 1, b - 1))
        g.edges.push_back({g.state_label[a - 1], g.state_label[b - 1], a, b});
  return g;
}

}  // namespace

SoficGraph sofic_amalgamate(const TransitionMatrix& m) {
  std::vector<int> labels;
  for (int k = 1; k <= m.size(); ++k) labels.push_back((k + 1) / 2);
  return labeled_graph(m, std::move(labels), m.size() / 2);
}

SoficGraph code_presentation(const TransitionMatrix& m, const SurfaceGroup& s,
                             const ExtremalParams& params) {
  std::vector<int> labels;
  for (int k = 1; k <= s.size(); ++k) {
    labels.push_back(params.choice(k) == Endpoint::P ? s.sigma(k) : s.sigma(k - 1));
    labels.push_back(s.sigma(k));
  }
  return labeled_graph(m, std::move(labels), s.size());
}

}  // namespace bsmaps
