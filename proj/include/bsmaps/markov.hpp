#pragma once

#include <Eigen/Core>

#include <span>
#include <vector>

#include "bsmaps/boundary_maps.hpp"

namespace bsmaps {

/// 0/1 transitions between I_{2i−1} = (P_i, Q_i) and I_{2i} = (Q_i, P_{i+1}).
struct TransitionMatrix {
  int genus = 0;
  Eigen::MatrixXi entries;  // entries(k − 1, j − 1) = 1 iff f_A(I_k) ⊇ I_j
  std::vector<Arcd> intervals;

  int size() const { return static_cast<int>(entries.rows()); }
  int row_count(int k) const { return entries.row(k - 1).sum(); }
  /// Column indices (1-based) of row k.
  std::vector<int> row(int k) const;
};

/// Index of I_{2j−1} = (P_j, Q_j), wrapped into 1..2N.
int odd_interval(int j, int n);
/// Index of I_{2j} = (Q_j, P_{j+1}), wrapped into 1..2N.
int even_interval(int j, int n);

/// Rows from the closed forms, each validated against numeric endpoint images.
/// Throws MarkovError on disagreement.
TransitionMatrix markov_transition_matrix(const SurfaceGroup& s, const ExtremalParams& params,
                                          double tol = kEpsilon);

/// Edge-labeled graph; vertex labels are letters 1..letters.
struct SoficGraph {
  struct Edge {
    int from_letter;
    int to_letter;
    int from_state;
    int to_state;
  };
  int letters = 0;
  std::vector<int> state_label;  // state_label[k − 1] = letter of Markov state k
  std::vector<Edge> edges;
  Eigen::MatrixXi states;        // underlying Markov matrix

  Eigen::MatrixXi letter_adjacency() const;
  /// Markov matrix rebuilt from the state pairs carried by the edges.
  Eigen::MatrixXi refine() const;
  bool strongly_connected() const;
  /// Some path of states reads `word` through state_label.
  bool accepts(std::span<const int> word) const;
};

/// Merges I_{2k−1} and I_{2k} into the letter [P_k, P_{k+1}).
SoficGraph sofic_amalgamate(const TransitionMatrix& m);

/// Same graph labeled by code symbols: a state inside [A_i, A_{i+1}) reads σ(i).
SoficGraph code_presentation(const TransitionMatrix& m, const SurfaceGroup& s,
                             const ExtremalParams& params);

}  // namespace bsmaps
