#pragma once

// Tubes and tubings of graphs, the partition and graph a tubing induces, and
// the tubing expansion of the antipode of a path or a cycle.

#include <optional>
#include <vector>

#include "cycpath/graph.hpp"
#include "cycpath/hopf.hpp"

namespace cycpath {

/// A nonempty vertex set inducing a connected subgraph.
using Tube = LabelSet;

/// Tubes ordered by size, then lexicographically.
bool tube_less(const Tube& a, const Tube& b);

class Tubing {
 public:
  Tubing() = default;
  explicit Tubing(std::vector<Tube> tubes);

  const std::vector<Tube>& tubes() const noexcept { return tubes_; }
  std::size_t size() const noexcept { return tubes_.size(); }
  bool contains(const Tube& t) const;
  /// Every tube of `other` is a tube of this tubing.
  bool contains_all(const Tubing& other) const;

  friend auto operator<=>(const Tubing&, const Tubing&) = default;
  friend bool operator==(const Tubing&, const Tubing&) = default;

 private:
  std::vector<Tube> tubes_;
};

std::vector<Tube> enumerate_tubes(const LabeledGraph& g);

/// Checks the three tubing axioms. Disjoint members may not have a tube as
/// their union; for tubes this holds for every sub-family exactly when no
/// two disjoint members are joined by an edge.
bool is_tubing(const LabeledGraph& g, const Tubing& t);

/// All tubings, depth first over tubes sorted by size. The first one is the
/// minimum tubing made of the connected components.
std::vector<Tubing> enumerate_tubings(const LabeledGraph& g);

/// Tubings with |I| tubes; these index the vertices of the graph
/// associahedron.
std::vector<Tubing> enumerate_maximal_tubings(const LabeledGraph& g);

struct TubingDecomposition {
  std::vector<LabelSet> blocks;          // pi(t), sorted by size then labels
  LabeledGraph graph;                    // g(t)
  std::optional<LabelSet> zero_block;    // cycles: labels only in the top tube
};

/// Blocks are the classes of "lies in the same tubes"; block B gets an edge
/// u-v for each edge of g and each thread through a tube strictly inside
/// the smallest tube containing B. On a cycle the zero block carries a cycle
/// (loop or double edge when it has one or two vertices). Throws NotATubing,
/// NotConnected for hosts that are not a single path or cycle.
TubingDecomposition decompose_tubing(const LabeledGraph& g, const Tubing& t);

/// sum over tubings t of (-1)^{|t|} g(t) for a single path or cycle.
/// Throws NotConnected otherwise.
LinearCombination antipode_tubings(const LabeledGraph& g);

}  // namespace cycpath
