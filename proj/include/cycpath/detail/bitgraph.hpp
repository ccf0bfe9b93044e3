#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "cycpath/graph.hpp"

namespace cycpath::detail {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }

// Vertex subsets of a graph as bitmasks, bit i standing for the i-th label in
// sorted order. Adjacency ignores loops and edge multiplicities, which do not
// affect connectivity.
class BitGraph {
 public:
  explicit BitGraph(const LabeledGraph& g);

  std::size_t size() const noexcept { return labels_.size(); }
  Mask full() const noexcept { return size() == 64 ? ~Mask{0} : (Mask{1} << size()) - 1; }
  const std::vector<Label>& labels() const noexcept { return labels_; }
  const std::vector<Mask>& components() const noexcept { return components_; }

  std::size_t index(const Label& l) const;
  Mask mask_of(const LabelSet& s) const;
  LabelSet labels_of(Mask m) const;

  Mask neighbours(Mask m) const;
  bool connected(Mask m) const;
  bool adjacent(Mask a, Mask b) const { return (neighbours(a) & b) != 0; }

 private:
  std::vector<Label> labels_;
  std::vector<Mask> adjacency_;
  std::vector<Mask> components_;
};

}  // namespace cycpath::detail
