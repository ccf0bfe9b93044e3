#pragma once

// Noncrossing partitions of paths, pointed noncrossing partitions of cycles,
// adjacent closures and the Catalan-weighted antipode expansions.

#include <utility>
#include <vector>

#include "cycpath/graph.hpp"
#include "cycpath/hopf.hpp"
#include "cycpath/rational.hpp"

namespace cycpath {

/// Blocks are kept sorted by size, then lexicographically.
struct NCPartition {
  Component host;
  std::vector<LabelSet> blocks;

  friend bool operator==(const NCPartition&, const NCPartition&) = default;
};

struct PointedNCPartition {
  Component host;
  LabelSet zero_block;
  std::vector<LabelSet> nonzero_blocks;

  /// Number of blocks including the zero block.
  std::size_t block_count() const { return 1 + nonzero_blocks.size(); }

  friend bool operator==(const PointedNCPartition&, const PointedNCPartition&) = default;
};

struct CatalanCoefficient {
  Integer value;
  /// (closure block, number of original blocks inside it)
  std::vector<std::pair<LabelSet, std::size_t>> factors;
};

/// No a, c in one block and b, d in another with a b c d in word order.
bool is_noncrossing(const std::vector<Label>& word, const std::vector<LabelSet>& blocks);

NCPartition make_nc_partition(const Component& host, std::vector<LabelSet> blocks);
PointedNCPartition make_pnc_partition(const Component& host, LabelSet zero,
                                      std::vector<LabelSet> nonzero);

/// Throws NotAPath unless p is a single path.
std::vector<NCPartition> enumerate_nc(const LabeledGraph& p);
/// Throws NotACycle unless c is a single cycle. Zero blocks are nonempty.
std::vector<PointedNCPartition> enumerate_pnc(const LabeledGraph& c);

/// Repeatedly merges blocks whose last and first vertex are consecutive
/// along the host path.
NCPartition adjacent_closure(const NCPartition& pi);
/// Same on the nonzero blocks, reading the cycle from a zero-block vertex;
/// blocks on different sides of a zero-block vertex never merge.
PointedNCPartition adjacent_closure_pointed(const PointedNCPartition& pi);

/// Product of C_{n_i}, n_i the number of blocks of pi inside the i-th block
/// of the closure. Throws NotAClosure if `closure` is not the closure of pi.
CatalanCoefficient catalan_coefficient(const NCPartition& pi, const NCPartition& closure);
CatalanCoefficient catalan_coefficient(const PointedNCPartition& pi,
                                       const PointedNCPartition& closure);

/// Disjoint union of the restrictions p|_B over the blocks.
LabeledGraph graph_of_nc(const NCPartition& pi);
/// c|_{zero} together with (c/_{zero})|_B for each nonzero block B.
LabeledGraph graph_of_pnc(const PointedNCPartition& pi);

/// sum over NC(p) of (-1)^{|pi|} C_(closure:pi) p(pi).
LinearCombination antipode_nc(const LabeledGraph& p);
/// sum over PNC(c) of (-1)^{1+|pi_+|} C_(closure_+:pi_+) c(pi).
LinearCombination antipode_pnc(const LabeledGraph& c);

}  // namespace cycpath
