#include "cycpath/noncrossing.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "cycpath/errors.hpp"
#include "cycpath/tubing.hpp"

namespace cycpath {

namespace {

using Positions = std::vector<std::size_t>;
using PositionPartition = std::vector<Positions>;

const Component& single_path(const LabeledGraph& p) {
  if (!p.is_connected() || !p.components().front().is_path())
    throw Error(ErrorCode::NotAPath, "'" + p.to_string() + "' is not a single path");
  return p.components().front();
}

const Component& single_cycle(const LabeledGraph& c) {
  if (!c.is_connected() || !c.components().front().is_cycle())
    throw Error(ErrorCode::NotACycle, "'" + c.to_string() + "' is not a single cycle");
  return c.components().front();
}

void sort_blocks(std::vector<LabelSet>& blocks) { std::sort(blocks.begin(), blocks.end(), tube_less); }

// All noncrossing partitions of 0..len-1: pick the block of 0, then fill each
// gap it leaves independently.
const std::vector<PositionPartition>& nc_positions(std::size_t len) {
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<PositionPartition>> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(len); it != memo.end()) return it->second;
  }
  std::vector<PositionPartition> out;
  if (len == 0) {
    out.push_back({});
  } else {
    for (std::uint64_t extra = 0; extra < (std::uint64_t{1} << (len - 1)); ++extra) {
      Positions block{0};
      for (std::size_t i = 1; i < len; ++i)
        if (extra >> (i - 1) & 1) block.push_back(i);
      std::vector<std::pair<std::size_t, std::size_t>> gaps;  // [start, end)
      for (std::size_t b = 0; b < block.size(); ++b) {
        const std::size_t start = block[b] + 1;
        const std::size_t end = b + 1 < block.size() ? block[b + 1] : len;
        if (end > start) gaps.emplace_back(start, end);
      }
      std::vector<PositionPartition> partial{{block}};
      for (auto [start, end] : gaps) {
        std::vector<PositionPartition> next;
        for (const auto& base : partial)
          for (const auto& sub : nc_positions(end - start)) {
            PositionPartition merged = base;
            for (const auto& blk : sub) {
              Positions shifted;
              for (auto p : blk) shifted.push_back(p + start);
              merged.push_back(std::move(shifted));
            }
            next.push_back(std::move(merged));
          }
        partial = std::move(next);
      }
      out.insert(out.end(), partial.begin(), partial.end());
    }
  }
  std::lock_guard lock(mutex);
  return memo.try_emplace(len, std::move(out)).first->second;
}

std::map<Label, std::size_t> positions_in(const std::vector<Label>& word) {
  std::map<Label, std::size_t> pos;
  for (std::size_t i = 0; i < word.size(); ++i) pos[word[i]] = i;
  return pos;
}

// Merges two blocks whenever the last vertex of one sits right before the
// first vertex of the other in `word`, until nothing changes.
std::vector<LabelSet> close_adjacent(const std::vector<Label>& word, std::vector<LabelSet> blocks) {
  const auto pos = positions_in(word);
  auto lo = [&](const LabelSet& b) {
    std::size_t m = word.size();
    for (const auto& l : b) m = std::min(m, pos.at(l));
    return m;
  };
  auto hi = [&](const LabelSet& b) {
    std::size_t m = 0;
    for (const auto& l : b) m = std::max(m, pos.at(l));
    return m;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < blocks.size() && !changed; ++i)
      for (std::size_t j = 0; j < blocks.size() && !changed; ++j)
        if (i != j && hi(blocks[i]) + 1 == lo(blocks[j])) {
          blocks[i].insert(blocks[j].begin(), blocks[j].end());
          blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
        }
  }
  sort_blocks(blocks);
  return blocks;
}

// The cycle read linearly starting from a vertex of the zero block.
std::vector<Label> word_from_zero(const Component& host, const LabelSet& zero) {
  std::vector<Label> word = host.vertices();
  auto it = std::find_if(word.begin(), word.end(), [&](const Label& l) { return zero.count(l) > 0; });
  std::rotate(word.begin(), it, word.end());
  return word;
}

void check_partition(const Component& host, const std::vector<LabelSet>& blocks) {
  LabelSet seen;
  std::size_t total = 0;
  for (const auto& b : blocks) {
    if (b.empty()) throw Error(ErrorCode::InvalidArgument, "empty block");
    for (const auto& l : b)
      if (!host.contains(l)) throw Error(ErrorCode::LabelNotPresent, "label '" + l + "' not in host");
    seen.insert(b.begin(), b.end());
    total += b.size();
  }
  if (total != host.size() || seen.size() != host.size())
    throw Error(ErrorCode::InvalidArgument, "blocks do not partition the host");
  if (!is_noncrossing(host.vertices(), blocks))
    throw Error(ErrorCode::InvalidArgument, "blocks cross");
}

CatalanCoefficient catalan_product(const std::vector<LabelSet>& blocks,
                                   const std::vector<LabelSet>& closure) {
  CatalanCoefficient cc{1, {}};
  for (const auto& big : closure) {
    std::size_t inside = 0;
    for (const auto& b : blocks)
      if (std::includes(big.begin(), big.end(), b.begin(), b.end())) ++inside;
    cc.factors.emplace_back(big, inside);
    cc.value *= catalan(inside);
  }
  return cc;
}

}  // namespace

bool is_noncrossing(const std::vector<Label>& word, const std::vector<LabelSet>& blocks) {
  std::map<Label, std::size_t> owner;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (const auto& l : blocks[b]) owner[l] = b;
  for (std::size_t x = 0; x < blocks.size(); ++x)
    for (std::size_t y = x + 1; y < blocks.size(); ++y) {
      // Alternations of x and y along the word; x y x y needs four runs.
      std::size_t runs = 0, last = blocks.size();
      for (const auto& l : word) {
        auto it = owner.find(l);
        if (it == owner.end() || (it->second != x && it->second != y)) continue;
        if (it->second != last) ++runs;
        last = it->second;
      }
      if (runs >= 4) return false;
    }
  return true;
}

NCPartition make_nc_partition(const Component& host, std::vector<LabelSet> blocks) {
  if (!host.is_path()) throw Error(ErrorCode::NotAPath, "host is not a path");
  check_partition(host, blocks);
  sort_blocks(blocks);
  return {host, std::move(blocks)};
}

PointedNCPartition make_pnc_partition(const Component& host, LabelSet zero,
                                      std::vector<LabelSet> nonzero) {
  if (!host.is_cycle()) throw Error(ErrorCode::NotACycle, "host is not a cycle");
  if (zero.empty()) throw Error(ErrorCode::InvalidArgument, "zero block must be nonempty");
  std::vector<LabelSet> all = nonzero;
  all.push_back(zero);
  check_partition(host, all);
  sort_blocks(nonzero);
  return {host, std::move(zero), std::move(nonzero)};
}

std::vector<NCPartition> enumerate_nc(const LabeledGraph& p) {
  const Component& host = single_path(p);
  std::vector<NCPartition> out;
  for (const auto& part : nc_positions(host.size())) {
    std::vector<LabelSet> blocks;
    for (const auto& blk : part) {
      LabelSet b;
      for (auto i : blk) b.insert(host.vertices()[i]);
      blocks.push_back(std::move(b));
    }
    sort_blocks(blocks);
    out.push_back({host, std::move(blocks)});
  }
  return out;
}

std::vector<PointedNCPartition> enumerate_pnc(const LabeledGraph& c) {
  const Component& host = single_cycle(c);
  std::vector<PointedNCPartition> out;
  for (const auto& part : nc_positions(host.size())) {
    std::vector<LabelSet> blocks;
    for (const auto& blk : part) {
      LabelSet b;
      for (auto i : blk) b.insert(host.vertices()[i]);
      blocks.push_back(std::move(b));
    }
    for (std::size_t z = 0; z < blocks.size(); ++z) {
      std::vector<LabelSet> rest;
      for (std::size_t b = 0; b < blocks.size(); ++b)
        if (b != z) rest.push_back(blocks[b]);
      sort_blocks(rest);
      out.push_back({host, blocks[z], std::move(rest)});
    }
  }
  return out;
}

NCPartition adjacent_closure(const NCPartition& pi) {
  return {pi.host, close_adjacent(pi.host.vertices(), pi.blocks)};
}

PointedNCPartition adjacent_closure_pointed(const PointedNCPartition& pi) {
  return {pi.host, pi.zero_block,
          close_adjacent(word_from_zero(pi.host, pi.zero_block), pi.nonzero_blocks)};
}

CatalanCoefficient catalan_coefficient(const NCPartition& pi, const NCPartition& closure) {
  if (!(adjacent_closure(pi) == closure))
    throw Error(ErrorCode::NotAClosure, "second partition is not the adjacent closure of the first");
  return catalan_product(pi.blocks, closure.blocks);
}

CatalanCoefficient catalan_coefficient(const PointedNCPartition& pi,
                                       const PointedNCPartition& closure) {
  if (!(adjacent_closure_pointed(pi) == closure))
    throw Error(ErrorCode::NotAClosure, "second partition is not the adjacent closure of the first");
  return catalan_product(pi.nonzero_blocks, closure.nonzero_blocks);
}

LabeledGraph graph_of_nc(const NCPartition& pi) {
  const LabeledGraph host({pi.host});
  LabeledGraph out;
  for (const auto& b : pi.blocks) out = disjoint_union(out, restrict(host, b));
  return out;
}

LabeledGraph graph_of_pnc(const PointedNCPartition& pi) {
  const LabeledGraph host({pi.host});
  LabeledGraph out = restrict(host, pi.zero_block);
  const LabeledGraph rest = contract(host, pi.zero_block);
  for (const auto& b : pi.nonzero_blocks) out = disjoint_union(out, restrict(rest, b));
  return out;
}

LinearCombination antipode_nc(const LabeledGraph& p) {
  single_path(p);
  LinearCombination out;
  for (const auto& pi : enumerate_nc(p)) {
    const Integer c = catalan_coefficient(pi, adjacent_closure(pi)).value;
    out.add(graph_of_nc(pi), pi.blocks.size() % 2 == 0 ? Rational(c) : Rational(-c));
  }
  return out;
}

LinearCombination antipode_pnc(const LabeledGraph& c) {
  single_cycle(c);
  LinearCombination out;
  for (const auto& pi : enumerate_pnc(c)) {
    const Integer k = catalan_coefficient(pi, adjacent_closure_pointed(pi)).value;
    out.add(graph_of_pnc(pi), pi.block_count() % 2 == 0 ? Rational(k) : Rational(-k));
  }
  return out;
}

}  // namespace cycpath
