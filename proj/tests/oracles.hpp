#pragma once

// Brute-force reference implementations used by the unit and acceptance
// tests. None of them call into the code they check, apart from the plain
// value types (graphs, rationals, series).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "cycpath/graph.hpp"
#include "cycpath/hopf.hpp"
#include "cycpath/rational.hpp"
#include "cycpath/series.hpp"

namespace oracle {

using namespace cycpath;

// ---------------------------------------------------------------- random

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }

  Rational rational(long span = 6, long max_den = 5) {
    Rational q(integer(-span, span), static_cast<unsigned long>(integer(1, max_den)));
    q.canonicalize();
    return q;
  }

  TruncatedPair pair(std::size_t order) {
    std::vector<Rational> a(order - 1), c(order);
    for (auto& q : a) q = rational();
    for (auto& q : c) q = rational();
    return TruncatedPair(std::move(a), std::move(c));
  }

  TruncatedSeries series(std::size_t order, bool monic) {
    TruncatedSeries s(order);
    for (std::size_t k = 1; k <= order; ++k) s.set(k, rational());
    if (monic && order > 0) s.set(1, 1);
    return s;
  }

  // Random graph in C on labels 1..n.
  LabeledGraph graph(std::size_t n) {
    std::vector<Label> labels = standard_labels(n);
    std::shuffle(labels.begin(), labels.end(), gen);
    std::vector<Component> comps;
    std::size_t i = 0;
    while (i < n) {
      const std::size_t len = static_cast<std::size_t>(integer(1, static_cast<long>(n - i)));
      std::vector<Label> word(labels.begin() + static_cast<long>(i), labels.begin() + static_cast<long>(i + len));
      comps.push_back(integer(0, 1) ? Component::cycle(word) : Component::path(word));
      i += len;
    }
    return LabeledGraph(std::move(comps));
  }
};

// ---------------------------------------------------------------- graphs

using Edge = std::pair<Label, Label>;

inline Edge edge(Label a, Label b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Edge multiset of a graph in C, loops included.
inline std::multiset<Edge> edges_of(const LabeledGraph& g) {
  std::multiset<Edge> out;
  for (const auto& c : g.components()) {
    const auto& v = c.vertices();
    for (std::size_t i = 0; i + 1 < v.size(); ++i) out.insert(edge(v[i], v[i + 1]));
    if (c.is_cycle()) out.insert(edge(v.back(), v.front()));
  }
  return out;
}

// Edges of g|_S from the thread rule: every walk along an edge-path of g
// between two S-vertices whose inner vertices avoid S gives one edge.
inline std::multiset<Edge> thread_edges(const LabeledGraph& g, const LabelSet& s) {
  std::multiset<Edge> out;
  for (const auto& c : g.components()) {
    const auto& v = c.vertices();
    const std::size_t n = v.size();
    std::vector<std::size_t> in;
    for (std::size_t i = 0; i < n; ++i)
      if (s.count(v[i])) in.push_back(i);
    if (in.empty()) continue;
    if (c.is_path()) {
      for (std::size_t i = 0; i + 1 < in.size(); ++i) out.insert(edge(v[in[i]], v[in[i + 1]]));
    } else {
      // walking forward from each S-vertex reaches the next one (possibly itself)
      for (std::size_t i = 0; i < in.size(); ++i) out.insert(edge(v[in[i]], v[in[(i + 1) % in.size()]]));
    }
  }
  return out;
}

// Edges of the induced subgraph g:T.
inline std::multiset<Edge> induced_edges(const LabeledGraph& g, const LabelSet& t) {
  std::multiset<Edge> out;
  for (const auto& e : edges_of(g))
    if (t.count(e.first) && t.count(e.second)) out.insert(e);
  return out;
}

// Simple adjacency (loops and multiplicities dropped).
inline std::map<Label, std::set<Label>> adjacency(const LabeledGraph& g) {
  std::map<Label, std::set<Label>> adj;
  for (const auto& l : g.ground_set()) adj[l];
  for (const auto& [a, b] : edges_of(g))
    if (a != b) {
      adj[a].insert(b);
      adj[b].insert(a);
    }
  return adj;
}

inline bool connected(const std::map<Label, std::set<Label>>& adj, const LabelSet& s) {
  if (s.empty()) return false;
  LabelSet seen{*s.begin()};
  std::vector<Label> stack{*s.begin()};
  while (!stack.empty()) {
    const Label x = stack.back();
    stack.pop_back();
    for (const auto& y : adj.at(x))
      if (s.count(y) && seen.insert(y).second) stack.push_back(y);
  }
  return seen.size() == s.size();
}

inline std::vector<LabelSet> all_tubes(const LabeledGraph& g) {
  const LabelSet ground = g.ground_set();
  const std::vector<Label> labels(ground.begin(), ground.end());
  const auto adj = adjacency(g);
  std::vector<LabelSet> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << labels.size()); ++m) {
    LabelSet s;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (m >> i & 1) s.insert(labels[i]);
    if (connected(adj, s)) out.push_back(s);
  }
  return out;
}

inline bool disjoint(const LabelSet& a, const LabelSet& b) {
  return std::none_of(a.begin(), a.end(), [&](const Label& l) { return b.count(l) > 0; });
}

inline bool subset(const LabelSet& a, const LabelSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

// Tubing axioms read literally: every sub-family of pairwise disjoint
// members with at least two tubes is checked for a connected union.
inline bool is_tubing(const LabeledGraph& g, const std::vector<LabelSet>& t) {
  const auto adj = adjacency(g);
  for (const auto& s : t)
    if (!connected(adj, s) || !subset(s, g.ground_set())) return false;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (!(subset(t[i], t[j]) || subset(t[j], t[i]) || disjoint(t[i], t[j]))) return false;
  const std::size_t m = t.size();
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << m); ++fam) {
    if (std::popcount(fam) < 2) continue;
    LabelSet un;
    bool pairwise = true;
    for (std::size_t i = 0; i < m && pairwise; ++i) {
      if (!(fam >> i & 1)) continue;
      if (!disjoint(un, t[i])) pairwise = false;
      un.insert(t[i].begin(), t[i].end());
    }
    if (pairwise && connected(adj, un)) return false;
  }
  for (const auto& c : g.components()) {
    const LabelSet comp(c.vertices().begin(), c.vertices().end());
    if (std::find(t.begin(), t.end(), comp) == t.end()) return false;
  }
  return true;
}

// All tubings as sorted tube lists, by filtering every family of tubes.
inline std::set<std::set<LabelSet>> all_tubings(const LabeledGraph& g) {
  const auto tubes = all_tubes(g);
  std::set<std::set<LabelSet>> out;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << tubes.size()); ++fam) {
    std::vector<LabelSet> t;
    for (std::size_t i = 0; i < tubes.size(); ++i)
      if (fam >> i & 1) t.push_back(tubes[i]);
    if (is_tubing(g, t)) out.insert(std::set<LabelSet>(t.begin(), t.end()));
  }
  return out;
}

// ------------------------------------------------------- set partitions

using Partition = std::set<LabelSet>;

inline std::vector<Partition> set_partitions(const std::vector<Label>& items) {
  std::vector<Partition> out;
  std::vector<std::size_t> rgs(items.size(), 0);
  // restricted growth strings
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t blocks) {
    if (i == items.size()) {
      std::vector<LabelSet> bs(blocks);
      for (std::size_t k = 0; k < items.size(); ++k) bs[rgs[k]].insert(items[k]);
      out.emplace_back(bs.begin(), bs.end());
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  if (items.empty()) return {Partition{}};
  rec(0, 0);
  return out;
}

// a b c d in word order with a, c in one block and b, d in another.
inline bool crosses(const std::vector<Label>& word, const Partition& p) {
  std::map<Label, int> owner;
  int id = 0;
  for (const auto& b : p) {
    for (const auto& l : b) owner[l] = id;
    ++id;
  }
  const std::size_t n = word.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d)
          if (owner[word[a]] == owner[word[c]] && owner[word[b]] == owner[word[d]] &&
              owner[word[a]] != owner[word[b]])
            return true;
  return false;
}

inline std::vector<Partition> noncrossing(const std::vector<Label>& word) {
  std::vector<Partition> out;
  for (const auto& p : set_partitions(word))
    if (!crosses(word, p)) out.push_back(p);
  return out;
}

// ------------------------------------------------------------ polytopes

// Vertices of the Minkowski sum of the simplices of all tubes: for each
// ordering of the labels, a generic direction picks the top label of each
// tube; the distinct sums are the vertices.
inline std::set<std::map<Label, long>> minkowski_vertices(const LabeledGraph& g) {
  const auto tubes = all_tubes(g);
  const LabelSet ground = g.ground_set();
  std::vector<Label> order(ground.begin(), ground.end());
  std::set<std::map<Label, long>> out;
  do {
    std::map<Label, std::size_t> rank;
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
    std::map<Label, long> point;
    for (const auto& l : ground) point[l] = 0;
    for (const auto& s : tubes)
      ++point[*std::max_element(s.begin(), s.end(), [&](const Label& a, const Label& b) { return rank[a] < rank[b]; })];
    out.insert(point);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

// Dimension of the affine hull of integer points, by exact elimination.
inline std::size_t affine_dimension(const std::vector<std::vector<long>>& points) {
  if (points.size() <= 1) return 0;
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<Rational> r;
    for (std::size_t k = 0; k < points[i].size(); ++k) r.emplace_back(points[i][k] - points[0][k]);
    rows.push_back(std::move(r));
  }
  std::size_t rank = 0;
  const std::size_t cols = rows.front().size();
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t k = col; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------- series

inline std::vector<Rational> mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  // index k holds the coefficient of x^k, constant term included
  std::vector<Rational> out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// f(g) by Horner's rule over full coefficient vectors.
inline TruncatedSeries horner(const TruncatedSeries& f, const TruncatedSeries& g) {
  const std::size_t n = f.order();
  std::vector<Rational> gv(n + 1, Rational(0)), acc(n + 1, Rational(0));
  for (std::size_t k = 1; k <= n; ++k) gv[k] = g[k];
  for (std::size_t k = n; k >= 1; --k) {
    acc[0] += f[k];
    acc = mul(acc, gv);
  }
  TruncatedSeries out(n);
  for (std::size_t k = 1; k <= n; ++k) out.set(k, acc[k]);
  return out;
}

// --------------------------------------------------------------- counting

using Lengths = std::vector<std::size_t>;  // sorted

// Interval partitions of the n-cycle with at least two parts, by lengths.
inline std::map<Lengths, long> interval_partitions(std::size_t n) {
  std::map<Lengths, long> counts;
  for (std::uint64_t starts = 1; starts < (std::uint64_t{1} << n); ++starts) {
    if (std::popcount(starts) < 2) continue;
    Lengths lengths;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(starts >> i & 1)) continue;
      std::size_t len = 1;
      while (!(starts >> ((i + len) % n) & 1)) ++len;
      lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    ++counts[lengths];
  }
  return counts;
}

// Decompositions I = S + T of the n-cycle by (|S|, lengths of the maximal
// runs of T).
inline std::map<std::pair<std::size_t, Lengths>, long> decompositions(std::size_t n) {
  std::map<std::pair<std::size_t, Lengths>, long> counts;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    Lengths runs;
    for (std::size_t i = 0; i < n; ++i) {
      // a run starts at i if i is in T and its predecessor is in S
      if ((s >> i & 1) || !(s >> ((i + n - 1) % n) & 1)) continue;
      std::size_t len = 0;
      while (!(s >> ((i + len) % n) & 1)) ++len;
      runs.push_back(len);
    }
    std::sort(runs.begin(), runs.end());
    ++counts[{static_cast<std::size_t>(std::popcount(s)), runs}];
  }
  return counts;
}

}  // namespace oracle
