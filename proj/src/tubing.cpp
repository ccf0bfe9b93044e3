#include "cycpath/tubing.hpp"

#include <algorithm>
#include <map>

#include "cycpath/detail/bitgraph.hpp"
#include "cycpath/errors.hpp"

namespace cycpath {

// ----------------------------------------------------------------- BitGraph

namespace detail {

BitGraph::BitGraph(const LabeledGraph& g) {
  const LabelSet ground = g.ground_set();
  if (ground.size() > 63) throw Error(ErrorCode::InvalidArgument, "graphs are limited to 63 vertices");
  labels_.assign(ground.begin(), ground.end());
  adjacency_.assign(labels_.size(), 0);
  for (const auto& c : g.components()) {
    const auto& v = c.vertices();
    Mask comp = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      comp |= Mask{1} << index(v[i]);
      const bool has_next = i + 1 < v.size() || (c.is_cycle() && v.size() > 1);
      if (!has_next) continue;
      const std::size_t a = index(v[i]);
      const std::size_t b = index(v[(i + 1) % v.size()]);
      adjacency_[a] |= Mask{1} << b;
      adjacency_[b] |= Mask{1} << a;
    }
    components_.push_back(comp);
  }
}

std::size_t BitGraph::index(const Label& l) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
  if (it == labels_.end() || *it != l) throw Error(ErrorCode::LabelNotPresent, "label '" + l + "' not in graph");
  return static_cast<std::size_t>(it - labels_.begin());
}

Mask BitGraph::mask_of(const LabelSet& s) const {
  Mask m = 0;
  for (const auto& l : s) m |= Mask{1} << index(l);
  return m;
}

LabelSet BitGraph::labels_of(Mask m) const {
  LabelSet s;
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (m >> i & 1) s.insert(labels_[i]);
  return s;
}

Mask BitGraph::neighbours(Mask m) const {
  Mask out = 0;
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (m >> i & 1) out |= adjacency_[i];
  return out & ~m;
}

bool BitGraph::connected(Mask m) const {
  if (m == 0) return false;
  Mask seen = m & -m;
  while (true) {
    Mask grow = seen;
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (seen >> i & 1) grow |= adjacency_[i] & m;
    if (grow == seen) break;
    seen = grow;
  }
  return seen == m;
}

}  // namespace detail

using detail::BitGraph;
using detail::Mask;

// ------------------------------------------------------------------- Tubing

bool tube_less(const Tube& a, const Tube& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Tubing::Tubing(std::vector<Tube> tubes) : tubes_(std::move(tubes)) {
  std::sort(tubes_.begin(), tubes_.end(), tube_less);
  tubes_.erase(std::unique(tubes_.begin(), tubes_.end()), tubes_.end());
}

bool Tubing::contains(const Tube& t) const {
  return std::binary_search(tubes_.begin(), tubes_.end(), t, tube_less);
}

bool Tubing::contains_all(const Tubing& other) const {
  return std::all_of(other.tubes_.begin(), other.tubes_.end(),
                     [&](const Tube& t) { return contains(t); });
}

namespace {

// Sorted by size then by label order, so that converting back gives the
// same order as Tubing's.
std::vector<Mask> tube_masks(const BitGraph& bg) {
  std::vector<Mask> out;
  for (Mask m = 1; m <= bg.full() && m != 0; ++m)
    if (bg.connected(m)) out.push_back(m);
  return out;
}

bool compatible(const BitGraph& bg, Mask a, Mask b) {
  if ((a & b) == 0) return !bg.adjacent(a, b);
  return (a & b) == a || (a & b) == b;
}

Tubing to_tubing(const BitGraph& bg, const std::vector<Mask>& masks) {
  std::vector<Tube> tubes;
  tubes.reserve(masks.size());
  for (Mask m : masks) tubes.push_back(bg.labels_of(m));
  return Tubing(std::move(tubes));
}

template <typename Visit>
void for_each_tubing(const BitGraph& bg, Visit&& visit) {
  std::vector<Mask> free_tubes;
  for (Mask m : tube_masks(bg))
    if (std::find(bg.components().begin(), bg.components().end(), m) == bg.components().end())
      free_tubes.push_back(m);
  std::stable_sort(free_tubes.begin(), free_tubes.end(),
                   [](Mask a, Mask b) { return detail::popcount(a) < detail::popcount(b); });

  std::vector<Mask> chosen(bg.components().begin(), bg.components().end());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == free_tubes.size()) {
      visit(chosen);
      return;
    }
    self(self, i + 1);
    const Mask m = free_tubes[i];
    for (Mask c : chosen)
      if (!compatible(bg, m, c)) return;
    chosen.push_back(m);
    self(self, i + 1);
    chosen.pop_back();
  };
  rec(rec, 0);
}

}  // namespace

std::vector<Tube> enumerate_tubes(const LabeledGraph& g) {
  BitGraph bg(g);
  std::vector<Tube> out;
  for (Mask m : tube_masks(bg)) out.push_back(bg.labels_of(m));
  std::sort(out.begin(), out.end(), tube_less);
  return out;
}

bool is_tubing(const LabeledGraph& g, const Tubing& t) {
  BitGraph bg(g);
  const LabelSet ground = g.ground_set();
  std::vector<Mask> masks;
  for (const auto& tube : t.tubes()) {
    if (tube.empty()) return false;
    if (!std::includes(ground.begin(), ground.end(), tube.begin(), tube.end())) return false;
    const Mask m = bg.mask_of(tube);
    if (!bg.connected(m)) return false;
    masks.push_back(m);
  }
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j)
      if (!compatible(bg, masks[i], masks[j])) return false;
  for (Mask comp : bg.components())
    if (std::find(masks.begin(), masks.end(), comp) == masks.end()) return false;
  return true;
}

std::vector<Tubing> enumerate_tubings(const LabeledGraph& g) {
  BitGraph bg(g);
  std::vector<Tubing> out;
  for_each_tubing(bg, [&](const std::vector<Mask>& chosen) { out.push_back(to_tubing(bg, chosen)); });
  return out;
}

std::vector<Tubing> enumerate_maximal_tubings(const LabeledGraph& g) {
  BitGraph bg(g);
  std::vector<Tubing> out;
  for_each_tubing(bg, [&](const std::vector<Mask>& chosen) {
    if (chosen.size() == bg.size()) out.push_back(to_tubing(bg, chosen));
  });
  return out;
}

// ------------------------------------------------------------ decomposition

namespace {

// Positions along the single component of a path or cycle host.
struct Host {
  const Component* comp;
  BitGraph bg;
  std::vector<std::size_t> bit;  // position -> bit index

  explicit Host(const LabeledGraph& g) : comp(&g.components().front()), bg(g) {
    for (const auto& l : comp->vertices()) bit.push_back(bg.index(l));
  }
  std::size_t n() const { return bit.size(); }
  // Intermediate vertices when walking forward from position p to q.
  Mask forward_arc(std::size_t p, std::size_t q) const {
    Mask m = 0;
    for (std::size_t i = (p + 1) % n(); i != q; i = (i + 1) % n()) m |= Mask{1} << bit[i];
    return m;
  }
};

}  // namespace

TubingDecomposition decompose_tubing(const LabeledGraph& g, const Tubing& t) {
  if (!g.is_connected()) throw Error(ErrorCode::NotConnected, "decomposition needs a single path or cycle");
  if (!is_tubing(g, t)) throw Error(ErrorCode::NotATubing, "not a tubing of " + g.to_string());

  const Host host(g);
  const std::size_t n = host.n();
  std::vector<Mask> tubes;
  for (const auto& tube : t.tubes()) tubes.push_back(host.bg.mask_of(tube));
  const Mask top = host.bg.full();
  Mask in_proper_tube = 0;
  for (Mask tube : tubes)
    if (tube != top) in_proper_tube |= tube;

  // signature of a vertex = the set of tubes containing it
  std::map<std::vector<bool>, Mask> classes;
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<bool> sig(tubes.size());
    for (std::size_t k = 0; k < tubes.size(); ++k) sig[k] = (tubes[k] >> b & 1) != 0;
    classes[sig] |= Mask{1} << b;
  }

  TubingDecomposition out;
  std::vector<Component> comps;
  for (const auto& [sig, block] : classes) {
    Mask smallest = top;
    for (Mask tube : tubes)
      if ((tube & block) == block && detail::popcount(tube) < detail::popcount(smallest)) smallest = tube;
    auto threadable = [&](Mask between) {
      if (between == 0) return true;  // an edge of g
      for (Mask tube : tubes)
        if (tube != smallest && (tube & smallest) == tube && (between & tube) == between) return true;
      return false;
    };

    // Edge multiplicities between block vertices, indexed by host position.
    std::vector<std::size_t> pos;
    for (std::size_t p = 0; p < n; ++p)
      if (block >> host.bit[p] & 1) pos.push_back(p);
    const std::size_t m = pos.size();
    std::vector<std::vector<int>> mult(m, std::vector<int>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
      if (host.comp->is_cycle() && threadable(host.forward_arc(pos[i], pos[i]) & ~(Mask{1} << host.bit[pos[i]])))
        mult[i][i] += 1;  // closed thread
      for (std::size_t j = i + 1; j < m; ++j) {
        if (threadable(host.forward_arc(pos[i], pos[j]))) mult[i][j] += 1;
        if (host.comp->is_cycle() && threadable(host.forward_arc(pos[j], pos[i]))) mult[i][j] += 1;
      }
    }

    const bool zero = host.comp->is_cycle() && block == (top & ~in_proper_tube);

    std::vector<Label> order;
    for (std::size_t p : pos) order.push_back(host.comp->vertices()[p]);
    auto fail = [&] {
      throw Error(ErrorCode::VerificationFailed,
                  "threads of block do not form the expected component in " + g.to_string());
    };
    if (zero) {
      // positions are already in cyclic order
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
          int expected = 0;
          if (m == 1) expected = 1;
          else if (m == 2) expected = i == j ? 0 : 2;
          else if (j == i + 1 || (i == 0 && j == m - 1)) expected = 1;
          if (mult[i][j] != expected) fail();
        }
      comps.push_back(Component::cycle(order));
      out.zero_block = host.bg.labels_of(block);
    } else {
      // simple path through the thread edges; on a cycle it may wrap around
      std::vector<std::vector<std::size_t>> adj(m);
      std::size_t edges = 0;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
          if (mult[i][j] > 1 || (i == j && mult[i][j] != 0)) fail();
          if (mult[i][j] == 1) {
            adj[i].push_back(j);
            adj[j].push_back(i);
            ++edges;
          }
        }
      if (edges + 1 != m) fail();
      std::size_t start = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (adj[i].size() > 2) fail();
        if (adj[i].size() <= 1) start = i;
      }
      std::vector<Label> walk;
      for (std::size_t prev = m, cur = start; walk.size() < m;) {
        walk.push_back(order[cur]);
        std::size_t next = m;
        for (std::size_t x : adj[cur])
          if (x != prev) next = x;
        if (next == m) break;
        prev = cur;
        cur = next;
      }
      if (walk.size() != m) fail();
      comps.push_back(Component::path(walk));
    }
    out.blocks.push_back(host.bg.labels_of(block));
  }
  std::sort(out.blocks.begin(), out.blocks.end(), tube_less);
  out.graph = LabeledGraph(std::move(comps));
  return out;
}

LinearCombination antipode_tubings(const LabeledGraph& g) {
  if (!g.is_connected()) throw Error(ErrorCode::NotConnected, "tubing antipode needs a single path or cycle");
  LinearCombination out;
  for (const auto& t : enumerate_tubings(g))
    out.add(decompose_tubing(g, t).graph, t.size() % 2 == 0 ? 1 : -1);
  return out;
}

}  // namespace cycpath
