#include "cycpath/graph.hpp"

#include <algorithm>

#include "cycpath/errors.hpp"

namespace cycpath {

std::string_view to_string(Kind kind) noexcept {
  return kind == Kind::Path ? "Path" : "Cycle";
}

// ---------------------------------------------------------------- Component

Component::Component(Kind kind, std::vector<Label> vertices)
    : kind_(kind), vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error(ErrorCode::InvalidArgument, "component without vertices");
  {
    std::vector<Label> sorted = vertices_;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw Error(ErrorCode::DuplicateLabel, "label '" + *dup + "' repeated");
    min_label_ = sorted.front();
  }
  if (kind_ == Kind::Path) {
    if (vertices_.front() > vertices_.back()) std::reverse(vertices_.begin(), vertices_.end());
  } else {
    auto it = std::min_element(vertices_.begin(), vertices_.end());
    std::rotate(vertices_.begin(), it, vertices_.end());
    if (vertices_.size() > 2 && vertices_[1] > vertices_.back())
      std::reverse(vertices_.begin() + 1, vertices_.end());
  }
}

Component Component::path(std::vector<Label> vertices) {
  return Component(Kind::Path, std::move(vertices));
}

Component Component::cycle(std::vector<Label> vertices) {
  return Component(Kind::Cycle, std::move(vertices));
}

bool Component::contains(const Label& l) const {
  return std::find(vertices_.begin(), vertices_.end(), l) != vertices_.end();
}

std::string Component::word(bool commas) const {
  std::string w;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (commas && i > 0) w += ',';
    w += vertices_[i];
  }
  if (commas && vertices_.size() == 1) w += ',';
  return is_cycle() ? "(" + w + ")" : w;
}

std::strong_ordering operator<=>(const Component& a, const Component& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.min_label_ <=> b.min_label_; c != 0) return c;
  return a.vertices_ <=> b.vertices_;
}

// ------------------------------------------------------------- LabeledGraph

LabeledGraph::LabeledGraph(std::vector<Component> components)
    : components_(std::move(components)) {
  std::vector<const Label*> all;
  for (const auto& c : components_)
    for (const auto& l : c.vertices()) all.push_back(&l);
  std::sort(all.begin(), all.end(), [](const Label* a, const Label* b) { return *a < *b; });
  for (std::size_t i = 1; i < all.size(); ++i)
    if (*all[i] == *all[i - 1])
      throw Error(ErrorCode::DuplicateLabel, "label '" + *all[i] + "' repeated");
  std::sort(components_.begin(), components_.end());
}

std::size_t LabeledGraph::vertex_count() const noexcept {
  std::size_t n = 0;
  for (const auto& c : components_) n += c.size();
  return n;
}

LabelSet LabeledGraph::ground_set() const {
  LabelSet s;
  for (const auto& c : components_) s.insert(c.vertices().begin(), c.vertices().end());
  return s;
}

bool LabeledGraph::has_label(const Label& l) const {
  return std::any_of(components_.begin(), components_.end(),
                     [&](const Component& c) { return c.contains(l); });
}

bool LabeledGraph::needs_commas() const {
  for (const auto& c : components_)
    for (const auto& l : c.vertices())
      if (l.size() != 1) return true;
  return false;
}

std::string LabeledGraph::to_string() const {
  const bool commas = needs_commas();
  std::string out;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i > 0) out += '|';
    out += components_[i].word(commas);
  }
  return out;
}

std::string IsoClass::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::string(cycpath::to_string(parts[i].first)) + ":" + std::to_string(parts[i].second);
  }
  return out + "}";
}

// ------------------------------------------------------------------ parsing

namespace {

bool reserved(char ch) { return ch == '|' || ch == '(' || ch == ')' || ch == ','; }

std::vector<Label> split_word(std::string_view word, bool comma_mode, std::string_view whole) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::ParseError, why + " in '" + std::string(whole) + "'");
  };
  if (word.empty()) fail("empty component");
  std::vector<Label> tokens;
  if (!comma_mode) {
    for (char ch : word) {
      if (reserved(ch)) fail(std::string("unexpected '") + ch + "'");
      tokens.emplace_back(1, ch);
    }
    return tokens;
  }
  std::size_t start = 0;
  while (true) {
    auto comma = word.find(',', start);
    std::string_view tok = word.substr(start, comma == std::string_view::npos ? word.npos : comma - start);
    const bool last = comma == std::string_view::npos;
    if (tok.empty()) {
      // a single trailing comma is the one-token marker "10,"
      if (!(last && tokens.size() == 1)) fail("empty label");
      break;
    }
    for (char ch : tok)
      if (reserved(ch)) fail(std::string("unexpected '") + ch + "'");
    tokens.emplace_back(tok);
    if (last) break;
    start = comma + 1;
  }
  return tokens;
}

}  // namespace

LabeledGraph parse_graph(std::string_view text) {
  const std::string_view whole = text;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return LabeledGraph{};
  text = text.substr(first, text.find_last_not_of(" \t\r\n") - first + 1);
  if (text.find_first_of(" \t\r\n") != std::string_view::npos)
    throw Error(ErrorCode::ParseError, "whitespace inside '" + std::string(whole) + "'");

  const bool comma_mode = text.find(',') != std::string_view::npos;
  std::vector<Component> comps;
  std::size_t start = 0;
  while (true) {
    auto bar = text.find('|', start);
    std::string_view piece = text.substr(start, bar == std::string_view::npos ? text.npos : bar - start);
    if (piece.empty()) throw Error(ErrorCode::ParseError, "empty component in '" + std::string(whole) + "'");
    if (piece.front() == '(') {
      if (piece.size() < 2 || piece.back() != ')')
        throw Error(ErrorCode::ParseError, "unbalanced parenthesis in '" + std::string(whole) + "'");
      comps.push_back(Component::cycle(split_word(piece.substr(1, piece.size() - 2), comma_mode, whole)));
    } else {
      comps.push_back(Component::path(split_word(piece, comma_mode, whole)));
    }
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return LabeledGraph(std::move(comps));
}

IsoClass iso_class(const LabeledGraph& g) {
  IsoClass iso;
  for (const auto& c : g.components()) iso.parts.emplace_back(c.kind(), c.size());
  std::sort(iso.parts.begin(), iso.parts.end());
  return iso;
}

// --------------------------------------------------- restriction/contraction

namespace {

void require_subset(const LabeledGraph& g, const LabelSet& s) {
  const LabelSet ground = g.ground_set();
  for (const auto& l : s)
    if (!ground.count(l)) throw Error(ErrorCode::LabelNotPresent, "label '" + l + "' not in graph");
}

}  // namespace

LabeledGraph restrict(const LabeledGraph& g, const LabelSet& s) {
  require_subset(g, s);
  std::vector<Component> out;
  for (const auto& c : g.components()) {
    std::vector<Label> keep;
    for (const auto& l : c.vertices())
      if (s.count(l)) keep.push_back(l);
    if (keep.empty()) continue;
    out.push_back(c.is_path() ? Component::path(std::move(keep)) : Component::cycle(std::move(keep)));
  }
  return LabeledGraph(std::move(out));
}

LabeledGraph contract(const LabeledGraph& g, const LabelSet& s) {
  require_subset(g, s);
  std::vector<Component> out;
  for (const auto& c : g.components()) {
    const auto& v = c.vertices();
    const std::size_t n = v.size();
    std::size_t removed_at = n;
    for (std::size_t i = 0; i < n; ++i)
      if (s.count(v[i])) {
        removed_at = i;
        break;
      }
    if (removed_at == n) {
      out.push_back(c);
      continue;
    }
    // Walk once around (or along) the component, starting right after a
    // removed vertex for cycles, cutting at every removed vertex.
    std::vector<Label> run;
    auto flush = [&] {
      if (!run.empty()) out.push_back(Component::path(std::move(run)));
      run.clear();
    };
    const std::size_t begin = c.is_cycle() ? removed_at + 1 : 0;
    for (std::size_t step = 0; step < n; ++step) {
      const Label& l = v[(begin + step) % n];
      if (s.count(l))
        flush();
      else
        run.push_back(l);
    }
    flush();
  }
  return LabeledGraph(std::move(out));
}

LabeledGraph disjoint_union(const LabeledGraph& a, const LabeledGraph& b) {
  for (const auto& c : b.components())
    for (const auto& l : c.vertices())
      if (a.has_label(l)) throw Error(ErrorCode::LabelClash, "label '" + l + "' on both sides");
  std::vector<Component> comps = a.components();
  comps.insert(comps.end(), b.components().begin(), b.components().end());
  return LabeledGraph(std::move(comps));
}

Component relabel(const Component& c, const Relabeling& map) {
  std::vector<Label> v;
  v.reserve(c.size());
  for (const auto& l : c.vertices()) {
    auto it = map.find(l);
    if (it == map.end()) throw Error(ErrorCode::LabelNotPresent, "no image for label '" + l + "'");
    v.push_back(it->second);
  }
  return c.is_path() ? Component::path(std::move(v)) : Component::cycle(std::move(v));
}

LabeledGraph relabel(const LabeledGraph& g, const Relabeling& map) {
  std::vector<Component> comps;
  comps.reserve(g.component_count());
  for (const auto& c : g.components()) comps.push_back(relabel(c, map));
  return LabeledGraph(std::move(comps));
}

StandardForm standard_form(const LabeledGraph& g) {
  std::vector<const Component*> order;
  for (const auto& c : g.components()) order.push_back(&c);
  std::stable_sort(order.begin(), order.end(), [](const Component* a, const Component* b) {
    return std::pair(a->size(), a->kind()) < std::pair(b->size(), b->kind());
  });
  StandardForm sf;
  std::vector<Component> comps;
  std::size_t next = 0;
  for (const Component* c : order) {
    std::vector<Label> v;
    for (const auto& l : c->vertices()) {
      Label std_label = std::to_string(next++);
      sf.to_original.emplace(std_label, l);
      v.push_back(std::move(std_label));
    }
    comps.push_back(c->is_path() ? Component::path(std::move(v)) : Component::cycle(std::move(v)));
  }
  sf.shape = LabeledGraph(std::move(comps));
  return sf;
}

std::vector<Label> standard_labels(std::size_t n) {
  std::vector<Label> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back(std::to_string(i));
  return v;
}

LabeledGraph standard_path(std::size_t n) {
  if (n == 0) return {};
  return LabeledGraph({Component::path(standard_labels(n))});
}

LabeledGraph standard_cycle(std::size_t n) {
  if (n == 0) return {};
  return LabeledGraph({Component::cycle(standard_labels(n))});
}

}  // namespace cycpath
