#pragma once

// Graphs whose connected components are paths or cycles.
//
// A cycle on k vertices always has k edges, so the 1-cycle carries a loop and
// the 2-cycle a double edge; neither is the same graph as the path of the
// same size. Components are stored in a canonical orientation and a graph
// keeps its components sorted, so structural equality is plain equality of
// the stored data and the printed word form is unique per graph.

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cycpath {

/// Labels are opaque tokens compared as strings.
using Label = std::string;
using LabelSet = std::set<Label>;
using Relabeling = std::map<Label, Label>;

enum class Kind { Path, Cycle };

std::string_view to_string(Kind kind) noexcept;

class Component {
 public:
  /// Vertices listed endpoint to endpoint. Throws DuplicateLabel or
  /// InvalidArgument (empty vertex list).
  static Component path(std::vector<Label> vertices);
  /// Vertices listed in cyclic order, any rotation and direction.
  static Component cycle(std::vector<Label> vertices);

  Kind kind() const noexcept { return kind_; }
  bool is_path() const noexcept { return kind_ == Kind::Path; }
  bool is_cycle() const noexcept { return kind_ == Kind::Cycle; }
  std::size_t size() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept {
    return is_cycle() ? vertices_.size() : vertices_.size() - 1;
  }
  const std::vector<Label>& vertices() const noexcept { return vertices_; }
  const Label& min_label() const noexcept { return min_label_; }
  bool contains(const Label& l) const;

  /// Word form: "567" or "(890)"; comma-separated tokens when `commas`.
  std::string word(bool commas) const;

  // Canonical order: size, then kind (paths first), then smallest label.
  friend std::strong_ordering operator<=>(const Component& a, const Component& b);
  friend bool operator==(const Component& a, const Component& b) = default;

 private:
  Component(Kind kind, std::vector<Label> vertices);

  Kind kind_;
  std::vector<Label> vertices_;
  Label min_label_;
};

class LabeledGraph {
 public:
  /// The empty graph, the unit of the disjoint-union product.
  LabeledGraph() = default;
  /// Throws DuplicateLabel if two components share a label.
  explicit LabeledGraph(std::vector<Component> components);

  const std::vector<Component>& components() const noexcept { return components_; }
  std::size_t component_count() const noexcept { return components_.size(); }
  std::size_t vertex_count() const noexcept;
  bool empty() const noexcept { return components_.empty(); }
  bool is_connected() const noexcept { return components_.size() == 1; }

  LabelSet ground_set() const;
  bool has_label(const Label& l) const;

  /// True when any label is longer than one character; the printed form
  /// then separates tokens inside a word by commas.
  bool needs_commas() const;

  /// Canonical word notation, e.g. "4|567|(1)|(23)|(089)". Empty graph
  /// prints as the empty string.
  std::string to_string() const;

  friend auto operator<=>(const LabeledGraph&, const LabeledGraph&) = default;
  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  std::vector<Component> components_;
};

/// Multiset of (kind, size) over the components, sorted.
struct IsoClass {
  std::vector<std::pair<Kind, std::size_t>> parts;

  std::string to_string() const;
  friend auto operator<=>(const IsoClass&, const IsoClass&) = default;
  friend bool operator==(const IsoClass&, const IsoClass&) = default;
};

/// Grammar: graph := component ("|" component)*,
///          component := word | "(" word ")",
///          word := token+ | token ("," token)+.
/// When the text has no comma every character is one label; otherwise every
/// word is split on commas (a trailing comma marks a one-token word).
/// The empty string is the empty graph.
LabeledGraph parse_graph(std::string_view text);

IsoClass iso_class(const LabeledGraph& g);

/// g|_S: edges come from S-vertices joined through removed vertices. A path
/// keeps its induced order on S; a cycle meeting S stays a cycle (a loop or a
/// double edge when one or two of its vertices survive).
LabeledGraph restrict(const LabeledGraph& g, const LabelSet& s);

/// g/_S = g:T with T the complement of S: the induced subgraph. A cycle that
/// loses any vertex falls apart into paths.
LabeledGraph contract(const LabeledGraph& g, const LabelSet& s);

LabeledGraph disjoint_union(const LabeledGraph& a, const LabeledGraph& b);

/// Applies a bijection on labels. Every label of g must be a key.
LabeledGraph relabel(const LabeledGraph& g, const Relabeling& map);
Component relabel(const Component& c, const Relabeling& map);

/// Standard form of a graph up to isomorphism: a representative on labels
/// "0", "1", ... together with the isomorphism back to g.
struct StandardForm {
  LabeledGraph shape;
  Relabeling to_original;  // shape label -> label of g
};
StandardForm standard_form(const LabeledGraph& g);

/// Convenience builders for the graphs p_n = 12...n and c_n = (12...n).
LabeledGraph standard_path(std::size_t n);
LabeledGraph standard_cycle(std::size_t n);
/// The labels "1", ..., "n" used by the two builders above.
std::vector<Label> standard_labels(std::size_t n);

}  // namespace cycpath
