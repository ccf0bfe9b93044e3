#pragma once

#include <map>
#include <optional>

#include "cycpath/graph.hpp"
#include "cycpath/rational.hpp"

namespace cycpath {

/// Formal sum of graphs on a common ground set with exact coefficients.
/// Zero coefficients are never stored.
class LinearCombination {
 public:
  using Terms = std::map<LabeledGraph, Rational>;

  LinearCombination() = default;
  static LinearCombination of(const LabeledGraph& g, const Rational& coeff = 1);

  /// Adds coeff * g. Throws LabelClash if g lives on a different ground set
  /// than the terms already present.
  void add(const LabeledGraph& g, const Rational& coeff);

  LinearCombination& operator+=(const LinearCombination& other);
  LinearCombination& operator-=(const LinearCombination& other);
  LinearCombination& operator*=(const Rational& scalar);
  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(LinearCombination a, const Rational& s) { return a *= s; }
  friend LinearCombination operator*(const Rational& s, LinearCombination a) { return a *= s; }
  LinearCombination operator-() const;

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const LabeledGraph& g) const;
  const std::optional<LabelSet>& ground_set() const noexcept { return ground_; }

  /// Sum of coefficients per isomorphism class.
  std::map<IsoClass, Rational> grouped_by_iso() const;

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
  std::optional<LabelSet> ground_;
};

/// Bilinear extension of disjoint union.
LinearCombination lc_product(const LinearCombination& x, const LinearCombination& y);

LinearCombination relabel(const LinearCombination& x, const Relabeling& map);

struct CoproductTerm {
  LabeledGraph restriction;  // g|_S
  LabeledGraph contraction;  // g/_S on the complement

  friend bool operator==(const CoproductTerm&, const CoproductTerm&) = default;
};

CoproductTerm coproduct(const LabeledGraph& g, const LabelSet& s);

/// Antipode by the recursion s(x) = -sum_{S nonempty} x|_S . s(x/_S), with
/// s of the empty graph the empty graph. Results are cached per isomorphism
/// class and transported along the relabeling; the cache is shared and
/// safe to use from several threads.
LinearCombination antipode_mm(const LabeledGraph& g);

/// s(x . y) = s(y) . s(x), each factor by antipode_mm.
LinearCombination antipode_of_product(const LabeledGraph& x, const LabeledGraph& y);

/// Number of isomorphism classes currently held by the antipode cache.
std::size_t antipode_cache_size();

}  // namespace cycpath
