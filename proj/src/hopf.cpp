#include "cycpath/hopf.hpp"

#include <mutex>
#include <string>
#include <vector>

#include "cycpath/errors.hpp"

namespace cycpath {

LinearCombination LinearCombination::of(const LabeledGraph& g, const Rational& coeff) {
  LinearCombination lc;
  lc.add(g, coeff);
  return lc;
}

void LinearCombination::add(const LabeledGraph& g, const Rational& coeff) {
  if (coeff == 0) return;
  if (ground_) {
    if (g.ground_set() != *ground_)
      throw Error(ErrorCode::LabelClash, "term '" + g.to_string() + "' is on another ground set");
  } else {
    ground_ = g.ground_set();
  }
  auto [it, inserted] = terms_.try_emplace(g, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LinearCombination& LinearCombination::operator+=(const LinearCombination& other) {
  for (const auto& [g, c] : other.terms_) add(g, c);
  return *this;
}

LinearCombination& LinearCombination::operator-=(const LinearCombination& other) {
  for (const auto& [g, c] : other.terms_) add(g, -c);
  return *this;
}

LinearCombination& LinearCombination::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, c] : terms_) c *= scalar;
  return *this;
}

LinearCombination LinearCombination::operator-() const {
  LinearCombination r = *this;
  for (auto& [g, c] : r.terms_) c = -c;
  return r;
}

Rational LinearCombination::coefficient(const LabeledGraph& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::map<IsoClass, Rational> LinearCombination::grouped_by_iso() const {
  std::map<IsoClass, Rational> out;
  for (const auto& [g, c] : terms_) out[iso_class(g)] += c;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

LinearCombination lc_product(const LinearCombination& x, const LinearCombination& y) {
  LinearCombination out;
  for (const auto& [gx, cx] : x.terms())
    for (const auto& [gy, cy] : y.terms()) out.add(disjoint_union(gx, gy), cx * cy);
  return out;
}

LinearCombination relabel(const LinearCombination& x, const Relabeling& map) {
  LinearCombination out;
  for (const auto& [g, c] : x.terms()) out.add(relabel(g, map), c);
  return out;
}

CoproductTerm coproduct(const LabeledGraph& g, const LabelSet& s) {
  return {restrict(g, s), contract(g, s)};
}

// ------------------------------------------------------------------ antipode

namespace {

class AntipodeCache {
 public:
  std::optional<LinearCombination> find(const std::string& key) {
    std::lock_guard lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  // Concurrent computations of the same class produce equal values, so a
  // lost race is harmless.
  void insert(const std::string& key, const LinearCombination& value) {
    std::lock_guard lock(mutex_);
    table_.try_emplace(key, value);
  }
  std::size_t size() {
    std::lock_guard lock(mutex_);
    return table_.size();
  }

 private:
  std::mutex mutex_;
  std::map<std::string, LinearCombination> table_;
};

AntipodeCache& cache() {
  static AntipodeCache instance;
  return instance;
}

LinearCombination milnor_moore(const LabeledGraph& shape) {
  std::vector<Label> labels;
  for (const auto& l : shape.ground_set()) labels.push_back(l);
  const std::size_t n = labels.size();
  if (n >= 63) throw Error(ErrorCode::InvalidArgument, "graph too large for subset recursion");

  LinearCombination sum;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    LabelSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.insert(labels[i]);
    auto [left, right] = coproduct(shape, s);
    sum += lc_product(LinearCombination::of(left), antipode_mm(right));
  }
  return -sum;
}

}  // namespace

LinearCombination antipode_mm(const LabeledGraph& g) {
  if (g.empty()) return LinearCombination::of(g);
  StandardForm sf = standard_form(g);
  const std::string key = sf.shape.to_string();
  std::optional<LinearCombination> value = cache().find(key);
  if (!value) {
    value = milnor_moore(sf.shape);
    cache().insert(key, *value);
  }
  return relabel(*value, sf.to_original);
}

LinearCombination antipode_of_product(const LabeledGraph& x, const LabeledGraph& y) {
  disjoint_union(x, y);  // LabelClash check
  return lc_product(antipode_mm(y), antipode_mm(x));
}

std::size_t antipode_cache_size() { return cache().size(); }

}  // namespace cycpath
