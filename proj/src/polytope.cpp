#include "cycpath/polytope.hpp"

#include <algorithm>
#include <limits>

#include "cycpath/detail/bitgraph.hpp"
#include "cycpath/errors.hpp"

namespace cycpath {

using detail::BitGraph;
using detail::Mask;

std::size_t PolytopeModel::label_index(const Label& l) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
  if (it == labels_.end() || *it != l) throw Error(ErrorCode::LabelNotPresent, "label '" + l + "' not in polytope");
  return static_cast<std::size_t>(it - labels_.begin());
}

RationalPoint PolytopeModel::point(std::size_t vertex) const {
  RationalPoint pt;
  const auto& coords = vertices_.at(vertex).coords;
  for (std::size_t i = 0; i < labels_.size(); ++i) pt.emplace(labels_[i], Rational(static_cast<long>(coords[i])));
  return pt;
}

namespace {

// n_i: number of tubes of t containing label i, indexed like bg.labels().
std::vector<std::int64_t> depths(const BitGraph& bg, const Tubing& t) {
  std::vector<std::int64_t> n(bg.size(), 0);
  for (const auto& tube : t.tubes()) {
    const Mask m = bg.mask_of(tube);
    for (std::size_t i = 0; i < bg.size(); ++i)
      if (m >> i & 1) ++n[i];
  }
  return n;
}

std::int64_t functional(const std::vector<std::int64_t>& n, const std::vector<std::int64_t>& x) {
  std::int64_t v = 0;
  for (std::size_t i = 0; i < n.size(); ++i) v -= n[i] * x[i];
  return v;
}

}  // namespace

PolytopeModel build_polytope(const LabeledGraph& g) {
  PolytopeModel p;
  p.host_ = g;
  const BitGraph bg(g);
  p.labels_ = bg.labels();

  std::vector<Mask> tubes;
  for (const auto& tube : enumerate_tubes(g)) tubes.push_back(bg.mask_of(tube));
  p.tube_count_ = tubes.size();

  std::vector<std::vector<std::int64_t>> weights;
  for (auto& t : enumerate_maximal_tubings(g)) {
    const auto n = depths(bg, t);
    std::vector<std::int64_t> x(bg.size(), 0);
    for (Mask s : tubes) {
      // argmin of n over S; scanning bits upward breaks ties by label
      std::size_t best = bg.size();
      for (std::size_t i = 0; i < bg.size(); ++i)
        if ((s >> i & 1) && (best == bg.size() || n[i] < n[best])) best = i;
      ++x[best];
    }
    weights.push_back(n);
    p.vertices_.push_back({std::move(x), std::move(t)});
  }

  for (std::size_t v = 0; v < p.vertices_.size(); ++v) {
    const std::int64_t own = functional(weights[v], p.vertices_[v].coords);
    for (std::size_t w = 0; w < p.vertices_.size(); ++w)
      if (w != v && functional(weights[v], p.vertices_[w].coords) >= own)
        throw Error(ErrorCode::VerificationFailed,
                    "vertex of tubing " + std::to_string(v) + " is not the unique maximizer on " + g.to_string());
  }
  return p;
}

FaceModel face_of_tubing(const PolytopeModel& p, const Tubing& t) {
  if (!is_tubing(p.host(), t)) throw Error(ErrorCode::NotATubing, "not a tubing of " + p.host().to_string());
  const BitGraph bg(p.host());
  const auto n = depths(bg, t);
  FaceModel f{t, {}, p.labels().size() - t.size()};
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    const std::int64_t value = functional(n, p.vertices()[v].coords);
    if (value > best) {
      best = value;
      f.vertices.clear();
    }
    if (value == best) f.vertices.push_back(v);
  }
  return f;
}

std::vector<std::size_t> f_vector(const PolytopeModel& p) {
  std::vector<std::size_t> f(p.dimension() + 1, 0);
  for (const auto& t : enumerate_tubings(p.host())) ++f.at(p.labels().size() - t.size());
  return f;
}

LabelSet cyclic_factor_coordinates(const PolytopeModel& p, const FaceModel& f) {
  if (!p.host().is_connected() || !p.host().components().front().is_cycle())
    throw Error(ErrorCode::HostNotCycle, "'" + p.host().to_string() + "' is not a single cycle");
  const std::int64_t n = static_cast<std::int64_t>(p.labels().size());
  const std::int64_t target = n * (n - 1) / 2 + 1;
  LabelSet out;
  for (std::size_t i = 0; i < p.labels().size(); ++i) {
    std::int64_t top = 0;
    for (std::size_t v : f.vertices) top = std::max(top, p.vertices()[v].coords[i]);
    if (top == target) out.insert(p.labels()[i]);
  }
  return out;
}

FaceFactorization face_factorization(const PolytopeModel& p, const FaceModel& f) {
  const TubingDecomposition d = decompose_tubing(p.host(), f.tubing);
  FaceFactorization out;
  std::optional<LabelSet> zero;
  if (p.host().components().front().is_cycle()) {
    zero = cyclic_factor_coordinates(p, f);
    if (zero != d.zero_block)
      throw Error(ErrorCode::VerificationFailed, "coordinate rule disagrees with the zero block");
    out.cyclic = zero->size();
  }
  for (const auto& b : d.blocks)
    if (!zero || b != *zero) out.paths.push_back(b.size());
  std::sort(out.paths.begin(), out.paths.end());
  return out;
}

}  // namespace cycpath
