#include "cycpath/inversion.hpp"

#include <algorithm>
#include <mutex>

#include "cycpath/errors.hpp"
#include "cycpath/noncrossing.hpp"
#include "cycpath/polytope.hpp"
#include "cycpath/tubing.hpp"

namespace cycpath {

namespace {

Integer signed_one(std::size_t exponent) { return exponent % 2 == 0 ? Integer(1) : Integer(-1); }

std::vector<std::size_t> sorted_sizes(const std::vector<LabelSet>& blocks) {
  std::vector<std::size_t> out;
  for (const auto& b : blocks) out.push_back(b.size());
  std::sort(out.begin(), out.end());
  return out;
}

MonomialTable face_table(const LabeledGraph& host) {
  const PolytopeModel p = build_polytope(host);
  const std::size_t n = host.vertex_count();
  MonomialTable table;
  for (const auto& t : enumerate_tubings(host)) {
    const FaceModel f = face_of_tubing(p, t);
    const FaceFactorization ff = face_factorization(p, f);
    table[{ff.cyclic.value_or(0), ff.paths}] += signed_one(n - f.dim);
  }
  std::erase_if(table, [](const auto& kv) { return kv.second == 0; });
  return table;
}

MonomialTable build_assoc(std::size_t n) { return face_table(standard_path(n)); }
MonomialTable build_cyclo(std::size_t n) { return face_table(standard_cycle(n)); }

MonomialTable build_nc(std::size_t n) {
  MonomialTable table;
  for (const auto& pi : enumerate_nc(standard_path(n))) {
    const Integer c = catalan_coefficient(pi, adjacent_closure(pi)).value;
    table[{0, sorted_sizes(pi.blocks)}] += signed_one(pi.blocks.size()) * c;
  }
  std::erase_if(table, [](const auto& kv) { return kv.second == 0; });
  return table;
}

MonomialTable build_pnc(std::size_t n) {
  MonomialTable table;
  for (const auto& pi : enumerate_pnc(standard_cycle(n))) {
    const Integer c = catalan_coefficient(pi, adjacent_closure_pointed(pi)).value;
    table[{pi.zero_block.size(), sorted_sizes(pi.nonzero_blocks)}] += signed_one(pi.block_count()) * c;
  }
  std::erase_if(table, [](const auto& kv) { return kv.second == 0; });
  return table;
}

enum class Route { Assoc, NC, Cyclo, PNC };

const MonomialTable& cached(Route route, std::size_t n, MonomialTable (*build)(std::size_t)) {
  static std::mutex mutex;
  static std::map<std::pair<Route, std::size_t>, MonomialTable> cache;
  const auto key = std::make_pair(route, n);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  MonomialTable table = build(n);
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, std::move(table)).first->second;
}

}  // namespace

const MonomialTable& assoc_face_table(std::size_t n) { return cached(Route::Assoc, n, build_assoc); }
const MonomialTable& nc_table(std::size_t n) { return cached(Route::NC, n, build_nc); }
const MonomialTable& cyclo_face_table(std::size_t n) { return cached(Route::Cyclo, n, build_cyclo); }
const MonomialTable& pnc_table(std::size_t n) { return cached(Route::PNC, n, build_pnc); }

Rational evaluate(const MonomialTable& table, const TruncatedPair& p) {
  Rational total = 0;
  for (const auto& [m, coeff] : table) {
    Rational term(coeff);
    if (m.cyclic > 0) term *= p.c(m.cyclic);
    for (auto f : m.paths) term *= p.a(f);
    total += term;
  }
  return total;
}

namespace {

TruncatedPair pair_of(const TruncatedSeries& g) {
  if (!g.is_monic()) throw Error(ErrorCode::InvalidArgument, "g must be monic");
  return TruncatedPair::from_series(g, TruncatedSeries(g.order()));
}

TruncatedSeries invert_with(const TruncatedSeries& g, const MonomialTable& (*table)(std::size_t)) {
  if (g.order() == 0) return g;
  const TruncatedPair p = pair_of(g);
  TruncatedSeries out = TruncatedSeries::identity(g.order());
  for (std::size_t n = 1; n < g.order(); ++n) out.set(n + 1, evaluate(table(n), p));
  return out;
}

TruncatedPair invert_pair_with(const TruncatedPair& p, const MonomialTable& (*paths)(std::size_t),
                               const MonomialTable& (*cycles)(std::size_t)) {
  const TruncatedSeries ginv = invert_with(p.g(), paths);
  std::vector<Rational> a, d;
  for (std::size_t n = 1; n < p.order(); ++n) a.push_back(ginv[n + 1]);
  for (std::size_t n = 1; n <= p.order(); ++n) d.push_back(evaluate(cycles(n), p));
  return TruncatedPair(std::move(a), std::move(d));
}

}  // namespace

TruncatedSeries invert_via_assoc_faces(const TruncatedSeries& g) { return invert_with(g, assoc_face_table); }
TruncatedSeries invert_via_nc(const TruncatedSeries& g) { return invert_with(g, nc_table); }

TruncatedPair invert_pair_via_cyclo_faces(const TruncatedPair& p) {
  return invert_pair_with(p, assoc_face_table, cyclo_face_table);
}

TruncatedPair invert_pair_via_pnc(const TruncatedPair& p) { return invert_pair_with(p, nc_table, pnc_table); }

}  // namespace cycpath
