#include "cycpath/json_io.hpp"

#include <algorithm>

#include "cycpath/errors.hpp"

namespace cycpath {

namespace {

Json labels_json(const LabelSet& s) { return Json(std::vector<Label>(s.begin(), s.end())); }

Json blocks_json(const std::vector<LabelSet>& blocks) {
  Json out = Json::array();
  for (const auto& b : blocks) out.push_back(labels_json(b));
  return out;
}

Json rationals_json(const std::vector<Rational>& qs) {
  Json out = Json::array();
  for (const auto& q : qs) out.push_back(to_string(q));
  return out;
}

std::vector<Rational> rationals_from_json(const Json& j) {
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(parse_rational(v.get<std::string>()));
  return out;
}

template <class F>
auto guarded(F f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace

Json to_json(const LabeledGraph& g) {
  Json comps = Json::array();
  for (const auto& c : g.components())
    comps.push_back({{"kind", c.is_path() ? "path" : "cycle"}, {"vertices", c.vertices()}});
  return {{"components", comps}};
}

LabeledGraph graph_from_json(const Json& j) {
  return guarded([&] {
    std::vector<Component> comps;
    for (const auto& c : j.at("components")) {
      const auto kind = c.at("kind").get<std::string>();
      auto vertices = c.at("vertices").get<std::vector<Label>>();
      if (kind == "path")
        comps.push_back(Component::path(std::move(vertices)));
      else if (kind == "cycle")
        comps.push_back(Component::cycle(std::move(vertices)));
      else
        throw Error(ErrorCode::ParseError, "unknown component kind '" + kind + "'");
    }
    return LabeledGraph(std::move(comps));
  });
}

Json to_json(const LinearCombination& x) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& [g, q] : x.terms()) rows.emplace_back(g.to_string(), to_string(q));
  std::sort(rows.begin(), rows.end());
  Json out = Json::array();
  for (const auto& [g, q] : rows) out.push_back({{"coeff", q}, {"graph", g}});
  return out;
}

LinearCombination lc_from_json(const Json& j) {
  return guarded([&] {
    LinearCombination x;
    for (const auto& row : j)
      x.add(parse_graph(row.at("graph").get<std::string>()), parse_rational(row.at("coeff").get<std::string>()));
    return x;
  });
}

Json to_json(const Tubing& t) { return {{"tubes", blocks_json(t.tubes())}}; }

Json to_json(const NCPartition& pi) { return {{"blocks", blocks_json(pi.blocks)}}; }

Json to_json(const PointedNCPartition& pi) {
  return {{"zero", labels_json(pi.zero_block)}, {"blocks", blocks_json(pi.nonzero_blocks)}};
}

Json to_json(const PolytopeModel& p) {
  Json vertices = Json::array();
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    Json coords = Json::object();
    for (std::size_t i = 0; i < p.labels().size(); ++i)
      coords[p.labels()[i]] = std::to_string(p.vertices()[v].coords[i]);
    vertices.push_back({{"coords", coords}, {"tubing", blocks_json(p.vertices()[v].tubing.tubes())}});
  }
  return {{"graph", p.host().to_string()}, {"vertices", vertices}};
}

Json to_json(const TruncatedPair& p) {
  return {{"order", p.order()}, {"a", rationals_json(p.a())}, {"c", rationals_json(p.c())}};
}

TruncatedPair pair_from_json(const Json& j) {
  return guarded([&] {
    TruncatedPair p(rationals_from_json(j.at("a")), rationals_from_json(j.at("c")));
    if (j.at("order").get<std::size_t>() != p.order())
      throw Error(ErrorCode::OrderMismatch, "order field disagrees with the coefficient lists");
    return p;
  });
}

std::string format_coefficients(const std::vector<Rational>& coeffs) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0) out += ',';
    out += to_string(coeffs[i]);
  }
  return out;
}

std::vector<Rational> parse_coefficients(std::string_view text) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace cycpath
