#pragma once

// JSON and text encodings. Rationals are always written as strings.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cycpath/graph.hpp"
#include "cycpath/hopf.hpp"
#include "cycpath/noncrossing.hpp"
#include "cycpath/polytope.hpp"
#include "cycpath/series.hpp"
#include "cycpath/tubing.hpp"

namespace cycpath {

using Json = nlohmann::ordered_json;

/// {"components":[{"kind":"path","vertices":["4"]}, ...]}
Json to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const Json& j);

/// [{"coeff":"-1","graph":"(12)"}, ...] sorted by the graph's text form.
Json to_json(const LinearCombination& x);
LinearCombination lc_from_json(const Json& j);

/// {"tubes":[["1"],["1","2"]]} with tubes by size, then lexicographically.
Json to_json(const Tubing& t);
Json to_json(const NCPartition& pi);          // {"blocks":[...]}
Json to_json(const PointedNCPartition& pi);   // {"zero":[...],"blocks":[...]}
Json to_json(const PolytopeModel& p);

/// {"order":N,"a":["a1",...],"c":["c1",...]}
Json to_json(const TruncatedPair& p);
TruncatedPair pair_from_json(const Json& j);

/// "a1,a2,..." with exact rationals.
std::string format_coefficients(const std::vector<Rational>& coeffs);
/// Throws ParseError on a non-rational token.
std::vector<Rational> parse_coefficients(std::string_view text);

}  // namespace cycpath
