// Command-line front end: antipodes, inversion in G, enumeration,
// f-vectors, identity checks and character convolution.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cycpath/errors.hpp"
#include "cycpath/hopf.hpp"
#include "cycpath/inversion.hpp"
#include "cycpath/json_io.hpp"
#include "cycpath/noncrossing.hpp"
#include "cycpath/polytope.hpp"
#include "cycpath/series.hpp"
#include "cycpath/tubing.hpp"
#include "verify.hpp"

using namespace cycpath;

namespace {

constexpr std::size_t kDefaultOrder = 8;

struct Output {
  bool plain = false;

  void emit(const Json& j, const std::string& text) const {
    if (plain)
      std::cout << text;
    else
      std::cout << j.dump(2) << '\n';
  }
};

// Pair options shared by invert and convolve.
struct PairSpec {
  std::string named;
  std::string a;
  std::string c;
};

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (comma == std::string::npos) return out;
    start = comma + 1;
  }
}

TruncatedPair build_pair(const PairSpec& spec, std::optional<std::size_t> order) {
  if (!spec.named.empty()) {
    if (!spec.a.empty() || !spec.c.empty())
      throw Error(ErrorCode::InvalidArgument, "give either named series or coefficient lists");
    const auto names = split_names(spec.named);
    if (names.size() != 2) throw Error(ErrorCode::InvalidArgument, "named pair must look like 'g,h'");
    const std::size_t n = order.value_or(kDefaultOrder);
    const TruncatedSeries g = named_series(names[0], n);
    if (!g.is_monic()) throw Error(ErrorCode::InvalidArgument, "'" + names[0] + "' is not monic");
    return TruncatedPair::from_series(g, named_series(names[1], n));
  }
  auto a = parse_coefficients(spec.a);
  auto c = parse_coefficients(spec.c);
  const std::size_t n = order.value_or(c.size());
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "empty pair");
  if (a.size() + 1 < n || c.size() < n)
    throw Error(ErrorCode::OrderMismatch, "order " + std::to_string(n) + " needs " + std::to_string(n - 1) +
                                              " a-coefficients and " + std::to_string(n) + " c-coefficients");
  a.resize(n - 1);
  c.resize(n);
  return TruncatedPair(std::move(a), std::move(c));
}

std::string pair_text(const TruncatedPair& p) {
  return "a=" + format_coefficients(p.a()) + "\nc=" + format_coefficients(p.c()) + "\n";
}

LinearCombination component_antipode(const LabeledGraph& g, const std::string& method) {
  if (method == "tubings") return antipode_tubings(g);
  if (g.components().front().is_path()) return antipode_nc(g);
  return antipode_pnc(g);
}

LinearCombination run_antipode(const LabeledGraph& g, const std::string& method) {
  if (method == "mm" || g.empty()) return antipode_mm(g);
  // s(x y) = s(y) s(x), one component at a time
  LinearCombination out = LinearCombination::of(LabeledGraph());
  const auto& comps = g.components();
  for (auto it = comps.rbegin(); it != comps.rend(); ++it)
    out = lc_product(out, component_antipode(LabeledGraph({*it}), method));
  return out;
}

TruncatedPair run_invert(const TruncatedPair& p, const std::string& method) {
  if (method == "direct") return group_inv(p);
  if (method == "cyclo-faces") return invert_pair_via_cyclo_faces(p);
  if (method == "pnc") return invert_pair_via_pnc(p);
  // first component only from the combinatorial formula, second as -h∘g^{-1}
  const TruncatedSeries ginv = method == "assoc-faces" ? invert_via_assoc_faces(p.g()) : invert_via_nc(p.g());
  return TruncatedPair::from_series(ginv, -compose(p.h(), ginv));
}

std::string lc_text(const Json& j) {
  std::string out;
  for (const auto& row : j) out += row["coeff"].get<std::string>() + "\t" + row["graph"].get<std::string>() + "\n";
  return out;
}

std::string blocks_text(const std::vector<LabelSet>& blocks) {
  std::string out;
  for (const auto& b : blocks) {
    out += '{';
    bool first = true;
    for (const auto& l : b) {
      if (!first) out += ',';
      out += l;
      first = false;
    }
    out += '}';
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hopf monoid of paths and cycles: antipodes, inversion and polytopes"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  bool json_flag = false;
  app.add_flag("--plain", out.plain, "plain text output")->excludes(app.add_flag("--json", json_flag, "JSON output (default)"));

  std::string graph_text, method = "mm", what = "tubings", identity;
  std::optional<std::size_t> order;
  std::size_t nmax = 6;
  PairSpec pair, zeta, xi;

  auto* antipode = app.add_subcommand("antipode", "antipode of a graph as a linear combination");
  antipode->add_option("--graph", graph_text, "word notation, e.g. 12|(345)")->required();
  antipode->add_option("--method", method, "mm, tubings or ncp")->check(CLI::IsMember({"mm", "tubings", "ncp"}));

  auto* invert = app.add_subcommand("invert", "inverse of a pair (g, h) in G");
  invert->add_option("--a", pair.a, "a1,a2,... of g = x + sum a_n x^{n+1}");
  invert->add_option("--c", pair.c, "c1,c2,... of h = sum c_n x^n/n");
  invert->add_option("--named", pair.named, "named pair g,h from geom, alt, exp, log, nlog, id, zero");
  invert->add_option("--order", order, "truncation order N (default 8, or the length of --c); the face "
                                       "routes enumerate every face of c_N, about 4s at N = 8 and about a minute at N = 9");
  std::string invert_method = "direct";
  invert->add_option("--method", invert_method, "direct, assoc-faces, nc, cyclo-faces or pnc")
      ->check(CLI::IsMember({"direct", "assoc-faces", "nc", "cyclo-faces", "pnc"}));

  auto* enumerate = app.add_subcommand("enumerate", "list tubes, tubings, vertices or partitions");
  enumerate->add_option("--graph", graph_text, "word notation")->required();
  enumerate->add_option("--what", what, "tubes, tubings, maximal-tubings, vertices, nc or pnc")
      ->check(CLI::IsMember({"tubes", "tubings", "maximal-tubings", "vertices", "nc", "pnc"}));

  auto* fvector = app.add_subcommand("fvector", "face numbers of the graph associahedron");
  fvector->add_option("--graph", graph_text, "word notation")->required();

  auto* verify = app.add_subcommand("verify", "check an identity for n = 1..nmax");
  verify->add_option("identity", identity, "identity name")->required()->check(CLI::IsMember(cli::identity_names()));
  verify->add_option("--nmax", nmax, "largest n (default 6)");

  auto* conv = app.add_subcommand("convolve", "value of the convolution of two characters on a graph");
  conv->add_option("--graph", graph_text, "word notation")->required();
  conv->add_option("--zeta", zeta.named, "named pair for the first character");
  conv->add_option("--zeta-a", zeta.a, "a-coefficients of the first character");
  conv->add_option("--zeta-c", zeta.c, "c-coefficients of the first character");
  conv->add_option("--xi", xi.named, "named pair for the second character");
  conv->add_option("--xi-a", xi.a, "a-coefficients of the second character");
  conv->add_option("--xi-c", xi.c, "c-coefficients of the second character");
  conv->add_option("--order", order, "truncation order N (default 8, or the length of the c lists)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (antipode->parsed()) {
      const Json j = to_json(run_antipode(parse_graph(graph_text), method));
      out.emit(j, lc_text(j));
    } else if (invert->parsed()) {
      const TruncatedPair inv = run_invert(build_pair(pair, order), invert_method);
      out.emit(to_json(inv), pair_text(inv));
    } else if (enumerate->parsed()) {
      const LabeledGraph g = parse_graph(graph_text);
      Json j = Json::array();
      std::string text;
      if (what == "tubes") {
        for (const auto& t : enumerate_tubes(g)) {
          j.push_back(std::vector<Label>(t.begin(), t.end()));
          text += blocks_text({t}) + "\n";
        }
      } else if (what == "tubings" || what == "maximal-tubings") {
        for (const auto& t : what == "tubings" ? enumerate_tubings(g) : enumerate_maximal_tubings(g)) {
          j.push_back(to_json(t));
          text += blocks_text(t.tubes()) + "\n";
        }
      } else if (what == "vertices") {
        const PolytopeModel p = build_polytope(g);
        j = to_json(p);
        for (const auto& v : p.vertices()) {
          for (std::size_t i = 0; i < v.coords.size(); ++i) text += (i ? "," : "") + std::to_string(v.coords[i]);
          text += "\t" + blocks_text(v.tubing.tubes()) + "\n";
        }
      } else if (what == "nc") {
        for (const auto& pi : enumerate_nc(g)) {
          j.push_back(to_json(pi));
          text += blocks_text(pi.blocks) + "\n";
        }
      } else {
        for (const auto& pi : enumerate_pnc(g)) {
          j.push_back(to_json(pi));
          text += "0" + blocks_text({pi.zero_block}) + " " + blocks_text(pi.nonzero_blocks) + "\n";
        }
      }
      out.emit(j, text);
    } else if (fvector->parsed()) {
      const auto f = f_vector(build_polytope(parse_graph(graph_text)));
      std::string text;
      for (std::size_t i = 0; i < f.size(); ++i) text += (i ? "," : "") + std::to_string(f[i]);
      out.emit(Json(f), text + "\n");
    } else if (verify->parsed()) {
      const auto rows = cli::run_identity(identity, nmax);
      bool all = true;
      Json results = Json::array();
      std::string text;
      for (const auto& r : rows) {
        all = all && r.pass;
        results.push_back({{"n", r.n}, {"value", r.value}, {"expected", r.expected}, {"pass", r.pass}});
        text += "n=" + std::to_string(r.n) + " value=" + r.value + " expected=" + r.expected +
                (r.pass ? " PASS\n" : " FAIL\n");
      }
      out.emit({{"identity", identity}, {"results", results}, {"pass", all}}, text);
      return all ? 0 : 1;
    } else if (conv->parsed()) {
      const Character z{build_pair(zeta, order)}, x{build_pair(xi, order)};
      const Rational v = convolve(z, x, parse_graph(graph_text));
      out.emit({{"graph", graph_text}, {"value", to_string(v)}}, to_string(v) + "\n");
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
