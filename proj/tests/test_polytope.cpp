#include <doctest.h>

#include "cycpath/errors.hpp"
#include "cycpath/polytope.hpp"
#include "oracles.hpp"

using namespace cycpath;

namespace {

LabeledGraph G(const char* w) { return parse_graph(w); }

Tube T(const char* digits) {
  Tube t;
  for (const char* p = digits; *p; ++p) t.insert(std::string(1, *p));
  return t;
}

Tubing tubing_of(std::initializer_list<const char*> ts) {
  std::vector<Tube> tubes;
  for (auto t : ts) tubes.push_back(T(t));
  return Tubing(std::move(tubes));
}

std::int64_t coordinate_sum(const PolytopeVertex& v) {
  std::int64_t s = 0;
  for (auto x : v.coords) s += x;
  return s;
}

}  // namespace

TEST_CASE("polytope examples") {
  const auto a1 = build_polytope(G("1"));
  REQUIRE(a1.vertices().size() == 1);
  CHECK(a1.vertices()[0].coords == std::vector<std::int64_t>{1});
  CHECK(a1.dimension() == 0);

  const auto a3 = build_polytope(G("123"));
  CHECK(a3.vertices().size() == 5);
  for (const auto& v : a3.vertices()) CHECK(coordinate_sum(v) == 6);
  CHECK(a3.dimension() == 2);

  const auto c3 = build_polytope(G("(123)"));
  CHECK(c3.vertices().size() == 6);
  for (const auto& v : c3.vertices()) CHECK(coordinate_sum(v) == 7);
  CHECK(c3.tube_count() == 7);

  CHECK(f_vector(a3) == std::vector<std::size_t>{5, 5, 1});
  CHECK(f_vector(c3) == std::vector<std::size_t>{6, 6, 1});
  CHECK(f_vector(a1) == std::vector<std::size_t>{1});
  CHECK(a3.point(0).at("1") == Rational(a3.vertices()[0].coords[0]));
  CHECK_THROWS_AS(a3.label_index("9"), Error);
}

TEST_CASE("face examples") {
  const auto a3 = build_polytope(G("123"));
  const auto whole = face_of_tubing(a3, tubing_of({"123"}));
  CHECK(whole.vertices.size() == 5);
  CHECK(whole.dim == 2);

  // the edge where x1 + x2 is largest, at 5
  const auto edge = face_of_tubing(a3, tubing_of({"3", "123"}));
  CHECK(edge.dim == 1);
  REQUIRE(edge.vertices.size() == 2);
  std::int64_t best = 0;
  for (const auto& v : a3.vertices()) best = std::max(best, v.coords[0] + v.coords[1]);
  CHECK(best == 5);
  for (auto i : edge.vertices) CHECK(a3.vertices()[i].coords[0] + a3.vertices()[i].coords[1] == 5);

  for (const char* w : {"1234", "(1234)"}) {
    const auto p = build_polytope(G(w));
    for (const auto& t : enumerate_maximal_tubings(G(w))) {
      const auto f = face_of_tubing(p, t);
      REQUIRE(f.vertices.size() == 1);
      CHECK(p.vertices()[f.vertices[0]].tubing == t);
    }
  }
  CHECK_THROWS_AS(face_of_tubing(a3, tubing_of({"1", "2", "123"})), Error);
}

TEST_CASE("property: vertices match the Minkowski sum") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& g : {standard_path(n), standard_cycle(n)}) {
      const auto p = build_polytope(g);
      std::set<std::map<Label, long>> got;
      for (const auto& v : p.vertices()) {
        std::map<Label, long> point;
        for (std::size_t i = 0; i < p.labels().size(); ++i) point[p.labels()[i]] = v.coords[i];
        got.insert(point);
      }
      CHECK(got.size() == p.vertices().size());
      CHECK(got == oracle::minkowski_vertices(g));
    }
  }
}

TEST_CASE("property: vertex counts and face dimensions") {
  for (std::size_t n = 1; n <= 7; ++n) {
    CHECK(Integer(static_cast<long>(build_polytope(standard_path(n)).vertices().size())) == catalan(n));
    CHECK(Integer(static_cast<long>(build_polytope(standard_cycle(n)).vertices().size())) == binomial(2 * n - 2, n - 1));
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& g : {standard_path(n), standard_cycle(n)}) {
      const auto p = build_polytope(g);
      for (const auto& t : enumerate_tubings(g)) {
        const auto f = face_of_tubing(p, t);
        std::vector<std::vector<long>> pts;
        for (auto i : f.vertices) pts.emplace_back(p.vertices()[i].coords.begin(), p.vertices()[i].coords.end());
        CHECK(f.dim == n - t.size());
        CHECK(oracle::affine_dimension(pts) == f.dim);
        // the face's vertices are exactly the maximal tubings refining t
        for (std::size_t i = 0; i < p.vertices().size(); ++i)
          CHECK((std::find(f.vertices.begin(), f.vertices.end(), i) != f.vertices.end()) ==
                p.vertices()[i].tubing.contains_all(t));
      }
    }
  }
}

TEST_CASE("property: Euler characteristic") {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& g : {standard_path(n), standard_cycle(n)}) {
      long sum = 0, sign = 1;
      for (auto f : f_vector(build_polytope(g))) {
        sum += sign * static_cast<long>(f);
        sign = -sign;
      }
      CHECK(sum == 1);
    }
  }
}

TEST_CASE("cyclic factor") {
  const auto c3 = build_polytope(G("(123)"));
  const auto whole = face_of_tubing(c3, tubing_of({"123"}));
  CHECK(cyclic_factor_coordinates(c3, whole) == T("123"));
  for (const auto& t : enumerate_maximal_tubings(G("(123)"))) {
    const auto f = face_of_tubing(c3, t);
    const auto labels = cyclic_factor_coordinates(c3, f);
    REQUIRE(labels.size() == 1);
    CHECK(c3.vertices()[f.vertices[0]].coords[c3.label_index(*labels.begin())] == 4);
  }
  const auto a3 = build_polytope(G("123"));
  CHECK_THROWS_AS(cyclic_factor_coordinates(a3, face_of_tubing(a3, tubing_of({"123"}))), Error);

  const auto c4 = build_polytope(G("(1234)"));
  const auto f = face_of_tubing(c4, tubing_of({"2", "123", "1234"}));
  CHECK(f.dim == 1);
  CHECK(face_factorization(c4, f) == FaceFactorization{1, {1, 2}});
  CHECK(face_factorization(a3, face_of_tubing(a3, tubing_of({"123"}))) == FaceFactorization{std::nullopt, {3}});
}

TEST_CASE("property: cyclic coordinates are the zero block") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto g = standard_cycle(n);
    const auto p = build_polytope(g);
    for (const auto& t : enumerate_tubings(g)) {
      const auto f = face_of_tubing(p, t);
      const auto d = decompose_tubing(g, t);
      CHECK(cyclic_factor_coordinates(p, f) == *d.zero_block);
      const auto fac = face_factorization(p, f);
      REQUIRE(fac.cyclic.has_value());
      std::size_t dims = *fac.cyclic - 1, total = *fac.cyclic;
      for (auto m : fac.paths) {
        dims += m - 1;
        total += m;
      }
      CHECK(dims == f.dim);
      CHECK(total == n);
    }
  }
}
