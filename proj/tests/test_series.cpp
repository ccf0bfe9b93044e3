#include <doctest.h>

#include "cycpath/errors.hpp"
#include "cycpath/hopf.hpp"
#include "cycpath/series.hpp"
#include "oracles.hpp"

using namespace cycpath;

namespace {

std::vector<Rational> ones(std::size_t k) { return std::vector<Rational>(k, Rational(1)); }

TruncatedSeries S(std::vector<long> coeffs) {
  std::vector<Rational> qs(coeffs.begin(), coeffs.end());
  return TruncatedSeries::from_coefficients(std::move(qs));
}

// h with coefficients c_n / n.
Rational h_coefficient(const TruncatedPair& p, std::size_t n) { return p.h()[n]; }

}  // namespace

TEST_CASE("ordinary Bell polynomials") {
  CHECK(bell_ordinary(3, 2, ones(2)) == 2);
  for (std::size_t n = 1; n <= 8; ++n) CHECK(bell_ordinary(n, n, ones(1)) == 1);
  CHECK(bell_ordinary(4, 2, ones(3)) == 3);
  const std::vector<Rational> xs{Rational(2), Rational(3), Rational(5)};
  CHECK(bell_ordinary(4, 2, xs) == 2 * 2 * 5 + 3 * 3);
}

TEST_CASE("series basics") {
  const auto g = TruncatedSeries::geometric(5);
  CHECK(g == S({1, 1, 1, 1, 1}));
  CHECK(TruncatedSeries::alternating(4) == S({1, -1, 1, -1}));
  CHECK(TruncatedSeries::log_one_plus(3)[3] == Rational(1, 3));
  CHECK(TruncatedSeries::exp_minus_one(4)[4] == Rational(1, 24));
  CHECK(g[0] == 0);
  CHECK(g[9] == 0);
  auto s = g;
  CHECK_THROWS_AS(s.set(6, 1), Error);
  CHECK_THROWS_AS(g * TruncatedSeries(4), Error);
  CHECK(g * g == S({0, 1, 2, 3, 4}));
}

TEST_CASE("composition examples") {
  for (std::size_t n = 1; n <= 10; ++n) {
    CHECK(compose(TruncatedSeries::geometric(n), TruncatedSeries::alternating(n)) == TruncatedSeries::identity(n));
    CHECK(compose(TruncatedSeries::exp_minus_one(n), TruncatedSeries::log_one_plus(n)) == TruncatedSeries::identity(n));
  }
  oracle::Rng rng(31);
  const auto f = rng.series(7, false);
  CHECK(compose(f, TruncatedSeries::identity(7)) == f);
}

TEST_CASE("property: composition against Horner") {
  oracle::Rng rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 12));
    const auto f = rng.series(n, false);
    const auto g = rng.series(n, rng.integer(0, 1) == 1);
    CHECK(compose(f, g) == oracle::horner(f, g));
  }
}

TEST_CASE("compositional inverse") {
  const auto b = inverse_direct(TruncatedSeries::geometric(9));
  for (std::size_t n = 1; n <= 9; ++n) CHECK(b[n] == (n % 2 ? 1 : -1));
  CHECK(inverse_direct(TruncatedSeries::identity(6)) == TruncatedSeries::identity(6));
  CHECK(inverse_direct(TruncatedSeries::exp_minus_one(8)) == TruncatedSeries::log_one_plus(8));
  CHECK_THROWS_AS(inverse_direct(S({2, 1})), Error);

  oracle::Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = rng.series(static_cast<std::size_t>(rng.integer(1, 9)), true);
    const auto b = inverse_direct(g);
    CHECK(compose(g, b) == TruncatedSeries::identity(g.order()));
    CHECK(compose(b, g) == TruncatedSeries::identity(g.order()));
  }
}

TEST_CASE("pairs") {
  const TruncatedPair p({Rational(1), Rational(2)}, {Rational(3), Rational(4), Rational(5)});
  CHECK(p.order() == 3);
  CHECK(p.g() == S({1, 1, 2}));
  CHECK(p.h()[2] == 2);
  CHECK(p.h()[3] == Rational(5, 3));
  CHECK(TruncatedPair::from_series(p.g(), p.h()) == p);
  CHECK_THROWS_AS(TruncatedPair({Rational(1)}, {Rational(1)}), Error);
  CHECK_THROWS_AS(p.a(3), Error);
  CHECK_THROWS_AS(p.c(4), Error);
  CHECK_THROWS_AS(TruncatedPair::from_series(S({2, 0}), S({0, 0})), Error);
}

TEST_CASE("group law examples") {
  oracle::Rng rng(43);
  const auto p = rng.pair(6);
  CHECK(group_mul(p, TruncatedPair::unit(6)) == p);
  CHECK(group_mul(TruncatedPair::unit(6), p) == p);
  CHECK(group_mul(p, group_inv(p)) == TruncatedPair::unit(6));

  // ((x + x^2, x), (x, x)) at order 3
  const auto q = TruncatedPair::from_series(S({1, 1, 0}), S({1, 0, 0}));
  const auto r = TruncatedPair::from_series(S({1, 0, 0}), S({1, 0, 0}));
  const auto m = group_mul(q, r);
  CHECK(m.g() == S({1, 1, 0}));
  CHECK(m.h() == S({2, 0, 0}));

  const auto geom = TruncatedSeries::geometric(8);
  const auto inv = group_inv(TruncatedPair::from_series(geom, TruncatedSeries::neg_log_one_minus(8)));
  CHECK(inv == TruncatedPair::from_series(TruncatedSeries::alternating(8), -TruncatedSeries::log_one_plus(8)));
  const auto inv2 = group_inv(TruncatedPair::from_series(geom, geom));
  CHECK(inv2 == TruncatedPair::from_series(TruncatedSeries::alternating(8), -TruncatedSeries::identity(8)));
  CHECK(group_inv(TruncatedPair::unit(5)) == TruncatedPair::unit(5));
}

TEST_CASE("property: group axioms") {
  oracle::Rng rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 8));
    const auto p = rng.pair(n), q = rng.pair(n), r = rng.pair(n);
    CHECK(group_mul(group_mul(p, q), r) == group_mul(p, group_mul(q, r)));
    CHECK(group_mul(group_inv(p), p) == TruncatedPair::unit(n));
    CHECK(group_inv(group_mul(p, q)) == group_mul(group_inv(q), group_inv(p)));
  }
}

TEST_CASE("characters") {
  const Character all_ones{TruncatedPair(ones(4), ones(5))};
  CHECK(character_eval(all_ones, parse_graph("12|(3)")) == 1);
  std::vector<Rational> c{Rational(1), Rational(2), Rational(3)};
  const Character chi{TruncatedPair(ones(2), c)};
  CHECK(character_eval(chi, parse_graph("(123)")) == 3);
  CHECK(character_eval(chi, LabeledGraph{}) == 1);
  CHECK(character_eval(chi, parse_graph("1|(12,13)")) == 2);
  CHECK_THROWS_AS(character_eval(chi, parse_graph("1234")), Error);
  CHECK_THROWS_AS(character_eval(chi, parse_graph("(1234)")), Error);

  const Character unit{TruncatedPair::unit(5)};
  CHECK(character_eval(unit, parse_graph("1")) == 0);
  CHECK(character_eval(unit, parse_graph("12")) == 0);
  CHECK(character_eval(unit, parse_graph("(1)")) == 0);
}

TEST_CASE("property: convolution matches the group law") {
  oracle::Rng rng(53);
  for (int trial = 0; trial < 5; ++trial) {
    const auto p = rng.pair(7), q = rng.pair(7);
    const Character z{p}, x{q};
    const auto m = group_mul(p, q);
    for (std::size_t n = 1; n <= 7; ++n) {
      if (n <= 6)
        CHECK(convolve(Character{TruncatedPair::unit(7)}, x, standard_path(n)) == character_eval(x, standard_path(n)));
      CHECK(convolve(Character{TruncatedPair::unit(7)}, x, standard_cycle(n)) == character_eval(x, standard_cycle(n)));
      CHECK(convolve(z, x, standard_cycle(n)) == Rational(static_cast<long>(n)) * h_coefficient(m, n));
      if (n <= 6) CHECK(convolve(z, x, standard_path(n)) == m.g()[n + 1]);
    }
    const auto inv = group_inv(p);
    for (std::size_t n = 1; n <= 6; ++n) {
      Rational a = 0, c = 0;
      const auto sp = antipode_mm(standard_path(n));
      const auto sc = antipode_mm(standard_cycle(n));
      for (const auto& [g, k] : sp.terms()) a += k * character_eval(z, g);
      for (const auto& [g, k] : sc.terms()) c += k * character_eval(z, g);
      CHECK(a == inv.a(n));
      CHECK(c == inv.c(n));
    }
  }
  CHECK_THROWS_AS(convolve(Character{TruncatedPair::unit(3)}, Character{TruncatedPair::unit(3)}, standard_path(4)), Error);
}

TEST_CASE("restriction to the subgroup") {
  const auto geom = TruncatedSeries::geometric(5);
  const auto p = TruncatedPair::from_series(geom, geom);
  CHECK(restrict_to_cbar(p) == (p.a(1) == p.c(1) && p.a(2) == p.c(2)));
  CHECK(restrict_to_cbar(TruncatedPair::unit(4)));
  CHECK_FALSE(restrict_to_cbar(TruncatedPair::from_series(S({1, 1, 0}), S({0, 0, 0}))));
}

TEST_CASE("named series") {
  CHECK(named_series("geom", 4) == TruncatedSeries::geometric(4));
  CHECK(named_series("nlog", 4) == TruncatedSeries::neg_log_one_minus(4));
  CHECK(named_series("zero", 3) == TruncatedSeries(3));
  CHECK_THROWS_AS(named_series("sin", 3), Error);
}
