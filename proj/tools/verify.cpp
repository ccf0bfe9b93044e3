#include "verify.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <random>

#include "cycpath/counting.hpp"
#include "cycpath/errors.hpp"
#include "cycpath/hopf.hpp"
#include "cycpath/noncrossing.hpp"
#include "cycpath/polytope.hpp"
#include "cycpath/series.hpp"
#include "cycpath/tubing.hpp"

namespace cycpath::cli {

namespace {

using Row = VerifyRow;

Row compare(std::size_t n, const Rational& value, const Rational& expected) {
  return {n, to_string(value), to_string(expected), value == expected};
}

Row tally(std::size_t n, std::size_t agree, std::size_t total) {
  return {n, std::to_string(agree), std::to_string(total), agree == total};
}

Rational euler(const LabeledGraph& g) {
  const auto f = f_vector(build_polytope(g));
  Rational sum = 0;
  for (std::size_t d = 0; d < f.size(); ++d) sum += (d % 2 == 0 ? 1 : -1) * static_cast<long>(f[d]);
  return sum;
}

Rational indicator(std::size_t n) { return n == 1 ? 1 : 0; }

Rational pnc_pointed_sum(std::size_t n) {
  Rational sum = 0;
  for (const auto& pi : enumerate_pnc(standard_cycle(n))) {
    Rational term(catalan_coefficient(pi, adjacent_closure_pointed(pi)).value);
    term *= static_cast<unsigned long>(pi.zero_block.size());
    sum += pi.nonzero_blocks.size() % 2 == 0 ? term : Rational(-term);
  }
  return sum;
}

Rational pnc_factorial_sum(std::size_t n) {
  Rational sum = 0;
  for (const auto& pi : enumerate_pnc(standard_cycle(n))) {
    Integer den = factorial(pi.zero_block.size() - 1);
    for (const auto& b : pi.nonzero_blocks) den *= factorial(b.size() + 1);
    Rational term(catalan_coefficient(pi, adjacent_closure_pointed(pi)).value, den);
    term.canonicalize();
    sum += pi.nonzero_blocks.size() % 2 == 0 ? term : Rational(-term);
  }
  return sum;
}

// Length multisets as sorted length lists.
using Lengths = std::vector<std::size_t>;

void partitions_of(std::size_t n, std::size_t largest, Lengths& cur, std::vector<Lengths>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t l = std::min(n, largest); l >= 1; --l) {
    cur.push_back(l);
    partitions_of(n - l, l, cur, out);
    cur.pop_back();
  }
}

std::vector<Lengths> all_partitions(std::size_t n) {
  std::vector<Lengths> out;
  Lengths cur;
  partitions_of(n, n, cur, out);
  for (auto& p : out) std::sort(p.begin(), p.end());
  return out;
}

// Interval partitions of the n-cycle counted by length multiset: a set of
// cut points determines the intervals between consecutive cuts.
std::map<Lengths, std::size_t> brute_interval_partitions(std::size_t n) {
  std::map<Lengths, std::size_t> counts;
  for (std::uint64_t cuts = 1; cuts < (std::uint64_t{1} << n); ++cuts) {
    std::vector<std::size_t> at;
    for (std::size_t i = 0; i < n; ++i)
      if (cuts >> i & 1) at.push_back(i);
    if (at.size() < 2) continue;
    Lengths lengths;
    for (std::size_t i = 0; i < at.size(); ++i)
      lengths.push_back(i + 1 < at.size() ? at[i + 1] - at[i] : at[0] + n - at[i]);
    std::sort(lengths.begin(), lengths.end());
    ++counts[lengths];
  }
  return counts;
}

// Decompositions S + T counted by (|S|, lengths of maximal runs of T).
std::map<std::pair<std::size_t, Lengths>, std::size_t> brute_decompositions(std::size_t n) {
  std::map<std::pair<std::size_t, Lengths>, std::size_t> counts;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    std::size_t first = 0;
    while (!(s >> first & 1)) ++first;
    Lengths runs;
    std::size_t run = 0;
    for (std::size_t step = 1; step <= n; ++step) {
      if (s >> ((first + step) % n) & 1) {
        if (run > 0) runs.push_back(run);
        run = 0;
      } else {
        ++run;
      }
    }
    std::sort(runs.begin(), runs.end());
    ++counts[{static_cast<std::size_t>(std::popcount(s)), runs}];
  }
  return counts;
}

std::vector<Row> counting_lemma(std::size_t nmax) {
  std::vector<Row> rows;
  for (std::size_t n = 1; n <= nmax; ++n) {
    const auto brute = brute_interval_partitions(n);
    std::size_t agree = 0, total = 0;
    for (const auto& lengths : all_partitions(n)) {
      if (lengths.size() < 2) continue;
      ++total;
      auto it = brute.find(lengths);
      const std::size_t expected = it == brute.end() ? 0 : it->second;
      if (count_interval_partitions(n, LengthMultiset::from_lengths(lengths)) == expected) ++agree;
    }
    rows.push_back(tally(n, agree, total));
  }
  return rows;
}

std::vector<Row> counting_prop(std::size_t nmax) {
  std::vector<Row> rows;
  for (std::size_t n = 1; n <= nmax; ++n) {
    const auto brute = brute_decompositions(n);
    std::size_t agree = 0, total = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      std::vector<Lengths> options = k == n ? std::vector<Lengths>{{}} : all_partitions(n - k);
      for (const auto& lengths : options) {
        if (lengths.size() > k) continue;
        ++total;
        auto it = brute.find({k, lengths});
        const std::size_t expected = it == brute.end() ? 0 : it->second;
        if (count_decompositions(n, k, LengthMultiset::from_lengths(lengths)) == expected) ++agree;
      }
    }
    rows.push_back(tally(n, agree, total));
  }
  return rows;
}

Row antipode_triple(std::size_t n) {
  const auto p = standard_path(n), c = standard_cycle(n);
  const auto sp = antipode_mm(p), sc = antipode_mm(c);
  const bool ok = sp == antipode_tubings(p) && sp == antipode_nc(p) && sc == antipode_tubings(c) &&
                  sc == antipode_pnc(c);
  return {n, ok ? "equal" : "differ", "equal", ok};
}

TruncatedPair random_pair(std::mt19937& rng, std::size_t order) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  auto draw = [&] {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
  };
  std::vector<Rational> a(order - 1), c(order);
  for (auto& q : a) q = draw();
  for (auto& q : c) q = draw();
  return TruncatedPair(std::move(a), std::move(c));
}

Rational eval_lc(const Character& chi, const LinearCombination& x) {
  Rational v = 0;
  for (const auto& [g, q] : x.terms()) v += q * character_eval(chi, g);
  return v;
}

std::vector<Row> chars_iso(std::size_t nmax) {
  constexpr std::size_t pairs = 5;
  const std::size_t order = nmax + 1;
  std::mt19937 rng(20240601);
  std::vector<std::pair<Character, Character>> chars;
  for (std::size_t i = 0; i < pairs; ++i) {
    Character z{random_pair(rng, order)};
    Character x{random_pair(rng, order)};
    chars.emplace_back(z, x);
  }
  std::vector<Row> rows;
  for (std::size_t n = 1; n <= nmax; ++n) {
    std::size_t agree = 0, total = 0;
    for (const auto& [z, x] : chars) {
      const TruncatedPair prod = group_mul(z.pair, x.pair);
      const TruncatedPair inv = group_inv(z.pair);
      total += 4;
      if (convolve(z, x, standard_path(n)) == prod.a(n)) ++agree;
      if (convolve(z, x, standard_cycle(n)) == prod.c(n)) ++agree;
      if (eval_lc(z, antipode_mm(standard_path(n))) == inv.a(n)) ++agree;
      if (eval_lc(z, antipode_mm(standard_cycle(n))) == inv.c(n)) ++agree;
    }
    rows.push_back(tally(n, agree, total));
  }
  return rows;
}

std::vector<Row> per_n(std::size_t nmax, const std::function<Row(std::size_t)>& f) {
  std::vector<Row> rows;
  for (std::size_t n = 1; n <= nmax; ++n) rows.push_back(f(n));
  return rows;
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names{"euler-assoc",    "euler-cyclo",   "pnc-pointed-sum",
                                              "pnc-factorial-sum", "counting-lemma", "counting-prop",
                                              "antipode-triple", "chars-iso"};
  return names;
}

std::vector<VerifyRow> run_identity(const std::string& name, std::size_t nmax) {
  if (name == "euler-assoc")
    return per_n(nmax, [](std::size_t n) { return compare(n, euler(standard_path(n)), 1); });
  if (name == "euler-cyclo")
    return per_n(nmax, [](std::size_t n) { return compare(n, euler(standard_cycle(n)), 1); });
  if (name == "pnc-pointed-sum")
    return per_n(nmax, [](std::size_t n) { return compare(n, pnc_pointed_sum(n), indicator(n)); });
  if (name == "pnc-factorial-sum")
    return per_n(nmax, [](std::size_t n) { return compare(n, pnc_factorial_sum(n), indicator(n)); });
  if (name == "counting-lemma") return counting_lemma(nmax);
  if (name == "counting-prop") return counting_prop(nmax);
  if (name == "antipode-triple") return per_n(nmax, antipode_triple);
  if (name == "chars-iso") return chars_iso(nmax);
  throw Error(ErrorCode::InvalidArgument, "unknown identity '" + name + "'");
}

}  // namespace cycpath::cli
