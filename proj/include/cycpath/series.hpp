#pragma once

// Exact truncated power series, the group G of pairs (g, h) under
// (g1, h1)(g2, h2) = (g1∘g2, h1∘g2 + h2), and characters of C.

#include <cstddef>
#include <string>
#include <vector>

#include "cycpath/graph.hpp"
#include "cycpath/rational.hpp"

namespace cycpath {

/// Coefficients of x^1..x^N; the constant term is always 0.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order);
  /// coeffs[k-1] is the coefficient of x^k; the order is coeffs.size().
  static TruncatedSeries from_coefficients(std::vector<Rational> coeffs);

  static TruncatedSeries identity(std::size_t order);            // x
  static TruncatedSeries geometric(std::size_t order);           // x/(1-x)
  static TruncatedSeries alternating(std::size_t order);         // x/(1+x)
  static TruncatedSeries exp_minus_one(std::size_t order);       // e^x - 1
  static TruncatedSeries log_one_plus(std::size_t order);        // ln(1+x)
  static TruncatedSeries neg_log_one_minus(std::size_t order);   // -ln(1-x)

  std::size_t order() const noexcept { return coeffs_.size(); }
  /// Coefficient of x^k; 0 for k = 0 or k > order.
  Rational operator[](std::size_t k) const;
  void set(std::size_t k, Rational value);
  bool is_monic() const { return order() == 0 || coeffs_[0] == 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a);
  /// Product truncated at the common order; throws OrderMismatch.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// (g, h) with g = x + sum a_n x^{n+1} (a_1..a_{N-1}) and h = sum c_n x^n / n
/// (c_1..c_N).
class TruncatedPair {
 public:
  explicit TruncatedPair(std::size_t order);
  /// Throws OrderMismatch unless a has N-1 entries and c has N, N = c.size().
  TruncatedPair(std::vector<Rational> a, std::vector<Rational> c);
  /// Reads a_n and c_n off g and h; g must be monic. Throws OrderMismatch.
  static TruncatedPair from_series(const TruncatedSeries& g, const TruncatedSeries& h);
  static TruncatedPair unit(std::size_t order) { return TruncatedPair(order); }

  std::size_t order() const noexcept { return c_.size(); }
  const std::vector<Rational>& a() const noexcept { return a_; }
  const std::vector<Rational>& c() const noexcept { return c_; }
  /// a_n for 1 <= n <= N-1, c_n for 1 <= n <= N; throws OrderExceeded.
  const Rational& a(std::size_t n) const;
  const Rational& c(std::size_t n) const;

  TruncatedSeries g() const;
  TruncatedSeries h() const;

  friend bool operator==(const TruncatedPair&, const TruncatedPair&) = default;

 private:
  std::vector<Rational> a_;
  std::vector<Rational> c_;
};

/// Value a_n on p_n and c_n on c_n, extended multiplicatively.
struct Character {
  TruncatedPair pair;
};

/// Sum over multiplicity vectors j with sum j_i = k, sum i j_i = n of
/// k!/prod j_i! prod x_i^{j_i}. xs[i-1] holds x_i; needs n-k+1 entries.
Rational bell_ordinary(std::size_t n, std::size_t k, const std::vector<Rational>& xs);

/// f∘g by Faà di Bruno. g needs a zero constant term only (implicit).
/// Throws OrderMismatch.
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);

/// Compositional inverse of a monic g by solving g(b(x)) = x one
/// coefficient at a time. Throws InvalidArgument unless g is monic.
TruncatedSeries inverse_direct(const TruncatedSeries& g);

TruncatedPair group_mul(const TruncatedPair& p, const TruncatedPair& q);
TruncatedPair group_inv(const TruncatedPair& p);

/// Throws OrderExceeded if a path is longer than N-1 or a cycle than N.
Rational character_eval(const Character& chi, const LabeledGraph& g);
/// sum over S of zeta(g|_S) xi(g/_S). Throws OrderExceeded if the ground
/// set has more than N labels.
Rational convolve(const Character& zeta, const Character& xi, const LabeledGraph& g);

/// a_1 = c_1 and a_2 = c_2 (missing coefficients read as 0).
bool restrict_to_cbar(const TruncatedPair& p);

/// Named series: geom, alt, exp, log, nlog, id, zero.
TruncatedSeries named_series(const std::string& name, std::size_t order);

}  // namespace cycpath
