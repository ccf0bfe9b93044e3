#include "cycpath/series.hpp"

#include <cstdint>

#include "cycpath/errors.hpp"
#include "cycpath/hopf.hpp"

namespace cycpath {

namespace {

void require_same_order(std::size_t a, std::size_t b) {
  if (a != b)
    throw Error(ErrorCode::OrderMismatch, "orders " + std::to_string(a) + " and " + std::to_string(b) + " differ");
}

template <class F>
TruncatedSeries tabulate(std::size_t order, F coeff) {
  TruncatedSeries s(order);
  for (std::size_t k = 1; k <= order; ++k) s.set(k, coeff(k));
  return s;
}

Rational sign(std::size_t k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order, Rational(0)) {}

TruncatedSeries TruncatedSeries::from_coefficients(std::vector<Rational> coeffs) {
  TruncatedSeries s(0);
  s.coeffs_ = std::move(coeffs);
  return s;
}

TruncatedSeries TruncatedSeries::identity(std::size_t order) {
  return tabulate(order, [](std::size_t k) { return Rational(k == 1 ? 1 : 0); });
}

TruncatedSeries TruncatedSeries::geometric(std::size_t order) {
  return tabulate(order, [](std::size_t) { return Rational(1); });
}

TruncatedSeries TruncatedSeries::alternating(std::size_t order) {
  return tabulate(order, [](std::size_t k) { return sign(k + 1); });
}

TruncatedSeries TruncatedSeries::exp_minus_one(std::size_t order) {
  return tabulate(order, [](std::size_t k) { return Rational(Integer(1), factorial(k)); });
}

TruncatedSeries TruncatedSeries::log_one_plus(std::size_t order) {
  return tabulate(order, [](std::size_t k) -> Rational { return sign(k + 1) / Rational(static_cast<long>(k)); });
}

TruncatedSeries TruncatedSeries::neg_log_one_minus(std::size_t order) {
  return tabulate(order, [](std::size_t k) { return Rational(1, static_cast<unsigned long>(k)); });
}

Rational TruncatedSeries::operator[](std::size_t k) const {
  if (k == 0 || k > coeffs_.size()) return 0;
  return coeffs_[k - 1];
}

void TruncatedSeries::set(std::size_t k, Rational value) {
  if (k == 0 || k > coeffs_.size())
    throw Error(ErrorCode::OrderExceeded, "coefficient " + std::to_string(k) + " outside order " +
                                              std::to_string(coeffs_.size()));
  value.canonicalize();
  coeffs_[k - 1] = std::move(value);
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a.order(), b.order());
  TruncatedSeries s(a.order());
  for (std::size_t k = 1; k <= a.order(); ++k) s.set(k, a[k] + b[k]);
  return s;
}

TruncatedSeries operator-(const TruncatedSeries& a) {
  TruncatedSeries s(a.order());
  for (std::size_t k = 1; k <= a.order(); ++k) s.set(k, -a[k]);
  return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a.order(), b.order());
  TruncatedSeries s(a.order());
  for (std::size_t n = 2; n <= a.order(); ++n) {
    Rational v = 0;
    for (std::size_t i = 1; i < n; ++i) v += a[i] * b[n - i];
    s.set(n, v);
  }
  return s;
}

TruncatedPair::TruncatedPair(std::size_t order)
    : a_(order == 0 ? 0 : order - 1, Rational(0)), c_(order, Rational(0)) {}

TruncatedPair::TruncatedPair(std::vector<Rational> a, std::vector<Rational> c)
    : a_(std::move(a)), c_(std::move(c)) {
  if (c_.empty() || a_.size() + 1 != c_.size())
    throw Error(ErrorCode::OrderMismatch, "need N-1 a-coefficients and N c-coefficients, got " +
                                              std::to_string(a_.size()) + " and " + std::to_string(c_.size()));
  for (auto& q : a_) q.canonicalize();
  for (auto& q : c_) q.canonicalize();
}

TruncatedPair TruncatedPair::from_series(const TruncatedSeries& g, const TruncatedSeries& h) {
  require_same_order(g.order(), h.order());
  if (!g.is_monic()) throw Error(ErrorCode::InvalidArgument, "g must be monic");
  std::vector<Rational> a, c;
  for (std::size_t n = 1; n < g.order(); ++n) a.push_back(g[n + 1]);
  for (std::size_t n = 1; n <= h.order(); ++n) c.push_back(h[n] * static_cast<unsigned long>(n));
  return TruncatedPair(std::move(a), std::move(c));
}

const Rational& TruncatedPair::a(std::size_t n) const {
  if (n == 0 || n > a_.size())
    throw Error(ErrorCode::OrderExceeded, "a_" + std::to_string(n) + " beyond order " + std::to_string(order()));
  return a_[n - 1];
}

const Rational& TruncatedPair::c(std::size_t n) const {
  if (n == 0 || n > c_.size())
    throw Error(ErrorCode::OrderExceeded, "c_" + std::to_string(n) + " beyond order " + std::to_string(order()));
  return c_[n - 1];
}

TruncatedSeries TruncatedPair::g() const {
  TruncatedSeries s(order());
  s.set(1, 1);
  for (std::size_t n = 1; n <= a_.size(); ++n) s.set(n + 1, a_[n - 1]);
  return s;
}

TruncatedSeries TruncatedPair::h() const {
  TruncatedSeries s(order());
  for (std::size_t n = 1; n <= c_.size(); ++n) s.set(n, c_[n - 1] / Rational(static_cast<long>(n)));
  return s;
}

namespace {

// Multiplicity vectors j (j[i-1] parts of size i) with sum j = k and
// sum i*j_i = n, parts bounded by `largest`.
void bell_terms(std::size_t n, std::size_t k, std::size_t largest, std::vector<std::size_t>& j,
                const std::vector<Rational>& xs, Rational weight, Rational& acc) {
  if (k == 0) {
    if (n == 0) acc += weight;
    return;
  }
  if (largest == 0) return;
  // parts of size `largest` first, then smaller ones
  for (std::size_t m = 0; m * largest <= n && m <= k; ++m) {
    Rational w = weight;
    for (std::size_t r = 0; r < m; ++r) w *= xs[largest - 1];
    w /= Rational(factorial(m));
    j[largest - 1] = m;
    if (largest == 1) {
      if (m == k && m == n) acc += w;
    } else {
      bell_terms(n - m * largest, k - m, largest - 1, j, xs, w, acc);
    }
  }
  j[largest - 1] = 0;
}

}  // namespace

Rational bell_ordinary(std::size_t n, std::size_t k, const std::vector<Rational>& xs) {
  if (k < 1 || k > n) throw Error(ErrorCode::InvalidArgument, "need 1 <= k <= n");
  const std::size_t largest = n - k + 1;
  if (xs.size() < largest)
    throw Error(ErrorCode::InvalidArgument, "need " + std::to_string(largest) + " arguments");
  std::vector<std::size_t> j(largest, 0);
  Rational acc = 0;
  bell_terms(n, k, largest, j, xs, Rational(factorial(k)), acc);
  return acc;
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_order(f.order(), g.order());
  TruncatedSeries out(f.order());
  const std::vector<Rational>& xs = g.coefficients();
  for (std::size_t n = 1; n <= f.order(); ++n) {
    Rational v = 0;
    for (std::size_t k = 1; k <= n; ++k)
      if (f[k] != 0) v += f[k] * bell_ordinary(n, k, xs);
    out.set(n, v);
  }
  return out;
}

TruncatedSeries inverse_direct(const TruncatedSeries& g) {
  const std::size_t order = g.order();
  if (order == 0) return g;
  if (!g.is_monic()) throw Error(ErrorCode::InvalidArgument, "g must be monic");
  TruncatedSeries b = TruncatedSeries::identity(order);
  for (std::size_t n = 2; n <= order; ++n) {
    // [x^n] g(b) with b_n still 0; the linear term of g contributes b_n.
    Rational v = 0;
    TruncatedSeries power = b;
    for (std::size_t k = 2; k <= n; ++k) {
      power = power * b;
      v += g[k] * power[n];
    }
    b.set(n, -v);
  }
  return b;
}

TruncatedPair group_mul(const TruncatedPair& p, const TruncatedPair& q) {
  require_same_order(p.order(), q.order());
  const TruncatedSeries g2 = q.g();
  return TruncatedPair::from_series(compose(p.g(), g2), compose(p.h(), g2) + q.h());
}

TruncatedPair group_inv(const TruncatedPair& p) {
  const TruncatedSeries ginv = inverse_direct(p.g());
  return TruncatedPair::from_series(ginv, -compose(p.h(), ginv));
}

Rational character_eval(const Character& chi, const LabeledGraph& g) {
  Rational v = 1;
  for (const auto& comp : g.components())
    v *= comp.is_path() ? chi.pair.a(comp.size()) : chi.pair.c(comp.size());
  return v;
}

Rational convolve(const Character& zeta, const Character& xi, const LabeledGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > zeta.pair.order() || n > xi.pair.order())
    throw Error(ErrorCode::OrderExceeded, "graph on " + std::to_string(n) + " labels exceeds the order");
  const LabelSet ground = g.ground_set();
  const std::vector<Label> labels(ground.begin(), ground.end());
  Rational total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    LabelSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.insert(labels[i]);
    const CoproductTerm term = coproduct(g, s);
    total += character_eval(zeta, term.restriction) * character_eval(xi, term.contraction);
  }
  return total;
}

bool restrict_to_cbar(const TruncatedPair& p) {
  auto a = [&](std::size_t n) { return n <= p.a().size() ? p.a()[n - 1] : Rational(0); };
  auto c = [&](std::size_t n) { return n <= p.c().size() ? p.c()[n - 1] : Rational(0); };
  return a(1) == c(1) && a(2) == c(2);
}

TruncatedSeries named_series(const std::string& name, std::size_t order) {
  if (name == "geom") return TruncatedSeries::geometric(order);
  if (name == "alt") return TruncatedSeries::alternating(order);
  if (name == "exp") return TruncatedSeries::exp_minus_one(order);
  if (name == "log") return TruncatedSeries::log_one_plus(order);
  if (name == "nlog") return TruncatedSeries::neg_log_one_minus(order);
  if (name == "id") return TruncatedSeries::identity(order);
  if (name == "zero") return TruncatedSeries(order);
  throw Error(ErrorCode::InvalidArgument, "unknown series '" + name + "'");
}

}  // namespace cycpath
