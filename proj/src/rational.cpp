#include "cycpath/rational.hpp"

#include <cctype>

#include "cycpath/errors.hpp"

namespace cycpath {

namespace {

bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

Integer to_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto first = text.find_first_not_of(" \t");
  auto last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos)
    throw Error(ErrorCode::ParseError, "empty rational token");
  text = text.substr(first, last - first + 1);

  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den) || den.front() == '-' ||
      den.front() == '+')
    throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
  Integer d = to_integer(den);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational q(to_integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str(10);
}

std::string to_string(const Integer& z) { return z.get_str(10); }

Integer factorial(std::size_t n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(std::size_t n, std::size_t k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer catalan(std::size_t m) {
  // C_m = binom(2m, m) / (m + 1)
  Integer r = binomial(2 * m, m);
  r /= static_cast<unsigned long>(m + 1);
  return r;
}

}  // namespace cycpath
