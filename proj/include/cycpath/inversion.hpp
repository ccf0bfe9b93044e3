#pragma once

// Compositional inversion in G read off faces of associahedra and
// cyclohedra, or off (pointed) noncrossing partitions.
//
// Each route reduces the n-th coefficient to a signed integer combination of
// monomials c_{f0} a_{f1} ... a_{fk}; the tables below hold those
// combinations and are computed once per n.

#include <cstddef>
#include <map>
#include <vector>

#include "cycpath/rational.hpp"
#include "cycpath/series.hpp"

namespace cycpath {

struct Monomial {
  std::size_t cyclic = 0;             // f0, or 0 for a pure path monomial
  std::vector<std::size_t> paths;     // f1..fk, sorted

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

using MonomialTable = std::map<Monomial, Integer>;

/// sum over faces F of a_{p_n} of (-1)^{n - dim F} a_F.
const MonomialTable& assoc_face_table(std::size_t n);
/// sum over NC(p_n) of (-1)^{|pi|} C_(closure:pi) a_pi.
const MonomialTable& nc_table(std::size_t n);
/// sum over faces F of a_{c_n} of (-1)^{n - dim F} c_F.
const MonomialTable& cyclo_face_table(std::size_t n);
/// sum over PNC(c_n) of (-1)^{1+|pi_+|} C_(closure_+:pi_+) c_{|pi_0|} a_{pi_+}.
const MonomialTable& pnc_table(std::size_t n);

/// Value of the table at a character; throws OrderExceeded if a needed
/// coefficient lies beyond the pair's order.
Rational evaluate(const MonomialTable& table, const TruncatedPair& p);

TruncatedSeries invert_via_assoc_faces(const TruncatedSeries& g);
TruncatedSeries invert_via_nc(const TruncatedSeries& g);
TruncatedPair invert_pair_via_cyclo_faces(const TruncatedPair& p);
TruncatedPair invert_pair_via_pnc(const TruncatedPair& p);

}  // namespace cycpath
