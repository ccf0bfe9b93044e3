#pragma once

// Graph associahedra of graphs in C as Minkowski sums of the simplices of
// their tubes. Faces are kept as vertex subsets together with their tubing;
// dimensions come from tubing sizes, never from rank computations.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cycpath/graph.hpp"
#include "cycpath/rational.hpp"
#include "cycpath/tubing.hpp"

namespace cycpath {

using RationalPoint = std::map<Label, Rational>;

struct PolytopeVertex {
  std::vector<std::int64_t> coords;  // indexed like PolytopeModel::labels()
  Tubing tubing;                     // the maximal tubing it corresponds to
};

class PolytopeModel {
 public:
  const LabeledGraph& host() const noexcept { return host_; }
  const std::vector<Label>& labels() const noexcept { return labels_; }
  const std::vector<PolytopeVertex>& vertices() const noexcept { return vertices_; }
  std::size_t dimension() const noexcept { return labels_.size() - host_.component_count(); }
  std::size_t tube_count() const noexcept { return tube_count_; }
  std::size_t label_index(const Label& l) const;
  RationalPoint point(std::size_t vertex) const;

 private:
  friend PolytopeModel build_polytope(const LabeledGraph& g);

  LabeledGraph host_;
  std::vector<Label> labels_;
  std::vector<PolytopeVertex> vertices_;
  std::size_t tube_count_ = 0;
};

/// One vertex per maximal tubing t: each tube S contributes e_i for the i
/// in S lying in the fewest tubes of t (ties to the smallest label). Every
/// vertex is then checked to be the unique maximizer of its own functional
/// -sum n_i x_i among all vertices; throws VerificationFailed otherwise.
PolytopeModel build_polytope(const LabeledGraph& g);

struct FaceModel {
  Tubing tubing;
  std::vector<std::size_t> vertices;  // indices into PolytopeModel::vertices()
  std::size_t dim = 0;
};

/// Vertices maximizing -sum n_i x_i, n_i the number of tubes of t holding i.
/// Throws NotATubing.
FaceModel face_of_tubing(const PolytopeModel& p, const Tubing& t);

/// Face counts by dimension, from dimension 0 upward.
std::vector<std::size_t> f_vector(const PolytopeModel& p);

/// Labels whose largest coordinate over the face equals C(n,2) + 1 on the
/// cyclohedron of an n-cycle. Throws HostNotCycle.
LabelSet cyclic_factor_coordinates(const PolytopeModel& p, const FaceModel& f);

struct FaceFactorization {
  std::optional<std::size_t> cyclic;   // size of the cyclohedron factor
  std::vector<std::size_t> paths;      // associahedron factor sizes, sorted

  friend bool operator==(const FaceFactorization&, const FaceFactorization&) = default;
};

/// For a path host, the block sizes of the face's tubing. For a cycle host,
/// the cyclic factor is located through cyclic_factor_coordinates and must
/// be the zero block of the tubing (VerificationFailed otherwise).
FaceFactorization face_factorization(const PolytopeModel& p, const FaceModel& f);

}  // namespace cycpath
