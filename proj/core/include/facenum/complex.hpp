#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "facenum/sequence.hpp"

namespace facenum {

// Dense vertex id in 1..n.
using Vertex = int;
// Caller-facing vertex name; any positive integer.
using Label = std::int64_t;
// Strictly increasing dense ids; the empty face is the empty vector.
using Face = std::vector<Vertex>;
using LabeledFacets = std::vector<std::vector<Label>>;

// A finite simplicial complex stored by its facets in canonical form:
// facets are inclusion-maximal, sorted lexicographically, and use dense ids
// 1..n assigned in increasing label order. The full face list is
// materialized at construction; instances are immutable afterwards.
//
// The default-constructed complex is {∅}: no vertices, dimension -1.
class SimplicialComplex {
 public:
  SimplicialComplex();

  // Throws EmptyInput, InvalidLabel (label <= 0) or DuplicateVertexInFacet.
  static SimplicialComplex from_facets(const LabeledFacets& raw);
  // Complex generated by arbitrary faces; empty faces are allowed and the
  // result is {∅} when no face has a vertex. Still throws on bad labels.
  static SimplicialComplex generated_by(const LabeledFacets& faces);

  int num_vertices() const noexcept { return static_cast<int>(labels_.size()); }
  // d in the face-number conventions: dimension + 1.
  int rank() const noexcept { return static_cast<int>(faces_by_dim_.size()) - 1; }
  int dim() const noexcept { return rank() - 1; }
  bool has_vertices() const noexcept { return !labels_.empty(); }

  const std::vector<Face>& facets() const noexcept { return facets_; }
  const std::vector<Label>& labels() const noexcept { return labels_; }
  Label label(Vertex v) const;
  std::optional<Vertex> find_vertex(Label label) const;
  std::vector<Label> to_labels(const Face& face) const;
  // Throws VertexNotInComplex for unknown labels.
  Face to_face(std::span<const Label> labels) const;
  LabeledFacets labeled_facets() const;

  // Faces of dimension k, -1 <= k <= dim(), in lexicographic order.
  const std::vector<Face>& faces(int k) const;
  std::optional<std::size_t> face_index(const Face& face) const;
  bool contains(const Face& face) const { return face_index(face).has_value(); }

  // f_{-1..d-1}.
  IntSeq f_vector() const;
  bool is_pure() const;
  std::int64_t reduced_euler() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.labels_ == b.labels_ && a.facets_ == b.facets_;
  }

 private:
  static SimplicialComplex canonical(const LabeledFacets& raw, bool allow_empty_face);

  std::vector<Face> facets_;
  std::vector<Label> labels_;
  std::vector<std::vector<Face>> faces_by_dim_;  // index k holds faces of dim k-1
};

// lk(F) = {G : G ∩ F = ∅, G ∪ F ∈ Δ}, keeping Δ's labels.
SimplicialComplex link(const SimplicialComplex& complex, const Face& face);
SimplicialComplex closed_star(const SimplicialComplex& complex, Vertex v);
SimplicialComplex skeleton(const SimplicialComplex& complex, int k);

// Subcomplex generated by faces of `complex` (dense ids); {∅} for none.
SimplicialComplex generated_subcomplex(const SimplicialComplex& complex,
                                       const std::vector<Face>& faces);

// Vertex sets of the connected components of the 1-skeleton, each sorted,
// ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const SimplicialComplex& complex);
std::vector<SimplicialComplex> component_complexes(const SimplicialComplex& complex);
bool is_connected(const SimplicialComplex& complex);

}  // namespace facenum
