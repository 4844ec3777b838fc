#pragma once

#include <string>
#include <vector>

#include "facenum/complex.hpp"
#include "facenum/field.hpp"

namespace facenum {

struct Witness {
  std::vector<Label> face;  // labels of Δ; empty for global findings
  int degree = 0;           // offending homology degree of the link
  std::string reason;

  bool operator==(const Witness&) const = default;
};

struct ManifoldReport {
  FieldSpec field;
  bool is_pure = false;
  // Face-wise predicate: every nonempty face link has vanishing reduced
  // homology below its top degree and top Betti number at most 1.
  bool is_manifold = false;
  SimplicialComplex boundary;  // {∅} when closed
  // True when ∂Δ is empty or a pure (d-2)-dimensional homology manifold
  // without boundary.
  bool boundary_is_closed_manifold = false;
  bool connected = false;
  // Only meaningful for connected manifolds; false otherwise.
  bool orientable = false;
  std::vector<Witness> witnesses;

  bool has_boundary() const noexcept { return boundary.has_vertices(); }
  // Everything the face-number results assume.
  bool usable() const noexcept { return is_pure && is_manifold && boundary_is_closed_manifold; }
};

ManifoldReport is_homology_manifold(const SimplicialComplex& complex, const FieldSpec& field);

// Throws NotAManifold.
SimplicialComplex boundary_complex(const SimplicialComplex& complex, const FieldSpec& field);

// Closed: β̃_{d-1} = β̃_0 + 1. With boundary: β_{d-1}(Δ, ∂Δ) = 1.
// Throws Disconnected or NotAManifold.
bool is_orientable(const SimplicialComplex& complex, const FieldSpec& field);

}  // namespace facenum
