#pragma once

#include <string>
#include <vector>

#include "facenum/complex.hpp"
#include "facenum/field.hpp"

namespace facenum {

// The full simplex on labels 1..dim+1 and its boundary sphere.
SimplicialComplex simplex(int dim);
SimplicialComplex boundary_simplex(int dim);

// Adds one apex (default: largest label + 1) to every facet.
SimplicialComplex cone(const SimplicialComplex& complex);
SimplicialComplex cone(const SimplicialComplex& complex, Label apex);
// Join with two new points.
SimplicialComplex suspension(const SimplicialComplex& complex);

enum class LabelPolicy {
  Offset,  // shift later operands past the largest label seen so far
  Keep,    // keep labels; overlapping labels throw LabelCollision
};

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b,
                       LabelPolicy policy = LabelPolicy::Offset);
SimplicialComplex disjoint_union(const std::vector<SimplicialComplex>& parts,
                                 LabelPolicy policy = LabelPolicy::Offset);
// Union of facet lists; shared labels are the same vertex.
SimplicialComplex union_by_labels(const SimplicialComplex& a, const SimplicialComplex& b);

// Boundary of the cyclic d-polytope with n vertices (Gale evenness).
// Throws BadParams unless n >= d+1 and d >= 2.
SimplicialComplex cyclic_polytope_boundary(int n, int d);

// Facets {i, ..., i+d-1} mod n. The result is checked over GF(2): a homology
// manifold with h_2 = C(d,2), every vertex on the boundary, and β̃_1(∂) = 1
// (2 when d = 4). Throws BadParams unless d >= 4 and n >= 2d-1, and
// ValidationFailure if a check fails.
SimplicialComplex kuhnel_lassman(int d, int n);

// Glues b onto a by identifying boundary ridge f2 of b with boundary ridge
// f1 of a, position by position. Labels of b are shifted past those of a
// first; f2 is given in b's original labels. The result must be a homology
// manifold over GF(2) whose boundary is a closed manifold.
// Throws NotBoundaryFace or IdentificationCreatesNonManifold.
SimplicialComplex boundary_connected_sum(const SimplicialComplex& a, const SimplicialComplex& b,
                                         const std::vector<Label>& f1,
                                         const std::vector<Label>& f2);
// b copies of `piece` glued one after another. Throws BadParams for b < 1.
SimplicialComplex iterated_boundary_connected_sum(const SimplicialComplex& piece, int b);

// Replaces a facet by the cone over its boundary with a new vertex
// (largest label + 1). Throws FaceNotFacet.
SimplicialComplex stellar_subdivide_facet(const SimplicialComplex& complex,
                                          const std::vector<Label>& facet);

// m stellar subdivisions, the first on the first facet and each later one on
// the first facet containing the previous new vertex.
SimplicialComplex stacked_subdivisions(const SimplicialComplex& complex, int m);

struct InteriorFacet {
  SimplicialComplex complex;
  std::vector<Label> facet;  // a facet whose vertices are all new
};
// d successive stellar subdivisions, each time replacing the smallest old
// vertex of the current facet by the newest vertex.
InteriorFacet make_interior_facet(const SimplicialComplex& complex,
                                  const std::vector<Label>& facet);

// Deletes one facet, keeping all its proper faces. Throws FaceNotFacet.
SimplicialComplex remove_facet(const SimplicialComplex& complex, const std::vector<Label>& facet);

struct ConedBoundary {
  SimplicialComplex gamma;  // Δ with every boundary component coned off
  SimplicialComplex sigma;  // union of the cones
  std::vector<SimplicialComplex> components;
  std::vector<Label> apexes;
};
// Throws EmptyBoundary or NotAManifold.
ConedBoundary cone_off_boundary(const SimplicialComplex& complex, const FieldSpec& field);

namespace fixtures {

SimplicialComplex rp2_6();
SimplicialComplex torus_7();
SimplicialComplex cp2_9();
SimplicialComplex mobius_5();
SimplicialComplex octahedron();
SimplicialComplex icosahedron();
// Stacked 3-sphere: two stellar subdivisions of ∂Δ^4.
SimplicialComplex stacked_sphere_7();

std::vector<std::string> names();
// Throws BadParams for unknown names.
SimplicialComplex by_name(const std::string& name);

}  // namespace fixtures

}  // namespace facenum
