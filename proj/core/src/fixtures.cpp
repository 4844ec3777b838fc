#include <algorithm>

#include "facenum/errors.hpp"
#include "facenum/generators.hpp"

namespace facenum::fixtures {

namespace {

Label wrap(int v, int n) { return ((v % n) + n) % n + 1; }

}  // namespace

SimplicialComplex rp2_6() {
  return SimplicialComplex::from_facets({{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                         {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
}

SimplicialComplex torus_7() {
  LabeledFacets facets;
  for (int i = 0; i < 7; ++i) {
    facets.push_back({wrap(i, 7), wrap(i + 1, 7), wrap(i + 3, 7)});
    facets.push_back({wrap(i, 7), wrap(i + 2, 7), wrap(i + 3, 7)});
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex cp2_9() {
  // Twelve facets and their images under v -> v+3 (mod 9, labels 1..9).
  const LabeledFacets base = {{1, 2, 4, 5, 6}, {2, 3, 5, 6, 4}, {3, 1, 6, 4, 5}, {1, 2, 4, 5, 9},
                              {2, 3, 5, 6, 7}, {3, 1, 6, 4, 8}, {2, 3, 6, 4, 9}, {3, 1, 4, 5, 7},
                              {1, 2, 5, 6, 8}, {3, 1, 5, 6, 9}, {1, 2, 6, 4, 7}, {2, 3, 4, 5, 8}};
  LabeledFacets facets;
  for (int shift = 0; shift < 9; shift += 3) {
    for (const auto& f : base) {
      std::vector<Label> g;
      for (Label v : f) g.push_back(wrap(static_cast<int>(v) - 1 + shift, 9));
      facets.push_back(std::move(g));
    }
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex mobius_5() {
  LabeledFacets facets;
  for (int i = 0; i < 5; ++i) facets.push_back({wrap(i, 5), wrap(i + 1, 5), wrap(i + 2, 5)});
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex octahedron() {
  LabeledFacets facets;
  for (Label a : {1, 2}) {
    for (Label b : {3, 4}) {
      for (Label c : {5, 6}) facets.push_back({a, b, c});
    }
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex icosahedron() {
  // Apex 1, upper ring 2..6, lower ring 7..11, apex 12.
  LabeledFacets facets;
  for (int i = 0; i < 5; ++i) {
    const Label u0 = 2 + i, u1 = 2 + (i + 1) % 5;
    const Label l0 = 7 + i, l1 = 7 + (i + 1) % 5;
    facets.push_back({1, u0, u1});
    facets.push_back({12, l0, l1});
    facets.push_back({u0, u1, l0});
    facets.push_back({u1, l0, l1});
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex stacked_sphere_7() {
  SimplicialComplex s = stellar_subdivide_facet(boundary_simplex(4), {1, 2, 3, 4});
  return stellar_subdivide_facet(s, {1, 2, 3, 6});
}

std::vector<std::string> names() {
  return {"rp2_6", "torus7", "cp2_9", "mobius5", "octahedron", "icosahedron", "stacked_sphere7"};
}

SimplicialComplex by_name(const std::string& name) {
  if (name == "rp2_6") return rp2_6();
  if (name == "torus7") return torus_7();
  if (name == "cp2_9") return cp2_9();
  if (name == "mobius5") return mobius_5();
  if (name == "octahedron") return octahedron();
  if (name == "icosahedron") return icosahedron();
  if (name == "stacked_sphere7") return stacked_sphere_7();
  throw Error(ErrorCode::BadParams, "unknown fixture '" + name + "'");
}

}  // namespace facenum::fixtures
