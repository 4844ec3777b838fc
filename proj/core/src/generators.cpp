#include "facenum/generators.hpp"

#include <algorithm>
#include <set>

#include "facenum/errors.hpp"
#include "facenum/homology.hpp"
#include "facenum/manifold.hpp"
#include "facenum/vectors.hpp"

namespace facenum {

namespace {

Label max_label(const SimplicialComplex& c) { return c.has_vertices() ? c.labels().back() : 0; }

LabeledFacets shifted(const SimplicialComplex& c, Label shift) {
  LabeledFacets out = c.labeled_facets();
  for (auto& f : out) {
    for (auto& l : f) l += shift;
  }
  return out;
}

void require_disjoint(const SimplicialComplex& a, const SimplicialComplex& b) {
  for (Label l : b.labels()) {
    if (a.find_vertex(l)) {
      throw Error(ErrorCode::LabelCollision, "label " + std::to_string(l) + " used by both operands");
    }
  }
}

// All facets of `c` except `facet`, as labels; throws FaceNotFacet.
LabeledFacets facets_without(const SimplicialComplex& c, std::vector<Label> facet) {
  std::sort(facet.begin(), facet.end());
  LabeledFacets out;
  bool found = false;
  for (auto& f : c.labeled_facets()) {
    if (f == facet) {
      found = true;
    } else {
      out.push_back(std::move(f));
    }
  }
  if (!found) throw Error(ErrorCode::FaceNotFacet, "given face is not a facet");
  return out;
}

const FieldSpec& gf2() {
  static const FieldSpec f = FieldSpec::prime(2);
  return f;
}

}  // namespace

SimplicialComplex simplex(int dim) {
  if (dim < -1) throw Error(ErrorCode::BadParams, "simplex dimension must be at least -1");
  if (dim == -1) return SimplicialComplex{};
  std::vector<Label> f;
  for (int v = 1; v <= dim + 1; ++v) f.push_back(v);
  return SimplicialComplex::from_facets({f});
}

SimplicialComplex boundary_simplex(int dim) {
  if (dim < 0) throw Error(ErrorCode::BadParams, "simplex dimension must be nonnegative");
  if (dim == 0) return SimplicialComplex{};
  LabeledFacets facets;
  for (int skip = 1; skip <= dim + 1; ++skip) {
    std::vector<Label> f;
    for (int v = 1; v <= dim + 1; ++v) {
      if (v != skip) f.push_back(v);
    }
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex cone(const SimplicialComplex& complex) {
  return cone(complex, max_label(complex) + 1);
}

SimplicialComplex cone(const SimplicialComplex& complex, Label apex) {
  if (complex.find_vertex(apex)) {
    throw Error(ErrorCode::LabelCollision, "apex label already in use");
  }
  LabeledFacets facets = complex.labeled_facets();
  if (facets.empty()) facets.push_back({});
  for (auto& f : facets) f.push_back(apex);
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex suspension(const SimplicialComplex& complex) {
  const Label top = max_label(complex);
  return join(complex, SimplicialComplex::from_facets({{top + 1}, {top + 2}}), LabelPolicy::Keep);
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b, LabelPolicy policy) {
  LabeledFacets fb;
  if (policy == LabelPolicy::Keep) {
    require_disjoint(a, b);
    fb = b.labeled_facets();
  } else {
    fb = shifted(b, max_label(a));
  }
  LabeledFacets fa = a.labeled_facets();
  if (fa.empty()) fa.push_back({});
  if (fb.empty()) fb.push_back({});
  LabeledFacets out;
  for (const auto& x : fa) {
    for (const auto& y : fb) {
      auto f = x;
      f.insert(f.end(), y.begin(), y.end());
      out.push_back(std::move(f));
    }
  }
  return SimplicialComplex::generated_by(out);
}

SimplicialComplex disjoint_union(const std::vector<SimplicialComplex>& parts, LabelPolicy policy) {
  if (parts.empty()) throw Error(ErrorCode::EmptyInput, "disjoint union of nothing");
  LabeledFacets out;
  SimplicialComplex seen;
  Label shift = 0;
  for (const auto& part : parts) {
    if (!part.has_vertices()) continue;
    LabeledFacets fp;
    if (policy == LabelPolicy::Keep) {
      require_disjoint(seen, part);
      fp = part.labeled_facets();
    } else {
      fp = shifted(part, shift);
    }
    for (const auto& f : fp) {
      for (Label l : f) shift = std::max(shift, l);
    }
    out.insert(out.end(), fp.begin(), fp.end());
    seen = SimplicialComplex::from_facets(out);
  }
  return SimplicialComplex::generated_by(out);
}

SimplicialComplex union_by_labels(const SimplicialComplex& a, const SimplicialComplex& b) {
  LabeledFacets out = a.labeled_facets();
  for (auto& f : b.labeled_facets()) out.push_back(std::move(f));
  return SimplicialComplex::generated_by(out);
}

SimplicialComplex cyclic_polytope_boundary(int n, int d) {
  if (d < 2 || n < d + 1 || n > 62) {
    throw Error(ErrorCode::BadParams, "cyclic polytope needs 2 <= d < n <= 62");
  }
  LabeledFacets facets;
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.end() - d, pick.end(), true);
  do {
    bool even = true;
    for (int i = 0; i < n && even; ++i) {
      if (pick[static_cast<std::size_t>(i)]) continue;
      int between = 0;
      for (int j = i + 1; j < n; ++j) {
        if (pick[static_cast<std::size_t>(j)]) {
          ++between;
        } else {
          if (between % 2 != 0) even = false;
          break;
        }
      }
    }
    if (even) {
      std::vector<Label> f;
      for (int i = 0; i < n; ++i) {
        if (pick[static_cast<std::size_t>(i)]) f.push_back(i + 1);
      }
      facets.push_back(std::move(f));
    }
  } while (std::next_permutation(pick.begin(), pick.end()));
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex kuhnel_lassman(int d, int n) {
  if (d < 4 || n < 2 * d - 1) throw Error(ErrorCode::BadParams, "needs d >= 4 and n >= 2d-1");
  LabeledFacets facets;
  for (int i = 0; i < n; ++i) {
    std::vector<Label> f;
    for (int j = 0; j < d; ++j) f.push_back((i + j) % n + 1);
    facets.push_back(std::move(f));
  }
  SimplicialComplex m = SimplicialComplex::from_facets(facets);

  const std::string what = "M^" + std::to_string(d) + "(" + std::to_string(n) + "): ";
  const ManifoldReport rep = is_homology_manifold(m, gf2());
  if (!rep.is_manifold || !rep.boundary_is_closed_manifold) {
    throw Error(ErrorCode::ValidationFailure, what + "not a manifold with closed boundary");
  }
  if (f_to_h(m.f_vector(), d)[2] != binomial(d, 2)) {
    throw Error(ErrorCode::ValidationFailure, what + "h_2 differs from C(d,2)");
  }
  if (rep.boundary.num_vertices() != n) {
    throw Error(ErrorCode::ValidationFailure, what + "interior vertex present");
  }
  if (betti(rep.boundary, gf2())[1] != (d == 4 ? 2 : 1)) {
    throw Error(ErrorCode::ValidationFailure, what + "unexpected first Betti number of the boundary");
  }
  return m;
}

SimplicialComplex boundary_connected_sum(const SimplicialComplex& a, const SimplicialComplex& b,
                                         const std::vector<Label>& f1,
                                         const std::vector<Label>& f2) {
  if (f1.size() != f2.size()) throw Error(ErrorCode::BadParams, "identified faces differ in size");
  auto require_boundary_facet = [](const SimplicialComplex& c, const std::vector<Label>& f) {
    const SimplicialComplex bd = boundary_complex(c, gf2());
    auto sorted = f;
    std::sort(sorted.begin(), sorted.end());
    const auto& facets = bd.labeled_facets();
    if (static_cast<int>(f.size()) != c.rank() - 1 ||
        std::find(facets.begin(), facets.end(), sorted) == facets.end()) {
      throw Error(ErrorCode::NotBoundaryFace, "face is not a facet of the boundary");
    }
  };
  require_boundary_facet(a, f1);
  require_boundary_facet(b, f2);

  const Label shift = max_label(a);
  LabeledFacets out = a.labeled_facets();
  for (auto f : b.labeled_facets()) {
    for (auto& l : f) {
      auto it = std::find(f2.begin(), f2.end(), l);
      l = (it != f2.end()) ? f1[static_cast<std::size_t>(it - f2.begin())] : l + shift;
    }
    out.push_back(std::move(f));
  }
  SimplicialComplex sum = SimplicialComplex::from_facets(out);
  const ManifoldReport rep = is_homology_manifold(sum, gf2());
  if (!rep.is_manifold || !rep.boundary_is_closed_manifold) {
    throw Error(ErrorCode::IdentificationCreatesNonManifold, "glued complex is not a manifold");
  }
  return sum;
}

SimplicialComplex iterated_boundary_connected_sum(const SimplicialComplex& piece, int b) {
  if (b < 1) throw Error(ErrorCode::BadParams, "need at least one summand");
  const SimplicialComplex piece_bd = boundary_complex(piece, gf2());
  if (!piece_bd.has_vertices()) throw Error(ErrorCode::EmptyBoundary, "summand has no boundary");
  const std::vector<Label> f2 = piece_bd.labeled_facets().front();
  SimplicialComplex result = piece;
  for (int t = 2; t <= b; ++t) {
    const std::vector<Label> f1 = boundary_complex(result, gf2()).labeled_facets().back();
    result = boundary_connected_sum(result, piece, f1, f2);
  }
  return result;
}

SimplicialComplex stellar_subdivide_facet(const SimplicialComplex& complex,
                                          const std::vector<Label>& facet) {
  LabeledFacets out = facets_without(complex, facet);
  const Label w = max_label(complex) + 1;
  for (std::size_t skip = 0; skip < facet.size(); ++skip) {
    std::vector<Label> f;
    for (std::size_t j = 0; j < facet.size(); ++j) {
      if (j != skip) f.push_back(facet[j]);
    }
    f.push_back(w);
    out.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(out);
}

SimplicialComplex stacked_subdivisions(const SimplicialComplex& complex, int m) {
  if (m < 0) throw Error(ErrorCode::BadParams, "subdivision count must be nonnegative");
  if (m > 0 && complex.facets().empty()) throw Error(ErrorCode::EmptyInput, "no facet to subdivide");
  SimplicialComplex c = complex;
  for (int step = 0; step < m; ++step) {
    std::vector<Label> target = c.labeled_facets().front();
    if (step > 0) {
      const Label newest = c.labels().back();
      for (const auto& f : c.labeled_facets()) {
        if (std::find(f.begin(), f.end(), newest) != f.end()) {
          target = f;
          break;
        }
      }
    }
    c = stellar_subdivide_facet(c, target);
  }
  return c;
}

InteriorFacet make_interior_facet(const SimplicialComplex& complex,
                                  const std::vector<Label>& facet) {
  std::vector<Label> current = facet;
  std::sort(current.begin(), current.end());
  const std::set<Label> old(current.begin(), current.end());
  SimplicialComplex c = complex;
  for (std::size_t step = 0; step < facet.size(); ++step) {
    c = stellar_subdivide_facet(c, current);
    const Label w = c.labels().back();
    auto victim = std::find_if(current.begin(), current.end(),
                               [&](Label l) { return old.count(l) > 0; });
    *victim = w;
    std::sort(current.begin(), current.end());
  }
  return {c, current};
}

SimplicialComplex remove_facet(const SimplicialComplex& complex, const std::vector<Label>& facet) {
  LabeledFacets out = facets_without(complex, facet);
  for (std::size_t skip = 0; skip < facet.size(); ++skip) {
    std::vector<Label> f;
    for (std::size_t j = 0; j < facet.size(); ++j) {
      if (j != skip) f.push_back(facet[j]);
    }
    out.push_back(std::move(f));
  }
  return SimplicialComplex::generated_by(out);
}

ConedBoundary cone_off_boundary(const SimplicialComplex& complex, const FieldSpec& field) {
  const SimplicialComplex bd = boundary_complex(complex, field);
  if (!bd.has_vertices()) throw Error(ErrorCode::EmptyBoundary, "nothing to cone off");
  ConedBoundary out;
  out.components = component_complexes(bd);
  LabeledFacets gamma = complex.labeled_facets();
  LabeledFacets sigma;
  Label apex = max_label(complex);
  for (const auto& comp : out.components) {
    out.apexes.push_back(++apex);
    for (const auto& f : cone(comp, apex).labeled_facets()) {
      gamma.push_back(f);
      sigma.push_back(f);
    }
  }
  out.gamma = SimplicialComplex::from_facets(gamma);
  out.sigma = SimplicialComplex::from_facets(sigma);
  return out;
}

}  // namespace facenum
