#include <doctest.h>

#include "facenum/errors.hpp"
#include "facenum/generators.hpp"
#include "facenum/homology.hpp"
#include "facenum/manifold.hpp"
#include "facenum/pipeline.hpp"
#include "facenum/vectors.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace facenum;
using testing::code_of;
using testing::gf;
using testing::v;
using V = std::vector<std::int64_t>;

namespace {

IntSeq h_of(const SimplicialComplex& c) { return f_to_h(c.f_vector(), c.rank()); }

std::int64_t boundary_components(const SimplicialComplex& c, const FieldSpec& f) {
  auto b = boundary_complex(c, f);
  return b.has_vertices() ? static_cast<std::int64_t>(connected_components(b).size()) : 0;
}

bool ds_ok(const SimplicialComplex& c, const FieldSpec& f) {
  auto a = analyze(c, f);
  for (const auto& r : ds_checks(a)) {
    if (r.name.rfind("dehn_sommerville", 0) == 0 && !r.pass) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("basic constructions") {
  CHECK(simplex(3).facets().size() == 1);
  CHECK(v(boundary_simplex(3).f_vector()) == V{1, 4, 6, 4});
  CHECK(v(h_of(boundary_simplex(5))) == V{1, 1, 1, 1, 1, 1});

  auto co = cone(fixtures::octahedron());
  CHECK(co.num_vertices() == 7);
  CHECK(co.labels().back() == 7);
  auto r = is_homology_manifold(co, gf("2"));
  CHECK(r.usable());
  CHECK(r.boundary == fixtures::octahedron());
  CHECK(cone(simplex(1), 9).labels().back() == 9);
  CHECK(code_of([] { cone(simplex(1), 2); }) == ErrorCode::LabelCollision);

  auto s = suspension(fixtures::rp2_6());
  CHECK(s.num_vertices() == 8);
  CHECK(s.rank() == 4);

  auto j = join(boundary_simplex(2), boundary_simplex(2));
  CHECK(j.num_vertices() == 6);
  CHECK(v(h_of(j)) == V{1, 2, 3, 2, 1});
  CHECK(is_homology_manifold(j, gf("3")).usable());
  CHECK(code_of([] { join(simplex(1), simplex(1), LabelPolicy::Keep); }) == ErrorCode::LabelCollision);

  auto u = disjoint_union({boundary_simplex(2), boundary_simplex(2), boundary_simplex(2)});
  CHECK(connected_components(u).size() == 3);
  CHECK(u.num_vertices() == 9);
  CHECK(code_of([] { disjoint_union({simplex(1), simplex(1)}, LabelPolicy::Keep); }) ==
        ErrorCode::LabelCollision);

  auto un = union_by_labels(SimplicialComplex::from_facets({{1, 2}}),
                            SimplicialComplex::from_facets({{2, 3}}));
  CHECK(un.num_vertices() == 3);
  CHECK(is_connected(un));
}

TEST_CASE("cone preserves h") {
  for (const auto& [name, c] : testing::all_fixtures()) {
    CAPTURE(name);
    auto h = h_of(c);
    auto hc = h_of(cone(c));
    for (int i = 0; i <= c.rank(); ++i) CHECK(hc[i] == h[i]);
    CHECK(hc[c.rank() + 1] == 0);
  }
}

TEST_CASE("cyclic polytopes") {
  CHECK(cyclic_polytope_boundary(5, 4) == boundary_simplex(4));
  auto c84 = cyclic_polytope_boundary(8, 4);
  CHECK(c84.f_vector()[1] == 28);
  CHECK(v(h_of(cyclic_polytope_boundary(7, 4))) == V{1, 3, 6, 3, 1});
  for (auto [n, d] : std::vector<std::pair<int, int>>{{7, 4}, {8, 4}, {9, 6}, {9, 5}, {10, 3}}) {
    CAPTURE(n);
    CAPTURE(d);
    auto c = cyclic_polytope_boundary(n, d);
    CHECK(c.num_vertices() == n);
    CHECK(is_homology_manifold(c, gf("2")).usable());
    CHECK(ds_ok(c, gf("3")));
    CHECK(v(betti(c, gf("3"))).back() == 1);
  }
  CHECK(code_of([] { cyclic_polytope_boundary(4, 4); }) == ErrorCode::BadParams);
  CHECK(code_of([] { cyclic_polytope_boundary(5, 1); }) == ErrorCode::BadParams);
}

TEST_CASE("Kuhnel-Lassman complexes") {
  auto m59 = kuhnel_lassman(5, 9);
  CHECK(h_of(m59)[2] == 10);
  CHECK(m59.f_vector()[1] == 36);
  auto a = analyze(m59, gf("2"));
  CHECK((*a.vectors.f_interior)[0] == 0);
  CHECK(h_of(kuhnel_lassman(4, 8))[2] == 6);
  for (int d = 4; d <= 6; ++d) {
    for (int n = 2 * d - 1; n <= 2 * d + 3; ++n) {
      CAPTURE(d);
      CAPTURE(n);
      auto c = kuhnel_lassman(d, n);
      CHECK(h_of(c)[2] == binomial(d, 2));
      auto r = is_homology_manifold(c, gf("2"));
      CHECK(r.usable());
      CHECK(r.boundary.num_vertices() == n);
      CHECK(r.boundary.rank() == d - 1);
      if (d >= 5) CHECK(betti(r.boundary, gf("2"))[1] == 1);
    }
  }
  CHECK(code_of([] { kuhnel_lassman(3, 9); }) == ErrorCode::BadParams);
  CHECK(code_of([] { kuhnel_lassman(5, 8); }) == ErrorCode::BadParams);
}

TEST_CASE("boundary connected sums") {
  auto m = kuhnel_lassman(5, 9);
  auto two = iterated_boundary_connected_sum(m, 2);
  CHECK(h_of(two)[2] == 20);
  auto bd = boundary_complex(two, gf("2"));
  CHECK(betti(bd, gf("2"))[1] == 2);
  for (int b = 1; b <= 3; ++b) {
    auto s = iterated_boundary_connected_sum(m, b);
    CHECK(h_of(s)[2] == 10 * b);
    CHECK(betti(boundary_complex(s, gf("2")), gf("2"))[1] == b);
    CHECK(s.num_vertices() == 9 * b - 4 * (b - 1));
  }
  CHECK(code_of([&] { iterated_boundary_connected_sum(m, 0); }) == ErrorCode::BadParams);

  auto balls = boundary_connected_sum(simplex(3), simplex(3), {1, 2, 3}, {1, 2, 3});
  CHECK(balls.num_vertices() == 5);
  auto r = is_homology_manifold(balls, gf("3"));
  CHECK(r.usable());
  CHECK(v(betti(balls, gf("3"))) == V{0, 0, 0, 0, 0});
  CHECK(v(betti(r.boundary, gf("3"))) == V{0, 0, 0, 1});

  // A ridge of the tetrahedron ball is a boundary face, an edge is not a ridge.
  CHECK(code_of([] { boundary_connected_sum(simplex(3), simplex(3), {1, 2}, {1, 2}); }) ==
        ErrorCode::NotBoundaryFace);
  // The torus has no boundary at all.
  CHECK(code_of([] {
          boundary_connected_sum(fixtures::torus_7(), simplex(2), {1, 2}, {1, 2});
        }) == ErrorCode::NotBoundaryFace);
}

TEST_CASE("stellar subdivisions") {
  auto s = stellar_subdivide_facet(boundary_simplex(3), {1, 2, 3});
  CHECK(v(s.f_vector()) == V{1, 5, 9, 6});
  CHECK(h_of(s)[2] == h_of(boundary_simplex(3))[2] + 1);
  CHECK(s.labels().back() == 5);
  CHECK(code_of([] { stellar_subdivide_facet(boundary_simplex(3), {1, 2}); }) ==
        ErrorCode::FaceNotFacet);

  auto m = kuhnel_lassman(5, 9);
  for (int k = 0; k <= 3; ++k) {
    auto c = stacked_subdivisions(m, k);
    auto a = analyze(c, gf("2"));
    CHECK(a.vectors.h[2] == 10 + k);
    CHECK((*a.vectors.f_interior)[0] == k);
    CHECK(a.manifold.usable());
  }
  CHECK(fixtures::stacked_sphere_7() == stacked_subdivisions(boundary_simplex(4), 2));
}

TEST_CASE("interior facets and removal") {
  auto m = kuhnel_lassman(5, 9);
  auto it = make_interior_facet(m, m.labeled_facets().front());
  CHECK(it.facet.size() == 5);
  auto bd = boundary_complex(it.complex, gf("2"));
  for (auto x : it.facet) CHECK_FALSE(bd.find_vertex(x).has_value());
  CHECK(it.complex.num_vertices() == 14);
  auto punched = remove_facet(it.complex, it.facet);
  // The d subdivisions raise h_2 by d; deleting the facet leaves it alone.
  CHECK(h_of(punched)[2] == h_of(m)[2] + 5);
  CHECK(h_of(punched)[2] == h_of(it.complex)[2]);
  auto a = analyze(punched, gf("2"));
  CHECK(a.manifold.usable());
  CHECK((*a.profile.beta_boundary)[0] == 1);
  CHECK((*a.vectors.f_interior)[0] == 0);
  CHECK(code_of([&] { remove_facet(m, it.facet); }) == ErrorCode::FaceNotFacet);

  // Removing any facet adds one boundary component.
  for (const auto& [name, c] : testing::all_fixtures()) {
    CAPTURE(name);
    const auto& f = gf("2");
    auto inside = make_interior_facet(c, c.labeled_facets().front());
    const auto before = boundary_components(inside.complex, f);
    auto p = remove_facet(inside.complex, inside.facet);
    CHECK(boundary_components(p, f) == before + 1);
    CHECK(is_homology_manifold(p, f).usable());
  }
}

TEST_CASE("coning off the boundary") {
  auto tet = cone_off_boundary(simplex(3), gf("2"));
  CHECK(tet.gamma == boundary_simplex(4));
  CHECK(tet.components.size() == 1);
  CHECK(tet.apexes == std::vector<Label>{5});

  auto m = kuhnel_lassman(5, 9);
  auto cm = cone_off_boundary(m, gf("2"));
  CHECK(cm.gamma.num_vertices() == 10);
  CHECK(cm.gamma.f_vector()[1] == m.f_vector()[1] + 9);
  auto bd = boundary_complex(m, gf("2"));
  CHECK(h_of(cm.gamma)[2] == h_of(m)[2] + h_of(bd)[1] - 4 * betti(bd, gf("2"))[0]);

  auto ball = make_interior_facet(simplex(3), {1, 2, 3, 4});
  auto shell = remove_facet(ball.complex, ball.facet);
  auto cs = cone_off_boundary(shell, gf("3"));
  CHECK(cs.components.size() == 2);
  CHECK(connected_components(cs.sigma).size() == 2);
  CHECK(cs.gamma.num_vertices() == shell.num_vertices() + 2);
  CHECK(code_of([] { cone_off_boundary(fixtures::torus_7(), gf("2")); }) ==
        ErrorCode::EmptyBoundary);
}

TEST_CASE("fixtures") {
  CHECK(fixtures::names().size() == 7);
  for (const auto& n : fixtures::names()) CHECK(fixtures::by_name(n).num_vertices() > 0);
  CHECK(code_of([] { fixtures::by_name("klein"); }) == ErrorCode::BadParams);
  CHECK(v(betti(fixtures::cp2_9(), gf("3"))) == V{0, 0, 0, 1, 0, 1});
  CHECK(fixtures::cp2_9().facets().size() == 36);
  CHECK(v(fixtures::torus_7().f_vector()) == V{1, 7, 21, 14});
  CHECK(v(fixtures::icosahedron().f_vector()) == V{1, 12, 30, 20});
  CHECK(v(betti(fixtures::mobius_5(), gf("3"))) == V{0, 0, 1, 0});
  for (const auto& [name, c] : testing::all_fixtures()) {
    CAPTURE(name);
    CHECK(ds_ok(c, gf("2")));
  }
}
