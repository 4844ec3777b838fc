// Runs the eleven acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "facenum/face_ring.hpp"
#include "facenum/generators.hpp"
#include "facenum/homology.hpp"
#include "facenum/manifold.hpp"
#include "facenum/pipeline.hpp"
#include "facenum/vectors.hpp"
#include "fixture_sets.hpp"
#include "oracle.hpp"

using namespace facenum;
using V = std::vector<std::int64_t>;

namespace {

// Collects failed expectations for one criterion.
class Crit {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (got == want) {
      expect(true, what);
    } else {
      std::ostringstream s;
      s << what << ": got " << show(got) << ", want " << show(want);
      expect(false, s.str());
    }
  }
  // Every entry of the report is exactly zero and the report passes.
  void zero(const CheckReport& r, const std::string& what) {
    bool ok = r.pass;
    std::ostringstream s;
    for (const auto& e : r.entries) {
      if (e.value != 0) {
        ok = false;
        s << ' ' << e.label << '=' << static_cast<double>(e.value);
      }
    }
    expect(ok, what + (ok ? "" : ": nonzero" + s.str()));
  }

  const std::vector<std::string>& failures() const { return failures_; }
  int checks() const { return checks_; }

 private:
  static std::string show(std::int64_t x) { return std::to_string(x); }
  static std::string show(const V& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  }
  static std::string show(const IntSeq& v) { return show(v.values()); }

  int checks_ = 0;
  std::vector<std::string> failures_;
};

const FieldSpec& field(const std::string& spec) {
  static std::vector<std::pair<std::string, FieldSpec>> cache;
  for (const auto& [k, f] : cache) {
    if (k == spec) return f;
  }
  cache.emplace_back(spec, FieldSpec::parse(spec));
  return cache.back().second;
}

IntSeq h_of(const SimplicialComplex& c) { return f_to_h(c.f_vector(), c.rank()); }

void criterion1(Crit& c) {
  std::vector<testing::Named> cases;
  for (int d = 1; d <= 7; ++d) cases.push_back({"bd_simplex_" + std::to_string(d), boundary_simplex(d)});
  cases.push_back({"octahedron", fixtures::octahedron()});
  cases.push_back({"icosahedron", fixtures::icosahedron()});
  cases.push_back({"torus7", fixtures::torus_7()});
  cases.push_back({"rp2_6", fixtures::rp2_6()});
  cases.push_back({"cyclic_7_4", cyclic_polytope_boundary(7, 4)});
  cases.push_back({"cyclic_8_4", cyclic_polytope_boundary(8, 4)});
  cases.push_back({"cyclic_9_6", cyclic_polytope_boundary(9, 6)});
  for (const auto& [name, k] : cases) {
    for (const char* p : {"2", "3"}) {
      auto a = analyze(k, field(p));
      c.expect(a.manifold.usable() && a.closed(), name + " closed manifold over GF(" + p + ")");
      c.zero(ds_closed_residual(a.vectors.h, k.reduced_euler(), a.vectors.d), name);
    }
  }
}

void criterion2(Crit& c) {
  std::vector<testing::Named> cases;
  for (int d = 1; d <= 6; ++d) cases.push_back({"simplex_" + std::to_string(d), simplex(d)});
  cases.push_back({"cone_octahedron", cone(fixtures::octahedron())});
  cases.push_back({"mobius5", fixtures::mobius_5()});
  for (auto [d, n] : std::vector<std::pair<int, int>>{{4, 8}, {5, 9}, {5, 11}, {6, 12}}) {
    cases.push_back({"M" + std::to_string(d) + "(" + std::to_string(n) + ")", kuhnel_lassman(d, n)});
  }
  for (const auto& [name, k] : cases) {
    for (const char* p : {"2", "3"}) {
      auto a = analyze(k, field(p));
      if (!a.manifold.usable() || a.closed()) {
        c.expect(false, name + " is not a manifold with boundary over GF(" + p + ")");
        continue;
      }
      c.zero(ds_boundary_residual(a.vectors.h, k.reduced_euler(), *a.vectors.g_boundary, a.vectors.d),
             name + " over GF(" + p + ")");
    }
  }
}

void criterion3(Crit& c) {
  struct Case {
    const char* name;
    SimplicialComplex k;
    const char* field;
    V dims;
  };
  std::vector<Case> cases = {{"torus7", fixtures::torus_7(), "65537", {1, 4, 10, 1}},
                             {"rp2_6", fixtures::rp2_6(), "2^16", {1, 3, 6, 1}},
                             {"bd_simplex_4", boundary_simplex(4), "65537", {1, 1, 1, 1, 1}}};
  for (const auto& cs : cases) {
    auto a = analyze(cs.k, field(cs.field));
    c.equal(a.vectors.h_prime.values(), cs.dims, std::string(cs.name) + " h'");
    for (std::uint64_t seed : {1, 2, 3, 4}) {
      auto q = artinian_reduction(cs.k, field(cs.field), seed);
      c.expect(q.lsop_certificate, std::string(cs.name) + " l.s.o.p. certificate");
      c.equal(q.dims, cs.dims, std::string(cs.name) + " dims at seed " + std::to_string(seed));
    }
  }
}

void criterion4(Crit& c) {
  c.equal((*analyze(fixtures::torus_7(), field("3")).vectors.h_dprime).values(), V{1, 4, 4, 1}, "torus7 h''");
  c.equal((*analyze(fixtures::rp2_6(), field("2")).vectors.h_dprime).values(), V{1, 3, 3, 1}, "rp2_6 h''");
  int seen = 0;
  for (const auto& [name, k] : testing::closed_fixtures()) {
    for (const char* p : {"2", "3", "5"}) {
      auto a = analyze(k, field(p));
      if (!a.connected_orientable_manifold()) continue;
      ++seen;
      const auto& hd = *a.vectors.h_dprime;
      for (int i = 0; i <= a.vectors.d; ++i) {
        c.expect(hd[i] == hd[a.vectors.d - i] && hd[i] >= 0,
                 name + " h''_" + std::to_string(i) + " over GF(" + p + ")");
      }
    }
  }
  c.expect(seen >= 20, "enough orientable closed cases");
}

void criterion5(Crit& c) {
  struct Case {
    const char* name;
    SimplicialComplex k;
    const char* field;
  };
  std::vector<Case> cases = {{"ball_3", simplex(3), "3"},
                             {"ball_4", simplex(4), "2"},
                             {"cone_octahedron", cone(fixtures::octahedron()), "3"},
                             {"mobius5", fixtures::mobius_5(), "2"},
                             {"M5(9)", kuhnel_lassman(5, 9), "2"},
                             {"M5(9)", kuhnel_lassman(5, 9), "2^16"}};
  for (const auto& cs : cases) {
    auto a = analyze(cs.k, field(cs.field));
    if (!a.connected_orientable_manifold() || a.closed()) {
      c.expect(false, std::string(cs.name) + " orientable with boundary");
      continue;
    }
    const auto& v = a.vectors;
    auto r = hdprime_boundary_symmetry(v.h_prime, *v.gbar, *v.im_psi, v.betti, v.d);
    c.expect(static_cast<int>(r.entries.size()) == v.d, std::string(cs.name) + " all indices");
    c.zero(r, std::string(cs.name) + " over GF(" + cs.field + ")");
  }
}

void criterion6(Crit& c) {
  auto rp2 = fixtures::rp2_6();
  auto r1 = kuhnel_middle_check(rp2.num_vertices(), 3, betti(rp2, field("2")));
  c.expect(r1.pass, "rp2_6 passes");
  c.equal(r1.value("slack"), std::int64_t{0}, "rp2_6 slack");
  c.expect(r1.find("beta=0") != nullptr && r1.find("beta=0")->ok, "rp2_6 equality forces beta_0 = 0");
  auto cp2 = fixtures::cp2_9();
  auto r2 = kuhnel_middle_check(cp2.num_vertices(), 5, betti(cp2, field("2")));
  c.expect(r2.pass, "cp2_9 passes");
  c.equal(r2.value("slack"), std::int64_t{0}, "cp2_9 slack");
  c.expect(r2.find("beta=0") && r2.find("beta=0")->ok && r2.find("beta=1") && r2.find("beta=1")->ok,
           "cp2_9 equality forces beta_0 = beta_1 = 0");
  c.equal(binomial(3, 1) * 1, binomial(3, 2), "C(3,1) = C(3,2)");
  c.equal(binomial(5, 2) * 1, binomial(5, 3), "C(5,2) = C(5,3)");
}

void criterion7(Crit& c) {
  auto rp2 = fixtures::rp2_6();
  auto cp2 = fixtures::cp2_9();
  c.equal(rp2.f_vector().values(), V{1, 6, 15, 10}, "f(rp2_6)");
  c.equal(mk_reference(1).f, rp2.f_vector(), "f(M_1)");
  c.equal(mk_reference(2).f, cp2.f_vector(), "f(M_2)");
  c.zero(kalai_comparison(rp2.f_vector(), betti(rp2, field("2")), 1), "rp2_6 vs M_1");
  c.zero(kalai_comparison(cp2.f_vector(), betti(cp2, field("2")), 2), "cp2_9 vs M_2");
  for (auto [k, cx] : std::vector<std::pair<int, SimplicialComplex>>{{1, rp2}, {2, cp2}}) {
    auto a = analyze(cx, field("2"));
    std::vector<std::int64_t> low;
    for (int j = 0; j <= k; ++j) low.push_back(a.vectors.h_prime[j]);
    auto rec = f_from_middle_betti(IntSeq(0, low), a.vectors.betti[k], k);
    c.equal(rec.f, cx.f_vector(), "reconstruction k=" + std::to_string(k));
    c.expect(rec.coefficients.pass, "nonnegative coefficients k=" + std::to_string(k));
  }
}

void criterion8(Crit& c) {
  const auto& f = field("2^16");
  auto bd = boundary_complex(kuhnel_lassman(5, 9), f);
  bool links = true;
  for (Vertex x = 1; x <= bd.num_vertices(); ++x) links = links && lefschetz_check(link(bd, {x}), f, 1).pass;
  c.expect(links, "vertex links of the boundary of M5(9) are Lefschetz");
  auto r = kuhnel_general_check(bd.num_vertices(), bd.rank(), betti(bd, f), 1);
  c.equal(r.value("slack"), std::int64_t{0}, "boundary of M5(9) slack at j=1");
  c.equal(binomial(5, 2), std::int64_t{10}, "C(5,2)");
  c.expect(r.pass, "boundary of M5(9) equality case assertions");
  auto t = fixtures::torus_7();
  c.expect(kuhnel_general_check(7, 3, betti(t, f), 0).pass, "torus7 at j=0");
  for (const auto& [name, k] : testing::closed_fixtures()) {
    for (const char* p : {"2", "3"}) {
      auto a = analyze(k, field(p));
      if (!a.connected_orientable_manifold()) continue;
      c.expect(kalai_monotonicity_check(*a.vectors.h_dprime, a.vectors.betti, a.vectors.d).pass,
               name + " monotonicity over GF(" + p + ")");
    }
  }
}

void criterion9(Crit& c) {
  struct Case {
    const char* name;
    SimplicialComplex k;
    const char* field;
  };
  std::vector<Case> cases = {{"octahedron", fixtures::octahedron(), "65537"},
                             {"icosahedron", fixtures::icosahedron(), "65537"},
                             {"torus7", fixtures::torus_7(), "2^16"},
                             {"rp2_6", fixtures::rp2_6(), "2^16"}};
  for (const auto& cs : cases) {
    auto r = is_k_rigid(cs.k, field(cs.field), 1);
    c.expect(r.rigid, std::string(cs.name) + " rigid");
    c.equal(r.dim2_after_d, h_of(cs.k)[2],
            std::string(cs.name) + " dim_2 = h_2");
    c.expect(is_k_rigid(cone(cs.k), field(cs.field), 1).rigid, std::string(cs.name) + " cone rigid");
  }
  for (int b = 2; b <= 3; ++b) {
    for (const auto& [piece, fld] : std::vector<std::pair<SimplicialComplex, const char*>>{
             {boundary_simplex(3), "65537"}, {fixtures::octahedron(), "65537"},
             {fixtures::torus_7(), "2^16"}}) {
      std::vector<SimplicialComplex> parts(static_cast<std::size_t>(b), piece);
      auto u = disjoint_union(parts);
      auto dims = rigidity_union_dims(u, field(fld), 1);
      const int d = u.rank();
      c.equal(dims.dim2_after_d, h_of(u)[2] + binomial(d, 2) * (b - 1), "union dim_2 b=" + std::to_string(b));
      c.equal(dims.omega_kernel, std::int64_t{d * (b - 1)}, "union omega kernel b=" + std::to_string(b));
    }
  }
}

void criterion10(Crit& c) {
  const auto& f = field("2^16");
  auto m = kuhnel_lassman(5, 9);
  auto slack = [&](const SimplicialComplex& k, const std::string& what) {
    auto r = h2_check(analyze(k, f));
    c.equal(r.value("slack"), std::int64_t{0}, what + " slack");
    return r;
  };
  slack(m, "M5(9)");
  c.equal(h_of(m)[2], std::int64_t{10}, "h_2(M5(9))");
  for (int b = 1; b <= 3; ++b) {
    auto s = iterated_boundary_connected_sum(m, b);
    slack(s, "b=" + std::to_string(b) + " connected sum");
    c.equal(h_of(s)[2], std::int64_t{10 * b}, "h_2 of b=" + std::to_string(b) + " sum");
  }
  for (int k = 0; k <= 3; ++k) {
    auto s = stacked_subdivisions(m, k);
    slack(s, "m=" + std::to_string(k) + " subdivisions");
    auto ideal = boundary_cone_ideal_dims(s, f, 1);
    c.equal(ideal.dim_i1, std::int64_t{k}, "dim I_1 for m=" + std::to_string(k));
    c.equal(ideal.dim_i1, ideal.f0_interior, "dim I_1 = f0 interior for m=" + std::to_string(k));
    c.expect(ideal.check.pass, "cone ideal check m=" + std::to_string(k));
  }
  auto inner = make_interior_facet(m, m.labeled_facets().front());
  auto punched = remove_facet(inner.complex, inner.facet);
  slack(punched, "punched");
  auto a = analyze(punched, f);
  c.equal((*a.profile.beta_boundary)[0], std::int64_t{1}, "reduced beta_0 of punched boundary");
  c.equal(h_of(punched)[2] - h_of(m)[2], std::int64_t{5}, "h_2 increase after punching");
}

void criterion11(Crit& c) {
  std::mt19937_64 rng(20261015);
  for (int t = 0; t < 200; ++t) {
    const int len = 1 + static_cast<int>(rng() % 8);
    V raw;
    for (int i = 0; i < len; ++i) raw.push_back(static_cast<std::int64_t>(rng() % 401) - 200);
    IntSeq fv(-1, raw);
    auto h = f_to_h(fv, len - 1);
    c.equal(h.values(), oracle::h_by_polynomial(raw), "h by polynomial");
    c.equal(h_to_f(h, len - 1), fv, "roundtrip");
  }
  for (const auto& [name, k] : testing::all_fixtures()) {
    for (auto [p, ext] : std::vector<std::pair<const char*, const char*>>{{"2", "2^16"}, {"3", "3^4"}}) {
      auto b = betti(k, field(p));
      std::int64_t alt = 0;
      for (int i = b.first(); i <= b.last(); ++i) alt += (i % 2 == 0 ? 1 : -1) * b[i];
      c.equal(alt, k.reduced_euler(), name + " Euler over GF(" + p + ")");
      c.equal(betti(k, field(ext)), b, name + " extension invariance " + ext);
      for (int i = 1; i <= k.dim(); ++i) {
        c.expect(boundary_matrix(k, i - 1, field(p)).multiply(boundary_matrix(k, i, field(p))).nonzeros() == 0,
                 name + " chain condition at " + std::to_string(i));
      }
    }
  }
  for (int t = 0; t < 100; ++t) {
    const int i = 1 + static_cast<int>(rng() % 6);
    const std::int64_t a = i + static_cast<std::int64_t>(rng() % 25);
    c.expect(pseudopower(static_cast<long double>(binomial(a, i)), i) ==
                 static_cast<long double>(binomial(a + 1, i + 1)),
             "exact pseudopower");
    const long double m1 = static_cast<long double>(rng() % 100000) / 97.0L;
    const long double m2 = m1 + static_cast<long double>(rng() % 1000) / 13.0L;
    c.expect(pseudopower(m1, i) <= pseudopower(m2, i) + 1e-9L, "pseudopower monotone");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Crit&)>>> criteria = {
      {"Dehn-Sommerville, closed", criterion1},
      {"Dehn-Sommerville with boundary", criterion2},
      {"Artinian reduction dimensions equal h'", criterion3},
      {"h'' symmetric and nonnegative", criterion4},
      {"h'' with boundary mirror identity", criterion5},
      {"Kuhnel middle bound equality", criterion6},
      {"Kalai minimality and reconstruction", criterion7},
      {"Kuhnel general bound and monotonicity", criterion8},
      {"rigidity, cones and disjoint unions", criterion9},
      {"h_2 bound with boundary", criterion10},
      {"property suites", criterion11},
  };
  int failed = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    Crit c;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      criteria[n].second(c);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = error.empty() && c.failures().empty();
    std::printf("%s criterion %zu: %s (%d checks, %.2fs)\n", ok ? "PASS" : "FAIL", n + 1,
                criteria[n].first, c.checks(), secs);
    if (!error.empty()) std::printf("    exception: %s\n", error.c_str());
    for (const auto& f : c.failures()) std::printf("    %s\n", f.c_str());
    if (!ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
