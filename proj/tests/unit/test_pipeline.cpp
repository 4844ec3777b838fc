#include <doctest.h>

#include "facenum/errors.hpp"
#include "facenum/generators.hpp"
#include "facenum/pipeline.hpp"
#include "helpers.hpp"

using namespace facenum;
using testing::code_of;
using testing::gf;
using testing::v;
using V = std::vector<std::int64_t>;

namespace {

const CheckReport* named(const std::vector<CheckReport>& rs, const std::string& name) {
  for (const auto& r : rs) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("analysis of closed and bounded complexes") {
  auto t = analyze(fixtures::torus_7(), gf("3"));
  CHECK(t.closed());
  CHECK(t.connected_orientable_manifold());
  CHECK(v(*t.vectors.h_dprime) == V{1, 4, 4, 1});
  CHECK_FALSE(t.vectors.gbar.has_value());
  CHECK_FALSE(t.vectors.f_interior.has_value());

  auto rp3 = analyze(fixtures::rp2_6(), gf("3"));
  CHECK_FALSE(rp3.connected_orientable_manifold());
  CHECK_FALSE(rp3.vectors.h_dprime.has_value());
  CHECK(rp3.vectors.h_prime == rp3.vectors.h);

  auto m = analyze(fixtures::mobius_5(), gf("2"));
  CHECK_FALSE(m.closed());
  CHECK(v(*m.vectors.h_dprime) == V{0, 0, 0, 0});
  CHECK(v(m.profile.beta_relative) == V{0, 0, 1, 1});
  CHECK(v(*m.vectors.im_psi) == V{0, 1, 0});
  auto m3 = analyze(fixtures::mobius_5(), gf("3"));
  CHECK(v(m3.profile.beta_relative) == V{0, 0, 0, 0});
  CHECK(v(*m3.vectors.im_psi) == V{0, 0, 0});
  CHECK_FALSE(m3.vectors.h_dprime.has_value());
}

TEST_CASE("individual checks") {
  auto oct = analyze(fixtures::octahedron(), gf("65537"));
  CHECK(manifold_check(oct).pass);
  for (const auto& r : ds_checks(oct)) CHECK(r.pass);
  auto sch = schenzel_check(oct, 3);
  CHECK(sch.pass);
  CHECK(sch.context["dims"] == nlohmann::json::array({1, 3, 3, 1}));
  CHECK(rigidity_check(oct, 1).pass);
  for (const auto& r : bound_checks(oct)) CHECK(r.pass);
  CHECK(code_of([&] { h2_check(oct); }) == ErrorCode::PreconditionViolated);
  auto lef = lefschetz_checks(oct, 1);
  CHECK(lef.size() == 7);
  for (const auto& r : lef) CHECK(r.pass);

  auto kl = analyze(kuhnel_lassman(5, 9), gf("2^16"));
  auto h2 = h2_check(kl);
  CHECK(h2.pass);
  CHECK(h2.value("slack") == 0);
  CHECK(code_of([&] { schenzel_check(analyze(fixtures::torus_7(), gf("3")), 1); }) ==
        ErrorCode::FieldTooSmall);
}

TEST_CASE("non-manifold input fails without throwing") {
  auto a = analyze(suspension(fixtures::rp2_6()), gf("2"));
  CHECK_FALSE(manifold_check(a).pass);
  auto all = all_checks(a, 0);
  REQUIRE_FALSE(all.empty());
  bool any_fail = false;
  for (const auto& r : all) any_fail = any_fail || !r.pass;
  CHECK(any_fail);
  CHECK(named(all, "skipped") != nullptr);
}

TEST_CASE("check all passes on every fixture over a large field of characteristic two") {
  for (const auto& [name, c] : testing::all_fixtures()) {
    CAPTURE(name);
    auto a = analyze(c, gf("2^16"));
    auto all = all_checks(a, 1);
    for (const auto& r : all) {
      CAPTURE(r.name);
      CHECK(r.pass);
    }
    CHECK(named(all, "manifold") != nullptr);
    if (a.closed()) {
      CHECK(named(all, "dehn_sommerville_closed") != nullptr);
    } else {
      CHECK(named(all, "dehn_sommerville_boundary") != nullptr);
    }
  }
}

TEST_CASE("json views") {
  auto j = info_json(fixtures::torus_7());
  CHECK(j["vertices"] == 7);
  CHECK(j["f"] == nlohmann::json::array({1, 7, 21, 14}));
  CHECK(j["components"] == 1);
  CHECK(j["reduced_euler"] == -1);
  auto vj = vectors_json(analyze(fixtures::mobius_5(), gf("2")));
  CHECK(vj["field"] == "2");
  CHECK(vj.contains("gbar"));
  CHECK(vj.contains("betti_relative"));
  auto cj = vectors_json(analyze(fixtures::rp2_6(), gf("3")));
  CHECK(cj["h_dprime"].is_null());
  CHECK(cj["h_prime"] == nlohmann::json::array({1, 3, 6, 0}));
}
