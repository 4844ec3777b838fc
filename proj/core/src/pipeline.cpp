#include "facenum/pipeline.hpp"

#include <string>

#include "facenum/errors.hpp"
#include "facenum/face_ring.hpp"

namespace facenum {

namespace {

nlohmann::json seq(const IntSeq& s) { return s.values(); }

bool homology_sphere(const Analysis& a) {
  if (!a.manifold.usable() || !a.closed()) return false;
  const int d = a.complex.rank();
  for (int j = -1; j < d - 1; ++j) {
    if (a.profile.beta[j] != 0) return false;
  }
  return a.profile.beta[d - 1] == 1;
}

}  // namespace

Analysis analyze(const SimplicialComplex& complex, const FieldSpec& field) {
  Analysis a{complex, field, is_homology_manifold(complex, field), {}, {}};
  a.profile = betti_profile(complex, a.manifold.boundary, field);
  const int d = complex.rank();

  FaceVectorSet& v = a.vectors;
  v.field = field;
  v.d = d;
  v.f = complex.f_vector();
  v.h = f_to_h(v.f, d);
  v.g = g_from_h(v.h, d);
  v.betti = a.profile.beta;
  v.h_prime = h_prime(v.h, v.betti, d);

  const bool bounded = a.manifold.is_manifold && a.manifold.has_boundary();
  if (bounded) {
    const SimplicialComplex& bd = a.manifold.boundary;
    const IntSeq fb = bd.f_vector();
    std::vector<std::int64_t> fi;
    for (int j = -1; j <= d - 1; ++j) fi.push_back(v.f[j] - fb[j]);
    v.f_interior = IntSeq(-1, fi);
    v.h_interior = f_to_h(*v.f_interior, d);
    if (bd.rank() == d - 1) {
      const IntSeq hb = f_to_h(fb, d - 1);
      v.g_boundary = g_from_h(hb, d);
      v.gbar = gbar(h_prime(hb, *a.profile.beta_boundary, d - 1), *a.profile.beta_boundary, d);
    }
    v.im_psi = a.profile.im_psi;
  }
  if (a.connected_orientable_manifold()) {
    if (a.closed()) {
      v.h_dprime = h_dprime_closed(v.h_prime, v.betti, d);
    } else if (v.gbar) {
      v.h_dprime = h_dprime_boundary(v.h_prime, *v.gbar, a.profile.im_psi, v.betti, d).values;
    }
  }
  return a;
}

CheckReport manifold_check(const Analysis& a) {
  const ManifoldReport& m = a.manifold;
  CheckReport r("manifold");
  if (!m.is_pure) r.fail("complex is not pure");
  if (!m.is_manifold) r.fail("a face link has the wrong homology");
  if (!m.boundary_is_closed_manifold) r.fail("boundary is not a closed homology manifold");
  r.context["field"] = a.field.to_string();
  r.context["is_pure"] = m.is_pure;
  r.context["is_manifold"] = m.is_manifold;
  r.context["boundary_facets"] = m.boundary.labeled_facets();
  r.context["boundary_is_closed_manifold"] = m.boundary_is_closed_manifold;
  r.context["connected"] = m.connected;
  r.context["orientable"] = m.orientable;
  nlohmann::json w = nlohmann::json::array();
  for (const auto& x : m.witnesses) {
    w.push_back({{"face", x.face}, {"degree", x.degree}, {"reason", x.reason}});
  }
  r.context["witnesses"] = w;
  return r;
}

std::vector<CheckReport> ds_checks(const Analysis& a) {
  const FaceVectorSet& v = a.vectors;
  const int d = v.d;
  std::vector<CheckReport> out;
  if (!a.manifold.usable()) {
    CheckReport r("dehn_sommerville");
    r.fail("requires a homology manifold with closed-manifold boundary");
    out.push_back(r);
    return out;
  }
  const std::int64_t chi = a.complex.reduced_euler();
  if (a.closed()) {
    out.push_back(ds_closed_residual(v.h, chi, d));
    if (a.connected_orientable_manifold()) out.push_back(hprime_ds_residual(v.h_prime, v.betti, d));
  } else {
    out.push_back(ds_boundary_residual(v.h, chi, *v.g_boundary, d));
    out.push_back(les_identity_check(a.profile));
    if (a.connected_orientable_manifold()) {
      out.push_back(hdprime_boundary_symmetry(v.h_prime, *v.gbar, a.profile.im_psi, v.betti, d));
      const BoundaryHDprime hd =
          h_dprime_boundary(v.h_prime, *v.gbar, a.profile.im_psi, v.betti, d);
      CheckReport mid("hdprime_boundary_middle");
      if (d % 2 == 0) {
        mid.add("i=" + std::to_string(d / 2), hd.middle_gap, Relation::Zero);
      } else {
        mid.note("odd d: branches do not meet");
      }
      out.push_back(mid);
    }
  }
  for (auto& r : out) r.context["field"] = a.field.to_string();
  return out;
}

CheckReport schenzel_check(const Analysis& a, std::uint64_t seed) {
  const GradedQuotient q = artinian_reduction(a.complex, a.field, seed);
  CheckReport r("schenzel");
  for (int i = 0; i <= a.vectors.d; ++i) {
    r.add("q=" + std::to_string(i), q.dims[static_cast<std::size_t>(i)] - a.vectors.h_prime[i],
          Relation::Zero);
  }
  if (!a.manifold.is_manifold) r.note("input is not a homology manifold");
  r.context["dims"] = q.dims;
  r.context["h_prime"] = seq(a.vectors.h_prime);
  r.context["field"] = a.field.to_string();
  r.context["seed"] = seed;
  r.context["attempts"] = q.attempts;
  return r;
}

std::vector<CheckReport> bound_checks(const Analysis& a) {
  const FaceVectorSet& v = a.vectors;
  const int d = v.d;
  const std::int64_t n = a.complex.num_vertices();
  std::vector<CheckReport> out;
  out.push_back(macaulay_bounds(v.h_prime, v.betti, d));
  if (a.connected_orientable_manifold() && a.closed()) {
    out.push_back(kalai_monotonicity_check(*v.h_dprime, v.betti, d));
    for (int j = 0; j <= d / 2 - 1; ++j) out.push_back(kuhnel_general_check(n, d, v.betti, j));
    if (d % 2 == 1 && d >= 3) {
      const int k = (d - 1) / 2;
      out.push_back(kuhnel_middle_check(n, d, v.betti));
      bool eligible = v.betti[k] >= 1;
      for (int l = 0; l < k; ++l) eligible = eligible && v.betti[l] == 0;
      if (eligible) out.push_back(kalai_comparison(v.f, v.betti, k));
    }
  }
  for (auto& r : out) r.context["field"] = a.field.to_string();
  return out;
}

CheckReport rigidity_check(const Analysis& a, std::uint64_t seed) {
  const RigidityReport rr = is_k_rigid(a.complex, a.field, seed);
  CheckReport r("rigidity");
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : rr.steps) {
    r.add("step=" + std::to_string(s.step), s.kernel_dim, Relation::Zero);
    steps.push_back({{"step", s.step},
                     {"source_dim", s.source_dim},
                     {"image_dim", s.image_dim},
                     {"kernel_dim", s.kernel_dim}});
  }
  r.context["steps"] = steps;
  r.context["dim2_after_d"] = rr.dim2_after_d;
  r.context["dim2_after_d_plus_1"] = rr.dim2_after_d_plus_1;
  r.context["field"] = a.field.to_string();
  r.context["seed"] = seed;
  return r;
}

CheckReport h2_check(const Analysis& a) {
  if (a.closed() || !a.connected_orientable_manifold()) {
    throw Error(ErrorCode::PreconditionViolated,
                "h2 bound needs a connected orientable manifold with nonempty boundary");
  }
  const FaceVectorSet& v = a.vectors;
  const IntSeq& bb = *a.profile.beta_boundary;
  CheckReport r = h2_boundary_check(v.h[2], (*v.f_interior)[0], bb[1], bb[0], v.d,
                                    a.field.characteristic());
  r.context["field"] = a.field.to_string();
  return r;
}

std::vector<CheckReport> lefschetz_checks(const Analysis& a, std::uint64_t seed) {
  std::vector<CheckReport> out;
  if (homology_sphere(a)) {
    out.push_back(lefschetz_check(a.complex, a.field, seed));
    out.back().name = "hard_lefschetz";
  }
  for (Vertex v = 1; v <= a.complex.num_vertices(); ++v) {
    CheckReport r = lefschetz_check(link(a.complex, {v}), a.field, seed);
    r.name = "hard_lefschetz_link_" + std::to_string(a.complex.label(v));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckReport> all_checks(const Analysis& a, std::uint64_t seed) {
  std::vector<CheckReport> out{manifold_check(a)};
  CheckReport skipped("skipped");
  auto append = [&](std::vector<CheckReport> rs) {
    for (auto& r : rs) out.push_back(std::move(r));
  };
  append(ds_checks(a));
  const bool large = a.field.size() >= (std::uint64_t{1} << 16);
  if (large) {
    out.push_back(schenzel_check(a, seed));
    out.push_back(rigidity_check(a, seed));
  } else {
    skipped.note("schenzel, rigidity and lefschetz need a field with at least 2^16 elements");
  }
  if (a.manifold.usable()) {
    append(bound_checks(a));
  } else {
    skipped.note("bounds need a homology manifold");
  }
  if (!a.closed() && a.connected_orientable_manifold() && a.vectors.d >= 4 &&
      (a.vectors.d > 4 || a.field.characteristic() == 2)) {
    out.push_back(h2_check(a));
  } else {
    skipped.note("h2 bound not applicable");
  }
  if (large && a.manifold.usable() && a.closed()) {
    append(lefschetz_checks(a, seed));
  } else if (large) {
    skipped.note("lefschetz checks run on closed manifolds only");
  }
  out.push_back(skipped);
  return out;
}

nlohmann::json info_json(const SimplicialComplex& complex) {
  return {{"vertices", complex.num_vertices()},
          {"dim", complex.dim()},
          {"facets", complex.facets().size()},
          {"f", seq(complex.f_vector())},
          {"pure", complex.is_pure()},
          {"components", connected_components(complex).size()},
          {"reduced_euler", complex.reduced_euler()}};
}

nlohmann::json vectors_json(const Analysis& a) {
  const FaceVectorSet& v = a.vectors;
  nlohmann::json j = {{"field", a.field.to_string()},
                      {"d", v.d},
                      {"f", seq(v.f)},
                      {"h", seq(v.h)},
                      {"g", seq(v.g)},
                      {"betti", seq(v.betti)},
                      {"h_prime", seq(v.h_prime)}};
  j["h_dprime"] = v.h_dprime ? nlohmann::json(seq(*v.h_dprime)) : nlohmann::json(nullptr);
  if (v.f_interior) {
    j["f_interior"] = seq(*v.f_interior);
    j["h_interior"] = seq(*v.h_interior);
    if (v.g_boundary) j["g_boundary"] = seq(*v.g_boundary);
    if (v.gbar) j["gbar"] = seq(*v.gbar);
    j["im_psi"] = seq(*v.im_psi);
    j["betti_boundary"] = seq(*a.profile.beta_boundary);
    j["betti_relative"] = seq(a.profile.beta_relative);
  }
  return j;
}

}  // namespace facenum
