#include "facenum/homology.hpp"

#include <algorithm>
#include <string>

#include "facenum/errors.hpp"

namespace facenum {

namespace {

// Indices (into complex.faces(k)) of faces that survive in C_k(Δ)/C_k(B),
// and the inverse map; -1 marks faces of B.
struct RelativeChains {
  std::vector<std::vector<std::size_t>> kept;   // by k+1
  std::vector<std::vector<long>> position;      // by k+1
};

RelativeChains relative_chains(const SimplicialComplex& complex, const SimplicialComplex& sub) {
  const int d = complex.rank();
  RelativeChains rc;
  rc.kept.resize(static_cast<std::size_t>(d + 1));
  rc.position.resize(static_cast<std::size_t>(d + 1));

  std::vector<std::vector<bool>> in_sub(static_cast<std::size_t>(d + 1));
  for (int k = -1; k < d; ++k) {
    in_sub[static_cast<std::size_t>(k + 1)].assign(complex.faces(k).size(), false);
  }
  if (sub.has_vertices()) {
    for (int k = -1; k <= sub.dim(); ++k) {
      for (const Face& f : sub.faces(k)) {
        std::vector<Label> labels = sub.to_labels(f);
        Face mapped;
        for (Label l : labels) {
          auto v = complex.find_vertex(l);
          if (!v) throw Error(ErrorCode::NotASubcomplex, "vertex label " + std::to_string(l));
          mapped.push_back(*v);
        }
        std::sort(mapped.begin(), mapped.end());
        auto idx = complex.face_index(mapped);
        if (!idx) throw Error(ErrorCode::NotASubcomplex, "face of B missing from Δ");
        in_sub[static_cast<std::size_t>(k + 1)][*idx] = true;
      }
    }
  }
  for (int k = -1; k < d; ++k) {
    const auto slot = static_cast<std::size_t>(k + 1);
    rc.position[slot].assign(complex.faces(k).size(), -1);
    for (std::size_t a = 0; a < complex.faces(k).size(); ++a) {
      if (in_sub[slot][a]) continue;
      rc.position[slot][a] = static_cast<long>(rc.kept[slot].size());
      rc.kept[slot].push_back(a);
    }
  }
  return rc;
}

MatrixOverField relative_boundary(const SimplicialComplex& complex, const RelativeChains& rc,
                                  int i, const FieldSpec& field) {
  const int d = complex.rank();
  const std::size_t rows =
      (i - 1 >= -1 && i - 1 < d) ? rc.kept[static_cast<std::size_t>(i)].size() : 0;
  MatrixOverField m(field, rows, 0);
  if (i < -1 || i >= d) return m;
  const Elem minus_one = field.neg(FieldSpec::one());
  for (std::size_t a : rc.kept[static_cast<std::size_t>(i + 1)]) {
    const Face& f = complex.faces(i)[a];
    MatrixOverField::Column col;
    if (i >= 0) {
      for (std::size_t k = 0; k < f.size(); ++k) {
        Face g = f;
        g.erase(g.begin() + static_cast<long>(k));
        const std::size_t gi = *complex.face_index(g);
        const long row = rc.position[static_cast<std::size_t>(i)][gi];
        if (row < 0) continue;
        col.emplace_back(static_cast<std::size_t>(row), k % 2 == 0 ? FieldSpec::one() : minus_one);
      }
    }
    m.append_column(std::move(col));
  }
  return m;
}

IntSeq homology_of(const SimplicialComplex& complex, const RelativeChains& rc,
                   const FieldSpec& field) {
  const int d = complex.rank();
  // rank ∂_k for k = -1..d; ∂_{-1} and ∂_d vanish.
  std::vector<std::int64_t> ranks(static_cast<std::size_t>(d + 2), 0);
  for (int k = 0; k < d; ++k) {
    ranks[static_cast<std::size_t>(k + 1)] =
        static_cast<std::int64_t>(rank(relative_boundary(complex, rc, k, field)));
  }
  std::vector<std::int64_t> beta;
  for (int k = -1; k < d; ++k) {
    const auto chains = static_cast<std::int64_t>(rc.kept[static_cast<std::size_t>(k + 1)].size());
    beta.push_back(chains - ranks[static_cast<std::size_t>(k + 1)] -
                   ranks[static_cast<std::size_t>(k + 2)]);
  }
  return IntSeq(-1, std::move(beta));
}

}  // namespace

MatrixOverField boundary_matrix(const SimplicialComplex& complex, int i, const FieldSpec& field) {
  if (i < -1 || i > complex.dim()) {
    throw Error(ErrorCode::BadDimension, "boundary map in degree " + std::to_string(i));
  }
  const RelativeChains rc = relative_chains(complex, SimplicialComplex{});
  return relative_boundary(complex, rc, i, field);
}

IntSeq betti(const SimplicialComplex& complex, const FieldSpec& field) {
  return homology_of(complex, relative_chains(complex, SimplicialComplex{}), field);
}

IntSeq betti_relative(const SimplicialComplex& complex, const SimplicialComplex& sub,
                      const FieldSpec& field) {
  return homology_of(complex, relative_chains(complex, sub), field);
}

std::int64_t im_psi(const SimplicialComplex& complex, const SimplicialComplex& boundary, int i,
                    const FieldSpec& field) {
  if (i < 1 || i > complex.rank()) {
    throw Error(ErrorCode::BadIndex, "psi index " + std::to_string(i));
  }
  if (!boundary.has_vertices()) return betti(complex, field)[i - 1];

  const RelativeChains rc = relative_chains(complex, boundary);  // validates B ⊆ Δ
  const int k = i - 1;
  const MatrixOverField cycles = kernel_basis(boundary_matrix(complex, k, field));
  MatrixOverField relations(field, complex.faces(k).size(), 0);
  if (k + 1 <= complex.dim()) relations = boundary_matrix(complex, k + 1, field);
  const auto& pos = rc.position[static_cast<std::size_t>(k + 1)];
  for (std::size_t a = 0; a < pos.size(); ++a) {
    if (pos[a] < 0) relations.append_column({{a, FieldSpec::one()}});
  }
  return static_cast<std::int64_t>(image_dim_mod(cycles, relations));
}

BettiProfile betti_profile(const SimplicialComplex& complex, const SimplicialComplex& boundary,
                           const FieldSpec& field) {
  BettiProfile p{field, betti(complex, field), std::nullopt,
                 betti_relative(complex, boundary, field), IntSeq{}};
  if (boundary.has_vertices()) p.beta_boundary = betti(boundary, field);
  std::vector<std::int64_t> psi;
  for (int i = 1; i <= complex.rank(); ++i) psi.push_back(im_psi(complex, boundary, i, field));
  p.im_psi = IntSeq(1, std::move(psi));
  return p;
}

CheckReport les_identity_check(const BettiProfile& profile) {
  if (!profile.beta_boundary) {
    throw Error(ErrorCode::EmptyBoundary, "long exact sequence check needs a boundary");
  }
  const IntSeq& rel = profile.beta_relative;
  const IntSeq& bd = *profile.beta_boundary;
  const IntSeq& beta = profile.beta;
  CheckReport report("les_identity");
  report.context["field"] = profile.field.to_string();
  for (int i = 1; i <= profile.im_psi.last(); ++i) {
    std::int64_t sum = 0;
    for (int j = 0; j <= i - 1; ++j) {
      const std::int64_t term = rel[j] - bd[j - 1] + beta[j - 1];
      sum += ((j - i - 1) % 2 == 0) ? term : -term;
    }
    report.add("i=" + std::to_string(i), sum - profile.im_psi[i], Relation::Zero);
  }
  report.context["im_psi"] = profile.im_psi.values();
  report.context["beta_relative"] = rel.values();
  return report;
}

CheckReport les_identity_check(const SimplicialComplex& complex,
                               const SimplicialComplex& boundary, const FieldSpec& field) {
  return les_identity_check(betti_profile(complex, boundary, field));
}

}  // namespace facenum
