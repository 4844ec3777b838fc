#pragma once

#include <optional>

#include "facenum/check_report.hpp"
#include "facenum/complex.hpp"
#include "facenum/matrix.hpp"

namespace facenum {

// Reduced Betti numbers of Δ, of ∂Δ, of the pair, and the ranks of
// ψ_i : H_{i-1}(Δ) -> H_{i-1}(Δ, ∂Δ), all over one field.
struct BettiProfile {
  FieldSpec field;
  IntSeq beta;                          // β̃_{-1..d-1}(Δ)
  std::optional<IntSeq> beta_boundary;  // β̃ of ∂Δ; absent when ∂Δ = ∅
  IntSeq beta_relative;                 // β_{-1..d-1}(Δ, ∂Δ)
  IntSeq im_psi;                        // dim Im ψ_i, i = 1..d
};

// ∂_i : C_i -> C_{i-1} of the augmented chain complex (∂_0 sends every vertex
// to the empty face). Rows and columns follow lexicographic face order;
// the face dropped at position k carries sign (-1)^k.
MatrixOverField boundary_matrix(const SimplicialComplex& complex, int i, const FieldSpec& field);

// β̃_{-1..d-1}.
IntSeq betti(const SimplicialComplex& complex, const FieldSpec& field);

// Homology of C_*(Δ)/C_*(B) with the augmented chain complex. A subcomplex
// without vertices is treated as void, which makes the result betti(Δ);
// otherwise the empty face lies in B and this is ordinary relative homology.
// Indexed -1..d-1. Throws NotASubcomplex.
IntSeq betti_relative(const SimplicialComplex& complex, const SimplicialComplex& sub,
                      const FieldSpec& field);

// dim Im(H_{i-1}(Δ) -> H_{i-1}(Δ, B)) for 1 <= i <= d, computed as
// dim((Z_{i-1} + R)/R) with R = ∂C_i(Δ) + C_{i-1}(B). Throws BadIndex.
std::int64_t im_psi(const SimplicialComplex& complex, const SimplicialComplex& boundary, int i,
                    const FieldSpec& field);

BettiProfile betti_profile(const SimplicialComplex& complex, const SimplicialComplex& boundary,
                           const FieldSpec& field);

// Long exact sequence of the pair: for each 1 <= i <= d,
//   Σ_{j=0}^{i-1} (-1)^{j-i-1} [β_j(Δ,∂Δ) - β̃_{j-1}(∂Δ) + β̃_{j-1}(Δ)] = dim Im ψ_i.
// Throws EmptyBoundary when the profile has no boundary.
CheckReport les_identity_check(const BettiProfile& profile);
CheckReport les_identity_check(const SimplicialComplex& complex,
                               const SimplicialComplex& boundary, const FieldSpec& field);

}  // namespace facenum
