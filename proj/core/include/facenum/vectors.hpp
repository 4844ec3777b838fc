#pragma once

#include <cstdint>
#include <optional>

#include "facenum/check_report.hpp"
#include "facenum/field.hpp"
#include "facenum/sequence.hpp"

namespace facenum {

// Face numbers of one complex over one field. Betti sequences are reduced
// and indexed by homology degree starting at -1.
struct FaceVectorSet {
  FieldSpec field;
  int d = 0;
  IntSeq f;                           // f_{-1..d-1}
  IntSeq h;                           // h_{0..d}
  IntSeq g;                           // g_{0..d}
  IntSeq betti;                       // β̃_{-1..d-1}
  IntSeq h_prime;                     // h'_{0..d}
  std::optional<IntSeq> h_dprime;     // only for connected orientable manifolds
  // Present when the boundary is nonempty.
  std::optional<IntSeq> f_interior;   // f°_{-1..d-1}
  std::optional<IntSeq> h_interior;   // h°_{0..d}
  std::optional<IntSeq> g_boundary;   // g_i(∂Δ), i = 0..d
  std::optional<IntSeq> gbar;         // ḡ_i(∂Δ), i = 0..d
  std::optional<IntSeq> im_psi;       // i = 1..d
};

// h_i = Σ_j (-1)^{i-j} C(d-j, i-j) f_{j-1}. f must be indexed -1..d-1.
IntSeq f_to_h(const IntSeq& f, int d);
// f_{j-1} = Σ_i C(d-i, j-i) h_i. h must be indexed 0..d.
IntSeq h_to_f(const IntSeq& h, int d);
// g_i = h_i - h_{i-1} for i = 0..last.
IntSeq g_from_h(const IntSeq& h, int last);

// h'_i = h_i + C(d,i) Σ_{j=1}^{i-1} (-1)^{i-j-1} β̃_{j-1}.
IntSeq h_prime(const IntSeq& h, const IntSeq& betti, int d);

// h''_i = h'_i - C(d,i) β̃_{i-1} for i < d and h''_d = h'_d.
IntSeq h_dprime_closed(const IntSeq& h_prime_seq, const IntSeq& betti, int d);

struct BoundaryHDprime {
  IntSeq values;  // h''_{0..d}
  // For even d the two defining branches meet at i = d/2; this is
  // (lower branch) - (upper branch) there, and 0 for odd d.
  std::int64_t middle_gap = 0;
};

// h''_i = h'_i - ḡ_i - C(d,i) dim Im ψ_i for i <= d/2,
// h''_i = h'_i - C(d,i) β̃_{i-1} above. Throws EmptyBoundary when ḡ is empty.
BoundaryHDprime h_dprime_boundary(const IntSeq& h_prime_seq, const IntSeq& gbar_seq,
                                  const IntSeq& im_psi_seq, const IntSeq& betti, int d);

// (h'_{d-i} - C(d,d-i) β̃_{d-i-1}) - (h'_i - ḡ_i - C(d,i) dim Im ψ_i) for
// 0 <= i < d: the two branches of h'' with boundary are mirror images.
CheckReport hdprime_boundary_symmetry(const IntSeq& h_prime_seq, const IntSeq& gbar_seq,
                                      const IntSeq& im_psi_seq, const IntSeq& betti, int d);

// ḡ_i = h'_i(∂) - h'_{i-1}(∂) + C(d-1, i-1) β̃_{i-2}(∂) for i = 0..d, where d is
// the rank of the bounded complex (so ∂ has rank d-1).
IntSeq gbar(const IntSeq& h_prime_boundary, const IntSeq& betti_boundary, int d);

// m^{<i>}: C(x+1, i+1) for the real x > i-1 with C(x, i) = m; 0 for m = 0.
// Throws NegativeInput for m < 0 and BadParams for i < 1.
long double pseudopower(long double m, int i);

// Dehn-Sommerville for closed homology manifolds.
CheckReport ds_closed_residual(const IntSeq& h, std::int64_t reduced_euler, int d);
// Dehn-Sommerville for manifolds with boundary.
CheckReport ds_boundary_residual(const IntSeq& h, std::int64_t reduced_euler,
                                 const IntSeq& g_boundary, int d);
// (h'_{d-i} - h'_i) - C(d,i)(β̃_i - β̃_{i-1}) for 0 <= i <= d-2.
CheckReport hprime_ds_residual(const IntSeq& h_prime_seq, const IntSeq& betti, int d);
// h'_i >= C(d,i) β̃_{i-1} and h'_{i+1} <= (h'_i - C(d,i) β̃_{i-1})^{<i>}, 1 <= i <= d.
CheckReport macaulay_bounds(const IntSeq& h_prime_seq, const IntSeq& betti, int d);

// C(n-k-2, k+1) - C(2k+1, k) β̃_k for a 2k-manifold on n vertices (d = 2k+1).
// Throws WrongParity for even d.
CheckReport kuhnel_middle_check(std::int64_t n, int d, const IntSeq& betti);

// Face numbers of the extremal 2k-manifold on 3k+3 vertices with β̃_k = 1
// as the only nonzero Betti number at or below k.
struct MkReference {
  int k = 0;
  int d = 0;
  std::int64_t n = 0;
  IntSeq h;        // h_{0..d}
  IntSeq h_prime;  // h'_{0..d}
  IntSeq f;        // f_{-1..d-1}
  IntSeq betti;    // β̃_{-1..d-1}
};
MkReference mk_reference(int k);

struct MiddleReconstruction {
  IntSeq f;                 // f_{-1..2k}
  IntSeq beta_coefficient;  // coefficient of β_k in f_{i-1}, i = k+1..2k+1
  CheckReport coefficients; // nonnegativity and decrease of the a_j terms
};
// f-numbers of a 2k-manifold with β̃_l = 0 for l < k from h'_{0..k} and β̃_k.
MiddleReconstruction f_from_middle_betti(const IntSeq& h_prime_low, std::int64_t beta_k, int k);

// f_{i-1}(Δ) - f_{i-1}(M_k), 1 <= i <= 2k+1. Throws BettiPreconditionViolated
// unless β̃_l = 0 for l < k and β̃_k >= 1.
CheckReport kalai_comparison(const IntSeq& f, const IntSeq& betti, int k);

// C(n-d+j-1, j+1) - C(d+1, j+1) β̃_j, 0 <= j <= floor(d/2)-1; throws BadIndex.
// Equality adds the assertion β̃_i = 0 for the other i in range.
CheckReport kuhnel_general_check(std::int64_t n, int d, const IntSeq& betti, int j);
// (h''_{j+1} - h''_j) - C(d,j) β̃_j for 0 <= j <= floor(d/2)-1.
CheckReport kalai_monotonicity_check(const IntSeq& h_dprime_seq, const IntSeq& betti, int d);

// h_2 - [f°_0 + C(d,2) β̃_1(∂) + d β̃_0(∂)] for d >= 5, and
// h_2 - [f°_0 + 3 β̃_1(∂) + 4 β̃_0(∂)] for d = 4 in characteristic 2.
// Throws DimensionTooSmall for d < 4, UnsupportedCharacteristic for d = 4
// in odd characteristic.
CheckReport h2_boundary_check(std::int64_t h2, std::int64_t f0_interior,
                              std::int64_t beta1_boundary, std::int64_t beta0_boundary, int d,
                              std::uint64_t characteristic);

}  // namespace facenum
