#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "facenum/check_report.hpp"
#include "facenum/complex.hpp"
#include "facenum/field.hpp"

namespace facenum {

// Monomial as the sorted multiset of its variables: x1^2 x3 is {1, 1, 3}.
using Monomial = std::vector<Vertex>;
// A linear form; entry v-1 is the coefficient of x_v.
using LinearForm = std::vector<Elem>;

// Degree-q monomials whose support is a face, in lexicographic order.
// Requires at most 64 vertices.
std::vector<Monomial> monomial_basis(const SimplicialComplex& complex, int degree);

// dim k[Δ]_q.
std::int64_t hilbert_dim(const SimplicialComplex& complex, int degree);
// Coefficient of λ^q in (Σ h_i λ^i) / (1 - λ)^d.
std::int64_t hilbert_series_coefficient(const IntSeq& h, int d, int degree);

// k[Δ]/(θ_1..θ_d), optionally with one more generic form ω.
struct GradedQuotient {
  SimplicialComplex complex;
  FieldSpec field;
  std::vector<LinearForm> thetas;  // d forms
  std::optional<LinearForm> omega;
  std::uint64_t seed = 0;
  int attempts = 0;               // draws used, at most 8
  std::vector<std::int64_t> dims; // dims[q] for q = 0..max_degree
  bool lsop_certificate = false;
};

// Kind-Kleinschmidt: for every facet F the columns of F in the d x n
// coefficient matrix are independent.
bool is_lsop(const SimplicialComplex& complex, const std::vector<LinearForm>& forms,
             const FieldSpec& field);

// Draws d (or d+1 with `with_omega`) random forms from a generator seeded with
// `seed`, redrawing up to 8 times until the l.s.o.p. certificate holds, and
// computes the quotient dimensions in degrees 0..max_degree (default d).
// Throws FieldTooSmall below 2^16 elements and GenericityFailure.
GradedQuotient artinian_reduction(const SimplicialComplex& complex, const FieldSpec& field,
                                  std::uint64_t seed, bool with_omega = false,
                                  int max_degree = -1);

// Dimensions of k[Δ]/(forms) in degrees 0..max_degree for given forms.
std::vector<std::int64_t> quotient_dims(const SimplicialComplex& complex,
                                        const std::vector<LinearForm>& forms,
                                        const FieldSpec& field, int max_degree);

struct MapRank {
  std::int64_t rank = 0;
  std::int64_t kernel_dim = 0;
  std::int64_t source_dim = 0;
  std::int64_t target_dim = 0;
};

// ·ω^e : Q_q -> Q_{q+e}. Throws PreconditionViolated without ω and
// DegreeOutOfRange for q < 0, e < 0 or q + e > d + 1.
MapRank multiplication_rank(const GradedQuotient& quotient, int power, int from_degree);

struct RigidityStep {
  int step = 0;  // multiplication by θ_step
  std::int64_t source_dim = 0;
  std::int64_t image_dim = 0;
  std::int64_t kernel_dim = 0;
};

struct RigidityReport {
  FieldSpec field;
  std::uint64_t seed = 0;
  bool rigid = false;
  int first_failure = 0;  // 0 when rigid
  std::vector<RigidityStep> steps;
  std::int64_t dim2_after_d = 0;       // equals h_2 when rigid
  std::int64_t dim2_after_d_plus_1 = 0;  // equals g_2 when rigid
  int attempts = 0;
};

// Injectivity of ·θ_i : (k[Δ]/(θ_1..θ_{i-1}))_1 -> (...)_2 for i = 1..d+1.
// Throws FieldTooSmall or GenericityFailure.
RigidityReport is_k_rigid(const SimplicialComplex& complex, const FieldSpec& field,
                          std::uint64_t seed);

struct UnionDims {
  int components = 0;
  std::int64_t h2 = 0;
  std::int64_t dim2_after_d = 0;
  std::int64_t omega_kernel = 0;  // kernel of ·ω on degree 1
  CheckReport check;
};

// For a disjoint union of b rigid complexes: dim_2 = h_2 + C(d,2)(b-1) and
// the kernel of ·ω on degree 1 is d(b-1).
UnionDims rigidity_union_dims(const SimplicialComplex& complex, const FieldSpec& field,
                              std::uint64_t seed);

// ·ω^{d-2i} : Q_i -> Q_{d-i} is bijective for every i <= d/2. A pass holds at
// the given seed only.
CheckReport lefschetz_check(const SimplicialComplex& sphere, const FieldSpec& field,
                            std::uint64_t seed);

struct ConeIdealDims {
  std::int64_t dim_i1 = 0;
  std::int64_t dim_i2 = 0;
  std::int64_t f0_interior = 0;
  std::int64_t beta0_boundary = 0;
  CheckReport check;
};

// Cones off every boundary component of Δ to get Γ, takes Σ as the union of
// the cones and measures the kernel I of k(Γ) -> k(Σ) in degrees 1 and 2.
// Checks dim I_1 = f°_0 and dim I_1 + d β̃_0(∂Δ) <= dim I_2.
ConeIdealDims boundary_cone_ideal_dims(const SimplicialComplex& complex, const FieldSpec& field,
                                       std::uint64_t seed);

}  // namespace facenum
