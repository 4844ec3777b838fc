#include "facenum/face_ring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <unordered_set>

#include "facenum/errors.hpp"
#include "facenum/generators.hpp"
#include "facenum/matrix.hpp"
#include "facenum/vectors.hpp"

namespace facenum {

namespace {

constexpr int kMaxAttempts = 8;
constexpr std::uint64_t kMinFieldSize = std::uint64_t{1} << 16;

std::uint64_t mask_of(const std::vector<Vertex>& vs) {
  std::uint64_t m = 0;
  for (Vertex v : vs) m |= std::uint64_t{1} << (v - 1);
  return m;
}

// Graded pieces of k[Δ] with multiplication by linear forms.
class Ring {
 public:
  explicit Ring(const SimplicialComplex& complex) : complex_(complex) {
    if (complex.num_vertices() > 64) {
      throw Error(ErrorCode::BadParams, "face ring computations support at most 64 vertices");
    }
    for (int k = -1; k <= complex.dim(); ++k) {
      for (const Face& f : complex.faces(k)) faces_.insert(mask_of(f));
    }
  }

  int n() const { return complex_.num_vertices(); }

  const std::vector<Monomial>& basis(int q) { return piece(q).monomials; }
  std::size_t size(int q) { return piece(q).monomials.size(); }

  // Column of f·m in degree q+1 for basis monomial m of degree q.
  MatrixOverField::Column times_form(int q, const MatrixOverField::Column& v,
                                     const LinearForm& form, const FieldSpec& field) {
    const Piece& up = piece(q + 1);
    const Piece& here = piece(q);
    std::map<std::size_t, Elem> acc;
    for (const auto& [idx, coeff] : v) {
      const Monomial& m = here.monomials[idx];
      const std::uint64_t mm = mask_of(m);
      for (int u = 1; u <= n(); ++u) {
        const Elem c = form[static_cast<std::size_t>(u - 1)];
        if (c == 0) continue;
        if (!faces_.count(mm | (std::uint64_t{1} << (u - 1)))) continue;
        Monomial next = m;
        next.insert(std::upper_bound(next.begin(), next.end(), u), u);
        const std::size_t row = up.index.at(next);
        auto [it, fresh] = acc.emplace(row, 0);
        it->second = field.add(it->second, field.mul(c, coeff));
      }
    }
    MatrixOverField::Column out;
    for (const auto& [row, value] : acc) {
      if (value != 0) out.emplace_back(row, value);
    }
    return out;
  }

  // Span of form·m over all forms and basis monomials m of degree q-1.
  MatrixOverField relations(int q, const std::vector<LinearForm>& forms, const FieldSpec& field) {
    MatrixOverField r(field, size(q), 0);
    if (q == 0) return r;
    for (std::size_t i = 0; i < size(q - 1); ++i) {
      for (const LinearForm& f : forms) r.append_column(times_form(q - 1, {{i, 1}}, f, field));
    }
    return r;
  }

  std::int64_t quotient_dim(int q, const std::vector<LinearForm>& forms, const FieldSpec& field) {
    return static_cast<std::int64_t>(size(q)) -
           static_cast<std::int64_t>(rank(relations(q, forms, field)));
  }

 private:
  struct Piece {
    std::vector<Monomial> monomials;
    std::map<Monomial, std::size_t> index;
  };

  const Piece& piece(int q) {
    auto it = pieces_.find(q);
    if (it != pieces_.end()) return it->second;
    Piece p;
    p.monomials = enumerate(q);
    for (std::size_t i = 0; i < p.monomials.size(); ++i) p.index.emplace(p.monomials[i], i);
    return pieces_.emplace(q, std::move(p)).first->second;
  }

  std::vector<Monomial> enumerate(int q) const {
    std::vector<Monomial> out;
    if (q < 0) return out;
    if (q == 0) return {Monomial{}};
    for (int k = 0; k <= complex_.dim() && k + 1 <= q; ++k) {
      for (const Face& f : complex_.faces(k)) {
        // Exponent vectors with support exactly f and total degree q.
        std::vector<int> e(f.size(), 1);
        const int extra = q - static_cast<int>(f.size());
        std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
          if (pos + 1 == f.size()) {
            e[pos] = 1 + left;
            Monomial m;
            for (std::size_t j = 0; j < f.size(); ++j) m.insert(m.end(), static_cast<std::size_t>(e[j]), f[j]);
            out.push_back(std::move(m));
            return;
          }
          for (int t = 0; t <= left; ++t) {
            e[pos] = 1 + t;
            rec(pos + 1, left - t);
          }
        };
        rec(0, extra);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  const SimplicialComplex& complex_;
  std::unordered_set<std::uint64_t> faces_;
  std::map<int, Piece> pieces_;
};

LinearForm random_form(int n, const FieldSpec& field, std::mt19937_64& rng) {
  LinearForm f(static_cast<std::size_t>(n));
  for (auto& c : f) c = field.random(rng);
  return f;
}

void require_large(const FieldSpec& field) {
  if (field.size() < kMinFieldSize) {
    throw Error(ErrorCode::FieldTooSmall,
                field.to_string() + " has fewer than 2^16 elements; generic forms need more");
  }
}

// d certified forms plus `extra` further forms.
std::pair<std::vector<LinearForm>, int> draw_forms(const SimplicialComplex& complex,
                                                   const FieldSpec& field, std::uint64_t seed,
                                                   int extra) {
  require_large(field);
  std::mt19937_64 rng(seed);
  const int d = complex.rank();
  for (int attempt = 1; attempt <= kMaxAttempts; ++attempt) {
    std::vector<LinearForm> forms;
    for (int i = 0; i < d + extra; ++i) forms.push_back(random_form(complex.num_vertices(), field, rng));
    std::vector<LinearForm> thetas(forms.begin(), forms.begin() + d);
    if (is_lsop(complex, thetas, field)) return {forms, attempt};
  }
  throw Error(ErrorCode::GenericityFailure,
              "no linear system of parameters after " + std::to_string(kMaxAttempts) +
                  " draws at seed " + std::to_string(seed));
}

}  // namespace

std::vector<Monomial> monomial_basis(const SimplicialComplex& complex, int degree) {
  Ring ring(complex);
  return ring.basis(degree);
}

std::int64_t hilbert_dim(const SimplicialComplex& complex, int degree) {
  if (degree < 0) return 0;
  if (degree == 0) return 1;
  const IntSeq f = complex.f_vector();
  std::int64_t total = 0;
  for (int j = 1; j <= complex.rank(); ++j) total += f[j - 1] * binomial(degree - 1, j - 1);
  return total;
}

std::int64_t hilbert_series_coefficient(const IntSeq& h, int d, int degree) {
  if (degree < 0) return 0;
  if (d == 0) return degree == 0 ? h[0] : 0;
  std::int64_t total = 0;
  for (int j = 0; j <= std::min(d, degree); ++j) total += h[j] * binomial(degree - j + d - 1, d - 1);
  return total;
}

bool is_lsop(const SimplicialComplex& complex, const std::vector<LinearForm>& forms,
             const FieldSpec& field) {
  for (const Face& facet : complex.facets()) {
    MatrixOverField m(field, forms.size(), 0);
    for (Vertex v : facet) {
      MatrixOverField::Column col;
      for (std::size_t r = 0; r < forms.size(); ++r) {
        col.emplace_back(r, forms[r][static_cast<std::size_t>(v - 1)]);
      }
      m.append_column(std::move(col));
    }
    if (rank(m) != facet.size()) return false;
  }
  return true;
}

std::vector<std::int64_t> quotient_dims(const SimplicialComplex& complex,
                                        const std::vector<LinearForm>& forms,
                                        const FieldSpec& field, int max_degree) {
  Ring ring(complex);
  std::vector<std::int64_t> dims;
  for (int q = 0; q <= max_degree; ++q) dims.push_back(ring.quotient_dim(q, forms, field));
  return dims;
}

GradedQuotient artinian_reduction(const SimplicialComplex& complex, const FieldSpec& field,
                                  std::uint64_t seed, bool with_omega, int max_degree) {
  auto [forms, attempts] = draw_forms(complex, field, seed, with_omega ? 1 : 0);
  GradedQuotient q;
  q.complex = complex;
  q.field = field;
  q.seed = seed;
  q.attempts = attempts;
  q.lsop_certificate = true;
  const int d = complex.rank();
  q.thetas.assign(forms.begin(), forms.begin() + d);
  if (with_omega) q.omega = forms.back();
  q.dims = quotient_dims(complex, q.thetas, field, max_degree < 0 ? d : max_degree);
  return q;
}

MapRank multiplication_rank(const GradedQuotient& quotient, int power, int from_degree) {
  if (!quotient.omega) {
    throw Error(ErrorCode::PreconditionViolated, "quotient was built without ω");
  }
  const int d = quotient.complex.rank();
  if (from_degree < 0 || power < 0 || from_degree + power > d + 1) {
    throw Error(ErrorCode::DegreeOutOfRange, "multiplication from degree " +
                                                 std::to_string(from_degree) + " by ω^" +
                                                 std::to_string(power));
  }
  const FieldSpec& field = quotient.field;
  Ring ring(quotient.complex);
  const int target = from_degree + power;
  MatrixOverField images(field, ring.size(target), 0);
  for (std::size_t i = 0; i < ring.size(from_degree); ++i) {
    MatrixOverField::Column v{{i, 1}};
    for (int e = 0; e < power; ++e) v = ring.times_form(from_degree + e, v, *quotient.omega, field);
    images.append_column(std::move(v));
  }
  const MatrixOverField rel = ring.relations(target, quotient.thetas, field);
  MapRank out;
  out.rank = static_cast<std::int64_t>(image_dim_mod(images, rel));
  out.source_dim = ring.quotient_dim(from_degree, quotient.thetas, field);
  out.target_dim = static_cast<std::int64_t>(ring.size(target)) - static_cast<std::int64_t>(rank(rel));
  out.kernel_dim = out.source_dim - out.rank;
  return out;
}

RigidityReport is_k_rigid(const SimplicialComplex& complex, const FieldSpec& field,
                          std::uint64_t seed) {
  auto [forms, attempts] = draw_forms(complex, field, seed, 1);
  const int d = complex.rank();
  Ring ring(complex);
  RigidityReport report;
  report.field = field;
  report.seed = seed;
  report.attempts = attempts;
  for (int i = 1; i <= d + 1; ++i) {
    const std::vector<LinearForm> before(forms.begin(), forms.begin() + (i - 1));
    const MatrixOverField rel2 = ring.relations(2, before, field);
    MatrixOverField images(field, ring.size(2), 0);
    for (std::size_t v = 0; v < ring.size(1); ++v) {
      images.append_column(ring.times_form(1, {{v, 1}}, forms[static_cast<std::size_t>(i - 1)], field));
    }
    RigidityStep step;
    step.step = i;
    step.source_dim = ring.quotient_dim(1, before, field);
    step.image_dim = static_cast<std::int64_t>(image_dim_mod(images, rel2));
    step.kernel_dim = step.source_dim - step.image_dim;
    if (step.kernel_dim != 0 && report.first_failure == 0) report.first_failure = i;
    report.steps.push_back(step);
  }
  report.rigid = report.first_failure == 0;
  const std::vector<LinearForm> thetas(forms.begin(), forms.begin() + d);
  report.dim2_after_d = ring.quotient_dim(2, thetas, field);
  report.dim2_after_d_plus_1 = ring.quotient_dim(2, forms, field);
  return report;
}

UnionDims rigidity_union_dims(const SimplicialComplex& complex, const FieldSpec& field,
                              std::uint64_t seed) {
  const GradedQuotient q = artinian_reduction(complex, field, seed, true, 2);
  const int d = complex.rank();
  UnionDims out;
  out.components = static_cast<int>(connected_components(complex).size());
  out.h2 = f_to_h(complex.f_vector(), d)[2];
  out.dim2_after_d = q.dims[2];
  out.omega_kernel = multiplication_rank(q, 1, 1).kernel_dim;
  const std::int64_t b = out.components;
  out.check = CheckReport("rigidity_union");
  out.check.add("dim2", out.dim2_after_d - (out.h2 + binomial(d, 2) * (b - 1)), Relation::Zero);
  out.check.add("omega_kernel", out.omega_kernel - d * (b - 1), Relation::Zero);
  out.check.context["components"] = b;
  out.check.context["h2"] = out.h2;
  out.check.context["dim2_after_d"] = out.dim2_after_d;
  out.check.context["omega_kernel"] = out.omega_kernel;
  out.check.context["seed"] = seed;
  return out;
}

CheckReport lefschetz_check(const SimplicialComplex& sphere, const FieldSpec& field,
                            std::uint64_t seed) {
  const GradedQuotient q = artinian_reduction(sphere, field, seed, true);
  const int d = sphere.rank();
  CheckReport r("hard_lefschetz");
  for (int i = 0; 2 * i <= d; ++i) {
    const MapRank m = multiplication_rank(q, d - 2 * i, i);
    r.add("source_i=" + std::to_string(i), m.source_dim - m.rank, Relation::Zero);
    r.add("target_i=" + std::to_string(i), m.target_dim - m.rank, Relation::Zero);
  }
  r.context["dims"] = q.dims;
  r.context["field"] = field.to_string();
  r.context["seed"] = seed;
  r.note("a pass holds at this seed only");
  return r;
}

ConeIdealDims boundary_cone_ideal_dims(const SimplicialComplex& complex, const FieldSpec& field,
                                       std::uint64_t seed) {
  const ConedBoundary coned = cone_off_boundary(complex, field);
  const GradedQuotient qg = artinian_reduction(coned.gamma, field, seed, false, 2);

  std::vector<LinearForm> restricted;
  for (const LinearForm& theta : qg.thetas) {
    LinearForm r;
    for (Label l : coned.sigma.labels()) {
      r.push_back(theta[static_cast<std::size_t>(*coned.gamma.find_vertex(l) - 1)]);
    }
    restricted.push_back(std::move(r));
  }
  const std::vector<std::int64_t> ds = quotient_dims(coned.sigma, restricted, field, 2);

  ConeIdealDims out;
  out.dim_i1 = qg.dims[1] - ds[1];
  out.dim_i2 = qg.dims[2] - ds[2];
  out.f0_interior = complex.num_vertices() -
                    static_cast<std::int64_t>(coned.sigma.num_vertices() - coned.apexes.size());
  out.beta0_boundary = static_cast<std::int64_t>(coned.components.size()) - 1;
  const int d = complex.rank();
  out.check = CheckReport("cone_ideal_dims");
  out.check.add("dim_I1_minus_f0_interior", out.dim_i1 - out.f0_interior, Relation::Zero);
  out.check.add("dim_I2_minus_lower_bound", out.dim_i2 - (out.dim_i1 + d * out.beta0_boundary),
                Relation::NonNegative);
  if (!is_lsop(coned.sigma, restricted, field)) out.check.fail("restricted forms are not an l.s.o.p. on Σ");
  out.check.context["dim_I1"] = out.dim_i1;
  out.check.context["dim_I2"] = out.dim_i2;
  out.check.context["f0_interior"] = out.f0_interior;
  out.check.context["beta0_boundary"] = out.beta0_boundary;
  out.check.context["seed"] = seed;
  return out;
}

}  // namespace facenum
