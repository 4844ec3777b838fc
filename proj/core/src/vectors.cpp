#include "facenum/vectors.hpp"

#include <cmath>
#include <string>

#include "facenum/errors.hpp"

namespace facenum {

namespace {

std::int64_t sign(int e) { return (e % 2 == 0) ? 1 : -1; }

std::string idx(const char* name, int i) { return std::string(name) + "=" + std::to_string(i); }

void require_h(const IntSeq& h, int d, const char* what) {
  if (h.first() != 0 || h.last() != d) {
    throw Error(ErrorCode::LengthMismatch,
                std::string(what) + " must be indexed 0.." + std::to_string(d));
  }
}

nlohmann::json seq_json(const IntSeq& s) {
  return {{"first", s.first()}, {"values", s.values()}};
}

}  // namespace

IntSeq f_to_h(const IntSeq& f, int d) {
  if (d < 0 || f.first() != -1 || f.last() != d - 1) {
    throw Error(ErrorCode::LengthMismatch, "f must be indexed -1.." + std::to_string(d - 1));
  }
  std::vector<std::int64_t> h;
  for (int i = 0; i <= d; ++i) {
    std::int64_t sum = 0;
    for (int j = 0; j <= i; ++j) sum += sign(i - j) * binomial(d - j, i - j) * f[j - 1];
    h.push_back(sum);
  }
  return IntSeq(0, std::move(h));
}

IntSeq h_to_f(const IntSeq& h, int d) {
  if (d < 0) throw Error(ErrorCode::LengthMismatch, "negative d");
  require_h(h, d, "h");
  std::vector<std::int64_t> f;
  for (int j = 0; j <= d; ++j) {
    std::int64_t sum = 0;
    for (int i = 0; i <= j; ++i) sum += binomial(d - i, j - i) * h[i];
    f.push_back(sum);
  }
  return IntSeq(-1, std::move(f));
}

IntSeq g_from_h(const IntSeq& h, int last) {
  std::vector<std::int64_t> g;
  for (int i = 0; i <= last; ++i) g.push_back(h[i] - h[i - 1]);
  return IntSeq(0, std::move(g));
}

IntSeq h_prime(const IntSeq& h, const IntSeq& betti, int d) {
  require_h(h, d, "h");
  std::vector<std::int64_t> out;
  for (int i = 0; i <= d; ++i) {
    std::int64_t sum = 0;
    for (int j = 1; j <= i - 1; ++j) sum += sign(i - j - 1) * betti[j - 1];
    out.push_back(h[i] + binomial(d, i) * sum);
  }
  return IntSeq(0, std::move(out));
}

IntSeq h_dprime_closed(const IntSeq& h_prime_seq, const IntSeq& betti, int d) {
  require_h(h_prime_seq, d, "h'");
  std::vector<std::int64_t> out;
  for (int i = 0; i < d; ++i) out.push_back(h_prime_seq[i] - binomial(d, i) * betti[i - 1]);
  out.push_back(h_prime_seq[d]);
  return IntSeq(0, std::move(out));
}

BoundaryHDprime h_dprime_boundary(const IntSeq& h_prime_seq, const IntSeq& gbar_seq,
                                  const IntSeq& im_psi_seq, const IntSeq& betti, int d) {
  require_h(h_prime_seq, d, "h'");
  if (gbar_seq.empty()) throw Error(ErrorCode::EmptyBoundary, "h'' with boundary needs ḡ");
  auto lower = [&](int i) {
    return h_prime_seq[i] - gbar_seq[i] - binomial(d, i) * im_psi_seq[i];
  };
  auto upper = [&](int i) { return h_prime_seq[i] - binomial(d, i) * betti[i - 1]; };
  BoundaryHDprime out;
  std::vector<std::int64_t> v;
  for (int i = 0; i <= d; ++i) v.push_back(2 * i <= d ? lower(i) : upper(i));
  out.values = IntSeq(0, std::move(v));
  if (d % 2 == 0) out.middle_gap = lower(d / 2) - upper(d / 2);
  return out;
}

CheckReport hdprime_boundary_symmetry(const IntSeq& h_prime_seq, const IntSeq& gbar_seq,
                                      const IntSeq& im_psi_seq, const IntSeq& betti, int d) {
  require_h(h_prime_seq, d, "h'");
  CheckReport r("hdprime_boundary_symmetry");
  for (int i = 0; i < d; ++i) {
    const std::int64_t left = h_prime_seq[d - i] - binomial(d, d - i) * betti[d - i - 1];
    const std::int64_t right =
        h_prime_seq[i] - gbar_seq[i] - binomial(d, i) * im_psi_seq[i];
    r.add(idx("i", i), left - right, Relation::Zero);
  }
  r.context["h_prime"] = h_prime_seq.values();
  r.context["gbar"] = gbar_seq.values();
  r.context["im_psi"] = seq_json(im_psi_seq);
  r.context["betti"] = seq_json(betti);
  return r;
}

IntSeq gbar(const IntSeq& h_prime_boundary, const IntSeq& betti_boundary, int d) {
  std::vector<std::int64_t> out;
  for (int i = 0; i <= d; ++i) {
    out.push_back(h_prime_boundary[i] - h_prime_boundary[i - 1] +
                  binomial(d - 1, i - 1) * betti_boundary[i - 2]);
  }
  return IntSeq(0, std::move(out));
}

long double pseudopower(long double m, int i) {
  if (i < 1) throw Error(ErrorCode::BadParams, "pseudopower index must be positive");
  if (m < 0 || std::isnan(m)) throw Error(ErrorCode::NegativeInput, "pseudopower of a negative number");
  if (m == 0) return 0.0L;

  long double lo = i - 1;
  long double hi = i;
  while (binomial_real(hi, i) < m) hi *= 2;
  for (int iter = 0; iter < 400 && hi - lo > 1e-9L; ++iter) {
    const long double mid = (lo + hi) / 2;
    (binomial_real(mid, i) < m ? lo : hi) = mid;
  }
  const long double x = (lo + hi) / 2;

  // Exact path when m = C(a, i) for an integer a.
  if (m == std::floor(m) && m < 9.0e18L) {
    const auto a = static_cast<std::int64_t>(std::llround(x));
    try {
      if (a >= i && binomial(a, i) == static_cast<std::int64_t>(m)) {
        return static_cast<long double>(binomial(a + 1, i + 1));
      }
    } catch (const Error&) {
      // overflow: fall through to the real value
    }
  }
  return binomial_real(x + 1, i + 1);
}

CheckReport ds_closed_residual(const IntSeq& h, std::int64_t reduced_euler, int d) {
  require_h(h, d, "h");
  CheckReport r("dehn_sommerville_closed");
  const std::int64_t c = sign(d - 1) * reduced_euler - 1;
  for (int i = 0; i <= d; ++i) {
    r.add(idx("i", i), (h[d - i] - h[i]) - sign(i) * binomial(d, i) * c, Relation::Zero);
  }
  r.context["h"] = h.values();
  r.context["reduced_euler"] = reduced_euler;
  return r;
}

CheckReport ds_boundary_residual(const IntSeq& h, std::int64_t reduced_euler,
                                 const IntSeq& g_boundary, int d) {
  require_h(h, d, "h");
  CheckReport r("dehn_sommerville_boundary");
  for (int i = 0; i <= d; ++i) {
    const std::int64_t rhs = binomial(d, i) * sign(d - 1 - i) * reduced_euler - g_boundary[i];
    r.add(idx("i", i), (h[d - i] - h[i]) - rhs, Relation::Zero);
  }
  r.context["h"] = h.values();
  r.context["reduced_euler"] = reduced_euler;
  r.context["g_boundary"] = g_boundary.values();
  return r;
}

CheckReport hprime_ds_residual(const IntSeq& h_prime_seq, const IntSeq& betti, int d) {
  require_h(h_prime_seq, d, "h'");
  CheckReport r("hprime_dehn_sommerville");
  for (int i = 0; i <= d - 2; ++i) {
    const std::int64_t lhs = h_prime_seq[d - i] - h_prime_seq[i];
    r.add(idx("i", i), lhs - binomial(d, i) * (betti[i] - betti[i - 1]), Relation::Zero);
  }
  r.note("checked for 0 <= i <= d-2");
  r.context["h_prime"] = h_prime_seq.values();
  r.context["betti"] = seq_json(betti);
  return r;
}

CheckReport macaulay_bounds(const IntSeq& h_prime_seq, const IntSeq& betti, int d) {
  require_h(h_prime_seq, d, "h'");
  CheckReport r("macaulay_bounds");
  for (int i = 1; i <= d; ++i) {
    const std::int64_t base = h_prime_seq[i] - binomial(d, i) * betti[i - 1];
    r.add(idx("lower_i", i), base, Relation::NonNegative);
    if (base < 0) {
      r.fail("upper bound at i=" + std::to_string(i) + " undefined: negative base");
      continue;
    }
    const long double bound = pseudopower(static_cast<long double>(base), i);
    r.add_real(idx("upper_i", i), bound - static_cast<long double>(h_prime_seq[i + 1]),
               Relation::NonNegative);
  }
  r.context["h_prime"] = h_prime_seq.values();
  r.context["betti"] = seq_json(betti);
  return r;
}

CheckReport kuhnel_middle_check(std::int64_t n, int d, const IntSeq& betti) {
  if (d < 1 || d % 2 == 0) {
    throw Error(ErrorCode::WrongParity, "middle bound needs odd d, got " + std::to_string(d));
  }
  const int k = (d - 1) / 2;
  CheckReport r("kuhnel_middle");
  const std::int64_t slack = binomial(n - k - 2, k + 1) - binomial(2 * k + 1, k) * betti[k];
  r.add("slack", slack, Relation::NonNegative);
  if (slack == 0) {
    r.note("equality: requires beta_i = 0 for i < k");
    for (int i = 0; i < k; ++i) r.add(idx("beta", i), betti[i], Relation::Zero);
  }
  if (betti[k] >= 1) {
    r.add("vertices_minus_3k_plus_3", n - (3 * k + 3), Relation::NonNegative);
  }
  r.context["n"] = n;
  r.context["k"] = k;
  r.context["betti"] = seq_json(betti);
  return r;
}

MkReference mk_reference(int k) {
  if (k < 1) throw Error(ErrorCode::BadParams, "M_k needs k >= 1");
  MkReference m;
  m.k = k;
  m.d = 2 * k + 1;
  m.n = 3 * k + 3;
  const int d = m.d;
  std::vector<std::int64_t> betti(static_cast<std::size_t>(d + 1), 0);
  betti[static_cast<std::size_t>(k + 1)] = 1;      // β̃_k
  betti[static_cast<std::size_t>(2 * k + 1)] = 1;  // β̃_{2k}
  m.betti = IntSeq(-1, betti);
  const std::int64_t chi = 1 + sign(k);

  std::vector<std::int64_t> h(static_cast<std::size_t>(d + 1), 0);
  for (int i = 0; i <= k + 1; ++i) h[static_cast<std::size_t>(i)] = binomial(k + 1 + i, i);
  for (int i = 0; i < k; ++i) {
    h[static_cast<std::size_t>(d - i)] =
        h[static_cast<std::size_t>(i)] + sign(i) * binomial(d, i) * (sign(d - 1) * chi - 1);
  }
  m.h = IntSeq(0, h);
  m.h_prime = h_prime(m.h, m.betti, d);
  m.f = h_to_f(m.h, d);
  return m;
}

MiddleReconstruction f_from_middle_betti(const IntSeq& h_prime_low, std::int64_t beta_k, int k) {
  if (k < 1) throw Error(ErrorCode::BadParams, "k must be positive");
  if (h_prime_low.first() != 0 || h_prime_low.last() < k) {
    throw Error(ErrorCode::LengthMismatch, "need h'_0..h'_k");
  }
  const int top = 2 * k + 1;
  MiddleReconstruction out;
  out.coefficients = CheckReport("middle_betti_coefficients");
  std::vector<std::int64_t> f;
  std::vector<std::int64_t> coef;
  for (int i = 0; i <= top; ++i) {
    std::int64_t value = 0;
    if (i <= k) {
      for (int j = 0; j <= i; ++j) value += binomial(top - j, top - i) * h_prime_low[j];
    } else {
      for (int j = 0; j <= k; ++j) {
        value += (binomial(top - j, top - i) + binomial(j, top - i)) * h_prime_low[j];
      }
      std::int64_t c = 0;
      for (int j = 0; j <= i - k - 1; ++j) {
        c += sign(j) * binomial(k - j, top - i) * binomial(top, k - j);
      }
      coef.push_back(c);
      out.coefficients.add(idx("i", i), c, Relation::NonNegative);
      value += c * beta_k;
    }
    f.push_back(value);
  }
  out.f = IntSeq(-1, std::move(f));
  out.beta_coefficient = IntSeq(k + 1, std::move(coef));
  return out;
}

CheckReport kalai_comparison(const IntSeq& f, const IntSeq& betti, int k) {
  if (k < 1) throw Error(ErrorCode::BadParams, "k must be positive");
  for (int l = 0; l < k; ++l) {
    if (betti[l] != 0) {
      throw Error(ErrorCode::BettiPreconditionViolated,
                  "beta_" + std::to_string(l) + " must vanish");
    }
  }
  if (betti[k] < 1) {
    throw Error(ErrorCode::BettiPreconditionViolated, "beta_k must be at least 1");
  }
  if (f.first() != -1 || f.last() != 2 * k) {
    throw Error(ErrorCode::LengthMismatch, "f must belong to a 2k-dimensional complex");
  }
  const MkReference m = mk_reference(k);
  CheckReport r("kalai_minimality");
  for (int i = 1; i <= 2 * k + 1; ++i) r.add(idx("i", i), f[i - 1] - m.f[i - 1], Relation::NonNegative);
  r.context["f"] = f.values();
  r.context["f_reference"] = m.f.values();
  return r;
}

CheckReport kuhnel_general_check(std::int64_t n, int d, const IntSeq& betti, int j) {
  const int jmax = d / 2 - 1;
  if (j < 0 || j > jmax) {
    throw Error(ErrorCode::BadIndex, "j must lie in 0.." + std::to_string(jmax));
  }
  CheckReport r("kuhnel_general");
  const std::int64_t slack = binomial(n - d + j - 1, j + 1) - binomial(d + 1, j + 1) * betti[j];
  r.add("slack", slack, Relation::NonNegative);
  if (slack == 0) {
    r.note("equality at j=" + std::to_string(j) + ": other beta_i in range must vanish");
    for (int i = 0; i <= jmax; ++i) {
      if (i != j) r.add(idx("beta", i), betti[i], Relation::Zero);
    }
  }
  r.context["n"] = n;
  r.context["d"] = d;
  r.context["j"] = j;
  r.context["betti"] = seq_json(betti);
  return r;
}

CheckReport kalai_monotonicity_check(const IntSeq& h_dprime_seq, const IntSeq& betti, int d) {
  require_h(h_dprime_seq, d, "h''");
  CheckReport r("kalai_monotonicity");
  for (int j = 0; j <= d / 2 - 1; ++j) {
    r.add(idx("j", j), (h_dprime_seq[j + 1] - h_dprime_seq[j]) - binomial(d, j) * betti[j],
          Relation::NonNegative);
  }
  r.context["h_dprime"] = h_dprime_seq.values();
  r.context["betti"] = seq_json(betti);
  return r;
}

CheckReport h2_boundary_check(std::int64_t h2, std::int64_t f0_interior,
                              std::int64_t beta1_boundary, std::int64_t beta0_boundary, int d,
                              std::uint64_t characteristic) {
  if (d < 4) throw Error(ErrorCode::DimensionTooSmall, "needs d >= 4");
  if (d == 4 && characteristic != 2) {
    throw Error(ErrorCode::UnsupportedCharacteristic, "d = 4 is only covered in characteristic 2");
  }
  const std::int64_t bound = (d == 4) ? f0_interior + 3 * beta1_boundary + 4 * beta0_boundary
                                      : f0_interior + binomial(d, 2) * beta1_boundary +
                                            d * beta0_boundary;
  CheckReport r("h2_boundary");
  r.add("slack", h2 - bound, Relation::NonNegative);
  r.context["h2"] = h2;
  r.context["f0_interior"] = f0_interior;
  r.context["beta1_boundary"] = beta1_boundary;
  r.context["beta0_boundary"] = beta0_boundary;
  r.context["d"] = d;
  if (h2 == bound) r.note("equality");
  return r;
}

}  // namespace facenum
