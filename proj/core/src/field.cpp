#include "facenum/field.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <tuple>

#include "facenum/errors.hpp"

namespace facenum {

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

constexpr u64 kMaxFieldSize = u64{1} << 62;
constexpr u64 kMaxTableSize = u64{1} << 22;
constexpr u64 kMaxTrialDivisors = u64{1} << 24;

u64 mulmod(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<u128>(a) * b % p);
}

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

using Poly = std::vector<u64>;

// Remainder of `a` modulo monic `g`, coefficients mod p.
Poly poly_rem(Poly a, const Poly& g, u64 p) {
  const std::size_t dg = g.size() - 1;
  for (std::size_t k = a.size(); k-- > dg;) {
    const u64 c = a[k] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j) {
      const std::size_t idx = k - dg + j;
      a[idx] = (a[idx] + p - mulmod(c, g[j], p)) % p;
    }
  }
  a.resize(std::min(a.size(), dg));
  return a;
}

bool all_zero(const Poly& a) {
  return std::all_of(a.begin(), a.end(), [](u64 c) { return c == 0; });
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

namespace detail {

struct FieldImpl {
  u64 p = 2;
  int m = 1;
  u64 q = 2;
  std::vector<u64> modulus;  // empty when m == 1
  std::vector<u64> p_pow;
  std::vector<std::uint32_t> log_table;
  std::vector<std::uint32_t> exp_table;

  bool has_tables() const { return !exp_table.empty(); }

  Poly digits(Elem a) const {
    Poly d(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
      d[static_cast<std::size_t>(k)] = a % p;
      a /= p;
    }
    return d;
  }

  Elem pack(const Poly& d) const {
    Elem a = 0;
    for (int k = m; k-- > 0;) a = a * p + d[static_cast<std::size_t>(k)];
    return a;
  }

  Elem add(Elem a, Elem b) const {
    if (m == 1) {
      const u64 s = a + b;
      return s >= p ? s - p : s;
    }
    if (p == 2) return a ^ b;
    Poly x = digits(a);
    Poly y = digits(b);
    for (int k = 0; k < m; ++k) {
      auto i = static_cast<std::size_t>(k);
      x[i] = (x[i] + y[i]) % p;
    }
    return pack(x);
  }

  Elem neg(Elem a) const {
    if (m == 1) return a == 0 ? 0 : p - a;
    if (p == 2) return a;
    Poly x = digits(a);
    for (auto& c : x) c = (p - c) % p;
    return pack(x);
  }

  Elem slow_mul(Elem a, Elem b) const {
    if (m == 1) return mulmod(a, b, p);
    Poly x = digits(a);
    Poly y = digits(b);
    Poly prod(static_cast<std::size_t>(2 * m - 1), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!x[i]) continue;
      for (std::size_t j = 0; j < y.size(); ++j) {
        prod[i + j] = (prod[i + j] + mulmod(x[i], y[j], p)) % p;
      }
    }
    Poly r = poly_rem(std::move(prod), modulus, p);
    r.resize(static_cast<std::size_t>(m), 0);
    return pack(r);
  }

  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (m == 1) return p < (u64{1} << 32) ? a * b % p : mulmod(a, b, p);
    if (has_tables()) return exp_table[log_table[a] + log_table[b]];
    return slow_mul(a, b);
  }

  Elem slow_pow(Elem a, u64 e) const {
    Elem r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  }

  void build_tables() {
    const auto factors = prime_factors(q - 1);
    Elem g = 0;
    for (Elem cand = 2; cand < q; ++cand) {
      bool primitive = std::all_of(factors.begin(), factors.end(),
                                   [&](u64 r) { return slow_pow(cand, (q - 1) / r) != 1; });
      if (primitive) {
        g = cand;
        break;
      }
    }
    exp_table.assign(2 * (q - 1), 0);
    log_table.assign(q, 0);
    Elem x = 1;
    for (u64 i = 0; i < q - 1; ++i) {
      exp_table[i] = static_cast<std::uint32_t>(x);
      exp_table[i + q - 1] = static_cast<std::uint32_t>(x);
      log_table[x] = static_cast<std::uint32_t>(i);
      x = slow_mul(x, g);
    }
  }
};

}  // namespace detail

bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  for (u64 small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin bases for 64-bit inputs.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_irreducible(u64 p, const std::vector<u64>& poly) {
  if (poly.size() < 2 || poly.back() != 1) {
    throw Error(ErrorCode::InvalidField, "modulus must be monic of degree >= 1");
  }
  const std::size_t m = poly.size() - 1;
  if (m == 1) return true;
  if (poly[0] % p == 0) return false;  // divisible by t
  u64 budget = 0;
  for (std::size_t k = 1; k <= m / 2; ++k) {
    u64 count = 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (count > kMaxTrialDivisors / p) {
        throw Error(ErrorCode::InvalidField, "modulus too large to certify by trial division");
      }
      count *= p;
    }
    budget += count;
    if (budget > kMaxTrialDivisors) {
      throw Error(ErrorCode::InvalidField, "modulus too large to certify by trial division");
    }
    for (u64 code = 0; code < count; ++code) {
      Poly g(k + 1);
      u64 c = code;
      for (std::size_t j = 0; j < k; ++j) {
        g[j] = c % p;
        c /= p;
      }
      g[k] = 1;
      if (all_zero(poly_rem(poly, g, p))) return false;
    }
  }
  return true;
}

namespace {

std::shared_ptr<detail::FieldImpl> make_impl(u64 p, int m, std::vector<u64> modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidField, std::to_string(p) + " is not prime");
  if (m < 1) throw Error(ErrorCode::InvalidField, "extension degree must be >= 1");
  auto impl = std::make_shared<detail::FieldImpl>();
  impl->p = p;
  impl->m = m;
  u64 q = 1;
  for (int k = 0; k < m; ++k) {
    impl->p_pow.push_back(q);
    if (q > kMaxFieldSize / p) throw Error(ErrorCode::InvalidField, "field too large");
    q *= p;
  }
  impl->q = q;
  if (m > 1) {
    if (modulus.size() != static_cast<std::size_t>(m) + 1) {
      throw Error(ErrorCode::InvalidField, "modulus degree does not match extension degree");
    }
    for (auto& c : modulus) {
      if (c >= p) throw Error(ErrorCode::InvalidField, "modulus coefficient out of range");
    }
    if (!is_irreducible(p, modulus)) throw Error(ErrorCode::InvalidField, "modulus is reducible");
    impl->modulus = std::move(modulus);
    if (q <= kMaxTableSize) impl->build_tables();
  }
  return impl;
}

}  // namespace

FieldSpec::FieldSpec() : impl_(make_impl(2, 1, {})) {}

FieldSpec FieldSpec::prime(u64 p) { return FieldSpec(make_impl(p, 1, {})); }

FieldSpec FieldSpec::extension(u64 p, int m, u64 search_seed) {
  if (m == 1) return prime(p);
  if (!is_prime(p)) throw Error(ErrorCode::InvalidField, std::to_string(p) + " is not prime");
  if (m < 1) throw Error(ErrorCode::InvalidField, "extension degree must be >= 1");
  // Table construction for GF(2^16)-sized fields is not free; reuse it.
  static std::mutex cache_mutex;
  static std::map<std::tuple<u64, int, u64>, std::shared_ptr<const detail::FieldImpl>> cache;
  const auto key = std::make_tuple(p, m, search_seed);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (auto it = cache.find(key); it != cache.end()) return FieldSpec(it->second);
  }
  std::mt19937_64 rng(search_seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<u64> poly(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k < m; ++k) poly[static_cast<std::size_t>(k)] = rng() % p;
    poly.back() = 1;
    if (poly[0] == 0) continue;
    if (is_irreducible(p, poly)) {
      std::shared_ptr<const detail::FieldImpl> impl = make_impl(p, m, std::move(poly));
      std::lock_guard<std::mutex> lock(cache_mutex);
      cache.emplace(key, impl);
      return FieldSpec(impl);
    }
  }
  throw Error(ErrorCode::InvalidField, "no irreducible modulus found");
}

FieldSpec FieldSpec::with_modulus(u64 p, std::vector<u64> modulus) {
  const int m = static_cast<int>(modulus.size()) - 1;
  if (m == 1) return prime(p);
  return FieldSpec(make_impl(p, m, std::move(modulus)));
}

FieldSpec FieldSpec::parse(std::string_view text) {
  auto parse_num = [&](std::string_view s) -> u64 {
    u64 v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw Error(ErrorCode::InvalidField, "cannot parse field '" + std::string(text) + "'");
    }
    return v;
  };
  const auto caret = text.find('^');
  if (caret == std::string_view::npos) return prime(parse_num(text));
  const u64 p = parse_num(text.substr(0, caret));
  const u64 m = parse_num(text.substr(caret + 1));
  if (m < 1 || m > 62) throw Error(ErrorCode::InvalidField, "bad extension degree");
  return extension(p, static_cast<int>(m));
}

u64 FieldSpec::characteristic() const noexcept { return impl_->p; }
int FieldSpec::degree() const noexcept { return impl_->m; }
u64 FieldSpec::size() const noexcept { return impl_->q; }
const std::vector<u64>& FieldSpec::modulus() const noexcept { return impl_->modulus; }

std::string FieldSpec::to_string() const {
  if (impl_->m == 1) return std::to_string(impl_->p);
  return std::to_string(impl_->p) + "^" + std::to_string(impl_->m);
}

Elem FieldSpec::from_int(std::int64_t value) const noexcept {
  const auto p = static_cast<std::int64_t>(impl_->p);
  std::int64_t r = value % p;
  if (r < 0) r += p;
  return static_cast<Elem>(r);
}

Elem FieldSpec::add(Elem a, Elem b) const noexcept { return impl_->add(a, b); }
Elem FieldSpec::sub(Elem a, Elem b) const noexcept { return impl_->add(a, impl_->neg(b)); }
Elem FieldSpec::neg(Elem a) const noexcept { return impl_->neg(a); }
Elem FieldSpec::mul(Elem a, Elem b) const noexcept { return impl_->mul(a, b); }

Elem FieldSpec::pow(Elem a, u64 e) const noexcept {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem FieldSpec::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::BadParams, "inverse of zero");
  if (impl_->has_tables()) return impl_->exp_table[(impl_->q - 1) - impl_->log_table[a]];
  return pow(a, impl_->q - 2);
}

Elem FieldSpec::random(std::mt19937_64& rng) const {
  const u64 q = impl_->q;
  const u64 limit = (~u64{0} / q) * q;
  u64 x = rng();
  while (x >= limit) x = rng();
  return x % q;
}

bool FieldSpec::operator==(const FieldSpec& other) const noexcept {
  if (impl_ == other.impl_) return true;
  return impl_->p == other.impl_->p && impl_->m == other.impl_->m &&
         impl_->modulus == other.impl_->modulus;
}

}  // namespace facenum
