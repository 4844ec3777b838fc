#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace facenum {

// A field element. In GF(p) it is the residue in [0, p); in GF(p^m) it is the
// base-p packing sum c_k p^k of the coefficients of c_0 + c_1 t + ... modulo
// the field's irreducible modulus.
using Elem = std::uint64_t;

namespace detail {
struct FieldImpl;
}

// GF(p^m) with an explicit irreducible modulus. Cheap to copy; the
// arithmetic tables behind it are shared and immutable.
class FieldSpec {
 public:
  // GF(2).
  FieldSpec();

  static FieldSpec prime(std::uint64_t p);
  // Modulus found by seeded random search, certified by trial factorization.
  static FieldSpec extension(std::uint64_t p, int m, std::uint64_t search_seed = 0);
  // `modulus` lists coefficients from t^0 up to the leading 1 of t^m.
  static FieldSpec with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus);
  // "p" or "p^m", e.g. "65537" or "2^16".
  static FieldSpec parse(std::string_view text);

  std::uint64_t characteristic() const noexcept;
  int degree() const noexcept;
  std::uint64_t size() const noexcept;
  const std::vector<std::uint64_t>& modulus() const noexcept;
  std::string to_string() const;

  static constexpr Elem zero() noexcept { return 0; }
  static constexpr Elem one() noexcept { return 1; }
  Elem from_int(std::int64_t value) const noexcept;

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  // Throws BadParams on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  // Uniform in the field, reproducible across platforms (rejection sampling
  // on raw engine output rather than std distributions).
  Elem random(std::mt19937_64& rng) const;

  bool operator==(const FieldSpec& other) const noexcept;

 private:
  explicit FieldSpec(std::shared_ptr<const detail::FieldImpl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const detail::FieldImpl> impl_;
};

bool is_prime(std::uint64_t n) noexcept;

// Trial factorization over GF(p): no monic factor of degree 1..m/2.
// Coefficients low to high; must be monic of degree >= 1.
bool is_irreducible(std::uint64_t p, const std::vector<std::uint64_t>& poly);

}  // namespace facenum
