#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace facenum {

// Integer sequence indexed from an arbitrary first index, e.g. f_{-1..d-1}
// or h_{0..d}. Reads outside the stored range yield 0, which is what every
// face-number formula wants for out-of-range terms.
class IntSeq {
 public:
  IntSeq() = default;
  IntSeq(int first, std::vector<std::int64_t> values);
  IntSeq(int first, std::initializer_list<std::int64_t> values);

  int first() const noexcept { return first_; }
  int last() const noexcept { return first_ + static_cast<int>(values_.size()) - 1; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  bool in_range(int i) const noexcept { return i >= first_ && i <= last(); }

  std::int64_t operator[](int i) const noexcept;
  // Throws BadIndex outside the stored range.
  std::int64_t& at(int i);

  const std::vector<std::int64_t>& values() const noexcept { return values_; }

  bool operator==(const IntSeq&) const = default;

  std::string to_string() const;

 private:
  int first_ = 0;
  std::vector<std::int64_t> values_;
};

// C(a, b) with the combinatorial convention: 0 when b < 0 or b > a
// (including every negative a). Throws on int64 overflow.
std::int64_t binomial(std::int64_t a, std::int64_t b);

// C(x, b) = x(x-1)...(x-b+1)/b! for real x.
long double binomial_real(long double x, int b);

}  // namespace facenum
