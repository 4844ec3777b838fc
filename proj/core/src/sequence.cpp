#include "facenum/sequence.hpp"

#include <sstream>

#include "facenum/errors.hpp"

namespace facenum {

IntSeq::IntSeq(int first, std::vector<std::int64_t> values)
    : first_(first), values_(std::move(values)) {}

IntSeq::IntSeq(int first, std::initializer_list<std::int64_t> values)
    : first_(first), values_(values) {}

std::int64_t IntSeq::operator[](int i) const noexcept {
  if (!in_range(i)) return 0;
  return values_[static_cast<std::size_t>(i - first_)];
}

std::int64_t& IntSeq::at(int i) {
  if (!in_range(i)) {
    throw Error(ErrorCode::BadIndex, "index " + std::to_string(i) + " outside [" +
                                         std::to_string(first_) + ", " +
                                         std::to_string(last()) + "]");
  }
  return values_[static_cast<std::size_t>(i - first_)];
}

std::string IntSeq::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (k) out << ',';
    out << values_[k];
  }
  out << ')';
  return out.str();
}

namespace {
__extension__ using i128 = __int128;
}  // namespace

std::int64_t binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  i128 result = 1;
  for (std::int64_t k = 1; k <= b; ++k) {
    result = result * (a - b + k) / k;
    if (result > INT64_MAX) {
      throw Error(ErrorCode::BadParams, "binomial overflow");
    }
  }
  return static_cast<std::int64_t>(result);
}

long double binomial_real(long double x, int b) {
  if (b < 0) return 0.0L;
  long double result = 1.0L;
  for (int k = 0; k < b; ++k) result *= (x - k) / static_cast<long double>(k + 1);
  return result;
}

}  // namespace facenum
