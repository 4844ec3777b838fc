#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <doctest.h>

#include "facenum/errors.hpp"
#include "facenum/field.hpp"
#include "facenum/sequence.hpp"
#include "fixture_sets.hpp"

namespace testing {

inline std::vector<std::int64_t> v(const facenum::IntSeq& s) { return s.values(); }

// Runs fn and returns the code it threw; fails the test if nothing is thrown.
template <class Fn>
facenum::ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const facenum::Error& e) {
    return e.code();
  }
  FAIL("no exception");
  return facenum::ErrorCode::BadParams;
}

inline const facenum::FieldSpec& gf(const std::string& spec) {
  static std::vector<std::pair<std::string, facenum::FieldSpec>> cache;
  for (const auto& [k, f] : cache) {
    if (k == spec) return f;
  }
  cache.emplace_back(spec, facenum::FieldSpec::parse(spec));
  return cache.back().second;
}

}  // namespace testing
