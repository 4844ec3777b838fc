#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "facenum/check_report.hpp"
#include "facenum/complex.hpp"
#include "facenum/homology.hpp"
#include "facenum/manifold.hpp"
#include "facenum/vectors.hpp"

namespace facenum {

// Everything the checks need about one complex over one field.
struct Analysis {
  SimplicialComplex complex;
  FieldSpec field;
  ManifoldReport manifold;
  BettiProfile profile;
  FaceVectorSet vectors;

  bool connected_orientable_manifold() const {
    return manifold.usable() && manifold.connected && manifold.orientable;
  }
  bool closed() const { return !manifold.has_boundary(); }
};

Analysis analyze(const SimplicialComplex& complex, const FieldSpec& field);

CheckReport manifold_check(const Analysis& a);
// Dehn-Sommerville in the closed or bounded form, plus the h' identity and
// the boundary h'' identities where they apply.
std::vector<CheckReport> ds_checks(const Analysis& a);
// Artinian reduction dimensions against h'. Needs a field with >= 2^16 elements.
CheckReport schenzel_check(const Analysis& a, std::uint64_t seed);
// Macaulay-type bounds and the middle/general vertex-count bounds.
std::vector<CheckReport> bound_checks(const Analysis& a);
CheckReport rigidity_check(const Analysis& a, std::uint64_t seed);
// Throws PreconditionViolated without an orientable nonempty boundary.
CheckReport h2_check(const Analysis& a);
// Hard Lefschetz on every vertex link, and on Δ itself when it is a
// homology sphere.
std::vector<CheckReport> lefschetz_checks(const Analysis& a, std::uint64_t seed);
// Every applicable check; inapplicable ones are listed in a notes report.
std::vector<CheckReport> all_checks(const Analysis& a, std::uint64_t seed);

nlohmann::json info_json(const SimplicialComplex& complex);
nlohmann::json vectors_json(const Analysis& a);

}  // namespace facenum
