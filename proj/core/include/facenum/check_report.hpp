#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace facenum {

enum class Relation {
  Zero,         // identities: residual == 0
  NonNegative,  // inequalities: slack >= 0
};

struct CheckEntry {
  std::string label;
  long double value = 0;
  Relation relation = Relation::Zero;
  bool ok = true;
  bool exact = true;  // false for slacks involving real pseudopowers
};

// Pass/fail record for one identity or inequality, keeping every residual
// or slack so equality cases stay visible.
struct CheckReport {
  // Guard band for comparisons involving real pseudopowers.
  static constexpr long double kRealGuard = 1e-6L;

  std::string name;
  std::vector<CheckEntry> entries;
  bool pass = true;
  nlohmann::json context = nlohmann::json::object();
  std::vector<std::string> notes;

  CheckReport() = default;
  explicit CheckReport(std::string report_name) : name(std::move(report_name)) {}

  void add(std::string label, std::int64_t value, Relation relation);
  // Real slack compared with kRealGuard; values within the guard are
  // accepted and flagged in notes.
  void add_real(std::string label, long double value, Relation relation);
  // Records a failure that is not a numeric residual.
  void fail(std::string reason);
  void note(std::string text) { notes.push_back(std::move(text)); }

  const CheckEntry* find(const std::string& label) const;
  std::int64_t value(const std::string& label) const;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

}  // namespace facenum
