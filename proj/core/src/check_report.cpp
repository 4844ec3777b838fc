#include "facenum/check_report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "facenum/errors.hpp"

namespace facenum {

namespace {

const char* relation_name(Relation r) { return r == Relation::Zero ? "==0" : ">=0"; }

nlohmann::json number(const CheckEntry& e) {
  if (e.exact) return static_cast<std::int64_t>(e.value);
  // Fixed precision keeps reports byte-stable.
  std::ostringstream s;
  s << std::fixed << std::setprecision(9) << static_cast<double>(e.value);
  return std::stod(s.str());
}

}  // namespace

void CheckReport::add(std::string label, std::int64_t value, Relation relation) {
  CheckEntry e{std::move(label), static_cast<long double>(value), relation, true, true};
  e.ok = relation == Relation::Zero ? value == 0 : value >= 0;
  pass = pass && e.ok;
  entries.push_back(std::move(e));
}

void CheckReport::add_real(std::string label, long double value, Relation relation) {
  CheckEntry e{std::move(label), value, relation, true, false};
  e.ok = relation == Relation::Zero ? std::fabs(value) <= kRealGuard : value >= -kRealGuard;
  if (e.ok && std::fabs(value) <= kRealGuard) notes.push_back(e.label + " is within the guard band");
  pass = pass && e.ok;
  entries.push_back(std::move(e));
}

void CheckReport::fail(std::string reason) {
  pass = false;
  notes.push_back(std::move(reason));
}

const CheckEntry* CheckReport::find(const std::string& label) const {
  for (const auto& e : entries) {
    if (e.label == label) return &e;
  }
  return nullptr;
}

std::int64_t CheckReport::value(const std::string& label) const {
  const CheckEntry* e = find(label);
  if (!e) throw Error(ErrorCode::BadIndex, "no entry '" + label + "' in " + name);
  return static_cast<std::int64_t>(std::llround(e->value));
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json residuals = nlohmann::json::array();
  nlohmann::json labels = nlohmann::json::array();
  nlohmann::json relations = nlohmann::json::array();
  for (const auto& e : entries) {
    residuals.push_back(number(e));
    labels.push_back(e.label);
    relations.push_back(relation_name(e.relation));
  }
  nlohmann::json j;
  j["name"] = name;
  j["pass"] = pass;
  j["residuals"] = residuals;
  j["labels"] = labels;
  j["relations"] = relations;
  j["context"] = context;
  j["notes"] = notes;
  return j;
}

std::string CheckReport::to_text() const {
  std::ostringstream out;
  out << (pass ? "PASS " : "FAIL ") << name << '\n';
  for (const auto& e : entries) {
    out << "  " << e.label << " = ";
    if (e.exact) {
      out << static_cast<std::int64_t>(e.value);
    } else {
      out << std::fixed << std::setprecision(6) << static_cast<double>(e.value);
    }
    out << "  (" << relation_name(e.relation) << (e.ok ? ")" : ", violated)") << '\n';
  }
  for (const auto& [key, value] : context.items()) {
    out << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  for (const auto& n : notes) out << "  note: " << n << '\n';
  return out.str();
}

}  // namespace facenum
