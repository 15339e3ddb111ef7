#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace lpa {

enum class Status { pass, fail, undetermined };

/// Outcome of a property check or construction. Rendered as text for people
/// and as a JSON document with stable field names for tools.
struct Report {
  std::string property;
  std::string verdict;
  Status status = Status::pass;
  std::optional<std::string> degree;
  std::optional<std::size_t> bound;
  std::optional<std::uint64_t> seed;
  std::string witness;
  /// Ordered (label, value) pairs: epsilon values, factorizations, units.
  std::vector<std::pair<std::string, std::string>> certificate;
  std::vector<std::string> notes;

  [[nodiscard]] bool passed() const { return status == Status::pass; }
};

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::undetermined: return "undetermined";
  }
  return "?";
}

inline std::string render_text(const Report& r) {
  std::string out = r.property + ": " + r.verdict + "\n";
  if (r.degree) out += "  degree: " + *r.degree + "\n";
  if (r.bound) out += "  bound: " + std::to_string(*r.bound) + "\n";
  if (r.seed) out += "  seed: " + std::to_string(*r.seed) + "\n";
  if (!r.witness.empty()) out += "  witness: " + r.witness + "\n";
  for (const auto& [k, v] : r.certificate) out += "  " + k + " = " + v + "\n";
  for (const auto& n : r.notes) out += "  note: " + n + "\n";
  return out;
}

inline nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["property"] = r.property;
  j["verdict"] = r.verdict;
  j["status"] = to_string(r.status);
  j["degree"] = r.degree ? nlohmann::ordered_json(*r.degree) : nlohmann::ordered_json();
  j["bound"] = r.bound ? nlohmann::ordered_json(*r.bound) : nlohmann::ordered_json();
  if (r.seed) j["seed"] = *r.seed;
  j["witness"] = r.witness.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(r.witness);
  auto cert = nlohmann::ordered_json::array();
  for (const auto& [k, v] : r.certificate) cert.push_back({{"label", k}, {"value", v}});
  j["certificate"] = std::move(cert);
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

/// Combined status: any fail wins, then undetermined.
inline Status worst(Status a, Status b) {
  if (a == Status::fail || b == Status::fail) return Status::fail;
  if (a == Status::undetermined || b == Status::undetermined) return Status::undetermined;
  return Status::pass;
}

}  // namespace lpa
