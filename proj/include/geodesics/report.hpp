#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace geodesics {

/// Named numeric values locating a check's worst case; insertion-ordered.
using Witness = std::vector<std::pair<std::string, double>>;

/// One machine-checkable claim. `margin` is positive when the claim holds
/// with room to spare and negative when it is violated.
struct Check {
  std::string id;
  bool pass = false;
  double margin = 0.0;
  std::optional<Witness> witness;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }

  /// Records `margin >= 0` as a pass.
  Check& add(std::string id, double margin, std::optional<Witness> witness = std::nullopt) {
    checks.push_back({std::move(id), margin >= 0.0, margin, std::move(witness)});
    return checks.back();
  }

  void append(const Report& other) {
    for (const auto& c : other.checks) checks.push_back({other.suite + "." + c.id, c.pass, c.margin, c.witness});
    for (const auto& n : other.notes) notes.push_back(other.suite + ": " + n);
  }

  const Check* find(const std::string& id) const {
    for (const auto& c : checks) {
      if (c.id == id) return &c;
    }
    return nullptr;
  }
};

}  // namespace geodesics
