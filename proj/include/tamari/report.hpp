#pragma once

// Outcome of a batch of identity checks: how many ran, and the first one
// that failed.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tamari {

struct CheckReport {
  CheckReport() = default;
  explicit CheckReport(std::string name_) : name(std::move(name_)) {}

  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
  /// Free-form lines for the caller (expected failures, observations).
  std::vector<std::string> notes;

  bool passed() const noexcept { return failures == 0; }

  /// Record one check. `describe` is only called on failure.
  template <class Describe>
  bool expect(bool ok, Describe&& describe) {
    ++checks;
    if (!ok && failures++ == 0) first_failure = describe();
    return ok;
  }

  void absorb(const CheckReport& other) {
    checks += other.checks;
    if (failures == 0 && other.failures > 0) first_failure = other.name + ": " + other.first_failure;
    failures += other.failures;
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
};

}  // namespace tamari
