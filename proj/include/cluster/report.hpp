#pragma once

#include <string>
#include <utility>

#include "json.hpp"

namespace cluster {

/// Outcome of a symbolic verification pass: pass/fail plus one JSON record
/// per failing instance, suitable for direct CLI output.
struct CheckReport {
  std::string name;
  bool passed = true;
  nlohmann::json failures = nlohmann::json::array();

  explicit CheckReport(std::string n = "") : name(std::move(n)) {}

  void fail(nlohmann::json f) {
    passed = false;
    failures.push_back(std::move(f));
  }
  void expect(bool ok, nlohmann::json f) {
    if (!ok) fail(std::move(f));
  }
  void merge(const CheckReport& other) {
    if (!other.passed) {
      passed = false;
      for (const auto& f : other.failures) failures.push_back(f);
    }
  }

  nlohmann::json to_json() const {
    return {{"check", name}, {"passed", passed}, {"failures", failures}};
  }
};

}  // namespace cluster
