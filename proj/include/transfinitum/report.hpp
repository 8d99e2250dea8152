#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace transfinitum {

struct Counterexample {
  std::string inputs;
  std::string expected;
  std::string got;
};

// Outcome of one checked law (or of a group of them in `parts`).
struct Report {
  std::string suite;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::optional<Counterexample> counterexample;
  std::vector<Report> parts;

  explicit Report(std::string name = {}) : suite(std::move(name)) {}
  bool ok() const { return failures == 0; }

  // Records one case; keeps the first counterexample only.
  void record(bool passed, const std::string& inputs = {}, const std::string& expected = {},
              const std::string& got = {});
  // Folds a sub-report into the totals and keeps it as a part.
  void absorb(Report part);

  std::string to_text() const;
  nlohmann::json to_json() const;
};

}  // namespace transfinitum
