#pragma once

// Randomized law suites over every number system, as driven by
// `transfinitum check`.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "transfinitum/report.hpp"

namespace transfinitum {

const std::vector<std::string>& suite_names();  // ordinal, oracle, tower, surreal, hahn, unify, all

// Deterministic in (name, cases, seed). Unknown names yield std::nullopt.
std::optional<Report> run_suite(std::string_view name, std::size_t cases, std::uint64_t seed);

}  // namespace transfinitum
