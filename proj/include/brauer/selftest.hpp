// Copyright 2026 The brauer-kit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "brauer/linalg.hpp"

namespace brauer {

enum class SelftestLevel { Quick, Full };

struct CriterionReport {
  int id = 0;  // 0 for extra checks such as a user-supplied table
  std::string name;
  bool passed = false;
  std::uint64_t checks = 0;
  double seconds = 0;
  double budget_seconds = 0;
  std::string detail;  // first failure, or a short summary
};

/// Quick runs suites 1-5, 8, 9; full runs all nine.
std::vector<CriterionReport> run_selftest(SelftestLevel level, std::uint64_t seed = 0);

/// Runs a single suite by number (1-9).
CriterionReport run_criterion(int id, std::uint64_t seed = 0);

/// Checks the algebra laws of a raw structure-constant table and names the
/// first violating basis triple.
CriterionReport check_table(const Ring& ring, std::size_t rank, const std::vector<Element>& sc,
                            const Vector& unit);

}  // namespace brauer
