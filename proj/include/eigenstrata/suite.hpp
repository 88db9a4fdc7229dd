#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace eigenstrata {

enum class Status { Pass, Fail, Warn };
std::string to_string(Status s);

struct CriterionResult {
  int id = 0;
  std::string name;
  Status status = Status::Fail;
  std::vector<std::string> details;
  /// Discrepancy records that never fail the run.
  std::vector<std::string> warnings;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string data_dir;       // empty: default_data_dir()
  std::vector<int> criteria;  // empty: all twelve
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::vector<CriterionResult> results;

  bool ok() const;
  std::vector<int> failures() const;
  /// One PASS/FAIL line per criterion followed by its detail and WARN lines.
  std::string text() const;
  nlohmann::json json() const;
};

inline constexpr int kCriterionCount = 12;
std::string criterion_name(int id);

/// Runs one criterion. Timing goes to `progress` (if given) and never into
/// the result, so reports are byte-stable.
CriterionResult run_criterion(int id, const SuiteOptions& opt, std::ostream* progress = nullptr);

SuiteReport run_suite(const SuiteOptions& opt, std::ostream* progress = nullptr);

}  // namespace eigenstrata
