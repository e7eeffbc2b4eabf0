#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "degext/json_io.hpp"

namespace degext {

/// One acceptance experiment.
struct ExperimentRecord {
  int criterion = 0;
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
  double runtime_seconds = 0.0;
  double budget_seconds = 0.0;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<ExperimentRecord> records;

  bool pass() const;
};

struct VerifyOptions {
  std::uint64_t seed = 7;
  /// Criteria to run (1-9); empty runs all. Criterion 9 summarizes the oracle
  /// runs of whichever criteria ran before it.
  std::vector<int> criteria;
};

inline constexpr int kCriterionCount = 9;

VerifyReport run_verify(const VerifyOptions& options);

/// Runtimes are omitted when include_runtimes is false so that reports can
/// be compared byte for byte.
io::Json to_json(const VerifyReport& report, bool include_runtimes = true);

}  // namespace degext
