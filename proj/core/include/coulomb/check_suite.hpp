#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace coulomb {

/// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

struct SuiteOptions {
  /// D_4 bouquet t^2 = 32 (a few seconds).
  bool include_d4 = true;
  unsigned threads = 1;
};

struct CheckRow {
  int criterion = 0;
  std::string name;
  std::string expected;
  std::string computed;
  bool passed = false;
  double seconds = 0.0;
  /// Wall-time limit in seconds; 0 for none. Exceeding it fails the row.
  double limit = 0.0;
};

struct SuiteResult {
  std::vector<CheckRow> rows;
  bool all_passed = false;
  /// Hash of every row without timings; identical across runs.
  std::string hash;
};

SuiteResult run_check_suite(const SuiteOptions& options = {});

/// Fixed-width table, one line per row plus a summary line.
std::string suite_table(const SuiteResult& result);

}  // namespace coulomb
