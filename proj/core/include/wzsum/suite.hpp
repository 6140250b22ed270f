#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wzsum/catalog.hpp"
#include "wzsum/report.hpp"
#include "wzsum/wz.hpp"

namespace wzsum {

struct SuiteConfig {
  std::optional<long> n_max;  // overrides every per-entry default when set
  int samples = 5;
  std::uint64_t seed = 0;
  /// Catalog ids and pair names to run; empty runs everything. Jet rows for an
  /// id run with that id.
  std::vector<std::string> filter;
  /// "<id or pair>:<mutation>", see mutated_entry and mutated_pair.
  std::vector<std::string> mutations;
  long wz_n_max = 20;
  long jet_n_max = 50;
  std::filesystem::path fixtures;  // directory of *.wz files; empty skips the pairs
  unsigned threads = 0;            // 0 picks the hardware concurrency
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::vector<CheckRow> rows;
  Summary summary;
};

/// Every *.wz file of a directory, in file name order.
std::vector<WZPair> load_pairs(const std::filesystem::path& dir);

/// Catalog rows in catalog order, then jet rows in derivation order, then per
/// pair its verification and telescoping rows. Work is spread over threads;
/// the row order and content depend only on the config.
SuiteReport run_suite(const SuiteConfig& config);

}  // namespace wzsum
