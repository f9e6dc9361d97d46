#pragma once

#include <string>
#include <vector>

namespace pearllab {

struct CheckRecord {
  std::string id;
  std::string anchor;
  std::string status;  // pass | fail | flagged
  std::string computed;
  std::string expected;
  std::string tolerance;  // "0" for exact checks
};

struct VerifyOptions {
  std::size_t disc_samples = 1024;
};

/// The full verification suite, ordered by id; deterministic for fixed
/// options.
std::vector<CheckRecord> run_all_checks(const VerifyOptions& opts = VerifyOptions());

bool any_failed(const std::vector<CheckRecord>& records);

/// Flat JSON array with fixed key order (id, anchor, status, computed,
/// expected, tolerance); numeric values as strings.
std::string report_to_json(const std::vector<CheckRecord>& records);

/// Plain-text table of the same rows.
std::string report_to_table(const std::vector<CheckRecord>& records);

}  // namespace pearllab
