#pragma once

// Batch reproduction of the worked examples and property sweeps, collected
// into a report sorted by check id.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace cyclo {

enum class Verdict { Pass, Fail, Skipped };

std::string to_string(Verdict v);

struct CheckRecord {
  std::string id;         // "<module>.<name>"
  std::string reference;  // the statement being reproduced
  nlohmann::json inputs;
  nlohmann::json expected;
  nlohmann::json computed;
  Verdict verdict = Verdict::Fail;
  std::string reason;  // failure or skip explanation
};

struct Report {
  std::vector<CheckRecord> checks;

  std::size_t count(Verdict v) const;
  bool ok() const { return count(Verdict::Fail) == 0; }

  /// {"checks": [{id, reference, inputs, expected, computed, verdict,
  /// reason?}], "summary": {total, pass, fail, skipped}}
  nlohmann::json to_json() const;
  /// Aligned table, one row per check, then a summary line.
  std::string to_text() const;
};

struct VerifyOptions {
  std::string only;            // id prefix filter; empty runs everything
  std::uint64_t seed = 1;      // drives the randomized sweeps
  unsigned precision = 64;     // 2-adic digits for local computations
};

/// All check ids in report order.
std::vector<std::string> verification_ids();

Report verify_paper(const VerifyOptions& options);

}  // namespace cyclo
