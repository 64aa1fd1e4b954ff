#pragma once

#include "ydilog/identities.hpp"
#include "ydilog/rational.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ydilog {

enum class Format { Text, Json, Csv };

/// One output row. Records without an exact target leave expected empty.
struct Record {
  std::string instance;
  std::string command;
  double computed = 0.0;
  std::optional<Rational> expected;
  double deviation = 0.0;
  bool passed = false;
  std::string detail;
};

Record to_record(const VerificationReport& report, const std::string& command);

/// Text: one aligned row per record. Json: top-level array of
/// {instance, command, computed, expected_num, expected_den, deviation, passed}.
/// Csv: the same columns under a header row.
void write_records(std::ostream& out, const std::vector<Record>& records, Format format);

}  // namespace ydilog
