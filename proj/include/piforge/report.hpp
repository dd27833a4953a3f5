// Machine-readable report rows and their CSV / JSON / pretty renderings.

#pragma once

#include "piforge/interval.hpp"

#include <optional>
#include <string>
#include <vector>

namespace piforge {

struct ReportRow {
  std::string series_id;
  int p = 0;
  int k = 0;
  unsigned long N = 0;  // 0 for exact identity checks
  std::string value_lo;
  std::string value_hi;
  std::string target;
  std::string residual;
  std::optional<bool> exact_ok;  // present iff the row is an identity check

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

enum class ReportFormat { Csv, Json, Pretty };

/// "csv" | "json" | "pretty"; throws std::invalid_argument otherwise.
ReportFormat parse_format(const std::string& name);

inline constexpr const char* kCsvHeader = "series_id,p,k,N,value_lo,value_hi,target,residual,exact_ok";

/// "pi" for power 1, "pi^p" otherwise.
std::string target_name(unsigned power);

/// Row for a numeric value compared against target pi^power. Bounds are
/// printed with enough digits to separate distinct floats at the value's
/// precision; lo rounds down and hi rounds up.
ReportRow numeric_row(std::string series_id, int p, int k, unsigned long N,
                      const CertifiedReal& value, const CertifiedReal& target, unsigned power);

std::string render_csv(const std::vector<ReportRow>& rows);
std::string render_json(const std::vector<ReportRow>& rows);
std::string render_pretty(const std::vector<ReportRow>& rows);
std::string render(const std::vector<ReportRow>& rows, ReportFormat format);

/// Inverse of render_json; throws std::invalid_argument on malformed input.
std::vector<ReportRow> parse_json_rows(const std::string& text);

/// Splits one CSV record (RFC 4180 quoting) into fields.
std::vector<std::string> split_csv_record(const std::string& line);

}  // namespace piforge
