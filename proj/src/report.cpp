#include "piforge/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace piforge {

using ordered_json = nlohmann::ordered_json;

ReportFormat parse_format(const std::string& name) {
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  if (name == "pretty") return ReportFormat::Pretty;
  throw std::invalid_argument("unknown format '" + name + "' (expected csv, json or pretty)");
}

std::string target_name(unsigned power) {
  return power == 1 ? "pi" : "pi^" + std::to_string(power);
}

ReportRow numeric_row(std::string series_id, int p, int k, unsigned long N,
                      const CertifiedReal& value, const CertifiedReal& target, unsigned power) {
  ReportRow row;
  row.series_id = std::move(series_id);
  row.p = p;
  row.k = k;
  row.N = N;
  const std::size_t digits = decimal_digits_for(value.precision());
  row.value_lo = value.lo().to_decimal(digits, MPFR_RNDD);
  row.value_hi = value.hi().to_decimal(digits, MPFR_RNDU);
  row.target = target_name(power);
  const CertifiedReal residual = value - target;
  row.residual = residual.mid().to_decimal(8, MPFR_RNDN);
  return row;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string exact_ok_text(const std::optional<bool>& v) {
  if (!v) return "";
  return *v ? "true" : "false";
}

// Half-width of [lo, hi] as a short decimal, or "0" for exact rows.
std::string half_width(const ReportRow& row) {
  if (row.value_lo == row.value_hi) return "0";
  mpfr_t lo, hi;
  mpfr_inits2(4096, lo, hi, static_cast<mpfr_ptr>(nullptr));
  std::string out = "?";
  if (mpfr_set_str(lo, row.value_lo.c_str(), 10, MPFR_RNDD) == 0 &&
      mpfr_set_str(hi, row.value_hi.c_str(), 10, MPFR_RNDU) == 0) {
    mpfr_sub(hi, hi, lo, MPFR_RNDU);
    mpfr_div_2ui(hi, hi, 1, MPFR_RNDU);
    BigFloat w(4096);
    mpfr_set(w.get(), hi, MPFR_RNDU);
    out = w.to_decimal(3, MPFR_RNDU);
  }
  mpfr_clears(lo, hi, static_cast<mpfr_ptr>(nullptr));
  return out;
}

}  // namespace

std::string render_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream os;
  os << kCsvHeader << "\n";
  for (const auto& r : rows) {
    os << csv_field(r.series_id) << ',' << r.p << ',' << r.k << ',' << r.N << ','
       << csv_field(r.value_lo) << ',' << csv_field(r.value_hi) << ',' << csv_field(r.target)
       << ',' << csv_field(r.residual) << ',' << exact_ok_text(r.exact_ok) << "\n";
  }
  return os.str();
}

std::string render_json(const std::vector<ReportRow>& rows) {
  ordered_json doc = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json o;
    o["series_id"] = r.series_id;
    o["p"] = r.p;
    o["k"] = r.k;
    o["N"] = r.N;
    o["value_lo"] = r.value_lo;
    o["value_hi"] = r.value_hi;
    o["target"] = r.target;
    o["residual"] = r.residual;
    if (r.exact_ok) o["exact_ok"] = *r.exact_ok;
    doc.push_back(std::move(o));
  }
  return doc.dump(2) + "\n";
}

std::string render_pretty(const std::vector<ReportRow>& rows) {
  struct Col {
    std::string title;
    std::vector<std::string> cells;
    std::size_t width = 0;
  };
  std::vector<Col> cols = {{"series", {}}, {"p", {}},     {"k", {}},        {"N", {}},
                           {"value", {}},  {"±", {}},     {"target", {}},   {"residual", {}},
                           {"exact", {}}};
  for (const auto& r : rows) {
    cols[0].cells.push_back(r.series_id);
    cols[1].cells.push_back(std::to_string(r.p));
    cols[2].cells.push_back(std::to_string(r.k));
    cols[3].cells.push_back(std::to_string(r.N));
    cols[4].cells.push_back(r.value_lo == r.value_hi ? r.value_lo : "[" + r.value_lo + ", " + r.value_hi + "]");
    cols[5].cells.push_back(half_width(r));
    cols[6].cells.push_back(r.target);
    cols[7].cells.push_back(r.residual);
    cols[8].cells.push_back(r.exact_ok ? (*r.exact_ok ? "ok" : "FAIL") : "-");
  }
  // "±" is two bytes in UTF-8 but one column wide.
  auto display_width = [](const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
      return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
    }));
  };
  for (auto& c : cols) {
    c.width = display_width(c.title);
    for (const auto& cell : c.cells) c.width = std::max(c.width, display_width(cell));
  }
  std::ostringstream os;
  auto emit = [&](auto cell_of) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const std::string s = cell_of(cols[i]);
      os << s;
      if (i + 1 < cols.size()) os << std::string(cols[i].width - display_width(s) + 2, ' ');
    }
    os << "\n";
  };
  emit([](const Col& c) { return c.title; });
  for (std::size_t r = 0; r < rows.size(); ++r) emit([r](const Col& c) { return c.cells[r]; });
  return os.str();
}

std::string render(const std::vector<ReportRow>& rows, ReportFormat format) {
  switch (format) {
    case ReportFormat::Csv: return render_csv(rows);
    case ReportFormat::Json: return render_json(rows);
    case ReportFormat::Pretty: return render_pretty(rows);
  }
  return {};
}

std::vector<ReportRow> parse_json_rows(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw std::invalid_argument(std::string("report JSON: ") + e.what());
  }
  if (!doc.is_array()) throw std::invalid_argument("report JSON: expected an array");
  std::vector<ReportRow> rows;
  try {
    for (const auto& o : doc) {
      ReportRow r;
      r.series_id = o.at("series_id").get<std::string>();
      r.p = o.at("p").get<int>();
      r.k = o.at("k").get<int>();
      r.N = o.at("N").get<unsigned long>();
      r.value_lo = o.at("value_lo").get<std::string>();
      r.value_hi = o.at("value_hi").get<std::string>();
      r.target = o.at("target").get<std::string>();
      r.residual = o.at("residual").get<std::string>();
      if (o.contains("exact_ok")) r.exact_ok = o.at("exact_ok").get<bool>();
      rows.push_back(std::move(r));
    }
  } catch (const ordered_json::exception& e) {
    throw std::invalid_argument(std::string("report JSON: ") + e.what());
  }
  return rows;
}

std::vector<std::string> split_csv_record(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

}  // namespace piforge
