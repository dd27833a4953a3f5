#include "piforge/special_numbers.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace piforge {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Euler

EulerTable::EulerTable() : values_{ExactInt(1)} {}

const ExactInt& EulerTable::at(unsigned index) const {
  if (index % 2 != 0) throw std::invalid_argument("odd-index Euler numbers are not stored");
  if (index > max_index())
    throw TableRangeError("Euler table covers E_0..E_" + std::to_string(max_index()) +
                              ", E_" + std::to_string(index) + " requested",
                          index);
  return values_[index / 2];
}

void EulerTable::extend_to(unsigned K) {
  values_.reserve(K + 1);
  for (unsigned n = static_cast<unsigned>(values_.size()); n <= K; ++n) {
    ExactInt acc;
    for (unsigned j = 0; j < n; ++j) acc += binomial(2 * n, 2 * j) * values_[j];
    values_.push_back(-acc);
  }
}

EulerTable EulerTable::prefix(unsigned K) const {
  if (2 * K > max_index())
    throw TableRangeError("prefix beyond stored Euler range", 2 * K);
  return from_values({values_.begin(), values_.begin() + K + 1});
}

EulerTable EulerTable::from_values(std::vector<ExactInt> even_values) {
  if (even_values.empty() || even_values[0] != ExactInt(1))
    throw std::invalid_argument("Euler table must start with E_0 = 1");
  EulerTable t;
  t.values_ = std::move(even_values);
  return t;
}

EulerTable euler_numbers(unsigned K) {
  EulerTable t;
  t.extend_to(K);
  return t;
}

// ---------------------------------------------------------------------------
// Bernoulli

BernoulliTable::BernoulliTable() : values_{ExactRational(1)} {}

ExactRational BernoulliTable::at(unsigned index) const {
  if (index == 1) return b1_;
  if (index > max_index())
    throw TableRangeError("Bernoulli table covers B_0..B_" + std::to_string(max_index()) +
                              ", B_" + std::to_string(index) + " requested",
                          index);
  if (index % 2 != 0) return ExactRational(0);
  return values_[index / 2];
}

void BernoulliTable::extend_to(unsigned K) {
  values_.reserve(K + 1);
  // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j, for even m; only B_1 among odd j is nonzero.
  for (unsigned n = static_cast<unsigned>(values_.size()); n <= K; ++n) {
    const unsigned m = 2 * n;
    ExactRational acc = ExactRational(binomial(m + 1, 1)) * b1_;
    for (unsigned i = 0; i < n; ++i) acc += ExactRational(binomial(m + 1, 2 * i)) * values_[i];
    values_.push_back(-acc / ExactRational(static_cast<long>(m + 1)));
  }
}

BernoulliTable BernoulliTable::prefix(unsigned K) const {
  if (2 * K > max_index())
    throw TableRangeError("prefix beyond stored Bernoulli range", 2 * K);
  return from_values({values_.begin(), values_.begin() + K + 1});
}

BernoulliTable BernoulliTable::from_values(std::vector<ExactRational> even_values) {
  if (even_values.empty() || even_values[0] != ExactRational(1))
    throw std::invalid_argument("Bernoulli table must start with B_0 = 1");
  BernoulliTable t;
  t.values_ = std::move(even_values);
  return t;
}

BernoulliTable bernoulli_numbers(unsigned K) {
  BernoulliTable t;
  t.extend_to(K);
  return t;
}

std::vector<unsigned> staudt_primes(unsigned n) {
  std::vector<unsigned> primes;
  if (n == 0) return primes;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned p = d + 1;
    bool prime = p >= 2;
    for (unsigned q = 2; q * q <= p && prime; ++q)
      if (p % q == 0) prime = false;
    if (prime) primes.push_back(p);
  }
  return primes;
}

ExactRational staudt_clausen_residue(const BernoulliTable& table, unsigned k) {
  ExactRational r = table.at(2 * k);
  for (unsigned p : staudt_primes(2 * k)) r += ExactRational(1, static_cast<long>(p));
  return r;
}

// ---------------------------------------------------------------------------
// Cache files

namespace {

struct Entry {
  unsigned index;
  std::string num;
  std::string den;
};

std::string render_cache(const char* kind, unsigned max_index, const std::vector<Entry>& entries) {
  std::ostringstream os;
  os << "{\n  \"format\": \"" << kCacheFormat << "\",\n  \"kind\": \"" << kind
     << "\",\n  \"max_index\": " << max_index << ",\n  \"values\": [\n";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    os << "    [" << e.index << ", \"" << e.num << "\", \"" << e.den << "\"]"
       << (i + 1 < entries.size() ? ",\n" : "\n");
  }
  os << "  ]\n}\n";
  return os.str();
}

[[noreturn]] void schema_error(const std::string& what, const std::string& location) {
  throw CacheError("cache schema error at " + location + ": " + what, std::nullopt, location);
}

// Parses and validates the shared envelope; returns (index, value) pairs.
std::vector<std::pair<unsigned, ExactRational>> parse_envelope(const std::string& text,
                                                               const std::string& kind,
                                                               unsigned& max_index) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CacheError("cache syntax error at byte " + std::to_string(e.byte) + ": " + e.what(),
                     e.byte, "byte " + std::to_string(e.byte));
  }
  if (!doc.is_object()) schema_error("top level is not an object", "$");
  if (!doc.contains("format") || !doc["format"].is_string())
    schema_error("missing format tag", "$.format");
  if (doc["format"].get<std::string>() != kCacheFormat)
    schema_error("unsupported format '" + doc["format"].get<std::string>() + "', expected '" +
                     kCacheFormat + "'",
                 "$.format");
  if (!doc.contains("kind") || !doc["kind"].is_string() || doc["kind"].get<std::string>() != kind)
    schema_error("expected kind '" + kind + "'", "$.kind");
  if (!doc.contains("max_index") || !doc["max_index"].is_number_unsigned())
    schema_error("max_index must be a non-negative integer", "$.max_index");
  max_index = doc["max_index"].get<unsigned>();
  if (max_index % 2 != 0) schema_error("max_index must be even", "$.max_index");
  if (!doc.contains("values") || !doc["values"].is_array())
    schema_error("values must be an array", "$.values");

  std::vector<std::pair<unsigned, ExactRational>> out;
  const auto& values = doc["values"];
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::string loc = "$.values[" + std::to_string(i) + "]";
    const auto& row = values[i];
    if (!row.is_array() || row.size() != 3 || !row[0].is_number_unsigned() || !row[1].is_string() ||
        !row[2].is_string())
      schema_error("entry must be [index, \"num\", \"den\"]", loc);
    ExactInt num, den;
    try {
      num = ExactInt::from_string(row[1].get<std::string>());
      den = ExactInt::from_string(row[2].get<std::string>());
    } catch (const std::invalid_argument& e) {
      schema_error(e.what(), loc);
    }
    if (den.sign() <= 0) schema_error("denominator must be positive", loc);
    if (gcd(num, den) != ExactInt(1)) schema_error("fraction not in lowest terms", loc);
    // Canonical decimal spelling keeps the round trip bit-exact.
    if (num.str() != row[1].get<std::string>() || den.str() != row[2].get<std::string>())
      schema_error("non-canonical decimal spelling", loc);
    out.emplace_back(row[0].get<unsigned>(), ExactRational(num, den));
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open cache file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write cache file " + path.string());
  out << text;
  if (!out) throw std::runtime_error("short write to cache file " + path.string());
}

}  // namespace

std::string euler_cache_json(const EulerTable& table) {
  std::vector<Entry> entries;
  for (unsigned i = 0; i <= table.max_index(); i += 2)
    entries.push_back({i, table.at(i).str(), "1"});
  return render_cache("euler", table.max_index(), entries);
}

std::string bernoulli_cache_json(const BernoulliTable& table) {
  std::vector<Entry> entries;
  auto push = [&](unsigned i) {
    const ExactRational v = table.at(i);
    entries.push_back({i, v.num().str(), v.den().str()});
  };
  push(0);
  push(1);
  for (unsigned i = 2; i <= table.max_index(); i += 2) push(i);
  return render_cache("bernoulli", table.max_index(), entries);
}

EulerTable parse_euler_cache(const std::string& text) {
  unsigned max_index = 0;
  auto entries = parse_envelope(text, "euler", max_index);
  if (entries.size() != max_index / 2 + 1)
    schema_error("expected " + std::to_string(max_index / 2 + 1) + " entries", "$.values");
  std::vector<ExactInt> values;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string loc = "$.values[" + std::to_string(i) + "]";
    if (entries[i].first != 2 * i) schema_error("index out of sequence", loc);
    if (!entries[i].second.is_integer()) schema_error("Euler numbers are integers", loc);
    values.push_back(entries[i].second.num());
  }
  if (values[0] != ExactInt(1)) schema_error("E_0 must be 1", "$.values[0]");
  return EulerTable::from_values(std::move(values));
}

BernoulliTable parse_bernoulli_cache(const std::string& text) {
  unsigned max_index = 0;
  auto entries = parse_envelope(text, "bernoulli", max_index);
  const std::size_t expected = max_index / 2 + 2;
  if (entries.size() != expected)
    schema_error("expected " + std::to_string(expected) + " entries", "$.values");
  std::vector<ExactRational> values;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string loc = "$.values[" + std::to_string(i) + "]";
    const unsigned want = i == 0 ? 0 : (i == 1 ? 1 : 2 * static_cast<unsigned>(i - 1));
    if (entries[i].first != want) schema_error("index out of sequence", loc);
    if (want == 1) {
      if (entries[i].second != ExactRational(-1, 2)) schema_error("B_1 must be -1/2", loc);
      continue;
    }
    values.push_back(entries[i].second);
  }
  if (values[0] != ExactRational(1)) schema_error("B_0 must be 1", "$.values[0]");
  return BernoulliTable::from_values(std::move(values));
}

void save_cache(const EulerTable& table, const std::filesystem::path& path) {
  write_file(path, euler_cache_json(table));
}

void save_cache(const BernoulliTable& table, const std::filesystem::path& path) {
  write_file(path, bernoulli_cache_json(table));
}

EulerTable load_euler_cache(const std::filesystem::path& path) {
  return parse_euler_cache(read_file(path));
}

BernoulliTable load_bernoulli_cache(const std::filesystem::path& path) {
  return parse_bernoulli_cache(read_file(path));
}

EulerTable load_euler_cache(const std::filesystem::path& path, unsigned K) {
  EulerTable t = load_euler_cache(path);
  if (2 * K <= t.max_index()) return t.prefix(K);
  t.extend_to(K);
  return t;
}

BernoulliTable load_bernoulli_cache(const std::filesystem::path& path, unsigned K) {
  BernoulliTable t = load_bernoulli_cache(path);
  if (2 * K <= t.max_index()) return t.prefix(K);
  t.extend_to(K);
  return t;
}

}  // namespace piforge
