// Euler numbers E_{2k} and Bernoulli numbers B_n, generated exactly.

#pragma once

#include "piforge/exact.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace piforge {

/// Raised when an index beyond the generated (or permitted) range is requested.
class TableRangeError : public std::out_of_range {
public:
  TableRangeError(const std::string& what, unsigned required_index)
      : std::out_of_range(what), required_index_(required_index) {}
  unsigned required_index() const { return required_index_; }

private:
  unsigned required_index_;
};

/// E_0, E_2, ..., E_{2K}. Odd-index Euler numbers vanish and are not stored.
class EulerTable {
public:
  /// Table holding only E_0 = 1.
  EulerTable();

  /// Largest stored even index (2K).
  unsigned max_index() const { return 2 * static_cast<unsigned>(values_.size() - 1); }
  /// E_index; index must be even and <= max_index().
  const ExactInt& at(unsigned index) const;
  const std::vector<ExactInt>& even_values() const { return values_; }

  /// Grows the table in place until it covers E_{2K}.
  void extend_to(unsigned K);
  /// Copy truncated to E_0..E_{2K}; K must not exceed the stored range.
  EulerTable prefix(unsigned K) const;

  /// Builds a table from E_0..E_{2K} as stored values. No recomputation.
  static EulerTable from_values(std::vector<ExactInt> even_values);

  friend bool operator==(const EulerTable&, const EulerTable&) = default;

private:
  std::vector<ExactInt> values_;
};

/// B_0, B_2, ..., B_{2K} plus B_1 = -1/2.
class BernoulliTable {
public:
  BernoulliTable();

  unsigned max_index() const { return 2 * static_cast<unsigned>(values_.size() - 1); }
  /// B_index for any index <= max_index(); odd indices >= 3 give 0.
  ExactRational at(unsigned index) const;
  const std::vector<ExactRational>& even_values() const { return values_; }
  const ExactRational& b1() const { return b1_; }

  void extend_to(unsigned K);
  BernoulliTable prefix(unsigned K) const;
  static BernoulliTable from_values(std::vector<ExactRational> even_values);

  friend bool operator==(const BernoulliTable&, const BernoulliTable&) = default;

private:
  std::vector<ExactRational> values_;
  ExactRational b1_{-1, 2};
};

/// E_0..E_{2K} via sum_{j=0}^{n} C(2n, 2j) E_{2j} = 0.
EulerTable euler_numbers(unsigned K);

/// B_0..B_{2K} via sum_{j=0}^{m} C(m+1, j) B_j = 0.
BernoulliTable bernoulli_numbers(unsigned K);

/// Primes p with (p - 1) | n, ascending.
std::vector<unsigned> staudt_primes(unsigned n);

/// B_{2k} + sum 1/p over the primes above; an integer for every k >= 1.
ExactRational staudt_clausen_residue(const BernoulliTable& table, unsigned k);

// ---------------------------------------------------------------------------
// Cache files

inline constexpr const char* kCacheFormat = "piforge-numbers/1";

/// Cache parse/validation failure. byte_offset is set for syntax errors,
/// location names the offending JSON element for schema errors.
class CacheError : public std::runtime_error {
public:
  CacheError(const std::string& what, std::optional<std::size_t> byte_offset,
             std::string location)
      : std::runtime_error(what), byte_offset_(byte_offset), location_(std::move(location)) {}
  std::optional<std::size_t> byte_offset() const { return byte_offset_; }
  const std::string& location() const { return location_; }

private:
  std::optional<std::size_t> byte_offset_;
  std::string location_;
};

std::string euler_cache_json(const EulerTable& table);
std::string bernoulli_cache_json(const BernoulliTable& table);
EulerTable parse_euler_cache(const std::string& text);
BernoulliTable parse_bernoulli_cache(const std::string& text);

void save_cache(const EulerTable& table, const std::filesystem::path& path);
void save_cache(const BernoulliTable& table, const std::filesystem::path& path);

/// Loads a cached table and serves E_0..E_{2K}: a prefix slice when the file
/// covers K, otherwise the stored values extended by the recurrence.
EulerTable load_euler_cache(const std::filesystem::path& path, unsigned K);
BernoulliTable load_bernoulli_cache(const std::filesystem::path& path, unsigned K);

/// Loads the whole cached table.
EulerTable load_euler_cache(const std::filesystem::path& path);
BernoulliTable load_bernoulli_cache(const std::filesystem::path& path);

}  // namespace piforge
