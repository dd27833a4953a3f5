// Command-line front end: numbers, verify, sum, compare.

#pragma once

#include "piforge/exact.hpp"
#include "piforge/interval.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace piforge::cli {

/// Usage problems (bad selector, malformed list); the CLI maps these to exit 2.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class SeriesKind { Gupta, Classical, AlzerH, AlzerHH, Kolbig, AlzerKoumandos };

struct SeriesSelector {
  SeriesKind kind = SeriesKind::Gupta;
  std::optional<unsigned> p;
  unsigned k = 0;
  ExactRational mu{1};

  /// Power of pi the series converges to.
  unsigned power() const;
  /// Canonical selector text, e.g. "gupta:p=2,k=2" or "alzer-koumandos:mu=1/2".
  std::string id() const;
  /// Partial sum over the first `terms` summands.
  CertifiedReal evaluate(unsigned long terms, const PrecisionContext& ctx) const;
};

/// Parses one selector; `implied_power` fills p for gupta/classical when absent.
SeriesSelector parse_selector(const std::string& text, std::optional<unsigned> implied_power = {});

/// Comma-separated selectors; a bare "key=value" token continues the previous
/// selector, so "gupta:p=2,k=2,kolbig" is two selectors.
std::vector<SeriesSelector> parse_selector_list(const std::string& text,
                                                std::optional<unsigned> implied_power = {});

/// "1,3,5", "1-6" or mixtures such as "1-3,6".
std::vector<unsigned> parse_powers(const std::string& text);

/// "100,1000,10000".
std::vector<unsigned long> parse_schedule(const std::string& text);

/// "pi", "pi2" .. "pi6" (also "pi^2").
unsigned parse_target(const std::string& text);

/// Runs the CLI with argv-style arguments (args[0] is the program name).
/// Returns the process exit code: 0 success, 1 identity failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace piforge::cli
