#include "cli.hpp"

#include "piforge/gupta_series.hpp"
#include "piforge/parallel.hpp"
#include "piforge/prior_series.hpp"
#include "piforge/report.hpp"
#include "piforge/special_numbers.hpp"
#include "piforge/verifier.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <sstream>

namespace piforge::cli {

namespace fs = std::filesystem;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

unsigned long parse_count(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError("invalid " + what + " '" + s + "'");
  try {
    return std::stoul(s);
  } catch (const std::exception&) {
    throw UsageError("invalid " + what + " '" + s + "'");
  }
}

const std::map<std::string, SeriesKind>& kind_names() {
  static const std::map<std::string, SeriesKind> names = {
      {"gupta", SeriesKind::Gupta},        {"classical", SeriesKind::Classical},
      {"alzer-h", SeriesKind::AlzerH},     {"alzer-H", SeriesKind::AlzerHH},
      {"kolbig", SeriesKind::Kolbig},      {"alzer-koumandos", SeriesKind::AlzerKoumandos}};
  return names;
}

}  // namespace

unsigned SeriesSelector::power() const {
  switch (kind) {
    case SeriesKind::Gupta:
    case SeriesKind::Classical: return *p;
    case SeriesKind::AlzerKoumandos: return 1;
    default: return 2;
  }
}

std::string SeriesSelector::id() const {
  switch (kind) {
    case SeriesKind::Gupta: return "gupta:p=" + std::to_string(*p) + ",k=" + std::to_string(k);
    case SeriesKind::Classical: return "classical:p=" + std::to_string(*p);
    case SeriesKind::AlzerH: return "alzer-h";
    case SeriesKind::AlzerHH: return "alzer-H";
    case SeriesKind::Kolbig: return "kolbig";
    case SeriesKind::AlzerKoumandos: return "alzer-koumandos:mu=" + mu.str();
  }
  return {};
}

CertifiedReal SeriesSelector::evaluate(unsigned long terms, const PrecisionContext& ctx) const {
  if (terms == 0) return CertifiedReal(ctx);
  const auto K = static_cast<unsigned>(terms);
  switch (kind) {
    case SeriesKind::Gupta: return partial_sum(*p, k, terms, ctx).partial;
    case SeriesKind::Classical: return classical_partial(*p, terms, ctx).partial;
    case SeriesKind::AlzerH: return alzer_h_partial(K, ctx);
    case SeriesKind::AlzerHH: return alzer_H_partial(K, ctx);
    case SeriesKind::Kolbig: return kolbig_partial(K, ctx);
    // Summation index starts at k = 0, so `terms` summands end at K - 1.
    case SeriesKind::AlzerKoumandos: return alzer_koumandos_partial(mu, K - 1, ctx);
  }
  return CertifiedReal(ctx);
}

SeriesSelector parse_selector(const std::string& text, std::optional<unsigned> implied_power) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const auto it = kind_names().find(name);
  if (it == kind_names().end()) throw UsageError("unknown series '" + name + "'");
  SeriesSelector sel;
  sel.kind = it->second;
  bool have_mu = false;
  if (colon != std::string::npos) {
    for (const auto& param : split(text.substr(colon + 1), ',')) {
      const auto eq = param.find('=');
      if (eq == std::string::npos) throw UsageError("malformed parameter '" + param + "' in '" + text + "'");
      const std::string key = param.substr(0, eq);
      const std::string value = param.substr(eq + 1);
      const bool takes_pk = sel.kind == SeriesKind::Gupta || sel.kind == SeriesKind::Classical;
      if (key == "p" && takes_pk) {
        sel.p = static_cast<unsigned>(parse_count(value, "power"));
      } else if (key == "k" && sel.kind == SeriesKind::Gupta) {
        sel.k = static_cast<unsigned>(parse_count(value, "order k"));
      } else if (key == "mu" && sel.kind == SeriesKind::AlzerKoumandos) {
        try {
          sel.mu = ExactRational::from_string(value);
        } catch (const std::exception& e) {
          throw UsageError("invalid mu '" + value + "': " + e.what());
        }
        if (sel.mu.sign() <= 0) throw UsageError("mu must be positive, got '" + value + "'");
        have_mu = true;
      } else {
        throw UsageError("parameter '" + key + "' not accepted by series '" + name + "'");
      }
    }
  }
  if (sel.kind == SeriesKind::AlzerKoumandos && !have_mu)
    throw UsageError("alzer-koumandos requires mu=<positive rational>");
  if (sel.kind == SeriesKind::Gupta || sel.kind == SeriesKind::Classical) {
    if (!sel.p) sel.p = implied_power;
    if (!sel.p) throw UsageError("series '" + text + "' needs p=<1..6>");
    if (*sel.p < 1 || *sel.p > 6) throw UsageError("power must be in 1..6 in '" + text + "'");
    if (implied_power && *sel.p != *implied_power)
      throw UsageError("series '" + text + "' does not converge to the target power");
  }
  return sel;
}

std::vector<SeriesSelector> parse_selector_list(const std::string& text,
                                                std::optional<unsigned> implied_power) {
  std::vector<std::string> groups;
  for (const auto& token : split(text, ',')) {
    const bool continuation = token.find(':') == std::string::npos && token.find('=') != std::string::npos;
    if (continuation) {
      if (groups.empty()) throw UsageError("parameter '" + token + "' without a series");
      groups.back() += "," + token;
    } else {
      if (token.empty()) throw UsageError("empty series name in '" + text + "'");
      groups.push_back(token);
    }
  }
  std::vector<SeriesSelector> out;
  for (const auto& g : groups) out.push_back(parse_selector(g, implied_power));
  return out;
}

std::vector<unsigned> parse_powers(const std::string& text) {
  std::vector<unsigned> powers;
  for (const auto& part : split(text, ',')) {
    const auto dash = part.find('-');
    unsigned lo, hi;
    if (dash == std::string::npos) {
      lo = hi = static_cast<unsigned>(parse_count(part, "power"));
    } else {
      lo = static_cast<unsigned>(parse_count(part.substr(0, dash), "power"));
      hi = static_cast<unsigned>(parse_count(part.substr(dash + 1), "power"));
    }
    if (lo < 1 || hi > 6 || lo > hi) throw UsageError("powers must lie in 1..6, got '" + part + "'");
    for (unsigned p = lo; p <= hi; ++p) powers.push_back(p);
  }
  std::sort(powers.begin(), powers.end());
  powers.erase(std::unique(powers.begin(), powers.end()), powers.end());
  return powers;
}

std::vector<unsigned long> parse_schedule(const std::string& text) {
  std::vector<unsigned long> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_count(part, "term count"));
  if (out.empty()) throw UsageError("empty terms schedule");
  return out;
}

unsigned parse_target(const std::string& text) {
  if (text == "pi") return 1;
  std::string digits;
  if (text.rfind("pi^", 0) == 0) digits = text.substr(3);
  else if (text.rfind("pi", 0) == 0) digits = text.substr(2);
  else throw UsageError("unknown target '" + text + "'");
  const auto p = static_cast<unsigned>(parse_count(digits, "target power"));
  if (p < 1 || p > 6) throw UsageError("target power must be in 1..6, got '" + text + "'");
  return p;
}

namespace {

struct CacheOptions {
  bool enabled = true;
  fs::path dir;
};

CacheOptions resolve_cache(const std::string& flag_dir, bool no_cache) {
  CacheOptions c;
  c.enabled = !no_cache;
  if (!flag_dir.empty()) c.dir = flag_dir;
  else if (const char* env = std::getenv("PIFORGE_CACHE_DIR"); env && *env) c.dir = env;
  else c.dir = ".piforge-cache";
  return c;
}

template <typename Table, typename Loader, typename Builder>
Table obtain_table(const CacheOptions& cache, const std::string& file, unsigned K, Loader load,
                   Builder build, std::ostream& err) {
  const fs::path path = cache.dir / file;
  if (cache.enabled && fs::exists(path)) {
    try {
      Table full = load(path);
      if (full.max_index() >= 2 * K) return full.prefix(K);
      full.extend_to(K);
      save_cache(full, path);
      return full;
    } catch (const CacheError& e) {
      err << "warning: ignoring cache " << path.string() << ": " << e.what() << "\n";
    }
  }
  Table t = build(K);
  if (cache.enabled) {
    try {
      save_cache(t, path);
    } catch (const std::exception& e) {
      err << "warning: cannot write cache " << path.string() << ": " << e.what() << "\n";
    }
  }
  return t;
}

EulerTable obtain_euler(const CacheOptions& cache, unsigned K, std::ostream& err) {
  return obtain_table<EulerTable>(
      cache, "euler.json", K, [](const fs::path& p) { return load_euler_cache(p); }, euler_numbers, err);
}

BernoulliTable obtain_bernoulli(const CacheOptions& cache, unsigned K, std::ostream& err) {
  return obtain_table<BernoulliTable>(
      cache, "bernoulli.json", K, [](const fs::path& p) { return load_bernoulli_cache(p); },
      bernoulli_numbers, err);
}

std::string exact_text(const ExactRational& q) {
  if (q.is_integer()) return q.num().str();
  PrecisionContext ctx;
  const CertifiedReal v = CertifiedReal::from_rational(q, ctx);
  return v.mid().to_decimal(decimal_digits_for(v.precision()), MPFR_RNDN);
}

ReportRow identity_row(const IdentityCheck& c) {
  ReportRow row;
  row.series_id = "gupta:p=" + std::to_string(c.p) + ",k=" + std::to_string(c.k);
  row.p = static_cast<int>(c.p);
  row.k = static_cast<int>(c.k);
  row.N = 0;
  if (c.ratio.is_integer()) {
    row.value_lo = row.value_hi = c.ratio.num().str();
  } else {
    PrecisionContext ctx;
    const CertifiedReal v = CertifiedReal::from_rational(c.ratio, ctx);
    const std::size_t digits = decimal_digits_for(v.precision());
    row.value_lo = v.lo().to_decimal(digits, MPFR_RNDD);
    row.value_hi = v.hi().to_decimal(digits, MPFR_RNDU);
  }
  row.target = "1";
  row.residual = exact_text(c.ratio - ExactRational(1));
  row.exact_ok = c.holds;
  return row;
}

std::vector<ReportRow> sum_rows(const std::vector<SeriesSelector>& series,
                                const std::vector<unsigned long>& schedule,
                                const PrecisionContext& ctx) {
  std::vector<ReportRow> rows;
  for (const auto& s : series) {
    const CertifiedReal target = pi(ctx).pow_int(s.power());
    for (unsigned long N : schedule) {
      rows.push_back(numeric_row(s.id(), static_cast<int>(s.power()), static_cast<int>(s.k), N,
                                 s.evaluate(N, ctx), target, s.power()));
    }
  }
  return rows;
}

std::string render_matrix(const std::vector<SeriesSelector>& series,
                          const std::vector<unsigned long>& schedule,
                          const std::vector<ReportRow>& rows) {
  std::vector<std::vector<std::string>> table;
  std::vector<std::string> header = {"N"};
  for (const auto& s : series) header.push_back(s.id());
  table.push_back(header);
  for (std::size_t r = 0; r < schedule.size(); ++r) {
    std::vector<std::string> line = {std::to_string(schedule[r])};
    for (std::size_t c = 0; c < series.size(); ++c)
      line.push_back(rows[c * schedule.size() + r].residual);
    table.push_back(line);
  }
  std::vector<std::size_t> widths(header.size(), 0);
  for (const auto& line : table)
    for (std::size_t i = 0; i < line.size(); ++i) widths[i] = std::max(widths[i], line[i].size());
  std::ostringstream os;
  for (const auto& line : table) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      os << line[i];
      if (i + 1 < line.size()) os << std::string(widths[i] - line[i].size() + 2, ' ');
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"piforge: exact verification and convergence analysis of series for powers of pi"};
  app.require_subcommand(1);

  std::string format_name = "pretty";
  std::string cache_dir;
  bool no_cache = false;
  unsigned workers = worker_count();
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"csv", "json", "pretty"}));
    sub->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  };
  auto add_cache = [&](CLI::App* sub) {
    sub->add_option("--cache-dir", cache_dir, "Number cache directory (default $PIFORGE_CACHE_DIR or ./.piforge-cache)");
    sub->add_flag("--no-cache", no_cache, "Neither read nor write the number cache");
  };

  auto* numbers = app.add_subcommand("numbers", "Print Euler or Bernoulli numbers");
  std::string kind;
  unsigned max_index = 0;
  numbers->add_option("--kind", kind, "euler or bernoulli")->required()->check(CLI::IsMember({"euler", "bernoulli"}));
  numbers->add_option("--max-index", max_index, "Largest (even) index")->required();
  add_common(numbers);
  add_cache(numbers);

  auto* verify = app.add_subcommand("verify", "Exactly verify the series identities");
  std::string powers_text = "1-6";
  unsigned k_max = 64;
  unsigned table_cap = 512;
  verify->add_option("--powers", powers_text, "Powers, e.g. 1,3,5 or 1-6");
  verify->add_option("--k-max", k_max, "Largest truncation order k");
  verify->add_option("--table-cap", table_cap, "Hard cap on the Euler/Bernoulli index");
  add_common(verify);
  add_cache(verify);

  auto* sum = app.add_subcommand("sum", "Certified partial sum of one series");
  std::string series_text;
  unsigned long terms = 1000;
  unsigned prec = 128;
  sum->add_option("--series", series_text, "Series selector")->required();
  sum->add_option("--terms", terms, "Number of summed terms");
  sum->add_option("--prec", prec, "Precision in bits (>= 64)");
  add_common(sum);

  auto* compare = app.add_subcommand("compare", "Residual table for several series");
  std::string target_text;
  std::string schedule_text = "100,1000,10000";
  compare->add_option("--target", target_text, "pi, pi2, ..., pi6")->required();
  compare->add_option("--series", series_text, "Comma-separated selectors")->required();
  compare->add_option("--terms", schedule_text, "Term counts, e.g. 100,1000,10000");
  compare->add_option("--prec", prec, "Precision in bits (>= 64)");
  add_common(compare);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    set_worker_count(workers);
    const ReportFormat format = parse_format(format_name);

    if (numbers->parsed()) {
      if (max_index % 2 != 0) throw UsageError("--max-index must be even");
      const CacheOptions cache = resolve_cache(cache_dir, no_cache);
      const unsigned K = max_index / 2;
      std::vector<std::array<std::string, 3>> entries;
      std::string sym;
      if (kind == "euler") {
        sym = "E";
        const EulerTable t = obtain_euler(cache, K, err);
        for (unsigned i = 0; i <= max_index; i += 2)
          entries.push_back({std::to_string(i), t.at(i).str(), "1"});
      } else {
        sym = "B";
        const BernoulliTable t = obtain_bernoulli(cache, K, err);
        auto push = [&](unsigned i) {
          const ExactRational v = t.at(i);
          entries.push_back({std::to_string(i), v.num().str(), v.den().str()});
        };
        push(0);
        push(1);
        for (unsigned i = 2; i <= max_index; i += 2) push(i);
      }
      if (format == ReportFormat::Json) {
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        for (const auto& e : entries) doc.push_back({e[0], e[1], e[2]});
        out << doc.dump() << "\n";
      } else if (format == ReportFormat::Csv) {
        out << "index,num,den\n";
        for (const auto& e : entries) out << e[0] << ',' << e[1] << ',' << e[2] << "\n";
      } else {
        for (const auto& e : entries)
          out << sym << "_" << e[0] << " = " << e[1] << (e[2] == "1" ? "" : "/" + e[2]) << "\n";
      }
      return 0;
    }

    if (verify->parsed()) {
      const std::vector<unsigned> powers = powers_text.empty() ? std::vector<unsigned>{} : parse_powers(powers_text);
      const CacheOptions cache = resolve_cache(cache_dir, no_cache);
      unsigned need = 0;
      for (unsigned p : powers) need = std::max(need, required_index(p, k_max));
      if (need > table_cap)
        throw UsageError("--k-max " + std::to_string(k_max) + " needs table index " +
                         std::to_string(need) + " beyond --table-cap " + std::to_string(table_cap));
      NumberTables tables(obtain_euler(cache, need / 2, err), obtain_bernoulli(cache, need / 2, err),
                          table_cap);
      const auto checks = verify_grid(powers, k_max, tables);
      std::vector<ReportRow> rows;
      bool all_ok = true;
      for (const auto& c : checks) {
        rows.push_back(identity_row(c));
        all_ok = all_ok && c.holds;
      }
      out << render(rows, format);
      return all_ok ? 0 : 1;
    }

    PrecisionContext ctx;
    ctx.precision_bits = prec;
    if (prec < 64) throw UsageError("--prec must be >= 64");

    if (sum->parsed()) {
      const auto series = parse_selector_list(series_text);
      if (series.size() != 1) throw UsageError("sum takes exactly one series");
      out << render(sum_rows(series, {terms}, ctx), format);
      return 0;
    }

    if (compare->parsed()) {
      const unsigned power = parse_target(target_text);
      const auto series = parse_selector_list(series_text, power);
      if (series.empty()) throw UsageError("compare needs at least one series");
      for (const auto& s : series)
        if (s.power() != power)
          throw UsageError("series '" + s.id() + "' converges to " + target_name(s.power()) +
                           ", not " + target_name(power));
      const auto schedule = parse_schedule(schedule_text);
      const auto rows = sum_rows(series, schedule, ctx);
      out << (format == ReportFormat::Pretty ? render_matrix(series, schedule, rows) : render(rows, format));
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const TableRangeError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace piforge::cli
