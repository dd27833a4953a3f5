#include "piforge/verifier.hpp"

#include "piforge/gupta_series.hpp"
#include "piforge/parallel.hpp"

#include <algorithm>

namespace piforge {

unsigned required_index(unsigned p, unsigned k) {
  check_power(p);
  const unsigned s = p % 2 == 1 ? (p - 1) / 2 : p / 2;
  return 2 * (k + s);
}

IdentityCheck reduce_exact(unsigned p, unsigned k, const EulerTable& euler,
                           const BernoulliTable& bern) {
  check_power(p);
  const unsigned need = required_index(p, k);
  if (p % 2 == 1 && euler.max_index() < need)
    throw TableRangeError("Euler table too short: E_" + std::to_string(need) + " required", need);
  if (p % 2 == 0 && bern.max_index() < need)
    throw TableRangeError("Bernoulli table too short: B_" + std::to_string(need) + " required",
                          need);

  const unsigned s = p % 2 == 1 ? (p - 1) / 2 : p / 2;
  ExactRational acc;
  for (unsigned j = 0; j <= k; ++j) {
    const ExactRational closed = p % 2 == 1 ? beta_pi_coeff(j + s, euler).coeff
                                            : zeta_pi_coeff(j + s, bern).coeff;
    ExactRational t = closed / ExactRational(factorial(2 * (k - j) + 1));
    acc += (j % 2 == 0) ? t : -t;
  }
  IdentityCheck check;
  check.p = p;
  check.k = k;
  check.ratio = prefactor(p, k) * acc;
  check.holds = check.ratio == ExactRational(1);
  return check;
}

NumberTables::NumberTables(unsigned max_index_cap) : cap_(max_index_cap) {}

NumberTables::NumberTables(EulerTable euler, BernoulliTable bern, unsigned max_index_cap)
    : euler_(std::move(euler)), bern_(std::move(bern)), cap_(max_index_cap) {}

void NumberTables::ensure(unsigned index) {
  if (index > cap_)
    throw TableRangeError("table index " + std::to_string(index) + " exceeds cap " +
                              std::to_string(cap_),
                          index);
  std::lock_guard lock(mu_);
  const unsigned K = (index + 1) / 2;
  if (euler_.max_index() < 2 * K) euler_.extend_to(K);
  if (bern_.max_index() < 2 * K) bern_.extend_to(K);
}

std::vector<IdentityCheck> verify_grid(const std::vector<unsigned>& powers, unsigned k_max,
                                       NumberTables& tables) {
  std::vector<unsigned> ps = powers;
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  if (ps.empty()) return {};
  unsigned need = 0;
  for (unsigned p : ps) need = std::max(need, required_index(p, k_max));
  tables.ensure(need);

  std::vector<IdentityCheck> checks(ps.size() * (k_max + 1));
  parallel_for(checks.size(), [&](std::size_t i) {
    const unsigned p = ps[i / (k_max + 1)];
    const unsigned k = static_cast<unsigned>(i % (k_max + 1));
    checks[i] = reduce_exact(p, k, tables.euler(), tables.bernoulli());
  });
  return checks;
}

std::vector<IdentityCheck> verify_grid(const std::vector<unsigned>& powers, unsigned k_max) {
  NumberTables tables;
  return verify_grid(powers, k_max, tables);
}

CertifiedReal residual_numeric(unsigned p, unsigned k, unsigned long N, const PrecisionContext& ctx) {
  const SeriesSum s = partial_sum(p, k, N, ctx);
  return s.partial / pi(ctx).pow_int(p) - CertifiedReal::from_int(1, ctx);
}

double residual_estimate(unsigned p, unsigned k, unsigned long N, const PrecisionContext& ctx) {
  const SeriesSum s = partial_sum(p, k, N, ctx);
  return (-s.tail / pi(ctx).pow_int(p)).mid_double();
}

}  // namespace piforge
