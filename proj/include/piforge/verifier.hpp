// Exact verification of the series identities.
//
// Interchanging the n-sum and the j-sum turns each family (p, k) into a finite
// combination of beta(p+2j) or zeta(p+2j) closed forms. Every pi power cancels,
// leaving a rational that must equal 1 exactly:
//
//   odd p,  s = (p-1)/2:  A_p(k) sum_j (-1)^j beta_hat(j+s) / (2k-2j+1)!
//   even p, s = p/2:      A_p(k) sum_j (-1)^j zeta_hat(j+s) / (2k-2j+1)!
//
// where beta_hat, zeta_hat are the rational coefficients of the closed forms.

#pragma once

#include "piforge/closed_forms.hpp"
#include "piforge/exact.hpp"
#include "piforge/interval.hpp"
#include "piforge/special_numbers.hpp"

#include <mutex>
#include <vector>

namespace piforge {

struct IdentityCheck {
  unsigned p = 0;
  unsigned k = 0;
  ExactRational ratio;
  bool holds = false;
};

/// Highest Euler/Bernoulli index reduce_exact needs for (p, k).
unsigned required_index(unsigned p, unsigned k);

/// Throws TableRangeError naming the required index when a table is too short.
IdentityCheck reduce_exact(unsigned p, unsigned k, const EulerTable& euler,
                           const BernoulliTable& bern);

/// Owns Euler/Bernoulli tables and grows them on demand up to a hard cap on
/// the table index (default 512).
class NumberTables {
public:
  explicit NumberTables(unsigned max_index_cap = 512);
  NumberTables(EulerTable euler, BernoulliTable bern, unsigned max_index_cap = 512);

  /// Extends both tables to cover `index`; TableRangeError past the cap.
  void ensure(unsigned index);

  const EulerTable& euler() const { return euler_; }
  const BernoulliTable& bernoulli() const { return bern_; }
  unsigned cap() const { return cap_; }

private:
  std::mutex mu_;
  EulerTable euler_;
  BernoulliTable bern_;
  unsigned cap_;
};

/// One check per (p, k), p ascending then k ascending, regardless of how many
/// workers run the checks.
std::vector<IdentityCheck> verify_grid(const std::vector<unsigned>& powers, unsigned k_max,
                                       NumberTables& tables);
std::vector<IdentityCheck> verify_grid(const std::vector<unsigned>& powers, unsigned k_max);

/// partial_sum(p, k, N) / pi^p - 1.
CertifiedReal residual_numeric(unsigned p, unsigned k, unsigned long N, const PrecisionContext& ctx);

/// Tail estimate of partial_sum(p, k, N) scaled to match residual_numeric:
/// -tail_estimate / pi^p.
double residual_estimate(unsigned p, unsigned k, unsigned long N, const PrecisionContext& ctx);

}  // namespace piforge
