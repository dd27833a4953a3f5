// Closed forms of the Dirichlet beta function at odd integers and the zeta
// function at even integers, as exact rational multiples of powers of pi.

#pragma once

#include "piforge/exact.hpp"
#include "piforge/interval.hpp"
#include "piforge/parallel.hpp"
#include "piforge/special_numbers.hpp"

namespace piforge {

/// coeff * pi^power.
struct PiMultiple {
  ExactRational coeff;
  unsigned power = 0;

  CertifiedReal evaluate(const PrecisionContext& ctx) const;
  friend bool operator==(const PiMultiple&, const PiMultiple&) = default;
};

/// beta(2k+1) = |E_2k| / (2^(2k+2) (2k)!) * pi^(2k+1).
PiMultiple beta_pi_coeff(unsigned k, const EulerTable& euler);

/// zeta(2k) = (-1)^(k-1) 2^(2k) B_2k / (2 (2k)!) * pi^(2k), k >= 1.
PiMultiple zeta_pi_coeff(unsigned k, const BernoulliTable& bern);

/// sum_{m<=N} (-1)^(m+1) / (2m-1)^(2k+1), with the alternating tail bound.
SeriesSum beta_partial(unsigned k, unsigned long N, const PrecisionContext& ctx);

/// sum_{m<=N} 1 / m^(2k), k >= 1, with the integral tail bound.
SeriesSum zeta_partial(unsigned k, unsigned long N, const PrecisionContext& ctx);

/// Enclosure of sum_{m>N} (-1)^(m+1) / (2m-1)^s for s >= 1: between zero and
/// the first omitted term.
CertifiedReal alternating_odd_tail(unsigned s, unsigned long N, const PrecisionContext& ctx);

/// Enclosure of sum_{m>N} m^-s for s >= 2: [(N+1)^(1-s), N^(1-s)] / (s-1),
/// with upper bound 1 + 1/(s-1) when N = 0.
CertifiedReal zeta_tail(unsigned s, unsigned long N, const PrecisionContext& ctx);

}  // namespace piforge
