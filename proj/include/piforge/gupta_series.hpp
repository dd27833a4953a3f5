// The six truncation-order-k series families for pi^p, p = 1..6, and the
// classical Leibniz/Euler series they collapse to at k = 0.
//
//   pi^p = sum_{n>=1} w_p(n) A_p(k) sum_{j=0}^{k} (-x_n)^j / (2k-2j+1)!
//
// odd p:  w = (-1)^(n+1) / (2n-1)^p,  x_n = 1 / ((2n-1)^2 pi^2)
// even p: w = 1 / n^p,                x_n = 1 / (n^2 pi^2)
//
// Numeric evaluation takes pi from the independent Machin enclosure; these
// series are representations, not algorithms for computing pi.

#pragma once

#include "piforge/exact.hpp"
#include "piforge/interval.hpp"
#include "piforge/parallel.hpp"

#include <vector>

namespace piforge {

enum class SummandBase {
  OddAlternating,  // (-1)^(n+1) / (2n-1)^p
  Integer,         // 1 / n^p
};

struct FamilySpec {
  unsigned power = 1;
  SummandBase base = SummandBase::OddAlternating;
  unsigned k = 0;
  ExactRational prefactor;
  /// 1 / (2k-2j+1)! for j = 0..k.
  std::vector<ExactRational> inner_weights;
};

/// Throws std::invalid_argument unless 1 <= p <= 6.
void check_power(unsigned p);

/// Exact A_p(k).
ExactRational prefactor(unsigned p, unsigned k);

/// The divisor written in each family's displayed prefactor before reduction:
/// 2^(2k+2)-1 for p=3, 2^(2k+2)(2k^2+9k+6)+1 for p=5, k+5 for p=6, 1 otherwise.
ExactInt prefactor_divisor(unsigned p, unsigned k);

FamilySpec family(unsigned p, unsigned k);

/// sum_{j=0}^{k} (-x)^j / (2k-2j+1)!, Horner in -x.
ExactRational inner_poly(unsigned k, const ExactRational& x);
CertifiedReal inner_poly(unsigned k, const CertifiedReal& x, const PrecisionContext& ctx);

/// One summand w_p(n) A_p(k) inner_poly(k, x_n). n >= 1.
struct SeriesTerm {
  unsigned long n;
  CertifiedReal value;
};
SeriesTerm term(unsigned p, unsigned k, unsigned long n, const PrecisionContext& ctx);

/// Terms 1..N summed in fixed chunks, plus an enclosure of the omitted tail
/// built from the beta/zeta tails of each inner-polynomial component.
SeriesSum partial_sum(unsigned p, unsigned k, unsigned long N, const PrecisionContext& ctx);

/// Classical coefficient: 4, 6, 32, 90, 1536/5, 945 for p = 1..6.
ExactRational classical_coefficient(unsigned p);

/// Direct partial sums of the classical series; identical intervals to
/// partial_sum(p, 0, N, ctx).
SeriesSum classical_partial(unsigned p, unsigned long N, const PrecisionContext& ctx);

}  // namespace piforge
