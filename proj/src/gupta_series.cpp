#include "piforge/gupta_series.hpp"

#include "piforge/closed_forms.hpp"

#include <stdexcept>
#include <string>

namespace piforge {

namespace {

ExactInt lit(long v) { return ExactInt(v); }

ExactRational inner_weight(unsigned k, unsigned j) {
  return ExactRational(ExactInt(1), factorial(2 * (k - j) + 1));
}

bool odd_family(unsigned p) { return p % 2 == 1; }

// Summand base b_n: 2n-1 for odd p, n for even p.
ExactInt summand_base(unsigned p, unsigned long n) {
  return odd_family(p) ? lit(static_cast<long>(2 * n - 1)) : lit(static_cast<long>(n));
}

// w_p(n) as an exact rational.
ExactRational summand_weight(unsigned p, unsigned long n) {
  ExactRational w(ExactInt(1), summand_base(p, n).pow(p));
  return (odd_family(p) && n % 2 == 0) ? -w : w;
}

// Shared per-(p, k, ctx) state for evaluating many terms.
struct TermEvaluator {
  unsigned p;
  unsigned k;
  ExactRational prefactor;
  std::vector<CertifiedReal> weights;  // 1/(2k-2j+1)! as intervals
  CertifiedReal inv_pi2;

  TermEvaluator(unsigned p_, unsigned k_, const PrecisionContext& ctx)
      : p(p_), k(k_), prefactor(piforge::prefactor(p_, k_)), inv_pi2(ctx) {
    for (unsigned j = 0; j <= k; ++j)
      weights.push_back(CertifiedReal::from_rational(inner_weight(k, j), ctx));
    inv_pi2 = CertifiedReal::from_int(1, ctx) / pi(ctx).pow_int(2);
  }

  CertifiedReal horner(const CertifiedReal& x) const {
    const CertifiedReal y = -x;
    CertifiedReal acc = weights[k];
    for (unsigned j = k; j-- > 0;) acc = acc * y + weights[j];
    return acc;
  }

  CertifiedReal operator()(unsigned long n, const PrecisionContext& ctx) const {
    const CertifiedReal scale = CertifiedReal::from_rational(prefactor * summand_weight(p, n), ctx);
    if (k == 0) return scale * weights[0];
    const ExactInt b = summand_base(p, n);
    const CertifiedReal x = CertifiedReal::from_rational(ExactRational(ExactInt(1), b * b), ctx) * inv_pi2;
    return scale * horner(x);
  }
};

// Tail of sum_{n>N} w_p(n) / b_n^(2j): alternating beta tail or zeta tail.
CertifiedReal component_tail(unsigned p, unsigned j, unsigned long N, const PrecisionContext& ctx) {
  return odd_family(p) ? alternating_odd_tail(p + 2 * j, N, ctx) : zeta_tail(p + 2 * j, N, ctx);
}

}  // namespace

void check_power(unsigned p) {
  if (p < 1 || p > 6)
    throw std::invalid_argument("power must be in 1..6, got " + std::to_string(p));
}

ExactInt prefactor_divisor(unsigned p, unsigned k) {
  check_power(p);
  const long kk = static_cast<long>(k);
  switch (p) {
    case 3: return ExactInt::pow2(2 * k + 2) - lit(1);
    case 5: return ExactInt::pow2(2 * k + 2) * lit(2 * kk * kk + 9 * kk + 6) + lit(1);
    case 6: return lit(kk + 5);
    default: return lit(1);
  }
}

ExactRational prefactor(unsigned p, unsigned k) {
  check_power(p);
  const long kk = static_cast<long>(k);
  ExactInt numerator;
  switch (p) {
    case 1: numerator = ExactInt::pow2(2 * k + 2) * factorial(2 * k + 1); break;
    case 2: numerator = lit(2 * (2 * kk + 3)) * factorial(2 * k + 1); break;
    case 3: numerator = ExactInt::pow2(2 * k + 4) * factorial(2 * k + 3); break;
    case 4: numerator = lit(6 * (2 * kk + 5) * (2 * kk + 3)) * factorial(2 * k + 1); break;
    case 5: numerator = ExactInt::pow2(2 * k + 6) * factorial(2 * k + 5); break;
    case 6:
      numerator = lit(45) * lit(2 * kk + 7) * lit(2 * kk + 5) * lit(2 * kk + 3) * factorial(2 * k + 1);
      break;
  }
  return ExactRational(numerator, prefactor_divisor(p, k));
}

FamilySpec family(unsigned p, unsigned k) {
  FamilySpec f;
  f.power = p;
  f.base = odd_family(p) ? SummandBase::OddAlternating : SummandBase::Integer;
  f.k = k;
  f.prefactor = prefactor(p, k);
  for (unsigned j = 0; j <= k; ++j) f.inner_weights.push_back(inner_weight(k, j));
  return f;
}

ExactRational inner_poly(unsigned k, const ExactRational& x) {
  const ExactRational y = -x;
  ExactRational acc = inner_weight(k, k);
  for (unsigned j = k; j-- > 0;) acc = acc * y + inner_weight(k, j);
  return acc;
}

CertifiedReal inner_poly(unsigned k, const CertifiedReal& x, const PrecisionContext& ctx) {
  const CertifiedReal y = -x;
  CertifiedReal acc = CertifiedReal::from_rational(inner_weight(k, k), ctx);
  for (unsigned j = k; j-- > 0;) acc = acc * y + CertifiedReal::from_rational(inner_weight(k, j), ctx);
  return acc;
}

SeriesTerm term(unsigned p, unsigned k, unsigned long n, const PrecisionContext& ctx) {
  check_power(p);
  if (n == 0) throw std::invalid_argument("term index n must be >= 1");
  return {n, TermEvaluator(p, k, ctx)(n, ctx)};
}

SeriesSum partial_sum(unsigned p, unsigned k, unsigned long N, const PrecisionContext& ctx) {
  check_power(p);
  const TermEvaluator eval(p, k, ctx);
  CertifiedReal partial = chunked_sum(1, N, [&](unsigned long n) { return eval(n, ctx); }, ctx);

  // Interchanging the sums, the tail is sum_j A c_j (-1/pi^2)^j T_j(N).
  const CertifiedReal neg_inv_pi2 = -eval.inv_pi2;
  CertifiedReal tail(ctx);
  for (unsigned j = 0; j <= k; ++j) {
    const CertifiedReal coeff = CertifiedReal::from_rational(eval.prefactor * inner_weight(k, j), ctx);
    tail += coeff * neg_inv_pi2.pow_int(j) * component_tail(p, j, N, ctx);
  }
  return {std::move(partial), std::move(tail)};
}

ExactRational classical_coefficient(unsigned p) {
  check_power(p);
  static const ExactRational table[] = {4, 6, 32, 90, ExactRational(1536, 5), 945};
  return table[p - 1];
}

SeriesSum classical_partial(unsigned p, unsigned long N, const PrecisionContext& ctx) {
  const ExactRational c = classical_coefficient(p);
  CertifiedReal partial = chunked_sum(1, N, [&](unsigned long n) {
    return CertifiedReal::from_rational(c * summand_weight(p, n), ctx);
  }, ctx);
  CertifiedReal tail = CertifiedReal::from_rational(c, ctx) * component_tail(p, 0, N, ctx);
  return {std::move(partial), std::move(tail)};
}

}  // namespace piforge
