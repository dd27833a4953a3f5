#include "piforge/closed_forms.hpp"

namespace piforge {

CertifiedReal PiMultiple::evaluate(const PrecisionContext& ctx) const {
  return CertifiedReal::from_rational(coeff, ctx) * pi(ctx).pow_int(power);
}

PiMultiple beta_pi_coeff(unsigned k, const EulerTable& euler) {
  const ExactInt& e = euler.at(2 * k);
  return {ExactRational(e.abs(), ExactInt::pow2(2 * k + 2) * factorial(2 * k)), 2 * k + 1};
}

PiMultiple zeta_pi_coeff(unsigned k, const BernoulliTable& bern) {
  if (k == 0) throw std::invalid_argument("zeta_pi_coeff: k must be >= 1");
  ExactRational c = ExactRational(ExactInt::pow2(2 * k), factorial(2 * k) * ExactInt(2)) *
                    bern.at(2 * k);
  if (k % 2 == 0) c = -c;
  return {c, 2 * k};
}

CertifiedReal alternating_odd_tail(unsigned s, unsigned long N, const PrecisionContext& ctx) {
  if (s == 0) throw std::invalid_argument("alternating_odd_tail: exponent must be >= 1");
  const ExactRational next(ExactInt(1), ExactInt(static_cast<long>(2 * N + 1)).pow(s));
  // First omitted index m = N+1 carries sign (-1)^N.
  return N % 2 == 0 ? CertifiedReal::from_bounds(0, next, ctx)
                    : CertifiedReal::from_bounds(-next, 0, ctx);
}

CertifiedReal zeta_tail(unsigned s, unsigned long N, const PrecisionContext& ctx) {
  if (s < 2) throw std::invalid_argument("zeta_tail: exponent must be >= 2");
  const ExactInt sm1(static_cast<long>(s - 1));
  const ExactRational lo(ExactInt(1), sm1 * ExactInt(static_cast<long>(N + 1)).pow(s - 1));
  // With nothing summed yet the first term 1 is not covered by the integral.
  const ExactRational hi = N == 0 ? ExactRational(1) + ExactRational(ExactInt(1), sm1)
                                  : ExactRational(ExactInt(1), sm1 * ExactInt(static_cast<long>(N)).pow(s - 1));
  return CertifiedReal::from_bounds(lo, hi, ctx);
}

SeriesSum beta_partial(unsigned k, unsigned long N, const PrecisionContext& ctx) {
  const unsigned s = 2 * k + 1;
  CertifiedReal partial = chunked_sum(1, N, [&](unsigned long m) {
    ExactRational t(ExactInt(1), ExactInt(static_cast<long>(2 * m - 1)).pow(s));
    return CertifiedReal::from_rational(m % 2 == 1 ? t : -t, ctx);
  }, ctx);
  return {std::move(partial), alternating_odd_tail(s, N, ctx)};
}

SeriesSum zeta_partial(unsigned k, unsigned long N, const PrecisionContext& ctx) {
  if (k == 0) throw std::invalid_argument("zeta_partial: k must be >= 1");
  const unsigned s = 2 * k;
  CertifiedReal partial = chunked_sum(1, N, [&](unsigned long m) {
    return CertifiedReal::from_rational(
        ExactRational(ExactInt(1), ExactInt(static_cast<long>(m)).pow(s)), ctx);
  }, ctx);
  return {std::move(partial), zeta_tail(s, N, ctx)};
}

}  // namespace piforge
