#include "piforge/prior_series.hpp"

#include <stdexcept>

namespace piforge {

ExactRational mid_binomial(unsigned k) {
  if (k == 0) throw std::invalid_argument("mid_binomial: k must be >= 1");
  ExactInt odd(1), even(1);
  for (unsigned i = 1; i <= k; ++i) {
    odd *= ExactInt(static_cast<long>(2 * i - 1));
    even *= ExactInt(static_cast<long>(2 * i));
  }
  return ExactRational(odd, even);
}

HarmonicPair harmonic_pair(unsigned n) {
  HarmonicPair hp;
  hp.n = n;
  for (unsigned k = 1; k <= n; ++k) {
    hp.H += ExactRational(1, static_cast<long>(k));
    hp.h += ExactRational(1, static_cast<long>(2 * k - 1));
  }
  return hp;
}

KolbigWeights kolbig_weights(unsigned n) {
  KolbigWeights w;
  w.n = n;
  w.p = 1;
  w.q = 1;
  ExactRational s1, s3;
  for (unsigned k = 1; k <= n; ++k) {
    const long kk = static_cast<long>(k);
    w.p *= ExactRational(4 * kk - 1, 4 * kk);
    w.q *= ExactRational(4 * kk - 3, 4 * kk);
    s1 += ExactRational(1, 4 * kk - 1);
    s3 += ExactRational(1, 4 * kk - 3);
  }
  w.sigma = w.p * s1 + w.q * s3;
  return w;
}

namespace {

void require_positive(const ExactRational& mu) {
  if (mu.sign() <= 0)
    throw std::invalid_argument("mu must be a positive parameter, got " + mu.str());
}

}  // namespace

ExactRational alzer_koumandos_inner(const ExactRational& mu, unsigned k) {
  require_positive(mu);
  ExactRational acc;
  for (unsigned m = 0; m <= k; ++m) {
    ExactRational t = ExactRational(binomial(k, m)) * mu.pow(static_cast<long>(k - m)) /
                      ExactRational(static_cast<long>(2 * m + 1));
    if (m % 2 == 1) t = -t;
    acc += t;
  }
  return acc;
}

ExactRational alzer_koumandos_term(const ExactRational& mu, unsigned k) {
  return ExactRational(4) * alzer_koumandos_inner(mu, k) /
         (ExactRational(1) + mu).pow(static_cast<long>(k) + 1);
}

CertifiedReal alzer_koumandos_partial(const ExactRational& mu, unsigned K,
                                      const PrecisionContext& ctx) {
  require_positive(mu);
  // The inner sum equals I_k = int_0^1 (mu - t^2)^k dt, which obeys
  // (2k+1) I_k = (mu-1)^k + 2k mu I_{k-1}. With mu = a/b the scaled value
  // J_k = I_k b^k (2k+1)!! is an integer:
  //   J_k = (a-b)^k (2k-1)!! + 2k a J_{k-1},  J_0 = 1,
  // and the k-th summand is 4 b J_k / ((2k+1)!! (a+b)^(k+1)).
  const ExactInt a = mu.num();
  const ExactInt b = mu.den();
  const ExactInt a_minus_b = a - b;
  const ExactInt a_plus_b = a + b;
  const ExactInt four_b = ExactInt(4) * b;

  ExactInt J(1);
  ExactInt diff_pow(1);        // (a-b)^k
  ExactInt odd_fact_prev(1);   // (2k-1)!!
  ExactInt odd_fact(1);        // (2k+1)!!
  ExactInt sum_pow = a_plus_b; // (a+b)^(k+1)

  CertifiedReal total(ctx);
  for (unsigned k = 0;; ++k) {
    total += CertifiedReal::from_quotient(four_b * J, odd_fact * sum_pow, ctx);
    if (k == K) break;
    const long next = static_cast<long>(k) + 1;
    diff_pow *= a_minus_b;
    odd_fact_prev = odd_fact;
    odd_fact *= ExactInt(2 * next + 1);
    sum_pow *= a_plus_b;
    J = diff_pow * odd_fact_prev + ExactInt(2 * next) * a * J;
  }
  return total;
}

CertifiedReal alzer_h_partial(unsigned K, const PrecisionContext& ctx) {
  if (K == 0) throw std::invalid_argument("alzer_h_partial: K must be >= 1");
  ExactRational mu(1), h;
  CertifiedReal total(ctx);
  for (unsigned k = 1; k <= K; ++k) {
    const long kk = static_cast<long>(k);
    mu *= ExactRational(2 * kk - 1, 2 * kk);
    h += ExactRational(1, 2 * kk - 1);
    total += CertifiedReal::from_quotient(ExactInt(4) * mu.num() * h.num(),
                                          mu.den() * h.den() * ExactInt(kk), ctx);
  }
  return total;
}

CertifiedReal alzer_H_partial(unsigned K, const PrecisionContext& ctx) {
  if (K == 0) throw std::invalid_argument("alzer_H_partial: K must be >= 1");
  ExactRational mu(1), H;
  CertifiedReal total(ctx);
  for (unsigned k = 1; k <= K; ++k) {
    const long kk = static_cast<long>(k);
    mu *= ExactRational(2 * kk - 1, 2 * kk);
    H += ExactRational(1, kk);
    total += CertifiedReal::from_quotient(ExactInt(3) * mu.num() * H.num(),
                                          mu.den() * H.den() * ExactInt(kk), ctx);
  }
  return total;
}

CertifiedReal kolbig_partial(unsigned K, const PrecisionContext& ctx) {
  if (K == 0) throw std::invalid_argument("kolbig_partial: K must be >= 1");
  ExactRational p(1), q(1), s1, s3;
  CertifiedReal total(ctx);
  for (unsigned k = 1; k <= K; ++k) {
    const long kk = static_cast<long>(k);
    p *= ExactRational(4 * kk - 1, 4 * kk);
    q *= ExactRational(4 * kk - 3, 4 * kk);
    s1 += ExactRational(1, 4 * kk - 1);
    s3 += ExactRational(1, 4 * kk - 3);
    const ExactRational sigma = p * s1 + q * s3;
    total += CertifiedReal::from_quotient(ExactInt(2) * sigma.num(), sigma.den() * ExactInt(kk), ctx);
  }
  return total;
}

}  // namespace piforge
