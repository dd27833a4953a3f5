// Earlier series for pi and pi^2 used as convergence baselines:
//
//   pi   = 4 sum_{k>=0} (1+mu)^-(k+1) sum_{m=0}^{k} C(k,m) (-1)^m mu^(k-m) / (2m+1)
//   pi^2 = 4 sum_{k>=1} mu_k h_k / k
//   pi^2 = 3 sum_{k>=1} mu_k H_k / k
//   pi^2 = 2 sum_{k>=1} sigma_k / k
//
// mu_k = (1*3*...*(2k-1)) / (2*4*...*2k), h_k = sum_{n<=k} 1/(2n-1),
// H_k = sum_{n<=k} 1/n, sigma_n = p_n sum 1/(4k-1) + q_n sum 1/(4k-3),
// p_n = prod (4k-1)/4k, q_n = prod (4k-3)/4k.

#pragma once

#include "piforge/exact.hpp"
#include "piforge/interval.hpp"

namespace piforge {

/// Normalized binomial mid-coefficient mu_k, k >= 1, from the product form.
ExactRational mid_binomial(unsigned k);

struct HarmonicPair {
  unsigned n = 0;
  ExactRational H;  // sum 1/k
  ExactRational h;  // sum 1/(2k-1)
};
HarmonicPair harmonic_pair(unsigned n);

struct KolbigWeights {
  unsigned n = 0;
  ExactRational p;
  ExactRational q;
  ExactRational sigma;
};
KolbigWeights kolbig_weights(unsigned n);

/// sum_{m=0}^{k} C(k,m) (-1)^m mu^(k-m) / (2m+1), evaluated term by term.
ExactRational alzer_koumandos_inner(const ExactRational& mu, unsigned k);

/// k-th summand 4 (1+mu)^-(k+1) * inner, evaluated directly.
ExactRational alzer_koumandos_term(const ExactRational& mu, unsigned k);

/// Partial sum over k = 0..K; mu > 0 (std::invalid_argument otherwise).
CertifiedReal alzer_koumandos_partial(const ExactRational& mu, unsigned K,
                                      const PrecisionContext& ctx);

/// 4 sum_{k<=K} mu_k h_k / k, K >= 1.
CertifiedReal alzer_h_partial(unsigned K, const PrecisionContext& ctx);

/// 3 sum_{k<=K} mu_k H_k / k, K >= 1.
CertifiedReal alzer_H_partial(unsigned K, const PrecisionContext& ctx);

/// 2 sum_{k<=K} sigma_k / k, K >= 1.
CertifiedReal kolbig_partial(unsigned K, const PrecisionContext& ctx);

}  // namespace piforge
