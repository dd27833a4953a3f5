// Independent reference computations used only by the tests. Nothing here
// calls into the code paths it checks.

#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <vector>

namespace oracle {

/// Row n of Pascal's triangle by repeated addition.
inline std::vector<mpz_class> pascal_row(unsigned n) {
  std::vector<mpz_class> row{1};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<mpz_class> next(i + 1);
    next[0] = next[i] = 1;
    for (unsigned j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row;
}

/// Signed Euler numbers E_0, E_2, ..., E_2K from the Seidel boustrophedon
/// triangle (zigzag numbers), sign (-1)^k.
inline std::vector<mpz_class> euler_seidel(unsigned K) {
  const unsigned n_max = 2 * K;
  std::vector<mpz_class> zigzag(n_max + 1);
  std::vector<mpz_class> row{1};
  zigzag[0] = 1;
  for (unsigned n = 1; n <= n_max; ++n) {
    std::vector<mpz_class> next(n + 1);
    next[0] = 0;
    // Build row n from row n-1 reversed with running sums.
    for (unsigned j = 1; j <= n; ++j) next[j] = next[j - 1] + row[n - j];
    zigzag[n] = next[n];
    row = std::move(next);
  }
  std::vector<mpz_class> out;
  for (unsigned k = 0; k <= K; ++k) out.push_back(k % 2 == 0 ? zigzag[2 * k] : mpz_class(-zigzag[2 * k]));
  return out;
}

/// B_0..B_n by the Akiyama-Tanigawa algorithm (gives B_1 = +1/2).
inline std::vector<mpq_class> bernoulli_akiyama_tanigawa(unsigned n) {
  std::vector<mpq_class> out;
  std::vector<mpq_class> a(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    a[m] = mpq_class(1, m + 1);
    for (unsigned j = m; j >= 1; --j) {
      a[j - 1] = j * (a[j - 1] - a[j]);
      a[j - 1].canonicalize();
    }
    out.push_back(a[0]);
  }
  return out;
}

/// pi to `digits` decimals from MPFR's own constant, as a string.
inline std::string mpfr_pi_digits(unsigned bits, unsigned digits) {
  mpfr_t x;
  mpfr_init2(x, bits);
  mpfr_const_pi(x, MPFR_RNDN);
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, digits, x, MPFR_RNDN);
  std::string out(s);
  mpfr_free_str(s);
  mpfr_clear(x);
  return out;
}

/// MPFR's pi rounded down / up at `bits`, for containment checks.
struct PiBounds {
  mpfr_t lo, hi;
  explicit PiBounds(mpfr_prec_t bits) {
    mpfr_init2(lo, bits);
    mpfr_init2(hi, bits);
    mpfr_const_pi(lo, MPFR_RNDD);
    mpfr_const_pi(hi, MPFR_RNDU);
  }
  ~PiBounds() {
    mpfr_clear(lo);
    mpfr_clear(hi);
  }
  PiBounds(const PiBounds&) = delete;
  PiBounds& operator=(const PiBounds&) = delete;
};

}  // namespace oracle
