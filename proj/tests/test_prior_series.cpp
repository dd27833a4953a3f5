#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "piforge/prior_series.hpp"

#include <gmpxx.h>

#include <cmath>
#include <numbers>

using namespace piforge;

namespace {

PrecisionContext bits(unsigned p) {
  PrecisionContext ctx;
  ctx.precision_bits = p;
  return ctx;
}

// |value - target| as a double, using MPFR's own pi for the target.
double distance(const CertifiedReal& v, unsigned power) {
  mpfr_t t;
  mpfr_init2(t, v.precision());
  mpfr_const_pi(t, MPFR_RNDN);
  mpfr_pow_ui(t, t, power, MPFR_RNDN);
  BigFloat m = v.mid();
  mpfr_sub(t, m.get(), t, MPFR_RNDN);
  const double d = std::fabs(mpfr_get_d(t, MPFR_RNDN));
  mpfr_clear(t);
  return d;
}

bool holds_point(const CertifiedReal& v, const ExactRational& q) {
  return v.is_point() && v.contains(q);
}

}  // namespace

TEST_CASE("mid-binomial weights") {
  ExactRational prev = mid_binomial(1);
  CHECK(prev == ExactRational(1, 2));
  for (unsigned k = 2; k <= 500; ++k) {
    const ExactRational m = mid_binomial(k);
    CHECK(m == prev * ExactRational(2 * k - 1, 2 * k));
    CHECK(m < prev);
    CHECK(m.sign() > 0);
    prev = m;
  }
  CHECK_THROWS_AS(mid_binomial(0), std::invalid_argument);
}

TEST_CASE("harmonic pairs") {
  const HarmonicPair h3 = harmonic_pair(3);
  CHECK(h3.H == ExactRational(11, 6));
  CHECK(h3.h == ExactRational(23, 15));
  ExactRational H, h;
  for (unsigned n = 1; n <= 40; ++n) {
    const HarmonicPair hp = harmonic_pair(n);
    CHECK(hp.H > H);
    CHECK(hp.h > h);
    H = hp.H;
    h = hp.h;
  }
}

TEST_CASE("sigma weights") {
  mpq_class p = 1, q = 1, s1 = 0, s3 = 0;
  for (long k = 1; k <= 10; ++k) {
    p *= mpq_class(4 * k - 1, 4 * k);
    q *= mpq_class(4 * k - 3, 4 * k);
    s1 += mpq_class(1, 4 * k - 1);
    s3 += mpq_class(1, 4 * k - 3);
  }
  p.canonicalize();
  q.canonicalize();
  const KolbigWeights w = kolbig_weights(10);
  CHECK(w.p == ExactRational(p));
  CHECK(w.q == ExactRational(q));
  CHECK(w.sigma == ExactRational(mpq_class(p * s1 + q * s3)));
  CHECK(w.q.sign() > 0);
  CHECK(w.q < w.p);
  CHECK(w.p < ExactRational(1));
  CHECK(kolbig_weights(1).sigma == ExactRational(1, 2));
}

TEST_CASE("inner sum at mu = 1 is the Wallis integral") {
  // int_0^1 (1 - t^2)^k dt = (2k)!! / (2k+1)!!
  ExactRational wallis(1);
  for (unsigned k = 0; k <= 20; ++k) {
    if (k > 0) wallis *= ExactRational(2 * k, 2 * k + 1);
    CHECK(alzer_koumandos_inner(ExactRational(1), k) == wallis);
  }
}

TEST_CASE("integer recurrence matches direct evaluation") {
  const auto ctx = bits(256);
  for (const ExactRational& mu : {ExactRational(1), ExactRational(1, 2), ExactRational(3),
                                  ExactRational(2, 7)}) {
    ExactRational direct;
    for (unsigned K = 0; K <= 30; ++K) {
      direct += alzer_koumandos_term(mu, K);
      CHECK(alzer_koumandos_partial(mu, K, ctx).contains(direct));
    }
  }
}

TEST_CASE("first partial sums") {
  const auto ctx = bits(128);
  CHECK(holds_point(alzer_koumandos_partial(ExactRational(1), 0, ctx), ExactRational(2)));
  CHECK(holds_point(alzer_h_partial(1, ctx), ExactRational(2)));
  CHECK(holds_point(alzer_H_partial(1, ctx), ExactRational(3, 2)));
  CHECK(holds_point(kolbig_partial(1, ctx), ExactRational(1)));
}

TEST_CASE("preconditions") {
  const auto ctx = bits(128);
  CHECK_THROWS_AS(alzer_koumandos_partial(ExactRational(0), 3, ctx), std::invalid_argument);
  CHECK_THROWS_AS(alzer_koumandos_partial(ExactRational(-1, 2), 3, ctx), std::invalid_argument);
  CHECK_THROWS_AS(alzer_h_partial(0, ctx), std::invalid_argument);
  CHECK_THROWS_AS(alzer_H_partial(0, ctx), std::invalid_argument);
  CHECK_THROWS_AS(kolbig_partial(0, ctx), std::invalid_argument);
}

TEST_CASE("binomial-integral series for pi converges geometrically") {
  const auto ctx = bits(512);
  CHECK(distance(alzer_koumandos_partial(ExactRational(1), 40, ctx), 1) < 1e-3);
  for (const ExactRational& mu : {ExactRational(1), ExactRational(1, 2)}) {
    const double r10 = distance(alzer_koumandos_partial(mu, 10, ctx), 1);
    const double r40 = distance(alzer_koumandos_partial(mu, 40, ctx), 1);
    const double r100 = distance(alzer_koumandos_partial(mu, 100, ctx), 1);
    CHECK(r40 < r10);
    CHECK(r100 < r40);
    CHECK(r40 < 1e-3);
  }
}

TEST_CASE("pi^2 baselines move toward their target") {
  const auto ctx = bits(128);
  using Fn = CertifiedReal (*)(unsigned, const PrecisionContext&);
  for (Fn f : {Fn(&alzer_h_partial), Fn(&alzer_H_partial), Fn(&kolbig_partial)}) {
    const double r10 = distance(f(10, ctx), 2);
    const double r100 = distance(f(100, ctx), 2);
    const double r1000 = distance(f(1000, ctx), 2);
    CHECK(r100 < r10);
    CHECK(r1000 < r100);
  }
}

TEST_CASE("mu_k h_k series residual follows log K / sqrt K") {
  const auto ctx = bits(128);
  const auto model = [](double K) { return std::log(K) / std::sqrt(K); };
  const double r100 = distance(alzer_h_partial(100, ctx), 2);
  const double r1000 = distance(alzer_h_partial(1000, ctx), 2);
  const double predicted = r100 / model(100) * model(1000);
  CHECK(r1000 <= 4 * predicted);
  CHECK(r1000 >= predicted / 4);
}
