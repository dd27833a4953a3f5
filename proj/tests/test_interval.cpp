#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "piforge/interval.hpp"

#include <memory>
#include <optional>
#include <random>

using namespace piforge;

namespace {

PrecisionContext bits(unsigned p) {
  PrecisionContext ctx;
  ctx.precision_bits = p;
  return ctx;
}

bool width_at_most_pow2(const CertifiedReal& x, long e) {
  // width <= 2^e
  BigFloat w = x.width();
  return mpfr_cmp_ui_2exp(w.get(), 1, e) <= 0;
}

// Random expression over small rationals, evaluated both exactly and as an
// interval at several precisions from the same random choices.
struct Expr {
  enum Op { Leaf, Add, Sub, Mul, Div, Pow } op = Leaf;
  ExactRational leaf;
  unsigned exponent = 0;
  std::unique_ptr<Expr> a, b;
};

std::unique_ptr<Expr> random_expr(std::mt19937_64& rng, int depth) {
  auto e = std::make_unique<Expr>();
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 5 : 0);
  e->op = static_cast<Expr::Op>(pick(rng));
  if (e->op == Expr::Leaf) {
    std::uniform_int_distribution<long> num(-50, 50), den(1, 40);
    e->leaf = ExactRational(num(rng), den(rng));
    return e;
  }
  e->a = random_expr(rng, depth - 1);
  if (e->op == Expr::Pow) {
    e->exponent = std::uniform_int_distribution<unsigned>(0, 4)(rng);
  } else {
    e->b = random_expr(rng, depth - 1);
  }
  return e;
}

std::optional<ExactRational> exact_eval(const Expr& e) {
  if (e.op == Expr::Leaf) return e.leaf;
  auto a = exact_eval(*e.a);
  if (!a) return std::nullopt;
  if (e.op == Expr::Pow) return a->pow(e.exponent);
  auto b = exact_eval(*e.b);
  if (!b) return std::nullopt;
  switch (e.op) {
    case Expr::Add: return *a + *b;
    case Expr::Sub: return *a - *b;
    case Expr::Mul: return *a * *b;
    case Expr::Div:
      if (b->is_zero()) return std::nullopt;
      return *a / *b;
    default: return std::nullopt;
  }
}

std::optional<CertifiedReal> interval_eval(const Expr& e, const PrecisionContext& ctx) {
  if (e.op == Expr::Leaf) return CertifiedReal::from_rational(e.leaf, ctx);
  auto a = interval_eval(*e.a, ctx);
  if (!a) return std::nullopt;
  if (e.op == Expr::Pow) return a->pow_int(e.exponent);
  auto b = interval_eval(*e.b, ctx);
  if (!b) return std::nullopt;
  switch (e.op) {
    case Expr::Add: return *a + *b;
    case Expr::Sub: return *a - *b;
    case Expr::Mul: return *a * *b;
    case Expr::Div:
      if (b->contains_zero()) return std::nullopt;
      return *a / *b;
    default: return std::nullopt;
  }
}

}  // namespace

TEST_CASE("basic interval operations") {
  const auto ctx = bits(64);
  const CertifiedReal s = CertifiedReal::from_int(1, ctx) + CertifiedReal::from_int(2, ctx);
  CHECK(s.is_point());
  CHECK(s.contains(ExactRational(3)));
  CHECK(s.width_double() == 0.0);

  const CertifiedReal third = CertifiedReal::from_rational(ExactRational(1, 3), ctx);
  CHECK(third.contains(ExactRational(1, 3)));
  CHECK(width_at_most_pow2(third, -63));

  const CertifiedReal sym = CertifiedReal::from_bounds(-1, 1, ctx);
  const CertifiedReal sq = sym.pow_int(2);
  CHECK(sq.lo().sign() == 0);
  CHECK(sq.hi().to_double() == 1.0);
  const CertifiedReal prod = sym * sym;
  CHECK(prod.lo().to_double() == -1.0);
  CHECK(sym.pow_int(3).lo().to_double() == -1.0);
  CHECK(CertifiedReal::from_bounds(-3, -2, ctx).pow_int(2).contains(ExactRational(4)));
  CHECK(sym.pow_int(0).is_point());
}

TEST_CASE("division by an interval containing zero") {
  const auto ctx = bits(64);
  CHECK_THROWS_AS(CertifiedReal::from_int(1, ctx) / CertifiedReal::from_bounds(-1, 1, ctx),
                  IntervalDomainError);
  CHECK_THROWS_AS(CertifiedReal::from_int(1, ctx) / CertifiedReal(ctx), IntervalDomainError);
}

TEST_CASE("precision contract") {
  PrecisionContext bad;
  bad.precision_bits = 32;
  CHECK_THROWS_AS(CertifiedReal::from_int(1, bad), std::invalid_argument);
  CHECK_THROWS_AS(pi(bad), std::invalid_argument);
}

TEST_CASE("quotients need not be reduced") {
  const auto ctx = bits(96);
  const CertifiedReal q = CertifiedReal::from_quotient(ExactInt(-6), ExactInt(9), ctx);
  CHECK(q.contains(ExactRational(-2, 3)));
  CHECK(width_at_most_pow2(q, -120));
  CHECK(CertifiedReal::from_quotient(ExactInt(12), ExactInt(4), ctx).is_point());
  const ExactInt big = ExactInt(3).pow(500);
  CHECK(CertifiedReal::from_quotient(big + ExactInt(1), big, ctx)
            .contains(ExactRational(big + ExactInt(1), big)));
  CHECK_THROWS_AS(CertifiedReal::from_quotient(ExactInt(1), ExactInt(0), ctx), ArithmeticError);
}

TEST_CASE("pi enclosure") {
  const auto c64 = bits(64);
  const CertifiedReal p64 = pi(c64);
  CHECK(width_at_most_pow2(p64, -64));
  // Published digits, accurate to 1e-20.
  const ExactRational digits = ExactRational::from_string("314159265358979323846/100000000000000000000");
  const ExactRational eps(ExactInt(1), ExactInt(10).pow(20));
  CHECK(p64.overlaps(CertifiedReal::from_bounds(digits, digits + eps, c64)));

  const auto c256 = bits(256);
  const CertifiedReal p256 = pi(c256);
  CHECK(width_at_most_pow2(p256, -256));
  oracle::PiBounds ref(600);
  CHECK(mpfr_cmp(p256.lo().get(), ref.lo) <= 0);
  CHECK(mpfr_cmp(p256.hi().get(), ref.hi) >= 0);
  // Long published prefix.
  const std::string published =
      "31415926535897932384626433832795028841971693993751058209749445923078164062862";
  CHECK(oracle::mpfr_pi_digits(600, static_cast<unsigned>(published.size())) == published);
  CHECK(p256.mid().to_decimal(70, MPFR_RNDN).substr(0, 62) == "3." + published.substr(1, 60));
}

TEST_CASE("arctan enclosures") {
  const auto ctx = bits(128);
  // 4 arctan(1/5) - arctan(1/239) = pi/4 (Machin), using only arctan_recip.
  const CertifiedReal q = CertifiedReal::from_int(4, ctx) * arctan_recip(5, ctx) - arctan_recip(239, ctx);
  oracle::PiBounds ref(400);
  mpfr_t quarter_lo, quarter_hi;
  mpfr_inits2(400, quarter_lo, quarter_hi, static_cast<mpfr_ptr>(nullptr));
  mpfr_div_2ui(quarter_lo, ref.lo, 2, MPFR_RNDD);
  mpfr_div_2ui(quarter_hi, ref.hi, 2, MPFR_RNDU);
  CHECK(mpfr_cmp(q.lo().get(), quarter_lo) <= 0);
  CHECK(mpfr_cmp(q.hi().get(), quarter_hi) >= 0);
  mpfr_clears(quarter_lo, quarter_hi, static_cast<mpfr_ptr>(nullptr));
  CHECK_THROWS_AS(arctan_recip(1, ctx), std::invalid_argument);
}

TEST_CASE("property: containment and monotonic refinement") {
  std::mt19937_64 rng(77);
  int evaluated = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto e = random_expr(rng, 4);
    auto exact = exact_eval(*e);
    auto lo = interval_eval(*e, bits(64));
    auto hi = interval_eval(*e, bits(128));
    if (!exact || !lo || !hi) continue;
    ++evaluated;
    CHECK(lo->contains(*exact));
    CHECK(hi->contains(*exact));
    CHECK(lo->contains(*hi));
  }
  CHECK(evaluated > 200);
}

TEST_CASE("decimal rendering loses at most one ulp per bound") {
  const auto ctx = bits(128);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    std::uniform_int_distribution<long> d(-1000000000, 1000000000);
    const CertifiedReal x = CertifiedReal::from_rational(ExactRational(d(rng), 7919), ctx) * pi(ctx);
    const std::size_t digits = decimal_digits_for(x.precision());
    const std::string lo = x.lo().to_decimal(digits, MPFR_RNDD);
    const std::string hi = x.hi().to_decimal(digits, MPFR_RNDU);
    const CertifiedReal back = CertifiedReal::from_decimal(lo, hi, ctx);
    CHECK(back.contains(x));
    BigFloat lo_floor = x.lo();
    BigFloat hi_ceil = x.hi();
    mpfr_nextbelow(lo_floor.get());
    mpfr_nextabove(hi_ceil.get());
    CHECK(back.lo() >= lo_floor);
    CHECK(back.hi() <= hi_ceil);
    // Nearest rounding recovers the float exactly.
    BigFloat nearest(x.precision());
    mpfr_set_str(nearest.get(), lo.c_str(), 10, MPFR_RNDN);
    CHECK(nearest == x.lo());
  }
}
