#include "piforge/interval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <utility>

namespace piforge {

void PrecisionContext::validate() const {
  if (precision_bits < 64)
    throw std::invalid_argument("precision_bits must be >= 64, got " +
                                std::to_string(precision_bits));
  if (guard_bits == 0) throw std::invalid_argument("guard_bits must be positive");
}

// ---------------------------------------------------------------------------
// BigFloat

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  // Leave the source as a valid minimal-precision zero.
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::string BigFloat::to_decimal(std::size_t digits, mpfr_rnd_t rnd) const {
  if (mpfr_zero_p(v_)) return "0";
  mpfr_exp_t exp = 0;
  char* raw = mpfr_get_str(nullptr, &exp, 10, digits, v_, rnd);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (!mant.empty() && mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  std::string out = sign + mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  const long e = static_cast<long>(exp) - 1;
  out += (e < 0 ? "e-" : "e+");
  const long ae = e < 0 ? -e : e;
  if (ae < 10) out += "0";
  out += std::to_string(ae);
  return out;
}

std::size_t decimal_digits_for(mpfr_prec_t prec) {
  return static_cast<std::size_t>(std::ceil(static_cast<double>(prec) * std::log10(2.0))) + 2;
}

// ---------------------------------------------------------------------------
// CertifiedReal

CertifiedReal::CertifiedReal(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}

CertifiedReal::CertifiedReal(const PrecisionContext& ctx) : CertifiedReal(ctx.working_bits()) {
  ctx.validate();
}

CertifiedReal CertifiedReal::from_rational(const ExactRational& q, const PrecisionContext& ctx) {
  CertifiedReal r(ctx);
  mpfr_set_q(r.lo_.get(), q.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_.get(), q.raw().get_mpq_t(), MPFR_RNDU);
  return r;
}

CertifiedReal CertifiedReal::from_int(long v, const PrecisionContext& ctx) {
  return from_rational(ExactRational(v), ctx);
}

CertifiedReal CertifiedReal::from_quotient(const ExactInt& num, const ExactInt& den,
                                           const PrecisionContext& ctx) {
  if (den.is_zero()) throw ArithmeticError("quotient with zero denominator");
  CertifiedReal r(ctx);
  if (num.is_zero()) return r;
  // q = floor(|num| 2^s / |den|) carries at least working_bits significant bits,
  // so |num/den| lies in [q, q+1] * 2^-s.
  mpz_class a = ::abs(num.raw());
  mpz_class b = ::abs(den.raw());
  const long s = static_cast<long>(ctx.working_bits()) + 2 -
                 (static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2)) -
                  static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 2)));
  if (s >= 0)
    mpz_mul_2exp(a.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(s));
  else
    mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(-s));
  mpz_class q, rem;
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_class q_up = rem == 0 ? q : mpz_class(q + 1);
  mpfr_set_z(r.lo_.get(), q.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_.get(), q_up.get_mpz_t(), MPFR_RNDU);
  mpfr_div_2si(r.lo_.get(), r.lo_.get(), s, MPFR_RNDD);
  mpfr_div_2si(r.hi_.get(), r.hi_.get(), s, MPFR_RNDU);
  if (num.sign() * den.sign() < 0) r = -r;
  return r;
}

CertifiedReal CertifiedReal::from_bounds(const ExactRational& lo, const ExactRational& hi,
                                         const PrecisionContext& ctx) {
  if (hi < lo) throw std::invalid_argument("interval bounds out of order");
  CertifiedReal r(ctx);
  mpfr_set_q(r.lo_.get(), lo.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_.get(), hi.raw().get_mpq_t(), MPFR_RNDU);
  return r;
}

CertifiedReal CertifiedReal::from_decimal(const std::string& lo, const std::string& hi,
                                          const PrecisionContext& ctx) {
  CertifiedReal r(ctx);
  if (mpfr_set_str(r.lo_.get(), lo.c_str(), 10, MPFR_RNDD) != 0 ||
      mpfr_set_str(r.hi_.get(), hi.c_str(), 10, MPFR_RNDU) != 0)
    throw std::invalid_argument("malformed decimal bound '" + lo + "' / '" + hi + "'");
  if (r.hi_ < r.lo_) throw std::invalid_argument("interval bounds out of order");
  return r;
}

BigFloat CertifiedReal::width() const {
  BigFloat w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

BigFloat CertifiedReal::mid() const {
  BigFloat m(precision() + 1);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m;
}

BigFloat CertifiedReal::mag() const {
  BigFloat a(precision()), b(precision());
  mpfr_abs(a.get(), lo_.get(), MPFR_RNDU);
  mpfr_abs(b.get(), hi_.get(), MPFR_RNDU);
  return a < b ? b : a;
}

bool CertifiedReal::contains(const ExactRational& q) const {
  return mpfr_cmp_q(lo_.get(), q.raw().get_mpq_t()) <= 0 &&
         mpfr_cmp_q(hi_.get(), q.raw().get_mpq_t()) >= 0;
}

bool CertifiedReal::contains(const CertifiedReal& other) const {
  return !(other.lo_ < lo_) && !(hi_ < other.hi_);
}

bool CertifiedReal::overlaps(const CertifiedReal& other) const {
  return !(hi_ < other.lo_) && !(other.hi_ < lo_);
}

bool CertifiedReal::identical(const CertifiedReal& other) const {
  return precision() == other.precision() && lo_ == other.lo_ && hi_ == other.hi_;
}

CertifiedReal CertifiedReal::operator-() const {
  CertifiedReal r(precision());
  mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
  return r;
}

CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b) {
  CertifiedReal r(std::max(a.precision(), b.precision()));
  mpfr_add(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return r;
}

CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b) {
  CertifiedReal r(std::max(a.precision(), b.precision()));
  mpfr_sub(r.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_sub(r.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
  return r;
}

namespace {

// Min over directed-down products and max over directed-up products of the
// four corner combinations.
template <typename Op>
void corner_bounds(mpfr_ptr lo, mpfr_ptr hi, const CertifiedReal& a, const CertifiedReal& b, Op op) {
  const mpfr_prec_t prec = mpfr_get_prec(lo);
  BigFloat t(prec);
  const mpfr_srcptr as[2] = {a.lo().get(), a.hi().get()};
  const mpfr_srcptr bs[2] = {b.lo().get(), b.hi().get()};
  bool first = true;
  for (auto x : as) {
    for (auto y : bs) {
      op(t.get(), x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t.get(), lo) < 0) mpfr_set(lo, t.get(), MPFR_RNDD);
      op(t.get(), x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t.get(), hi) > 0) mpfr_set(hi, t.get(), MPFR_RNDU);
      first = false;
    }
  }
}

}  // namespace

CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b) {
  CertifiedReal r(std::max(a.precision(), b.precision()));
  corner_bounds(r.lo_.get(), r.hi_.get(), a, b, mpfr_mul);
  return r;
}

CertifiedReal operator/(const CertifiedReal& a, const CertifiedReal& b) {
  if (b.contains_zero()) throw IntervalDomainError("interval division by an interval containing zero");
  CertifiedReal r(std::max(a.precision(), b.precision()));
  corner_bounds(r.lo_.get(), r.hi_.get(), a, b, mpfr_div);
  return r;
}

CertifiedReal CertifiedReal::pow_int(unsigned e) const {
  CertifiedReal r(precision());
  if (e == 0) {
    mpfr_set_ui(r.lo_.get(), 1, MPFR_RNDD);
    mpfr_set_ui(r.hi_.get(), 1, MPFR_RNDU);
    return r;
  }
  if (e % 2 == 1 || lo_.sign() >= 0) {
    mpfr_pow_ui(r.lo_.get(), lo_.get(), e, MPFR_RNDD);
    mpfr_pow_ui(r.hi_.get(), hi_.get(), e, MPFR_RNDU);
  } else if (hi_.sign() <= 0) {
    mpfr_pow_ui(r.lo_.get(), hi_.get(), e, MPFR_RNDD);
    mpfr_pow_ui(r.hi_.get(), lo_.get(), e, MPFR_RNDU);
  } else {
    mpfr_set_zero(r.lo_.get(), 1);
    mpfr_pow_ui(r.hi_.get(), mag().get(), e, MPFR_RNDU);
  }
  return r;
}

CertifiedReal CertifiedReal::hull(const CertifiedReal& other) const {
  CertifiedReal r(std::max(precision(), other.precision()));
  mpfr_min(r.lo_.get(), lo_.get(), other.lo_.get(), MPFR_RNDD);
  mpfr_max(r.hi_.get(), hi_.get(), other.hi_.get(), MPFR_RNDU);
  return r;
}

// ---------------------------------------------------------------------------
// pi

CertifiedReal arctan_recip(unsigned long x, const PrecisionContext& ctx) {
  if (x < 2) throw std::invalid_argument("arctan_recip needs x >= 2");
  // Terms 1/((2i+1) x^(2i+1)) decrease strictly; stop once below 2^-(working+2).
  const ExactRational cutoff(ExactInt(1), ExactInt::pow2(ctx.working_bits() + 2));
  const ExactInt xx = ExactInt(static_cast<long>(x)) * ExactInt(static_cast<long>(x));
  ExactInt power(static_cast<long>(x));
  CertifiedReal sum(ctx);
  unsigned long i = 0;
  for (;; ++i) {
    ExactRational term(ExactInt(1), ExactInt(static_cast<long>(2 * i + 1)) * power);
    if (term < cutoff) {
      // Remaining alternating tail lies between 0 and the first omitted term.
      CertifiedReal tail = (i % 2 == 0) ? CertifiedReal::from_bounds(0, term, ctx)
                                        : CertifiedReal::from_bounds(-term, 0, ctx);
      return sum + tail;
    }
    CertifiedReal t = CertifiedReal::from_rational(term, ctx);
    sum = (i % 2 == 0) ? sum + t : sum - t;
    power *= xx;
  }
}

CertifiedReal pi(const PrecisionContext& ctx) {
  ctx.validate();
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, CertifiedReal> cache;
  const auto key = std::make_pair(ctx.precision_bits, ctx.guard_bits);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  CertifiedReal value = CertifiedReal::from_int(16, ctx) * arctan_recip(5, ctx) -
                        CertifiedReal::from_int(4, ctx) * arctan_recip(239, ctx);
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(value)).first->second;
}

}  // namespace piforge
