// Outward-rounded interval arithmetic over MPFR floats, plus an independent pi.
//
// Every CertifiedReal [lo, hi] encloses the true value of the expression that
// produced it. Bounds are rounded toward -inf / +inf respectively.

#pragma once

#include "piforge/exact.hpp"

#include <mpfr.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace piforge {

/// Working precision for a computation. Arithmetic runs at
/// precision_bits + guard_bits.
struct PrecisionContext {
  unsigned precision_bits = 128;
  unsigned guard_bits = 32;

  /// Throws std::invalid_argument when precision_bits < 64 or guard_bits == 0.
  void validate() const;
  mpfr_prec_t working_bits() const { return static_cast<mpfr_prec_t>(precision_bits + guard_bits); }
};

/// RAII holder for one mpfr_t.
class BigFloat {
public:
  explicit BigFloat(mpfr_prec_t prec);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }

  /// Scientific decimal with the given significant digits, rounded in `rnd`.
  std::string to_decimal(std::size_t digits, mpfr_rnd_t rnd) const;

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

private:
  mpfr_t v_;
};

/// Raised on interval division by an interval that contains zero.
class IntervalDomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class CertifiedReal {
public:
  /// Degenerate [0, 0] at the context's working precision.
  explicit CertifiedReal(const PrecisionContext& ctx);
  /// Tight enclosure of q: each bound within one ulp.
  static CertifiedReal from_rational(const ExactRational& q, const PrecisionContext& ctx);
  static CertifiedReal from_int(long v, const PrecisionContext& ctx);
  /// Enclosure of num/den without reducing the fraction first; den != 0.
  static CertifiedReal from_quotient(const ExactInt& num, const ExactInt& den,
                                     const PrecisionContext& ctx);
  /// [lo, hi] from exact rationals (lo rounded down, hi rounded up).
  static CertifiedReal from_bounds(const ExactRational& lo, const ExactRational& hi,
                                   const PrecisionContext& ctx);
  /// Parses decimal bounds, rounding lo down and hi up.
  static CertifiedReal from_decimal(const std::string& lo, const std::string& hi,
                                    const PrecisionContext& ctx);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  mpfr_prec_t precision() const { return lo_.precision(); }

  /// hi - lo, rounded up.
  BigFloat width() const;
  /// Midpoint, rounded to nearest.
  BigFloat mid() const;
  double mid_double() const { return mid().to_double(); }
  double width_double() const { return width().to_double(); }
  /// Largest |x| over the interval, rounded up.
  BigFloat mag() const;

  bool is_point() const { return lo_ == hi_; }
  bool contains(const ExactRational& q) const;
  bool contains(const CertifiedReal& other) const;
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool overlaps(const CertifiedReal& other) const;
  /// Bitwise-identical bounds and precision.
  bool identical(const CertifiedReal& other) const;

  CertifiedReal operator-() const;
  friend CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator/(const CertifiedReal& a, const CertifiedReal& b);
  CertifiedReal& operator+=(const CertifiedReal& o) { return *this = *this + o; }
  CertifiedReal& operator*=(const CertifiedReal& o) { return *this = *this * o; }

  /// x^e for e >= 0; even exponents give a nonnegative enclosure.
  CertifiedReal pow_int(unsigned e) const;
  /// Smallest interval containing both.
  CertifiedReal hull(const CertifiedReal& other) const;

private:
  explicit CertifiedReal(mpfr_prec_t prec);
  BigFloat lo_;
  BigFloat hi_;
};

/// Enclosure of pi with width <= 2^-precision_bits, from
/// pi = 16 arctan(1/5) - 4 arctan(1/239). Cached per precision.
CertifiedReal pi(const PrecisionContext& ctx);

/// Enclosure of arctan(1/x) for integer x >= 2 by its alternating Taylor series.
CertifiedReal arctan_recip(unsigned long x, const PrecisionContext& ctx);

/// Significant decimal digits that separate distinct floats at `prec` bits.
std::size_t decimal_digits_for(mpfr_prec_t prec);

}  // namespace piforge
