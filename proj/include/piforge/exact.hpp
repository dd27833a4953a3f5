// Exact unbounded integers and canonical rationals, backed by GMP.

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace piforge {

/// Raised for arithmetic that has no exact result (division by zero).
class ArithmeticError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Unbounded signed integer.
class ExactInt {
public:
  ExactInt() = default;
  ExactInt(long v) : v_(v) {}
  ExactInt(int v) : v_(v) {}
  ExactInt(unsigned long v) : v_(v) {}
  ExactInt(unsigned v) : v_(v) {}
  explicit ExactInt(mpz_class v) : v_(std::move(v)) {}
  /// Parses an optionally signed base-10 literal; throws std::invalid_argument.
  static ExactInt from_string(std::string_view text);

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }
  ExactInt abs() const { return ExactInt(mpz_class(::abs(v_))); }
  ExactInt pow(unsigned long e) const;
  /// 2^e.
  static ExactInt pow2(unsigned long e);
  bool fits_long() const { return v_.fits_slong_p(); }
  long to_long() const;

  std::string str() const { return v_.get_str(10); }
  const mpz_class& raw() const { return v_; }

  friend ExactInt operator+(const ExactInt& a, const ExactInt& b) { return ExactInt(mpz_class(a.v_ + b.v_)); }
  friend ExactInt operator-(const ExactInt& a, const ExactInt& b) { return ExactInt(mpz_class(a.v_ - b.v_)); }
  friend ExactInt operator*(const ExactInt& a, const ExactInt& b) { return ExactInt(mpz_class(a.v_ * b.v_)); }
  ExactInt operator-() const { return ExactInt(mpz_class(-v_)); }
  ExactInt& operator+=(const ExactInt& o) { v_ += o.v_; return *this; }
  ExactInt& operator-=(const ExactInt& o) { v_ -= o.v_; return *this; }
  ExactInt& operator*=(const ExactInt& o) { v_ *= o.v_; return *this; }
  /// Truncating quotient; throws ArithmeticError on zero divisor.
  ExactInt div_trunc(const ExactInt& d) const;
  ExactInt mod(const ExactInt& d) const;

  friend bool operator==(const ExactInt& a, const ExactInt& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

private:
  mpz_class v_;
};

ExactInt gcd(const ExactInt& a, const ExactInt& b);
std::ostream& operator<<(std::ostream& os, const ExactInt& v);

/// Reduced fraction num/den with den >= 1. Canonical at construction, so
/// equality is structural.
class ExactRational {
public:
  ExactRational() = default;
  ExactRational(long v) : v_(v) {}
  ExactRational(int v) : v_(v) {}
  ExactRational(const ExactInt& v) : v_(v.raw()) {}
  /// num/den reduced; throws ArithmeticError when den == 0.
  ExactRational(const ExactInt& num, const ExactInt& den);
  ExactRational(long num, long den) : ExactRational(ExactInt(num), ExactInt(den)) {}
  explicit ExactRational(mpq_class v);
  /// Accepts "a", "-a", "a/b".
  static ExactRational from_string(std::string_view text);

  ExactInt num() const { return ExactInt(mpz_class(v_.get_num())); }
  ExactInt den() const { return ExactInt(mpz_class(v_.get_den())); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  ExactRational abs() const { return ExactRational(mpq_class(::abs(v_))); }
  ExactRational reciprocal() const;
  /// Integer power; negative exponents invert (error if zero).
  ExactRational pow(long e) const;

  std::string str() const { return v_.get_str(10); }
  const mpq_class& raw() const { return v_; }

  friend ExactRational operator+(const ExactRational& a, const ExactRational& b) {
    return ExactRational(mpq_class(a.v_ + b.v_));
  }
  friend ExactRational operator-(const ExactRational& a, const ExactRational& b) {
    return ExactRational(mpq_class(a.v_ - b.v_));
  }
  friend ExactRational operator*(const ExactRational& a, const ExactRational& b) {
    return ExactRational(mpq_class(a.v_ * b.v_));
  }
  friend ExactRational operator/(const ExactRational& a, const ExactRational& b);
  ExactRational operator-() const { return ExactRational(mpq_class(-v_)); }
  ExactRational& operator+=(const ExactRational& o) { v_ += o.v_; return *this; }
  ExactRational& operator-=(const ExactRational& o) { v_ -= o.v_; return *this; }
  ExactRational& operator*=(const ExactRational& o) { v_ *= o.v_; return *this; }
  ExactRational& operator/=(const ExactRational& o) { return *this = *this / o; }

  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& v);

/// n! exactly. Values up to the memo cap are cached process-wide.
ExactInt factorial(unsigned n);

/// C(n, k); throws std::invalid_argument when k > n.
ExactInt binomial(unsigned n, unsigned k);

/// Upper bound on the factorial/binomial memo tables (default 4096).
void set_memo_cap(unsigned cap);
unsigned memo_cap();

}  // namespace piforge
