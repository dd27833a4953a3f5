#include "piforge/exact.hpp"

#include <atomic>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <vector>

namespace piforge {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return std::string(s);
}

bool valid_integer_literal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

mpz_class parse_mpz(std::string_view text) {
  std::string s = trim(text);
  if (!valid_integer_literal(s))
    throw std::invalid_argument("not an integer literal: '" + std::string(text) + "'");
  if (s[0] == '+') s.erase(0, 1);
  return mpz_class(s, 10);
}

std::atomic<unsigned> g_memo_cap{4096};

struct FactorialMemo {
  std::shared_mutex mu;
  std::vector<mpz_class> table{mpz_class(1)};
};

FactorialMemo& factorial_memo() {
  static FactorialMemo memo;
  return memo;
}

}  // namespace

ExactInt ExactInt::from_string(std::string_view text) { return ExactInt(parse_mpz(text)); }

ExactInt ExactInt::pow(unsigned long e) const {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), v_.get_mpz_t(), e);
  return ExactInt(std::move(r));
}

ExactInt ExactInt::pow2(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return ExactInt(std::move(r));
}

long ExactInt::to_long() const {
  if (!fits_long()) throw std::overflow_error("ExactInt does not fit in long: " + str());
  return v_.get_si();
}

ExactInt ExactInt::div_trunc(const ExactInt& d) const {
  if (d.is_zero()) throw ArithmeticError("integer division by zero");
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
  return ExactInt(std::move(q));
}

ExactInt ExactInt::mod(const ExactInt& d) const {
  if (d.is_zero()) throw ArithmeticError("integer modulo by zero");
  mpz_class r;
  mpz_mod(r.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
  return ExactInt(std::move(r));
}

ExactInt gcd(const ExactInt& a, const ExactInt& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return ExactInt(std::move(g));
}

std::ostream& operator<<(std::ostream& os, const ExactInt& v) { return os << v.str(); }

ExactRational::ExactRational(const ExactInt& num, const ExactInt& den) {
  if (den.is_zero()) throw ArithmeticError("rational with zero denominator");
  v_ = mpq_class(num.raw(), den.raw());
  v_.canonicalize();
}

ExactRational::ExactRational(mpq_class v) : v_(std::move(v)) {
  if (v_.get_den() == 0) throw ArithmeticError("rational with zero denominator");
  v_.canonicalize();
}

ExactRational ExactRational::from_string(std::string_view text) {
  std::string s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string::npos) return ExactRational(ExactInt(parse_mpz(s)));
  ExactInt num(parse_mpz(std::string_view(s).substr(0, slash)));
  std::string den_text = trim(std::string_view(s).substr(slash + 1));
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw std::invalid_argument("denominator must be unsigned: '" + s + "'");
  return ExactRational(num, ExactInt(parse_mpz(den_text)));
}

ExactRational ExactRational::reciprocal() const {
  if (is_zero()) throw ArithmeticError("reciprocal of zero");
  return ExactRational(mpq_class(1 / v_));
}

ExactRational ExactRational::pow(long e) const {
  if (e < 0) return reciprocal().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  // Powers of coprime parts stay coprime.
  mpq_class r;
  mpq_set_num(r.get_mpq_t(), n.get_mpz_t());
  mpq_set_den(r.get_mpq_t(), d.get_mpz_t());
  return ExactRational(std::move(r));
}

ExactRational operator/(const ExactRational& a, const ExactRational& b) {
  if (b.is_zero()) throw ArithmeticError("rational division by zero");
  return ExactRational(mpq_class(a.v_ / b.v_));
}

std::ostream& operator<<(std::ostream& os, const ExactRational& v) { return os << v.str(); }

void set_memo_cap(unsigned cap) { g_memo_cap.store(cap); }
unsigned memo_cap() { return g_memo_cap.load(); }

ExactInt factorial(unsigned n) {
  auto& memo = factorial_memo();
  if (n > memo_cap()) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return ExactInt(std::move(r));
  }
  {
    std::shared_lock lock(memo.mu);
    if (n < memo.table.size()) return ExactInt(memo.table[n]);
  }
  std::unique_lock lock(memo.mu);
  while (memo.table.size() <= n) {
    mpz_class next = memo.table.back() * static_cast<unsigned long>(memo.table.size());
    memo.table.push_back(std::move(next));
  }
  return ExactInt(memo.table[n]);
}

ExactInt binomial(unsigned n, unsigned k) {
  if (k > n)
    throw std::invalid_argument("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                                "): k exceeds n");
  if (n <= memo_cap()) {
    mpz_class r = factorial(n).raw();
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), factorial(k).raw().get_mpz_t());
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), factorial(n - k).raw().get_mpz_t());
    return ExactInt(std::move(r));
  }
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return ExactInt(std::move(r));
}

}  // namespace piforge
