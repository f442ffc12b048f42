#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace stein {

using BigInt = mpz_class;

// Exact rational. The wrapped mpq is canonical (lowest terms, positive
// denominator) after every operation.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}
  Rational(long v) : q_(v) {}
  Rational(long long v) : q_(static_cast<long>(v)) {}
  Rational(const BigInt& v) : q_(v) {}
  Rational(const BigInt& num, const BigInt& den);

  // Accepts "p", "-p", "p/q".
  static Rational parse(std::string_view text);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational abs() const;
  Rational pow(int e) const;
  double to_double() const { return q_.get_d(); }
  long double to_long_double() const;

  // Always "p/q", including a denominator of 1.
  std::string str() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);
  Rational operator-() const { Rational r; r.q_ = -q_; return r; }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_;
};

inline BigInt big(long long v) { return BigInt(static_cast<long>(v)); }

BigInt factorial(int n);
BigInt binomial(long n, long k);  // 0 outside 0 <= k <= n
BigInt ipow(const BigInt& base, unsigned long e);
BigInt pow2(unsigned long e);
std::string to_string(const BigInt& v);

}  // namespace stein
