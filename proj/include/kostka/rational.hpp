#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace kostka {

// Error taxonomy. usage_error maps to CLI exit code 2, the others to 1.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct arith_error : error {
  using error::error;
};
struct usage_error : error {
  using error::error;
};
struct internal_error : error {
  using error::error;
};

using Int = mpz_class;

// Arbitrary-precision rational, always stored in lowest terms with a
// positive denominator. Thin wrapper over GMP's mpq that enforces the
// canonical form and turns division by zero into an exception.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(const Int& n) : v_(n) {}
  Rational(const Int& num, const Int& den) {
    if (den == 0) throw arith_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(Int(num), Int(den)) {}

  static Rational from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw usage_error("Rational: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw arith_error("Rational: zero denominator");
    q.canonicalize();
    Rational r;
    r.v_ = q;
    return r;
  }

  Int numerator() const { return v_.get_num(); }
  Int denominator() const { return v_.get_den(); }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_negative() const { return v_ < 0; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw arith_error("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
  Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
  Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
  Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

  Rational inverse() const {
    if (is_zero()) throw arith_error("Rational: division by zero");
    return Rational(denominator(), numerator());
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  // "p" for integers, "p/q" otherwise (both parse back).
  std::string str() const { return v_.get_str(); }

 private:
  explicit Rational(const mpq_class& q) : v_(q) {}  // assumes canonical
  mpq_class v_;
};

}  // namespace kostka
