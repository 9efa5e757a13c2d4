#pragma once

#include <optional>
#include <string>

#include "kostka/poly.hpp"

namespace kostka {

// Rational function in t over Q(zeta_r), kept in the unique normal form:
// gcd(num, den) = 1 under the monic gcd convention and den monic. With that
// normal form, equality of values is equality of stored representations.
class RatFunc {
 public:
  explicit RatFunc(int order = 1) : num_(order), den_(Poly::constant(order, Rational(1))) {}
  RatFunc(Poly num);  // NOLINT: implicit lift of a polynomial
  RatFunc(Poly num, Poly den);

  static RatFunc constant(int order, const Rational& c) { return RatFunc(Poly::constant(order, c)); }
  static RatFunc constant(const Cyclotomic& c) { return RatFunc(Poly::constant(c)); }
  static RatFunc t(int order) { return RatFunc(Poly::t_power(order, 1)); }

  int order() const { return num_.order(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& b) { *this = *this + b; return *this; }
  RatFunc& operator-=(const RatFunc& b) { *this = *this - b; return *this; }
  RatFunc& operator*=(const RatFunc& b) { *this = *this * b; return *this; }
  RatFunc& operator/=(const RatFunc& b) { *this = *this / b; return *this; }

  RatFunc inverse() const;
  RatFunc conj_zeta() const;
  bool is_real() const { return num_.is_real() && den_.is_real(); }

  // Exact substitutions t -> t^k and t -> t^{-k} for k >= 1.
  RatFunc substitute_t_power(int k) const;
  RatFunc substitute_t_inverse_power(int k) const;
  // Multiply by t^k, any sign of k.
  RatFunc times_t_power(int k) const;

  // The polynomial if den = 1 after normalization; nullopt otherwise.
  std::optional<Poly> as_poly() const;

  Cyclotomic eval(const Rational& x) const;  // throws on a pole
  RatFunc promote(int new_order) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string str(const std::string& var = "t") const;

 private:
  void normalize();
  Poly num_, den_;
};

}  // namespace kostka
