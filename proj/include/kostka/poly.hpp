#pragma once

#include <string>
#include <vector>

#include "kostka/cyclotomic.hpp"

namespace kostka {

// Univariate polynomial in t over Q(zeta_r). Dense storage, no trailing
// zeros; the zero polynomial has an empty coefficient vector and degree -1.
class Poly {
 public:
  explicit Poly(int order = 1) : order_(order) {}
  Poly(int order, std::vector<Cyclotomic> coeffs);

  static Poly constant(const Cyclotomic& c);
  static Poly constant(int order, const Rational& c) { return constant(Cyclotomic(order, c)); }
  static Poly t_power(int order, int k, const Cyclotomic& coeff);
  static Poly t_power(int order, int k) { return t_power(order, k, Cyclotomic(order, Rational(1))); }

  int order() const { return order_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  Cyclotomic coeff(int k) const;
  const std::vector<Cyclotomic>& coeffs() const { return c_; }
  Cyclotomic leading_coeff() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { *this = *this + b; return *this; }
  Poly& operator-=(const Poly& b) { *this = *this - b; return *this; }
  Poly& operator*=(const Poly& b) { *this = *this * b; return *this; }
  Poly scaled(const Cyclotomic& c) const;

  // Division with remainder over the coefficient field; b must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  // Monic gcd (unique normal form); gcd(0,0) = 0.
  static Poly gcd_monic(Poly a, Poly b);

  Poly make_monic() const;
  Poly conj_zeta() const;
  bool is_real() const;  // all coefficients fixed by zeta -> zeta^{-1}
  bool has_integer_coeffs() const;
  Poly substitute_t_power(int k) const;  // t -> t^k, k >= 1
  Cyclotomic eval(const Cyclotomic& x) const;
  Cyclotomic eval(const Rational& x) const { return eval(Cyclotomic(order_, x)); }
  Poly promote(int new_order) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.order_ == b.order_ && a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  int order_;
  std::vector<Cyclotomic> c_;
};

}  // namespace kostka
