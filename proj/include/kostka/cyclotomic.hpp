#pragma once

#include <string>
#include <vector>

#include "kostka/rational.hpp"

namespace kostka {

int euler_phi(int r);

// Element of the cyclotomic field Q(zeta_r), stored as coordinates in the
// power basis 1, zeta, ..., zeta^{phi(r)-1} reduced modulo the r-th
// cyclotomic polynomial. Reduction is canonical, so coordinatewise equality
// is field equality. Every value carries its order r; mixing orders is an
// error (promote() embeds Q = Q(zeta_1) into a larger field).
class Cyclotomic {
 public:
  explicit Cyclotomic(int order = 1);
  Cyclotomic(int order, const Rational& x);
  Cyclotomic(int order, std::vector<Rational> coords);  // length phi(order)

  static Cyclotomic zeta_power(int order, long k);  // zeta^k, any integer k

  int order() const { return order_; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // throws if not rational

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& b) { *this = *this + b; return *this; }
  Cyclotomic& operator-=(const Cyclotomic& b) { *this = *this - b; return *this; }
  Cyclotomic& operator*=(const Cyclotomic& b) { *this = *this * b; return *this; }

  Cyclotomic inverse() const;
  Cyclotomic conj() const;  // zeta -> zeta^{-1}
  Cyclotomic promote(int new_order) const;  // requires rational value or same order

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  std::string str(const std::string& zeta_symbol = "z") const;

 private:
  int order_;
  std::vector<Rational> c_;
};

}  // namespace kostka
