#include "kostka/ratfunc.hpp"

namespace kostka {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.order(), Rational(1))) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.order() != den_.order()) throw usage_error("RatFunc: mixed orders");
  if (den_.is_zero()) throw arith_error("RatFunc: zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.order(), Rational(1));
    return;
  }
  Poly g = Poly::gcd_monic(num_, den_);
  if (g.degree() > 0) {
    num_ = Poly::divmod(num_, g).first;
    den_ = Poly::divmod(den_, g).first;
  }
  Cyclotomic lead = den_.leading_coeff();
  if (!(lead.is_rational() && lead.rational_value().is_one())) {
    Cyclotomic inv = lead.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc out(*this);
  out.num_ = -out.num_;
  return out;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc(a.order());
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw arith_error("RatFunc: division by zero function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::conj_zeta() const {
  RatFunc out(order());
  out.num_ = num_.conj_zeta();
  out.den_ = den_.conj_zeta();
  out.normalize();  // conj can unsettle the monic convention
  return out;
}

RatFunc RatFunc::substitute_t_power(int k) const {
  return RatFunc(num_.substitute_t_power(k), den_.substitute_t_power(k));
}

RatFunc RatFunc::substitute_t_inverse_power(int k) const {
  if (k < 1) throw usage_error("RatFunc: substitution exponent must be positive");
  if (is_zero()) return *this;
  // f(t^{-k}) cleared of negative powers: scale both rows by t^{kD}.
  const int D = std::max(num_.degree(), den_.degree());
  auto reversed = [&](const Poly& p) {
    Poly out(order());
    for (int i = 0; i <= p.degree(); ++i) {
      Cyclotomic c = p.coeff(i);
      if (c.is_zero()) continue;
      out += Poly::t_power(order(), k * (D - i), c);
    }
    return out;
  };
  return RatFunc(reversed(num_), reversed(den_));
}

RatFunc RatFunc::times_t_power(int k) const {
  if (is_zero()) return *this;
  if (k >= 0) return RatFunc(num_ * Poly::t_power(order(), k), den_);
  return RatFunc(num_, den_ * Poly::t_power(order(), -k));
}

std::optional<Poly> RatFunc::as_poly() const {
  if (den_.is_one()) return num_;
  return std::nullopt;
}

Cyclotomic RatFunc::eval(const Rational& x) const {
  Cyclotomic d = den_.eval(x);
  if (d.is_zero()) throw arith_error("RatFunc: evaluation at a pole");
  return num_.eval(x) / d;
}

RatFunc RatFunc::promote(int new_order) const {
  if (new_order == order()) return *this;
  RatFunc out(new_order);
  out.num_ = num_.promote(new_order);
  out.den_ = den_.promote(new_order);
  return out;
}

std::string RatFunc::str(const std::string& var) const {
  if (den_.is_one()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace kostka
