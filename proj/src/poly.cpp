#include "kostka/poly.hpp"

namespace kostka {

Poly::Poly(int order, std::vector<Cyclotomic> coeffs) : order_(order), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (c.order() != order_) throw usage_error("Poly: coefficient order mismatch");
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Cyclotomic& c) {
  Poly p(c.order());
  if (!c.is_zero()) p.c_.push_back(c);
  return p;
}

Poly Poly::t_power(int order, int k, const Cyclotomic& coeff) {
  if (k < 0) throw usage_error("Poly: negative exponent");
  Poly p(order);
  if (coeff.is_zero()) return p;
  p.c_.assign(k + 1, Cyclotomic(order));
  p.c_[k] = coeff;
  return p;
}

bool Poly::is_one() const { return c_.size() == 1 && c_[0].is_rational() && c_[0].rational_value().is_one(); }

Cyclotomic Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Cyclotomic(order_);
  return c_[k];
}

Cyclotomic Poly::leading_coeff() const {
  if (is_zero()) throw arith_error("Poly: leading coefficient of zero");
  return c_.back();
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& c : out.c_) c = -c;
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  if (a.order_ != b.order_) throw usage_error("Poly: mixed orders");
  Poly out(a);
  if (out.c_.size() < b.c_.size()) out.c_.resize(b.c_.size(), Cyclotomic(a.order_));
  for (size_t i = 0; i < b.c_.size(); ++i) out.c_[i] += b.c_[i];
  out.trim();
  return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.order_ != b.order_) throw usage_error("Poly: mixed orders");
  Poly out(a.order_);
  if (a.is_zero() || b.is_zero()) return out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, Cyclotomic(a.order_));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      out.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  out.trim();
  return out;
}

Poly Poly::scaled(const Cyclotomic& c) const {
  Poly out(order_);
  if (c.is_zero() || is_zero()) return out;
  out.c_ = c_;
  for (auto& x : out.c_) x *= c;
  out.trim();
  return out;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (a.order_ != b.order_) throw usage_error("Poly: mixed orders");
  if (b.is_zero()) throw arith_error("Poly: division by zero polynomial");
  Poly q(a.order_), r(a);
  const Cyclotomic lead_inv = b.leading_coeff().inverse();
  const int db = b.degree();
  while (r.degree() >= db) {
    int shift = r.degree() - db;
    Cyclotomic c = r.leading_coeff() * lead_inv;
    Poly term = Poly::t_power(a.order_, shift, c);
    q += term;
    r -= term * b;
  }
  return {q, r};
}

Poly Poly::gcd_monic(Poly a, Poly b) {
  // Euclid with monic normalization each step to control coefficient growth.
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? r : r.make_monic();
  }
  return a.is_zero() ? a : a.make_monic();
}

Poly Poly::make_monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coeff().inverse());
}

Poly Poly::conj_zeta() const {
  Poly out(*this);
  for (auto& c : out.c_) c = c.conj();
  return out;
}

bool Poly::is_real() const {
  for (const auto& c : c_)
    if (!(c.conj() == c)) return false;
  return true;
}

bool Poly::has_integer_coeffs() const {
  for (const auto& c : c_)
    if (!c.is_rational() || !c.rational_value().is_integer()) return false;
  return true;
}

Poly Poly::substitute_t_power(int k) const {
  if (k < 1) throw usage_error("Poly: substitution exponent must be positive");
  Poly out(order_);
  if (is_zero()) return out;
  out.c_.assign(k * degree() + 1, Cyclotomic(order_));
  for (int i = 0; i <= degree(); ++i) out.c_[i * k] = c_[i];
  out.trim();
  return out;
}

Cyclotomic Poly::eval(const Cyclotomic& x) const {
  Cyclotomic acc(order_);
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::promote(int new_order) const {
  if (new_order == order_) return *this;
  std::vector<Cyclotomic> coeffs;
  coeffs.reserve(c_.size());
  for (const auto& c : c_) coeffs.push_back(c.promote(new_order));
  return Poly(new_order, std::move(coeffs));
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int e = degree(); e >= 0; --e) {
    const Cyclotomic& c = c_[e];
    if (c.is_zero()) continue;
    std::string cs;
    bool negative = false;
    if (c.is_rational()) {
      Rational q = c.rational_value();
      negative = q.is_negative();
      Rational abs = negative ? -q : q;
      cs = abs.str();
    } else {
      cs = c.str();
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (e == 0) {
      out += cs;
    } else {
      if (cs != "1") out += cs + "*";
      out += var;
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace kostka
