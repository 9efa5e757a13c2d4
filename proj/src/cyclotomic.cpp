#include "kostka/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace kostka {

namespace {

// Dense rational polynomials, little helpers local to this translation unit.
// Used only for cyclotomic polynomial construction and modular inverses.
using QPoly = std::vector<Rational>;  // coefficient of x^i at index i

void trim(QPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

QPoly sub(QPoly a, const QPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Division with remainder; divisor must be nonzero.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  QPoly q;
  const Rational lead = b.back();
  while (deg(a) >= deg(b)) {
    int shift = deg(a) - deg(b);
    Rational c = a.back() / lead;
    if (static_cast<int>(q.size()) < shift + 1) q.resize(shift + 1, Rational(0));
    q[shift] += c;
    QPoly t(shift + 1, Rational(0));
    t[shift] = c;
    a = sub(a, mul(t, b));
  }
  trim(q);
  return {q, a};
}

struct CycContext {
  int r = 1;
  int phi = 1;
  QPoly cyclo;                                  // Phi_r, monic
  std::vector<std::vector<Rational>> xpow;      // x^k mod Phi_r, 0 <= k <= 2*phi-2
  std::vector<std::vector<Rational>> zetapow;   // zeta^k, 0 <= k < r
};

QPoly cyclotomic_poly(int r, std::map<int, QPoly>& memo) {
  auto it = memo.find(r);
  if (it != memo.end()) return it->second;
  // x^r - 1 divided by the product of Phi_d over proper divisors d of r.
  QPoly num(r + 1, Rational(0));
  num[0] = Rational(-1);
  num[r] = Rational(1);
  QPoly den = {Rational(1)};
  for (int d = 1; d < r; ++d)
    if (r % d == 0) den = mul(den, cyclotomic_poly(d, memo));
  auto [q, rem] = divmod(num, den);
  if (!rem.empty()) throw internal_error("cyclotomic polynomial division not exact");
  memo[r] = q;
  return q;
}

const CycContext& context(int r) {
  if (r < 1) throw usage_error("cyclotomic order must be >= 1");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycContext>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(r);
  if (it != registry.end()) return *it->second;

  auto ctx = std::make_unique<CycContext>();
  ctx->r = r;
  static std::map<int, QPoly> cyclo_memo;
  ctx->cyclo = cyclotomic_poly(r, cyclo_memo);
  ctx->phi = deg(ctx->cyclo);
  const int phi = ctx->phi;

  // x^phi mod Phi = -(lower part of Phi); higher powers by repeated shift.
  std::vector<Rational> top(phi, Rational(0));
  for (int i = 0; i < phi; ++i) top[i] = -ctx->cyclo[i];
  ctx->xpow.resize(std::max(2 * phi - 1, phi));
  for (int k = 0; k < phi; ++k) {
    std::vector<Rational> e(phi, Rational(0));
    e[k] = Rational(1);
    ctx->xpow[k] = e;
  }
  for (int k = phi; k <= 2 * phi - 2; ++k) {
    const auto& prev = ctx->xpow[k - 1];
    std::vector<Rational> cur(phi, Rational(0));
    // multiply by x: shift, then reduce the overflowing coefficient
    for (int i = 0; i + 1 < phi; ++i) cur[i + 1] = prev[i];
    const Rational& overflow = prev[phi - 1];
    if (!overflow.is_zero())
      for (int i = 0; i < phi; ++i) cur[i] += overflow * top[i];
    ctx->xpow[k] = cur;
  }

  ctx->zetapow.resize(r);
  {
    std::vector<Rational> cur(phi, Rational(0));
    cur[0] = Rational(1);
    ctx->zetapow[0] = cur;
    for (int k = 1; k < r; ++k) {
      std::vector<Rational> nxt(phi, Rational(0));
      for (int i = 0; i + 1 < phi; ++i) nxt[i + 1] = cur[i];
      const Rational& overflow = cur[phi - 1];
      if (!overflow.is_zero())
        for (int i = 0; i < phi; ++i) nxt[i] += overflow * top[i];
      ctx->zetapow[k] = nxt;
      cur = nxt;
    }
  }

  auto& slot = registry[r];
  slot = std::move(ctx);
  return *slot;
}

}  // namespace

int euler_phi(int r) { return context(r).phi; }

Cyclotomic::Cyclotomic(int order) : order_(order), c_(context(order).phi, Rational(0)) {}

Cyclotomic::Cyclotomic(int order, const Rational& x) : Cyclotomic(order) { c_[0] = x; }

Cyclotomic::Cyclotomic(int order, std::vector<Rational> coords) : order_(order), c_(std::move(coords)) {
  if (static_cast<int>(c_.size()) != context(order).phi)
    throw usage_error("Cyclotomic: coordinate vector has wrong length");
}

Cyclotomic Cyclotomic::zeta_power(int order, long k) {
  const auto& ctx = context(order);
  long m = k % order;
  if (m < 0) m += order;
  return Cyclotomic(order, ctx.zetapow[m]);
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw arith_error("Cyclotomic: not a rational value");
  return c_[0];
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out(*this);
  for (auto& x : out.c_) x = -x;
  return out;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ != b.order_) throw usage_error("Cyclotomic: mixed orders");
  Cyclotomic out(a);
  for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += b.c_[i];
  return out;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ != b.order_) throw usage_error("Cyclotomic: mixed orders");
  Cyclotomic out(a);
  for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] -= b.c_[i];
  return out;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ != b.order_) throw usage_error("Cyclotomic: mixed orders");
  // Fast path: both rational. This is the common case for r <= 2 and for
  // the real-valued data the elimination mostly runs on.
  if (a.is_rational()) {
    Cyclotomic out(b);
    for (auto& x : out.c_) x *= a.c_[0];
    return out;
  }
  if (b.is_rational()) {
    Cyclotomic out(a);
    for (auto& x : out.c_) x *= b.c_[0];
    return out;
  }
  const auto& ctx = context(a.order_);
  const int phi = ctx.phi;
  std::vector<Rational> conv(2 * phi - 1, Rational(0));
  for (int i = 0; i < phi; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j < phi; ++j) {
      if (b.c_[j].is_zero()) continue;
      conv[i + j] += a.c_[i] * b.c_[j];
    }
  }
  std::vector<Rational> out(phi, Rational(0));
  for (int k = 0; k < phi; ++k) out[k] = conv[k];
  for (int k = phi; k <= 2 * phi - 2; ++k) {
    if (conv[k].is_zero()) continue;
    const auto& red = ctx.xpow[k];
    for (int i = 0; i < phi; ++i) out[i] += conv[k] * red[i];
  }
  return Cyclotomic(a.order_, std::move(out));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw arith_error("Cyclotomic: division by zero");
  if (is_rational()) return Cyclotomic(order_, c_[0].inverse());
  // Extended Euclid in Q[x] against Phi_r (irreducible, so gcd is 1).
  const auto& ctx = context(order_);
  QPoly f(c_.begin(), c_.end());
  trim(f);
  QPoly r0 = ctx.cyclo, r1 = f;
  QPoly s0 = {}, s1 = {Rational(1)};  // coefficients of f in the Bezout combo
  while (!r1.empty()) {
    auto [q, rem] = divmod(r0, r1);
    QPoly s2 = sub(s0, mul(q, s1));
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
  if (deg(r0) != 0) throw internal_error("Cyclotomic: gcd with cyclotomic polynomial not constant");
  const Rational scale = r0[0].inverse();
  std::vector<Rational> out(ctx.phi, Rational(0));
  for (int i = 0; i <= deg(s0); ++i) out[i] = s0[i] * scale;
  return Cyclotomic(order_, std::move(out));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

Cyclotomic Cyclotomic::conj() const {
  if (is_rational()) return *this;
  Cyclotomic out(order_);
  for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
    if (c_[i].is_zero()) continue;
    Cyclotomic term = zeta_power(order_, (order_ - i) % order_);
    for (auto& x : term.c_) x *= c_[i];
    out += term;
  }
  return out;
}

Cyclotomic Cyclotomic::promote(int new_order) const {
  if (new_order == order_) return *this;
  return Cyclotomic(new_order, rational_value());
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return a.order_ == b.order_ && a.c_ == b.c_;
}

std::string Cyclotomic::str(const std::string& zeta_symbol) const {
  if (is_rational()) return c_[0].str();
  std::string out;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    std::string coeff = c_[i].str();
    if (!first) {
      if (!c_[i].is_negative()) out += "+";
    }
    if (i == 0) {
      out += coeff;
    } else {
      if (coeff == "1")
        ;  // omit unit coefficient
      else if (coeff == "-1")
        out += "-";
      else
        out += coeff + "*";
      out += zeta_symbol;
      if (i > 1) out += "^" + std::to_string(i);
    }
    first = false;
  }
  return "(" + out + ")";
}

}  // namespace kostka
