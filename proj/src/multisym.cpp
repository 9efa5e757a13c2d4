#include "kostka/multisym.hpp"

#include <memory>
#include <mutex>
#include <tuple>

namespace kostka {

namespace {

// ---- exact linear algebra over Q(zeta_r) ----

std::vector<std::vector<Cyclotomic>> invert_cyc(std::vector<std::vector<Cyclotomic>> m, int order) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Cyclotomic>> inv(n, std::vector<Cyclotomic>(n, Cyclotomic(order)));
  for (int i = 0; i < n; ++i) inv[i][i] = Cyclotomic(order, Rational(1));
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (!m[row][col].is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) throw internal_error("singular transition matrix");
    std::swap(m[col], m[pivot]);
    std::swap(inv[col], inv[pivot]);
    Cyclotomic d = m[col][col].inverse();
    for (int j = 0; j < n; ++j) {
      m[col][j] *= d;
      inv[col][j] *= d;
    }
    for (int row = 0; row < n; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      Cyclotomic f = m[row][col];
      for (int j = 0; j < n; ++j) {
        m[row][j] -= f * m[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// LDU factorization G = L D U over the fraction field, without pivot
// search: the elimination order is the fixed total order and the theory
// guarantees nonzero pivots, so a zero pivot is a bug, not data.
struct LDU {
  std::vector<std::vector<RatFunc>> L, U;
  std::vector<RatFunc> D;
};

LDU ldu_decompose(const std::vector<std::vector<RatFunc>>& gram) {
  const int N = static_cast<int>(gram.size());
  const int order = N > 0 ? gram[0][0].order() : 1;
  std::vector<std::vector<RatFunc>> work = gram;
  LDU out;
  out.L.assign(N, std::vector<RatFunc>(N, RatFunc(order)));
  out.U.assign(N, std::vector<RatFunc>(N, RatFunc(order)));
  out.D.assign(N, RatFunc(order));
  const RatFunc one = RatFunc::constant(order, Rational(1));
  for (int i = 0; i < N; ++i) out.L[i][i] = out.U[i][i] = one;
  for (int k = 0; k < N; ++k) {
    out.D[k] = work[k][k];
    if (out.D[k].is_zero()) throw internal_error("degenerate Gram matrix");
    for (int i = k + 1; i < N; ++i) out.L[i][k] = work[i][k] / out.D[k];
    for (int j = k + 1; j < N; ++j) out.U[k][j] = work[k][j] / out.D[k];
    for (int i = k + 1; i < N; ++i) {
      if (out.L[i][k].is_zero()) continue;
      for (int j = k + 1; j < N; ++j) {
        if (out.U[k][j].is_zero()) continue;
        work[i][j] -= out.L[i][k] * out.D[k] * out.U[k][j];
      }
    }
  }
  return out;
}

// Unit-lower-triangular inverse by forward substitution.
std::vector<std::vector<RatFunc>> invert_unit_lower(const std::vector<std::vector<RatFunc>>& L, int order) {
  const int n = static_cast<int>(L.size());
  std::vector<std::vector<RatFunc>> X(n, std::vector<RatFunc>(n, RatFunc(order)));
  for (int i = 0; i < n; ++i) {
    X[i][i] = RatFunc::constant(order, Rational(1));
    for (int j = i - 1; j >= 0; --j) {
      RatFunc acc(order);
      for (int k = j; k < i; ++k) {
        if (L[i][k].is_zero() || X[k][j].is_zero()) continue;
        acc += L[i][k] * X[k][j];
      }
      X[i][j] = -acc;
    }
  }
  return X;
}

// ---- table construction ----

struct TableKey {
  int n, r;
  OrderKind order;
  bool conj_first;
  bool operator<(const TableKey& o) const {
    return std::tie(n, r, order, conj_first) < std::tie(o.n, o.r, o.order, o.conj_first);
  }
};

// z_{la}(t) split as an integer times a product of factors (1 - zeta^a t^m);
// the gram matrix is assembled over the least common denominator so that the
// heavy normalization happens once per entry.
struct ZFactors {
  long long zc = 1;
  std::map<std::pair<int, int>, int> mult;  // (a, m) -> multiplicity
};

ZFactors z_factors(const MultiPartition& la) {
  ZFactors out;
  const int r = la.level();
  for (int k = 0; k < r; ++k) {
    const Partition& comp = la.component(k);
    for (int i = 0; i < comp.length(); ++i) out.zc *= r;
    out.zc *= z_classical(comp);
    for (int m : comp.parts()) out.mult[{k % r, m}] += 1;
  }
  return out;
}

Poly zeta_factor(int order, int a, int m) {
  // 1 - zeta^a t^m
  return Poly::constant(order, Rational(1)) - Poly::t_power(order, m, Cyclotomic::zeta_power(order, a));
}

void expand_leaf(int r, const std::vector<std::vector<int>>& comp_parts, const Cyclotomic& coeff,
                 std::map<MultiPartition, Cyclotomic>& out) {
  // Per-component power sums to Schur via characters, producing every
  // multi-Schur label supported on these component sizes.
  std::vector<Partition> rho(r);
  for (int j = 0; j < r; ++j) {
    std::vector<int> parts = comp_parts[j];
    std::sort(parts.rbegin(), parts.rend());
    rho[j] = Partition(std::move(parts));
  }
  std::vector<Partition> mu(r);
  auto rec = [&](auto&& self, int j, long long chiprod) -> void {
    if (j == r) {
      Cyclotomic scaled = coeff * Cyclotomic(coeff.order(), Rational(chiprod));
      auto [it, inserted] = out.try_emplace(MultiPartition(mu), scaled);
      if (!inserted) it->second += scaled;
      return;
    }
    for (const auto& cand : partitions_of(rho[j].size())) {
      long long chi = mn_character(cand, rho[j]);
      if (chi == 0) continue;
      mu[j] = cand;
      self(self, j + 1, chiprod * chi);
    }
  };
  rec(rec, 0, 1);
}

std::unique_ptr<MultisymTables> build_tables(int n, int r, OrderKind kind, bool conj_first) {
  auto t = std::make_unique<MultisymTables>();
  t->n = n;
  t->r = r;
  t->order = kind;
  t->conj_first = conj_first;

  std::vector<MultiPartition> desc = enumerate_multipartitions(n, r, kind);
  t->basis.assign(desc.rbegin(), desc.rend());
  const int N = static_cast<int>(t->basis.size());
  for (int i = 0; i < N; ++i) t->pos.emplace(t->basis[i], i);

  // p -> s transition and its inverse over Q(zeta_r).
  t->p_to_s.assign(N, std::vector<Cyclotomic>(N, Cyclotomic(r)));
  for (int i = 0; i < N; ++i) {
    for (const auto& [mu, c] : pmulti_to_schur_coeffs(t->basis[i])) t->p_to_s[i][t->pos.at(mu)] = c;
  }
  t->s_to_p = invert_cyc(t->p_to_s, r);

  // z values and their factored shapes.
  std::vector<ZFactors> zf(N);
  std::map<std::pair<int, int>, int> maxmult;
  t->z.resize(N, RatFunc(r));
  for (int i = 0; i < N; ++i) {
    zf[i] = z_factors(t->basis[i]);
    for (const auto& [key, m] : zf[i].mult) {
      auto it = maxmult.find(key);
      if (it == maxmult.end())
        maxmult.emplace(key, m);
      else
        it->second = std::max(it->second, m);
    }
    t->z[i] = z_multi(t->basis[i]);
  }
  Poly common_den = Poly::constant(r, Rational(1));
  for (const auto& [key, m] : maxmult) {
    Poly f = zeta_factor(r, key.first, key.second);
    for (int k = 0; k < m; ++k) common_den *= f;
  }
  std::vector<Poly> cof(N, Poly(r));  // z_i(t) = zc_i * cof_i / common_den
  for (int i = 0; i < N; ++i) {
    Poly c = Poly::constant(r, Rational(1));
    for (const auto& [key, m] : maxmult) {
      int have = 0;
      auto it = zf[i].mult.find(key);
      if (it != zf[i].mult.end()) have = it->second;
      Poly f = zeta_factor(r, key.first, key.second);
      for (int k = 0; k < m - have; ++k) c *= f;
    }
    cof[i] = c;
  }

  // Gram matrix G[i][j] = sum_nu C[i][nu] conj(C[j][nu]) z_nu(t).
  const auto& C = t->s_to_p;
  std::vector<std::vector<Cyclotomic>> Cconj(N, std::vector<Cyclotomic>(N, Cyclotomic(r)));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) Cconj[i][j] = C[i][j].conj();
  t->gram.assign(N, std::vector<RatFunc>(N, RatFunc(r)));
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      Poly num(r);
      for (int nu = 0; nu < N; ++nu) {
        if (C[i][nu].is_zero() || Cconj[j][nu].is_zero()) continue;
        Cyclotomic coeff = C[i][nu] * Cconj[j][nu] * Cyclotomic(r, Rational(zf[nu].zc));
        if (coeff.is_zero()) continue;
        num += cof[nu].scaled(coeff);
      }
      t->gram[i][j] = RatFunc(std::move(num), common_den);
    }
  }
  if (conj_first) {  // flip the conjugated slot: transpose the Gram matrix
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j) std::swap(t->gram[i][j], t->gram[j][i]);
  }

  // From G = L D U: the minus family is A = L^{-1} (rows of P^-), the plus
  // family satisfies B^H = U^{-1}; the K tables are the inverses, K^- = L
  // and K^+ = conj(U)^T.
  LDU f = ldu_decompose(t->gram);
  t->diag = std::move(f.D);
  t->k_minus = f.L;
  t->k_plus.assign(N, std::vector<RatFunc>(N, RatFunc(r)));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) t->k_plus[i][j] = f.U[j][i].conj_zeta();
  t->hl_minus = invert_unit_lower(f.L, r);
  t->hl_plus = invert_unit_lower(t->k_plus, r);

  // Prop 1.3 promises entries in Q(t); anything else means the conjugation
  // convention is broken, and nothing downstream can be trusted.
  auto check_rational = [&](const std::vector<std::vector<RatFunc>>& mat) {
    for (const auto& row : mat)
      for (const auto& e : row) {
        for (const auto& c : e.num().coeffs())
          if (!c.is_rational()) throw internal_error("conjugation convention violated");
        for (const auto& c : e.den().coeffs())
          if (!c.is_rational()) throw internal_error("conjugation convention violated");
      }
  };
  check_rational(t->k_minus);
  check_rational(t->k_plus);
  return t;
}

std::mutex table_mutex;
std::map<TableKey, std::unique_ptr<MultisymTables>> table_registry;

}  // namespace

int MultisymTables::index_of(const MultiPartition& la) const {
  auto it = pos.find(la);
  if (it == pos.end()) throw usage_error("label not in P_{n,r}: " + la.str());
  return it->second;
}

const MultisymTables& multisym_tables(int n, int r, OrderKind kind, bool conj_first) {
  if (n < 0 || r < 1) throw usage_error("multisym_tables: need n >= 0 and r >= 1");
  TableKey key{n, r, kind, conj_first};
  std::lock_guard<std::mutex> lock(table_mutex);
  auto it = table_registry.find(key);
  if (it == table_registry.end()) it = table_registry.emplace(key, build_tables(n, r, kind, conj_first)).first;
  return *it->second;
}

RatFunc z_multi(const MultiPartition& la) {
  const int r = la.level();
  ZFactors zf = z_factors(la);
  Poly den = Poly::constant(r, Rational(1));
  for (const auto& [key, m] : zf.mult) {
    Poly f = zeta_factor(r, key.first, key.second);
    for (int k = 0; k < m; ++k) den *= f;
  }
  return RatFunc(Poly::constant(r, Rational(zf.zc)), den);
}

std::map<MultiPartition, Cyclotomic> pmulti_to_schur_coeffs(const MultiPartition& la) {
  const int r = la.level();
  // One (color, part) factor per row of la; each factor distributes over the
  // r variable families with a root-of-unity weight.
  std::vector<std::pair<int, int>> factors;  // (k zero-based, m)
  for (int k = 0; k < r; ++k)
    for (int m : la.component(k).parts()) factors.emplace_back(k, m);

  std::map<MultiPartition, Cyclotomic> out;
  std::vector<std::vector<int>> comp_parts(r);
  auto rec = [&](auto&& self, size_t at, long zeta_exp) -> void {
    if (at == factors.size()) {
      expand_leaf(r, comp_parts, Cyclotomic::zeta_power(r, zeta_exp), out);
      return;
    }
    auto [k, m] = factors[at];
    for (int j = 0; j < r; ++j) {
      comp_parts[j].push_back(m);
      self(self, at + 1, zeta_exp + static_cast<long>(k) * j);
      comp_parts[j].pop_back();
    }
  };
  rec(rec, 0, 0);
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

SymExpansion pmulti_to_schur(const MultiPartition& la) {
  SymExpansion e;
  e.level = la.level();
  e.degree = la.size();
  e.coeff_order = la.level();
  for (const auto& [mu, c] : pmulti_to_schur_coeffs(la)) e.terms.emplace(mu, RatFunc::constant(c));
  return e;
}

RatFunc form(const SymExpansion& f, const SymExpansion& g, OrderKind kind) {
  if (f.level != g.level || f.degree != g.degree) throw usage_error("form: mismatched level or degree");
  const int r = f.level;
  const auto& t = multisym_tables(f.degree, r, kind);
  const int N = static_cast<int>(t.basis.size());
  auto p_coords = [&](const SymExpansion& e) {
    std::vector<RatFunc> out(N, RatFunc(r));
    for (const auto& [la, c] : e.terms) {
      int i = t.index_of(la);
      for (int nu = 0; nu < N; ++nu) {
        if (t.s_to_p[i][nu].is_zero()) continue;
        out[nu] += c * RatFunc::constant(t.s_to_p[i][nu]);
      }
    }
    return out;
  };
  std::vector<RatFunc> fp = p_coords(f), gp = p_coords(g);
  RatFunc acc(r);
  for (int nu = 0; nu < N; ++nu) {
    if (fp[nu].is_zero() || gp[nu].is_zero()) continue;
    acc += fp[nu] * gp[nu].conj_zeta() * t.z[nu];
  }
  return acc;
}

Biorth biorthogonalize(const std::vector<std::vector<RatFunc>>& gram) {
  const int N = static_cast<int>(gram.size());
  const int order = N > 0 ? gram[0][0].order() : 1;
  LDU f = ldu_decompose(gram);
  Biorth out;
  out.D = std::move(f.D);
  out.A = invert_unit_lower(f.L, order);
  // B satisfies B^H = U^{-1}, i.e. B = conj(U^{-1})^T; equivalently B is the
  // unit-lower inverse of conj(U)^T.
  std::vector<std::vector<RatFunc>> Uct(N, std::vector<RatFunc>(N, RatFunc(order)));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) Uct[i][j] = f.U[j][i].conj_zeta();
  out.B = invert_unit_lower(Uct, order);
  return out;
}

RatFunc kostka_multi_entry(int n, int r, Sign sign, const MultiPartition& la, const MultiPartition& mu,
                           OrderKind kind) {
  const auto& t = multisym_tables(n, r, kind);
  int i = t.index_of(la), j = t.index_of(mu);
  return sign == Sign::minus ? t.k_minus[i][j] : t.k_plus[i][j];
}

SymExpansion hl_expansion(const MultisymTables& tables, Sign sign, const MultiPartition& la) {
  const auto& rows = sign == Sign::minus ? tables.hl_minus : tables.hl_plus;
  int i = tables.index_of(la);
  SymExpansion e;
  e.level = tables.r;
  e.degree = tables.n;
  e.coeff_order = tables.r;
  for (int j = 0; j < static_cast<int>(tables.basis.size()); ++j)
    if (!rows[i][j].is_zero()) e.terms.emplace(tables.basis[j], rows[i][j]);
  return e;
}

RatFunc kostka_modified(const MultiPartition& la, const MultiPartition& mu, Sign sign, OrderKind kind) {
  RatFunc k = kostka_multi_entry(la.size(), la.level(), sign, la, mu, kind);
  if (k.is_zero()) return k;
  return k.substitute_t_inverse_power(1).times_t_power(static_cast<int>(mu.a_stat()));
}

std::optional<Poly> ic_minus_candidate(const MultiPartition& la, const MultiPartition& mu, OrderKind kind) {
  const int r = la.level();
  for (int i = 0; i + 2 < r; ++i)
    if (!mu.component(i).empty())
      throw usage_error("ic_minus_candidate: mu must have empty components below the top two");
  RatFunc kt = kostka_modified(la, mu, Sign::minus, kind);
  RatFunc q = kt.times_t_power(-static_cast<int>(la.a_stat()));
  auto p = q.as_poly();
  if (!p) return std::nullopt;
  std::vector<Cyclotomic> coeffs;
  for (int e = 0; e <= p->degree(); ++e) {
    Cyclotomic c = p->coeff(e);
    if (c.is_zero()) continue;
    if (e % r != 0) return std::nullopt;  // not a polynomial in t^r
    if (static_cast<int>(coeffs.size()) < e / r + 1) coeffs.resize(e / r + 1, Cyclotomic(1));
    if (!c.is_rational()) throw internal_error("IC candidate with irrational coefficient");
    coeffs[e / r] = Cyclotomic(1, c.rational_value());
  }
  return Poly(1, std::move(coeffs));
}

}  // namespace kostka
