#include "kostka/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>

#include "kostka/multisym.hpp"

namespace kostka {

namespace {

// Beta set of a partition: strictly decreasing first-column hook lengths.
std::vector<int> beta_set(const Partition& la) {
  int l = la.length();
  std::vector<int> beta(l);
  for (int i = 0; i < l; ++i) beta[i] = la.part(i) + (l - 1 - i);
  return beta;
}

Partition from_beta(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  int l = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < l; ++i) {
    int p = beta[i] - (l - 1 - i);
    if (p < 0) throw internal_error("beta set does not encode a partition");
    if (p > 0) parts.push_back(p);
  }
  return Partition(std::move(parts));
}

long long mn_character_rec(const Partition& la, const std::vector<int>& mu_parts, size_t mu_at);

struct CharKey {
  std::vector<int> la, mu;
  bool operator<(const CharKey& o) const { return std::tie(la, mu) < std::tie(o.la, o.mu); }
};

std::shared_mutex char_mutex;
std::map<CharKey, long long> char_memo;

long long mn_character_rec(const Partition& la, const std::vector<int>& mu_parts, size_t mu_at) {
  if (mu_at == mu_parts.size()) return la.empty() ? 1 : 0;
  const int m = mu_parts[mu_at];
  std::vector<int> beta = beta_set(la);
  long long acc = 0;
  for (size_t i = 0; i < beta.size(); ++i) {
    int b = beta[i] - m;
    if (b < 0) continue;
    bool occupied = false;
    int crossings = 0;
    for (size_t j = 0; j < beta.size(); ++j) {
      if (j == i) continue;
      if (beta[j] == b) occupied = true;
      if (beta[j] > b && beta[j] < beta[i]) ++crossings;
    }
    if (occupied) continue;
    std::vector<int> nb = beta;
    nb[i] = b;
    long long sign = (crossings % 2 == 0) ? 1 : -1;
    acc += sign * mn_character_rec(from_beta(std::move(nb)), mu_parts, mu_at + 1);
  }
  return acc;
}

}  // namespace

long long mn_character(const Partition& la, const Partition& mu) {
  if (la.size() != mu.size()) throw usage_error("mn_character: |lambda| != |mu|");
  CharKey key{la.parts(), mu.parts()};
  {
    std::shared_lock lock(char_mutex);
    auto it = char_memo.find(key);
    if (it != char_memo.end()) return it->second;
  }
  long long val = mn_character_rec(la, mu.parts(), 0);
  std::unique_lock lock(char_mutex);
  char_memo.emplace(std::move(key), val);
  return val;
}

long long z_classical(const Partition& la) {
  long long z = 1;
  int i = 0;
  while (i < la.length()) {
    int j = i;
    while (j < la.length() && la.part(j) == la.part(i)) ++j;
    int mult = j - i;
    for (int k = 0; k < mult; ++k) z *= la.part(i);
    for (int k = 2; k <= mult; ++k) z *= k;
    i = j;
  }
  return z;
}

RatFunc z_classical_t(const Partition& la) {
  Poly den = Poly::constant(1, Rational(1));
  for (int p : la.parts()) {
    Poly f = Poly::constant(1, Rational(1)) - Poly::t_power(1, p);
    den *= f;
  }
  return RatFunc(Poly::constant(1, Rational(z_classical(la))), den);
}

void SymExpansion::add_term(const MultiPartition& la, const RatFunc& c) {
  if (la.level() != level || la.size() != degree)
    throw usage_error("SymExpansion: label has wrong level or degree");
  auto it = terms.find(la);
  if (it == terms.end()) {
    if (!c.is_zero()) terms.emplace(la, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

RatFunc SymExpansion::coeff(const MultiPartition& la) const {
  auto it = terms.find(la);
  return it == terms.end() ? RatFunc(coeff_order) : it->second;
}

SymExpansion schur_unit(const MultiPartition& la, int coeff_order) {
  SymExpansion e;
  e.level = la.level();
  e.degree = la.size();
  e.coeff_order = coeff_order;
  e.terms.emplace(la, RatFunc::constant(coeff_order, Rational(1)));
  return e;
}

namespace {

std::shared_mutex mult_mutex;
std::map<std::pair<Partition, Partition>, std::map<Partition, long long>> mult_memo;

std::map<Partition, long long> compute_schur_mult(const Partition& a, const Partition& b) {
  // c^nu_{a,b} = sum_{rho, sigma} chi^a(rho) chi^b(sigma) chi^nu(rho u sigma) / (z_rho z_sigma)
  const int n1 = a.size(), n2 = b.size();
  auto rhos = partitions_of(n1);
  auto sigmas = partitions_of(n2);
  std::map<Partition, long long> out;
  for (const auto& nu : partitions_of(n1 + n2)) {
    Rational acc(0);
    for (const auto& rho : rhos) {
      long long ca = mn_character(a, rho);
      if (ca == 0) continue;
      for (const auto& sigma : sigmas) {
        long long cb = mn_character(b, sigma);
        if (cb == 0) continue;
        std::vector<int> merged = rho.parts();
        merged.insert(merged.end(), sigma.parts().begin(), sigma.parts().end());
        std::sort(merged.rbegin(), merged.rend());
        long long cn = mn_character(nu, Partition(std::move(merged)));
        if (cn == 0) continue;
        acc += Rational(ca * cb * cn, static_cast<long>(z_classical(rho)) * z_classical(sigma));
      }
    }
    if (acc.is_zero()) continue;
    if (!acc.is_integer() || acc.is_negative())
      throw internal_error("Schur structure constant is not a non-negative integer");
    out[nu] = static_cast<long long>(acc.numerator().get_si());
  }
  return out;
}

}  // namespace

const std::map<Partition, long long>& schur_mult_table(const Partition& a, const Partition& b) {
  auto key = std::make_pair(a, b);
  {
    std::shared_lock lock(mult_mutex);
    auto it = mult_memo.find(key);
    if (it != mult_memo.end()) return it->second;
  }
  auto table = compute_schur_mult(a, b);
  std::unique_lock lock(mult_mutex);
  return mult_memo.emplace(std::move(key), std::move(table)).first->second;
}

SymExpansion schur_product(const SymExpansion& f, const SymExpansion& g) {
  if (f.level != 1 || g.level != 1) throw usage_error("schur_product: level-1 expansions only");
  if (f.coeff_order != g.coeff_order) throw usage_error("schur_product: coefficient orders differ");
  SymExpansion out;
  out.level = 1;
  out.degree = f.degree + g.degree;
  out.coeff_order = f.coeff_order;
  for (const auto& [la, cf] : f.terms) {
    for (const auto& [mu, cg] : g.terms) {
      RatFunc c = cf * cg;
      const auto& table = schur_mult_table(la.component(0), mu.component(0));
      for (const auto& [nu, mult] : table) {
        RatFunc scaled = c * RatFunc::constant(out.coeff_order, Rational(mult));
        out.add_term(MultiPartition({nu}), scaled);
      }
    }
  }
  return out;
}

long long lr_coeff(const Partition& eta, const std::vector<Partition>& factors) {
  if (factors.empty()) return eta.empty() ? 1 : 0;
  std::map<Partition, long long> acc{{factors[0], 1}};
  for (size_t i = 1; i < factors.size(); ++i) {
    std::map<Partition, long long> next;
    for (const auto& [la, c] : acc)
      for (const auto& [nu, mult] : schur_mult_table(la, factors[i])) next[nu] += c * mult;
    acc = std::move(next);
  }
  auto it = acc.find(eta);
  return it == acc.end() ? 0 : it->second;
}

Poly classical_kostka(const Partition& la, const Partition& mu) {
  if (la.size() != mu.size()) throw usage_error("classical_kostka: |lambda| != |mu|");
  RatFunc k = kostka_multi_entry(la.size(), 1, Sign::minus, MultiPartition({la}), MultiPartition({mu}));
  auto p = k.as_poly();
  if (!p) throw internal_error("classical Kostka entry is not a polynomial");
  return *p;
}

Poly classical_kostka_modified(const Partition& la, const Partition& mu) {
  Poly k = classical_kostka(la, mu);
  RatFunc kt = RatFunc(k).substitute_t_inverse_power(1).times_t_power(static_cast<int>(mu.n_stat()));
  auto p = kt.as_poly();
  if (!p) throw internal_error("modified classical Kostka is not a polynomial");
  return *p;
}

SymExpansion classical_hl(const Partition& mu) {
  const auto& tables = multisym_tables(mu.size(), 1);
  return hl_expansion(tables, Sign::minus, MultiPartition({mu}));
}

}  // namespace kostka
