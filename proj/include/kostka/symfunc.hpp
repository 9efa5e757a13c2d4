#pragma once

#include <map>
#include <vector>

#include "kostka/partition.hpp"
#include "kostka/ratfunc.hpp"

namespace kostka {

// Irreducible symmetric group character chi^lambda(mu), by the signed
// border-strip recursion on beta sets. Memoized; safe for concurrent use.
long long mn_character(const Partition& la, const Partition& mu);

long long z_classical(const Partition& la);       // prod i^{m_i} m_i!
RatFunc z_classical_t(const Partition& la);       // z_la / prod (1 - t^{la_i}), order 1

// Finitely supported expansion over the (multi-)Schur basis. The universal
// in-memory form of a symmetric function here: no variables are ever
// materialized, everything is basis-relative.
struct SymExpansion {
  int level = 1;    // r
  int degree = 0;   // n
  int coeff_order = 1;  // cyclotomic order of the coefficients
  std::map<MultiPartition, RatFunc> terms;  // no zero coefficients stored

  void add_term(const MultiPartition& la, const RatFunc& c);
  RatFunc coeff(const MultiPartition& la) const;
  friend bool operator==(const SymExpansion& a, const SymExpansion& b) {
    return a.level == b.level && a.degree == b.degree && a.terms == b.terms;
  }
};

SymExpansion schur_unit(const MultiPartition& la, int coeff_order);

// Structure constants of the Schur basis: s_a * s_b = sum c^nu s_nu.
// Computed by character contraction and memoized; the constants are
// checked to be non-negative integers.
const std::map<Partition, long long>& schur_mult_table(const Partition& a, const Partition& b);

// Product of two level-1 expansions in Schur coordinates.
SymExpansion schur_product(const SymExpansion& f, const SymExpansion& g);

// Coefficient of s_eta in s_{factors[0]} ... s_{factors[k-1]}.
// 0 when the sizes do not add up.
long long lr_coeff(const Partition& eta, const std::vector<Partition>& factors);

// Classical Kostka polynomial K_{la,mu}(t), computed by the level-1 instance
// of the generic bi-orthogonalization. Throws on size mismatch.
Poly classical_kostka(const Partition& la, const Partition& mu);
// t^{n(mu)} K_{la,mu}(1/t), again a polynomial.
Poly classical_kostka_modified(const Partition& la, const Partition& mu);

// Hall-Littlewood P_mu in Schur coordinates (level 1, coefficients in Z[t]).
SymExpansion classical_hl(const Partition& mu);

}  // namespace kostka
