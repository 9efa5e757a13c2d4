#pragma once

#include <map>
#include <optional>
#include <vector>

#include "kostka/partition.hpp"
#include "kostka/ratfunc.hpp"
#include "kostka/symfunc.hpp"

namespace kostka {

enum class Sign { plus, minus };
inline const char* sign_name(Sign s) { return s == Sign::minus ? "-" : "+"; }

// All per-(n, r) data of the colored ring engine. basis is ascending in the
// configured total order (basis[0] is the minimal element); the published
// enumeration order (descending) is its reverse. Matrices are indexed by
// basis positions, so "unitriangular over the order" means plain lower
// (k tables, hl rows) triangular here.
struct MultisymTables {
  int n = 0, r = 1;
  OrderKind order = OrderKind::lex_c;
  bool conj_first = false;

  std::vector<MultiPartition> basis;
  std::map<MultiPartition, int> pos;

  std::vector<std::vector<Cyclotomic>> p_to_s;  // p_{basis[i]} = sum_j M[i][j] s_{basis[j]}
  std::vector<std::vector<Cyclotomic>> s_to_p;  // inverse transition
  std::vector<RatFunc> z;                       // z_{basis[i]}(t)
  std::vector<std::vector<RatFunc>> gram;       // <s_i, s_j>

  std::vector<std::vector<RatFunc>> hl_minus, hl_plus;  // rows: P^{-+} over the s basis
  std::vector<std::vector<RatFunc>> k_minus, k_plus;    // Kostka tables
  std::vector<RatFunc> diag;                            // <P^-_i, P^+_i>

  int index_of(const MultiPartition& la) const;
};

// Cached table access; construction of a given key runs once.
const MultisymTables& multisym_tables(int n, int r, OrderKind kind = OrderKind::lex_c,
                                      bool conj_first = false);

// z_{la}(t) in Q(zeta_r)(t).
RatFunc z_multi(const MultiPartition& la);

// Expansion of p_{la} over the multi-Schur basis; coefficients in Q(zeta_r).
std::map<MultiPartition, Cyclotomic> pmulti_to_schur_coeffs(const MultiPartition& la);
SymExpansion pmulti_to_schur(const MultiPartition& la);

// The sesquilinear form: linear in the first slot, zeta -> zeta^{-1} (t fixed)
// in the second. Both arguments are rewritten in the p basis internally.
RatFunc form(const SymExpansion& f, const SymExpansion& g, OrderKind kind = OrderKind::lex_c);

// Two-sided unitriangular decomposition A * G * B^H = D of a square matrix
// over the fraction field (H = transpose with zeta-conjugated entries).
// Expects ascending-order indexing; throws on a zero pivot.
struct Biorth {
  std::vector<std::vector<RatFunc>> A, B;
  std::vector<RatFunc> D;
};
Biorth biorthogonalize(const std::vector<std::vector<RatFunc>>& gram);

RatFunc kostka_multi_entry(int n, int r, Sign sign, const MultiPartition& la, const MultiPartition& mu,
                           OrderKind kind = OrderKind::lex_c);
SymExpansion hl_expansion(const MultisymTables& tables, Sign sign, const MultiPartition& la);

// t^{a(mu)} K^{sign}_{la,mu}(1/t).
RatFunc kostka_modified(const MultiPartition& la, const MultiPartition& mu, Sign sign,
                        OrderKind kind = OrderKind::lex_c);

// Divides the modified K^- by t^{a(la)} and strips the t^r structure.
// Precondition: components 1..r-2 of mu are empty. Failure (non-polynomial
// quotient or exponents not divisible by r) is data, reported as nullopt.
std::optional<Poly> ic_minus_candidate(const MultiPartition& la, const MultiPartition& mu,
                                       OrderKind kind = OrderKind::lex_c);

}  // namespace kostka
