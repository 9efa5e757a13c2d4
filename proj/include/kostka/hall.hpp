#pragma once

#include <map>
#include <vector>

#include "kostka/multisym.hpp"
#include "kostka/partition.hpp"
#include "kostka/poly.hpp"

namespace kostka {

// Coefficient of P_xi in the Hall-Littlewood product P_{nu^(1)} ... P_{nu^(r)}.
Poly f_coeff(const std::vector<Partition>& factors, const Partition& xi);

// Hall polynomial g = t^{n(xi) - n(nu)} f(1/t); polynomiality is asserted.
Poly hall_g(const std::vector<Partition>& factors, const Partition& xi);

// Brute-force oracle: number of x-stable flags in F_q^n with prescribed
// subspace dimensions and prescribed Jordan types of x on the successive
// quotients, for x unipotent of Jordan type xi. Desk scale only.
struct FlagCountInstance {
  int q = 2;                             // prime, 2 or 3
  Partition xi;                          // Jordan type of x, |xi| <= 3
  std::vector<Partition> quotient_types; // nu^(1), ..., nu^(r)
};
long long flag_count(const FlagCountInstance& inst);

// Coefficient of P^-_{mu} in R_{nu} = prod_i P_{nu^(i)}(x^(i); t^r).
RatFunc h_coeff(const MultiPartition& nu, const MultiPartition& mu, OrderKind kind = OrderKind::lex_c);

// Solves the unitriangular system relating IC candidates to the modified
// classical Kostka products, for a fixed mu with empty components below the
// top two. Keys run over all of P_{n,r}.
std::map<MultiPartition, Poly> cor37_g_family(const MultiPartition& mu, OrderKind kind = OrderKind::lex_c);
Poly cor37_g(const MultiPartition& nu, const MultiPartition& mu, OrderKind kind = OrderKind::lex_c);

}  // namespace kostka
