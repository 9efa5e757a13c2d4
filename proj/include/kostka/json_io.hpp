#pragma once

#include <json.hpp>

#include "kostka/multisym.hpp"
#include "kostka/partition.hpp"
#include "kostka/ratfunc.hpp"
#include "kostka/symfunc.hpp"
#include "kostka/tableaux.hpp"

namespace kostka {

using json = nlohmann::ordered_json;

// Wire formats:
//   Rational      "p/q" (or "p" for integers)
//   CycRational   array of rational strings, power-basis coordinates
//   Poly          object exponent -> CycRational, no zero entries
//   RatFunc       {"num": Poly, "den": Poly}
//   Partition     [3,1]
//   MultiPartition[[2,1],[],[1]]
//   SymExpansion  {"level":r, "degree":n, "terms":[{"label":..., "coeff":...}]}
//   SkewTableau   {"shape":outer, "inner":inner, "rows":[[entries]]}
//   MultiTableau  array of component tableaux

json to_json(const Rational& x);
json to_json(const Cyclotomic& x);
json to_json(const Poly& p);
json to_json(const RatFunc& f);
json to_json(const Partition& p);
json to_json(const MultiPartition& p);
json to_json(const SymExpansion& e);
json to_json(const SkewTableau& t);
json to_json(const MultiTableau& t);

Rational rational_from_json(const json& j);
Cyclotomic cyclotomic_from_json(const json& j, int order);
Poly poly_from_json(const json& j, int order);
RatFunc ratfunc_from_json(const json& j, int order);
Partition partition_from_json(const json& j);
MultiPartition multipartition_from_json(const json& j);

}  // namespace kostka
