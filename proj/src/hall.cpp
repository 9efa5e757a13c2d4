#include "kostka/hall.hpp"

#include <algorithm>
#include <numeric>

#include "kostka/symfunc.hpp"

namespace kostka {

Poly f_coeff(const std::vector<Partition>& factors, const Partition& xi) {
  const int n = xi.size();
  int total = 0;
  for (const auto& f : factors) total += f.size();
  if (total != n) throw usage_error("f_coeff: factor sizes do not sum to |xi|");

  SymExpansion prod = schur_unit(MultiPartition({Partition()}), 1);
  for (const auto& f : factors) prod = schur_product(prod, classical_hl(f));
  RatFunc acc(1);
  for (const auto& [eta, c] : prod.terms)
    acc += c * RatFunc(classical_kostka(eta.component(0), xi));
  auto p = acc.as_poly();
  if (!p || !p->has_integer_coeffs())
    throw internal_error("f coefficient is not an integer polynomial");
  return *p;
}

Poly hall_g(const std::vector<Partition>& factors, const Partition& xi) {
  Poly f = f_coeff(factors, xi);
  long nnu = 0;
  for (const auto& fac : factors) nnu += fac.n_stat();
  long shift = xi.n_stat() - nnu;
  if (f.is_zero()) return Poly(1);
  RatFunc g = RatFunc(f).substitute_t_inverse_power(1).times_t_power(static_cast<int>(shift));
  auto p = g.as_poly();
  if (!p) throw internal_error("non-polynomial Hall function");
  return *p;
}

namespace {

// ---- dense linear algebra over the prime field F_q ----

using Vec = std::vector<int>;
using Mat = std::vector<Vec>;

int norm_mod(long x, int q) {
  int v = static_cast<int>(x % q);
  return v < 0 ? v + q : v;
}

int inv_mod(int x, int q) {
  for (int y = 1; y < q; ++y)
    if (x * y % q == 1) return y;
  throw internal_error("inverse of zero in F_q");
}

// Reduced row echelon form; returns the nonzero rows.
Mat rref(Mat m, int q) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return m;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i)
      if (m[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    int inv = inv_mod(m[rank][c], q);
    for (int j = 0; j < cols; ++j) m[rank][j] = norm_mod(static_cast<long>(m[rank][j]) * inv, q);
    for (int i = 0; i < rows; ++i) {
      if (i == rank || m[i][c] == 0) continue;
      int f = m[i][c];
      for (int j = 0; j < cols; ++j) m[i][j] = norm_mod(m[i][j] - static_cast<long>(f) * m[rank][j], q);
    }
    ++rank;
  }
  m.resize(rank);
  return m;
}

// Residual of v after eliminating against an rref basis.
Vec reduce_against(const Mat& basis, Vec v, int q) {
  for (const auto& row : basis) {
    int lead = -1;
    for (size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) {
        lead = static_cast<int>(j);
        break;
      }
    if (lead < 0 || v[lead] == 0) continue;
    int f = v[lead];
    for (size_t j = 0; j < v.size(); ++j) v[j] = norm_mod(v[j] - static_cast<long>(f) * row[j], q);
  }
  return v;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

bool contains_space(const Mat& big, const Mat& small, int q) {
  for (const auto& row : small)
    if (!is_zero_vec(reduce_against(big, row, q))) return false;
  return true;
}

int rank_of(Mat m, int q) { return static_cast<int>(rref(std::move(m), q).size()); }

// All subspaces of F_q^n of dimension d, each once, as canonical rref bases.
std::vector<Mat> subspaces_of_dim(int n, int d, int q) {
  std::vector<Mat> out;
  if (d == 0) {
    out.push_back(Mat{});
    return out;
  }
  std::vector<int> pivots(d);
  auto pick = [&](auto&& self, int at, int from) -> void {
    if (at == d) {
      // free entries: (i, j) with j > pivots[i], j not a pivot column
      std::vector<std::pair<int, int>> free_pos;
      for (int i = 0; i < d; ++i)
        for (int j = pivots[i] + 1; j < n; ++j)
          if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) free_pos.emplace_back(i, j);
      long count = 1;
      for (size_t k = 0; k < free_pos.size(); ++k) count *= q;
      for (long code = 0; code < count; ++code) {
        Mat m(d, Vec(n, 0));
        for (int i = 0; i < d; ++i) m[i][pivots[i]] = 1;
        long c = code;
        for (const auto& [i, j] : free_pos) {
          m[i][j] = static_cast<int>(c % q);
          c /= q;
        }
        out.push_back(std::move(m));
      }
      return;
    }
    for (int j = from; j <= n - (d - at); ++j) {
      pivots[at] = j;
      self(self, at + 1, j + 1);
    }
  };
  pick(pick, 0, 0);
  return out;
}

Mat nilpotent_of_type(const Partition& xi, int n) {
  // x - 1 for x unipotent in Jordan form with block sizes xi.
  Mat m(n, Vec(n, 0));
  int at = 0;
  for (int b : xi.parts()) {
    for (int i = 0; i + 1 < b; ++i) m[at + i][at + i + 1] = 1;
    at += b;
  }
  return m;
}

Vec apply(const Mat& m, const Vec& v, int q) {
  int n = static_cast<int>(v.size());
  Vec out(n, 0);
  for (int i = 0; i < n; ++i) {
    long acc = 0;
    for (int j = 0; j < n; ++j) acc += static_cast<long>(m[i][j]) * v[j];
    out[i] = norm_mod(acc, q);
  }
  return out;
}

bool is_stable(const Mat& basis, const Mat& nil, int q) {
  for (const auto& row : basis)
    if (!is_zero_vec(reduce_against(basis, apply(nil, row, q), q))) return false;
  return true;
}

// Jordan type of the map induced by nil on W / Wprev, from kernel jumps.
Partition quotient_type(const Mat& w, const Mat& wprev, const Mat& nil, int q) {
  const int d = static_cast<int>(w.size()) - static_cast<int>(wprev.size());
  if (d == 0) return Partition();
  // complement basis: rows of w independent from wprev
  Mat acc = wprev;
  Mat comp;
  for (const auto& row : w) {
    Vec res = reduce_against(rref(acc, q), row, q);
    if (is_zero_vec(res)) continue;
    comp.push_back(row);
    acc.push_back(row);
  }
  if (static_cast<int>(comp.size()) != d) throw internal_error("flag_count: bad complement");
  // matrix of the induced map in the complement coordinates: solve
  // nil * c = (wprev part) + sum coeff_k comp[k]
  const int n = static_cast<int>(nil.size());
  Mat small(d, Vec(d, 0));
  for (int col = 0; col < d; ++col) {
    Vec u = apply(nil, comp[col], q);
    // solve [wprev; comp]^T coeffs = u by augmented elimination
    Mat aug;
    for (const auto& row : wprev) aug.push_back(row);
    for (const auto& row : comp) aug.push_back(row);
    int m = static_cast<int>(aug.size());
    // transpose system: coefficients alpha with sum alpha_i aug[i] = u
    Mat sys(n, Vec(m + 1, 0));
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < m; ++k) sys[i][k] = aug[k][i];
      sys[i][m] = u[i];
    }
    sys = rref(std::move(sys), q);
    Vec alpha(m, 0);
    for (const auto& row : sys) {
      int lead = -1;
      for (int j = 0; j < m; ++j)
        if (row[j] != 0) {
          lead = j;
          break;
        }
      if (lead < 0) {
        if (row[m] != 0) throw internal_error("flag_count: vector outside subspace");
        continue;
      }
      alpha[lead] = row[m];
    }
    for (int k = 0; k < d; ++k) small[k][col] = alpha[static_cast<int>(wprev.size()) + k];
  }
  // kernel dimension jumps give the conjugate type
  std::vector<int> kerdim{0};
  Mat power(d, Vec(d, 0));
  for (int i = 0; i < d; ++i) power[i][i] = 1;
  while (kerdim.back() < d) {
    Mat next(d, Vec(d, 0));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        long acc2 = 0;
        for (int k = 0; k < d; ++k) acc2 += static_cast<long>(small[i][k]) * power[k][j];
        next[i][j] = norm_mod(acc2, q);
      }
    power = std::move(next);
    kerdim.push_back(d - rank_of(power, q));
  }
  std::vector<int> conj;
  for (size_t k = 1; k < kerdim.size(); ++k) conj.push_back(kerdim[k] - kerdim[k - 1]);
  while (!conj.empty() && conj.back() == 0) conj.pop_back();
  return Partition(std::move(conj)).transpose();
}

}  // namespace

long long flag_count(const FlagCountInstance& inst) {
  const int n = inst.xi.size();
  if (n > 3 || (inst.q != 2 && inst.q != 3)) throw usage_error("oracle scale exceeded");
  long total = 0;
  for (const auto& t : inst.quotient_types) total += t.size();
  if (total != n) throw usage_error("flag_count: quotient sizes do not sum to |xi|");

  const int q = inst.q;
  const Mat nil = nilpotent_of_type(inst.xi, n);
  std::vector<std::vector<Mat>> stable(n + 1);
  for (int d = 0; d <= n; ++d)
    for (auto& s : subspaces_of_dim(n, d, q))
      if (is_stable(s, nil, q)) stable[d].push_back(std::move(s));

  const int r = static_cast<int>(inst.quotient_types.size());
  std::vector<int> dims(r);
  int acc = 0;
  for (int i = 0; i < r; ++i) {
    acc += inst.quotient_types[i].size();
    dims[i] = acc;
  }

  long long count = 0;
  auto dfs = [&](auto&& self, int step, const Mat& prev) -> void {
    if (step == r) {
      ++count;
      return;
    }
    for (const auto& w : stable[dims[step]]) {
      if (!contains_space(w, prev, q)) continue;
      if (!(quotient_type(w, prev, nil, q) == inst.quotient_types[step])) continue;
      self(self, step + 1, w);
    }
  };
  dfs(dfs, 0, Mat{});
  return count;
}

RatFunc h_coeff(const MultiPartition& nu, const MultiPartition& mu, OrderKind kind) {
  const int n = nu.size(), r = nu.level();
  if (mu.size() != n || mu.level() != r) throw usage_error("h_coeff: mismatched n or r");
  const auto& tables = multisym_tables(n, r, kind);

  // R_nu over the multi-Schur basis: per-component classical Hall-Littlewood
  // coefficients with t -> t^r, combined across the r variable families.
  std::vector<std::vector<std::pair<Partition, RatFunc>>> comp_terms(r);
  for (int i = 0; i < r; ++i) {
    for (const auto& [la, c] : classical_hl(nu.component(i)).terms) {
      RatFunc lifted = c.substitute_t_power(r).promote(r);
      comp_terms[i].emplace_back(la.component(0), lifted);
    }
  }
  RatFunc h(r);
  const int jmu = tables.index_of(mu);
  std::vector<Partition> label(r);
  auto rec = [&](auto&& self, int i, const RatFunc& coeff) -> void {
    if (i == r) {
      int row = tables.index_of(MultiPartition(label));
      const RatFunc& k = tables.k_minus[row][jmu];
      if (!k.is_zero()) h += coeff * k;
      return;
    }
    for (const auto& [la, c] : comp_terms[i]) {
      label[i] = la;
      self(self, i + 1, coeff * c);
    }
  };
  rec(rec, 0, RatFunc::constant(r, Rational(1)));
  return h;
}

std::map<MultiPartition, Poly> cor37_g_family(const MultiPartition& mu, OrderKind kind) {
  const int n = mu.size(), r = mu.level();
  for (int i = 0; i + 2 < r; ++i)
    if (!mu.component(i).empty())
      throw usage_error("cor37_g: mu must have empty components below the top two");
  const auto& tables = multisym_tables(n, r, kind);
  const int N = static_cast<int>(tables.basis.size());

  std::vector<Poly> ic(N, Poly(1));
  for (int i = 0; i < N; ++i) {
    auto cand = ic_minus_candidate(tables.basis[i], mu, kind);
    if (!cand) throw internal_error("cor37_g: IC extraction failed for " + tables.basis[i].str());
    ic[i] = *cand;
  }

  auto kt_product = [&](const MultiPartition& la, const MultiPartition& nu) -> Poly {
    Poly prod = Poly::constant(1, Rational(1));
    for (int i = 0; i < r; ++i) {
      if (la.component(i).size() != nu.component(i).size()) return Poly(1);
      if (!dominance_le(nu.component(i), la.component(i))) return Poly(1);
      prod *= classical_kostka_modified(la.component(i), nu.component(i));
    }
    return prod;
  };

  // Ascending in the total order, which extends the componentwise order, so
  // every g on the right-hand side is already known.
  std::map<MultiPartition, Poly> g;
  for (int i = 0; i < N; ++i) {
    const MultiPartition& la = tables.basis[i];
    RatFunc rhs = RatFunc(ic[i]).times_t_power(static_cast<int>(la.n_stat()));
    for (int j = 0; j < i; ++j) {
      const MultiPartition& nu = tables.basis[j];
      if (!multi_comp_le(nu, la)) continue;
      Poly kt = kt_product(la, nu);
      if (kt.is_zero()) continue;
      rhs -= RatFunc(g.at(nu)) * RatFunc(kt);
    }
    RatFunc gl = rhs.times_t_power(-static_cast<int>(la.n_stat()));
    auto p = gl.as_poly();
    if (!p) throw internal_error("cor37_g: solution is not a polynomial for " + la.str());
    g.emplace(la, *p);
  }
  return g;
}

Poly cor37_g(const MultiPartition& nu, const MultiPartition& mu, OrderKind kind) {
  auto family = cor37_g_family(mu, kind);
  auto it = family.find(nu);
  if (it == family.end()) throw usage_error("cor37_g: nu not in P_{n,r}");
  return it->second;
}

}  // namespace kostka
