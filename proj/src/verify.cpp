#include "kostka/verify.hpp"

#include <atomic>
#include <functional>
#include <mutex>
#include <thread>

#include "kostka/hall.hpp"
#include "kostka/multisym.hpp"
#include "kostka/symfunc.hpp"
#include "kostka/tableaux.hpp"

namespace kostka {

namespace {

// Runs fn(i) for i in [0, count); failures land in a per-index slot so the
// reported witness is deterministic regardless of thread interleaving.
void parallel_for(long long count, int jobs, const std::function<void(long long)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (long long i = 0; i < count; ++i) fn(i);
    return;
  }
  jobs = static_cast<int>(std::min<long long>(jobs, count));
  std::atomic<long long> next{0};
  std::vector<std::thread> pool;
  std::mutex err_mutex;
  std::exception_ptr first_error;
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      while (true) {
        long long i = next.fetch_add(1);
        if (i >= count) break;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

SuiteReport finish(SuiteReport rep, const std::vector<std::string>& failures) {
  rep.checked = static_cast<long long>(failures.size());
  long long bad = 0;
  for (const auto& f : failures)
    if (!f.empty()) {
      if (rep.witness.empty()) rep.witness = f;
      ++bad;
    }
  if (bad > 0) {
    rep.ok = false;
    rep.witness += " (" + std::to_string(bad) + " failing instance" + (bad > 1 ? "s" : "") + ")";
  }
  return rep;
}

std::string pair_str(const MultiPartition& la, const MultiPartition& mu) {
  return "(" + la.str() + ", " + mu.str() + ")";
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {
      "charge-ls", "r2-polynomial", "thm314",    "cor312",      "cor315",
      "lemma39",   "prop317",       "hall-flag", "ic-positivity", "order-sensitivity"};
  return names;
}

bool is_verify_suite(const std::string& name) {
  for (const auto& s : verify_suite_names())
    if (s == name) return true;
  return false;
}

SuiteReport check_charge_ls(int n, int jobs) {
  SuiteReport rep{"charge-ls", n, 1, true, 0, ""};
  multisym_tables(n, 1);
  auto parts = partitions_of(n);
  const long long P = static_cast<long long>(parts.size());
  std::vector<std::string> failures(P * P);
  parallel_for(P * P, jobs, [&](long long idx) {
    const Partition& la = parts[idx / P];
    const Partition& mu = parts[idx % P];
    Poly from_tables = classical_kostka(la, mu);
    Poly from_charge = ls_kostka_via_charge(la, mu);
    if (!(from_tables == from_charge))
      failures[idx] = "K(" + la.str() + "," + mu.str() + "): orthogonalization " + from_tables.str() +
                      " vs charge " + from_charge.str();
  });
  return finish(rep, failures);
}

SuiteReport check_classical_triangularity(int n) {
  SuiteReport rep{"triangularity", n, 1, true, 0, ""};
  auto parts = partitions_of(n);
  std::vector<std::string> failures;
  for (const auto& la : parts)
    for (const auto& mu : parts) {
      Poly k = classical_kostka(la, mu);
      std::string fail;
      if (!dominance_le(mu, la)) {
        if (!k.is_zero()) fail = "K(" + la.str() + "," + mu.str() + ") nonzero without dominance";
      } else {
        long expect = mu.n_stat() - la.n_stat();
        if (k.is_zero() || k.degree() != expect)
          fail = "K(" + la.str() + "," + mu.str() + ") degree " + std::to_string(k.degree()) +
                 " expected " + std::to_string(expect);
        else if (!(k.leading_coeff() == Cyclotomic(1, Rational(1))))
          fail = "K(" + la.str() + "," + mu.str() + ") not monic";
      }
      failures.push_back(fail);
    }
  return finish(rep, failures);
}

SuiteReport check_r2_polynomial(int n) {
  SuiteReport rep{"r2-polynomial", n, 2, true, 0, ""};
  const auto& T = multisym_tables(n, 2);
  const int N = static_cast<int>(T.basis.size());
  std::vector<std::string> failures;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const MultiPartition& la = T.basis[i];
      const MultiPartition& mu = T.basis[j];
      std::string fail;
      if (!(T.k_minus[i][j] == T.k_plus[i][j]))
        fail = "K^- != K^+ at " + pair_str(la, mu);
      else if (!(T.hl_minus[i][j] == T.hl_plus[i][j]))
        fail = "P^- != P^+ at " + pair_str(la, mu);
      else {
        auto p = T.k_minus[i][j].as_poly();
        if (!p)
          fail = "K not polynomial at " + pair_str(la, mu);
        else if (!p->has_integer_coeffs())
          fail = "K not integral at " + pair_str(la, mu);
        else if (!p->is_zero()) {
          long expect = mu.a_stat() - la.a_stat();
          if (p->degree() != expect || !(p->leading_coeff() == Cyclotomic(2, Rational(1))))
            fail = "K at " + pair_str(la, mu) + " not monic of degree " + std::to_string(expect) +
                   ": " + p->str();
        }
      }
      failures.push_back(fail);
    }
  return finish(rep, failures);
}

SuiteReport check_biorthogonality(int n, int r) {
  SuiteReport rep{"prop13", n, r, true, 0, ""};
  const auto& T = multisym_tables(n, r);
  const int N = static_cast<int>(T.basis.size());
  std::vector<std::string> failures;

  // Realness: every K entry fixed by zeta -> zeta^{-1}.
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      std::string fail;
      if (!(T.k_minus[i][j].conj_zeta() == T.k_minus[i][j]) ||
          !(T.k_plus[i][j].conj_zeta() == T.k_plus[i][j]))
        fail = "K entry not conjugation-fixed at " + pair_str(T.basis[i], T.basis[j]);
      failures.push_back(fail);
    }

  if (n <= 3) {
    // Direct form evaluation on the published families.
    for (int i = 0; i < N; ++i) {
      SymExpansion pm = hl_expansion(T, Sign::minus, T.basis[i]);
      for (int j = 0; j < N; ++j) {
        SymExpansion pp = hl_expansion(T, Sign::plus, T.basis[j]);
        RatFunc v = form(pm, pp);
        std::string fail;
        if (i == j && v.is_zero())
          fail = "<P^-, P^+> vanishes on the diagonal at " + T.basis[i].str();
        if (i != j && !v.is_zero())
          fail = "<P^-, P^+> nonzero at " + pair_str(T.basis[i], T.basis[j]) + ": " + v.str();
        failures.push_back(fail);
      }
    }
  } else {
    // Same statement as the matrix identity A G B^H = D, using the
    // triangular support of the families.
    std::vector<std::vector<RatFunc>> AG(N, std::vector<RatFunc>(N, RatFunc(r)));
    for (int i = 0; i < N; ++i)
      for (int k = 0; k <= i; ++k) {
        if (T.hl_minus[i][k].is_zero()) continue;
        for (int j = 0; j < N; ++j) {
          if (T.gram[k][j].is_zero()) continue;
          AG[i][j] += T.hl_minus[i][k] * T.gram[k][j];
        }
      }
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        RatFunc acc(r);
        for (int k = 0; k <= j; ++k) {
          if (AG[i][k].is_zero() || T.hl_plus[j][k].is_zero()) continue;
          acc += AG[i][k] * T.hl_plus[j][k].conj_zeta();
        }
        std::string fail;
        if (i == j && (acc.is_zero() || !(acc == T.diag[i])))
          fail = "diagonal form value mismatch at " + T.basis[i].str();
        if (i != j && !acc.is_zero())
          fail = "form not biorthogonal at " + pair_str(T.basis[i], T.basis[j]);
        failures.push_back(fail);
      }
  }
  return finish(rep, failures);
}

SuiteReport check_thm314(int n, int r, int jobs) {
  SuiteReport rep{"thm314", n, r, true, 0, ""};
  const auto& T = multisym_tables(n, r);
  auto xis = partitions_of(n);
  const long long N = static_cast<long long>(T.basis.size());
  const long long X = static_cast<long long>(xis.size());
  std::vector<std::string> failures(N * X);
  parallel_for(N * X, jobs, [&](long long idx) {
    const MultiPartition& la = T.basis[idx / X];
    const Partition& xi = xis[idx % X];
    MultiPartition mu = concentrated_multipartition(xi, r);
    RatFunc lhs = T.k_minus[T.index_of(la)][T.index_of(mu)];
    RatFunc rhs = thm314_rhs(la, xi, r).promote(r);
    if (!(lhs == rhs))
      failures[idx] = "K^-" + pair_str(la, mu) + " = " + lhs.str() + " but tableau side = " + rhs.str();
  });
  return finish(rep, failures);
}

SuiteReport check_cor315(int n, int r) {
  SuiteReport rep{"cor315", n, r, true, 0, ""};
  const auto& T = multisym_tables(n, r);
  auto xis = partitions_of(n);
  std::vector<std::string> failures;
  for (const auto& la : T.basis)
    for (const auto& xi : xis) {
      MultiPartition mu = concentrated_multipartition(xi, r);
      RatFunc k = T.k_minus[T.index_of(la)][T.index_of(mu)];
      std::string fail;
      try {
        Cyclotomic v = k.eval(Rational(1));
        long long count = static_cast<long long>(enumerate_multi_sst(la, xi.parts()).size());
        if (!(v == Cyclotomic(r, Rational(count))))
          fail = "K^-(1) at " + pair_str(la, mu) + " = " + v.str() + " but |SST| = " + std::to_string(count);
      } catch (const arith_error&) {
        fail = "K^- has a pole at t=1 for " + pair_str(la, mu);
      }
      failures.push_back(fail);
    }
  return finish(rep, failures);
}

SuiteReport check_cor312(int n, int r, int jobs) {
  SuiteReport rep{"cor312", n, r, true, 0, ""};
  auto elems = enumerate_multipartitions(n, r);
  auto nus = partitions_of(n);
  const long long N = static_cast<long long>(elems.size());
  const long long X = static_cast<long long>(nus.size());
  std::vector<std::string> failures(N * X);
  parallel_for(N * X, jobs, [&](long long idx) {
    const MultiPartition& la = elems[idx / X];
    const Partition& nu = nus[idx % X];
    long long lattice_count = sst0_count(la, nu);
    long long lr = lr_coeff(nu, la.components());
    if (lattice_count != lr)
      failures[idx] = "|SST0(" + la.str() + "," + nu.str() + ")| = " + std::to_string(lattice_count) +
                      " but LR coefficient = " + std::to_string(lr);
  });
  return finish(rep, failures);
}

SuiteReport check_lemma39(int n, int r) {
  SuiteReport rep{"lemma39", n, r, true, 0, ""};
  const auto& T = multisym_tables(n, r);
  auto xis = partitions_of(n);
  const int N = static_cast<int>(T.basis.size());

  // f^xi over factor tuples is independent of lambda; compute each once.
  std::vector<std::vector<Poly>> fcache(N, std::vector<Poly>(xis.size(), Poly(1)));
  for (int v = 0; v < N; ++v)
    for (size_t x = 0; x < xis.size(); ++x) fcache[v][x] = f_coeff(T.basis[v].components(), xis[x]);

  std::vector<std::string> failures;
  for (int i = 0; i < N; ++i) {
    const MultiPartition& la = T.basis[i];
    for (size_t x = 0; x < xis.size(); ++x) {
      const Partition& xi = xis[x];
      MultiPartition mu = concentrated_multipartition(xi, r);
      RatFunc lhs = T.k_minus[i][T.index_of(mu)];
      const int shift = static_cast<int>(mu.b_stat() - la.b_stat());

      RatFunc sum391(1);
      for (int v = 0; v < N; ++v) {
        const MultiPartition& nu = T.basis[v];
        if (!multi_comp_le(nu, la)) continue;
        RatFunc term(RatFunc(fcache[v][x]).substitute_t_power(r));
        for (int c = 0; c < r; ++c)
          term *= RatFunc(classical_kostka(la.component(c), nu.component(c)).substitute_t_power(r));
        sum391 += term;
      }
      RatFunc rhs391 = sum391.times_t_power(shift).promote(r);

      RatFunc sum392(1);
      for (const auto& eta : xis) {
        long long c = lr_coeff(eta, la.components());
        if (c == 0) continue;
        sum392 += RatFunc::constant(1, Rational(c)) *
                  RatFunc(classical_kostka(eta, xi).substitute_t_power(r));
      }
      RatFunc rhs392 = sum392.times_t_power(shift).promote(r);

      std::string fail;
      if (!(lhs == rhs391))
        fail = "(3.9.1) mismatch at " + pair_str(la, mu) + ": " + lhs.str() + " vs " + rhs391.str();
      else if (!(lhs == rhs392))
        fail = "(3.9.2) mismatch at " + pair_str(la, mu) + ": " + lhs.str() + " vs " + rhs392.str();
      failures.push_back(fail);
    }
  }
  return finish(rep, failures);
}

SuiteReport check_prop317(int n, int r) {
  SuiteReport rep{"prop317", n, r, true, 0, ""};
  auto elems = enumerate_multipartitions(n, r);
  auto xis = partitions_of(n);
  std::vector<std::string> failures;
  for (const auto& nu : elems)
    for (const auto& xi : xis) {
      MultiPartition mu = concentrated_multipartition(xi, r);
      RatFunc lhs = h_coeff(nu, mu);
      Poly g = hall_g(nu.components(), xi);
      RatFunc rhs = g.is_zero() ? RatFunc(1)
                                : RatFunc(g).substitute_t_inverse_power(r).times_t_power(
                                      static_cast<int>(mu.a_stat() - nu.a_stat()));
      if (!(lhs == rhs.promote(r)))
        failures.push_back("h" + pair_str(nu, mu) + " = " + lhs.str() + " but t-shifted Hall g = " +
                           rhs.str());
      else
        failures.push_back("");
    }
  return finish(rep, failures);
}

SuiteReport check_hall_flag(int n, int r, int jobs) {
  SuiteReport rep{"hall-flag", n, r, true, 0, ""};
  auto elems = enumerate_multipartitions(n, r);  // factor tuples
  auto xis = partitions_of(n);
  const long long N = static_cast<long long>(elems.size());
  const long long X = static_cast<long long>(xis.size());
  std::vector<std::string> failures(N * X);
  parallel_for(N * X, jobs, [&](long long idx) {
    const auto& factors = elems[idx / X].components();
    const Partition& xi = xis[idx % X];
    Poly g = hall_g(factors, xi);
    for (int q : {2, 3}) {
      Cyclotomic gv = g.eval(Rational(q));
      FlagCountInstance inst;
      inst.q = q;
      inst.xi = xi;
      inst.quotient_types = factors;
      long long fc = flag_count(inst);
      if (!(gv == Cyclotomic(1, Rational(fc)))) {
        failures[idx] = "g(" + std::to_string(q) + ") = " + gv.str() + " but flag count = " +
                        std::to_string(fc) + " for xi=" + xi.str();
        return;
      }
    }
  });
  return finish(rep, failures);
}

SuiteReport check_ic_structure(int n, int r) {
  SuiteReport rep{"ic-positivity", n, r, true, 0, ""};
  auto elems = enumerate_multipartitions(n, r);
  std::vector<std::string> failures;
  bool all_nonneg = true;
  std::string first_negative;
  for (const auto& mu : elems) {
    bool shape_ok = true;
    for (int i = 0; i + 2 < r; ++i)
      if (!mu.component(i).empty()) shape_ok = false;
    if (!shape_ok) continue;
    for (const auto& la : elems) {
      auto ic = ic_minus_candidate(la, mu);
      std::string fail;
      if (!ic) {
        fail = "IC extraction failed at " + pair_str(la, mu);
      } else {
        bool nonneg = true;
        for (int e = 0; e <= ic->degree(); ++e) {
          Cyclotomic c = ic->coeff(e);
          if (c.is_zero()) continue;
          Rational v = c.rational_value();
          if (!v.is_integer()) {
            fail = "IC not integral at " + pair_str(la, mu) + ": " + ic->str();
            break;
          }
          if (v.is_negative()) nonneg = false;
        }
        if (!nonneg) {
          all_nonneg = false;
          if (first_negative.empty())
            first_negative = "negative IC coefficient at " + pair_str(la, mu) + ": " + ic->str();
          if (r == 1 && fail.empty()) fail = first_negative;
        }
      }
      failures.push_back(fail);
    }
  }
  SuiteReport out = finish(rep, failures);
  if (out.ok && r >= 2)
    out.witness = all_nonneg ? "all IC coefficients non-negative (reported, not asserted)"
                             : first_negative + " (reported, not asserted)";
  return out;
}

SuiteReport check_order_sensitivity(int n, int r) {
  SuiteReport rep{"order-sensitivity", n, r, true, 0, ""};
  const auto& T1 = multisym_tables(n, r, OrderKind::lex_c);
  const auto& T2 = multisym_tables(n, r, OrderKind::lex_c_reversed);
  long long checked = 0, differing = 0;
  std::string first_diff;
  for (const auto& la : T1.basis)
    for (const auto& mu : T1.basis) {
      const RatFunc& a = T1.k_minus[T1.index_of(la)][T1.index_of(mu)];
      const RatFunc& b = T2.k_minus[T2.index_of(la)][T2.index_of(mu)];
      ++checked;
      if (!(a == b)) {
        ++differing;
        if (first_diff.empty())
          first_diff = "K^-" + pair_str(la, mu) + ": lex-c " + a.str() + " vs reversed " + b.str();
      }
    }
  rep.checked = checked;
  rep.witness = differing == 0
                    ? "K^- identical under lex-c and lex-c-reversed"
                    : std::to_string(differing) + " entries differ; first: " + first_diff;
  return rep;  // informational: never fails
}

std::vector<SuiteReport> run_verify_suite(const std::string& suite, const VerifyOptions& opts) {
  const int jobs = std::max(1, opts.jobs);
  auto cap_n = [&](int def) { return opts.max_n >= 0 ? opts.max_n : def; };
  auto cap_r = [&](int def) { return opts.max_r >= 1 ? opts.max_r : def; };
  std::vector<SuiteReport> out;
  if (suite == "charge-ls") {
    for (int n = 0; n <= cap_n(6); ++n) out.push_back(check_charge_ls(n, jobs));
  } else if (suite == "r2-polynomial") {
    for (int n = 0; n <= cap_n(4); ++n) out.push_back(check_r2_polynomial(n));
  } else if (suite == "thm314") {
    for (int r = 1; r <= cap_r(3); ++r)
      for (int n = 0; n <= cap_n(4); ++n) out.push_back(check_thm314(n, r, jobs));
  } else if (suite == "cor312") {
    for (int r = 1; r <= cap_r(3); ++r)
      for (int n = 0; n <= cap_n(5); ++n) out.push_back(check_cor312(n, r, jobs));
  } else if (suite == "cor315") {
    for (int r = 1; r <= cap_r(3); ++r)
      for (int n = 0; n <= cap_n(4); ++n) out.push_back(check_cor315(n, r));
  } else if (suite == "lemma39") {
    for (int r = 1; r <= cap_r(3); ++r)
      for (int n = 0; n <= cap_n(4); ++n) out.push_back(check_lemma39(n, r));
  } else if (suite == "prop317") {
    for (int r = 1; r <= cap_r(3); ++r)
      for (int n = 0; n <= cap_n(4); ++n) out.push_back(check_prop317(n, r));
  } else if (suite == "hall-flag") {
    for (int r = 1; r <= cap_r(3); ++r)
      for (int n = 0; n <= cap_n(3); ++n) out.push_back(check_hall_flag(n, r, jobs));
  } else if (suite == "ic-positivity") {
    for (int r = 1; r <= cap_r(3); ++r) {
      int def_n = r == 1 ? 5 : 4;
      for (int n = 0; n <= cap_n(def_n); ++n) out.push_back(check_ic_structure(n, r));
    }
  } else if (suite == "order-sensitivity") {
    out.push_back(check_order_sensitivity(cap_n(3), cap_r(3)));
  } else {
    throw usage_error("unknown suite '" + suite + "'");
  }
  return out;
}

}  // namespace kostka
