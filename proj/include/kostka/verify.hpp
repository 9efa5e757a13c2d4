#pragma once

#include <string>
#include <vector>

#include "kostka/partition.hpp"

namespace kostka {

struct SuiteReport {
  std::string identity;
  int n = 0, r = 0;
  bool ok = true;
  long long checked = 0;
  std::string witness;  // first failing instance, or informational notes
};

struct VerifyOptions {
  int max_n = -1;  // -1 means the suite's default scale
  int max_r = -1;
  int jobs = 1;
  OrderKind order = OrderKind::lex_c;
};

const std::vector<std::string>& verify_suite_names();
bool is_verify_suite(const std::string& name);

// Runs a named identity suite; one report per (n, r) instance. Throws
// usage_error for unknown suite names.
std::vector<SuiteReport> run_verify_suite(const std::string& suite, const VerifyOptions& opts);

// Individual identity checks, used by the suites and by the acceptance gate.
SuiteReport check_charge_ls(int n, int jobs = 1);
SuiteReport check_classical_triangularity(int n);
SuiteReport check_r2_polynomial(int n);
SuiteReport check_biorthogonality(int n, int r);
SuiteReport check_thm314(int n, int r, int jobs = 1);
SuiteReport check_cor315(int n, int r);
SuiteReport check_cor312(int n, int r, int jobs = 1);
SuiteReport check_lemma39(int n, int r);
SuiteReport check_prop317(int n, int r);
SuiteReport check_hall_flag(int n, int r, int jobs = 1);
SuiteReport check_ic_structure(int n, int r);
SuiteReport check_order_sensitivity(int n, int r);

}  // namespace kostka
