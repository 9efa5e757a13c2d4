#pragma once

#include <string>
#include <vector>

#include "kostka/multisym.hpp"
#include "kostka/verify.hpp"

namespace kostka {

enum class Format { text, csv, json_fmt, latex };
Format format_from_name(const std::string& name);

// Deterministic renderings: fixed traversal (descending enumeration order),
// ordered keys, exact strings. Identical inputs give identical bytes.
std::string emit_kostka_table(int n, int r, Sign sign, OrderKind kind, Format fmt,
                              bool conj_first = false);
std::string emit_tableaux_listing(const MultiPartition& shape, const std::vector<int>& weight,
                                  Format fmt);
std::string emit_verify_reports(const std::vector<SuiteReport>& reports, Format fmt);

}  // namespace kostka
