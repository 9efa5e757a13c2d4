#pragma once

#include <string>
#include <vector>

#include "kostka/rational.hpp"

namespace kostka {

// Partition: weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return i >= 0 && i < length() ? parts_[i] : 0; }  // 0 beyond the last row
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  Partition transpose() const;
  long n_stat() const;  // sum of (i-1) * parts[i]
  bool contains(const Partition& inner) const;  // cellwise inclusion

  // Structural comparisons (used for map keys; not the dominance order).
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

  std::string str() const;  // "[3,1]"

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// r-tuple of partitions with total size n.
class MultiPartition {
 public:
  MultiPartition() = default;
  explicit MultiPartition(std::vector<Partition> components);

  int level() const { return static_cast<int>(comps_.size()); }
  int size() const { return size_; }
  const Partition& component(int i) const { return comps_[i]; }
  const std::vector<Partition>& components() const { return comps_; }
  int max_length() const;

  MultiPartition transpose() const;
  long n_stat() const;
  long a_stat() const;  // r*n_stat + b_stat
  long b_stat() const;  // sum of (i-1) * |component i|

  friend bool operator==(const MultiPartition& a, const MultiPartition& b) { return a.comps_ == b.comps_; }
  friend bool operator!=(const MultiPartition& a, const MultiPartition& b) { return !(a == b); }
  friend bool operator<(const MultiPartition& a, const MultiPartition& b) { return a.comps_ < b.comps_; }

  std::string str() const;  // "[[2,1],[],[1]]"

 private:
  std::vector<Partition> comps_;
  int size_ = 0;
};

using Composition = std::vector<int>;  // non-negative entries

// Interleaved composition (lambda^(1)_1, ..., lambda^(r)_1, lambda^(1)_2, ...),
// zero-padded to m rows. m must cover every component.
Composition composition_c(const MultiPartition& la, int m);

// Dominance on equal-sum sequences, padded to a common length.
bool dominance_le(const Composition& mu, const Composition& la);
bool dominance_le(const Partition& mu, const Partition& la);

// Partial order via dominance of interleaved compositions.
bool multi_partial_le(const MultiPartition& mu, const MultiPartition& la);
// Componentwise dominance; false when the size vectors differ.
bool multi_comp_le(const MultiPartition& mu, const MultiPartition& la);

enum class Cmp { less, equal, greater };
// Fixed total order: lexicographic on zero-padded interleaved compositions.
// A linear extension of the partial order above.
Cmp total_order_cmp(const MultiPartition& a, const MultiPartition& b);

enum class OrderKind { lex_c, lex_c_reversed };
OrderKind order_kind_from_name(const std::string& name);
std::string order_kind_name(OrderKind k);

std::vector<Partition> partitions_of(int n);  // ascending structural order, deterministic
// All of P_{n,r} sorted descending in the chosen total order.
std::vector<MultiPartition> enumerate_multipartitions(int n, int r, OrderKind kind = OrderKind::lex_c);

MultiPartition concentrated_multipartition(const Partition& xi, int r);  // (-,...,-,xi)

}  // namespace kostka
