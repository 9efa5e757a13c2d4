#include "kostka/partition.hpp"

#include <algorithm>
#include <numeric>

namespace kostka {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw usage_error("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw usage_error("Partition: parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::transpose() const {
  if (parts_.empty()) return {};
  std::vector<int> cols(parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) cols[j]++;
  return Partition(std::move(cols));
}

long Partition::n_stat() const {
  long acc = 0;
  for (int i = 0; i < length(); ++i) acc += static_cast<long>(i) * parts_[i];
  return acc;
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner.parts_[i] > parts_[i]) return false;
  return true;
}

std::string Partition::str() const {
  std::string out = "[";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

MultiPartition::MultiPartition(std::vector<Partition> components) : comps_(std::move(components)) {
  if (comps_.empty()) throw usage_error("MultiPartition: level must be >= 1");
  for (const auto& p : comps_) size_ += p.size();
}

int MultiPartition::max_length() const {
  int m = 0;
  for (const auto& p : comps_) m = std::max(m, p.length());
  return m;
}

MultiPartition MultiPartition::transpose() const {
  std::vector<Partition> out;
  out.reserve(comps_.size());
  for (const auto& p : comps_) out.push_back(p.transpose());
  return MultiPartition(std::move(out));
}

long MultiPartition::n_stat() const {
  long acc = 0;
  for (const auto& p : comps_) acc += p.n_stat();
  return acc;
}

long MultiPartition::b_stat() const {
  long acc = 0;
  for (int i = 0; i < level(); ++i) acc += static_cast<long>(i) * comps_[i].size();
  return acc;
}

long MultiPartition::a_stat() const { return static_cast<long>(level()) * n_stat() + b_stat(); }

std::string MultiPartition::str() const {
  std::string out = "[";
  for (int i = 0; i < level(); ++i) {
    if (i) out += ",";
    out += comps_[i].str();
  }
  return out + "]";
}

Composition composition_c(const MultiPartition& la, int m) {
  if (m < la.max_length()) throw usage_error("composition_c: m smaller than a component length");
  Composition c;
  c.reserve(static_cast<size_t>(m) * la.level());
  for (int row = 0; row < m; ++row)
    for (int k = 0; k < la.level(); ++k) c.push_back(la.component(k).part(row));
  return c;
}

bool dominance_le(const Composition& mu, const Composition& la) {
  long sum_mu = std::accumulate(mu.begin(), mu.end(), 0L);
  long sum_la = std::accumulate(la.begin(), la.end(), 0L);
  if (sum_mu != sum_la) throw usage_error("dominance: unequal total sums");
  size_t len = std::max(mu.size(), la.size());
  long pmu = 0, pla = 0;
  for (size_t i = 0; i < len; ++i) {
    pmu += i < mu.size() ? mu[i] : 0;
    pla += i < la.size() ? la[i] : 0;
    if (pla < pmu) return false;
  }
  return true;
}

bool dominance_le(const Partition& mu, const Partition& la) {
  return dominance_le(mu.parts(), la.parts());
}

namespace {
void check_compatible(const MultiPartition& a, const MultiPartition& b) {
  if (a.level() != b.level()) throw usage_error("multipartition order: levels differ");
  if (a.size() != b.size()) throw usage_error("multipartition order: sizes differ");
}
}  // namespace

bool multi_partial_le(const MultiPartition& mu, const MultiPartition& la) {
  check_compatible(mu, la);
  int m = std::max(mu.max_length(), la.max_length());
  return dominance_le(composition_c(mu, m), composition_c(la, m));
}

bool multi_comp_le(const MultiPartition& mu, const MultiPartition& la) {
  check_compatible(mu, la);
  for (int i = 0; i < la.level(); ++i)
    if (mu.component(i).size() != la.component(i).size()) return false;
  for (int i = 0; i < la.level(); ++i)
    if (!dominance_le(mu.component(i), la.component(i))) return false;
  return true;
}

Cmp total_order_cmp(const MultiPartition& a, const MultiPartition& b) {
  check_compatible(a, b);
  int m = std::max(a.max_length(), b.max_length());
  Composition ca = composition_c(a, m), cb = composition_c(b, m);
  for (size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] > cb[i]) return Cmp::greater;
    if (ca[i] < cb[i]) return Cmp::less;
  }
  return Cmp::equal;
}

OrderKind order_kind_from_name(const std::string& name) {
  if (name == "lex-c") return OrderKind::lex_c;
  if (name == "lex-c-reversed") return OrderKind::lex_c_reversed;
  throw usage_error("unknown order '" + name + "' (expected lex-c or lex-c-reversed)");
}

std::string order_kind_name(OrderKind k) {
  return k == OrderKind::lex_c ? "lex-c" : "lex-c-reversed";
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw usage_error("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  // descending parts, each at most the previous one
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(cap, remaining); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<MultiPartition> all_multipartitions(int n, int r) {
  std::vector<std::vector<Partition>> by_size(n + 1);
  for (int k = 0; k <= n; ++k) by_size[k] = partitions_of(k);
  std::vector<MultiPartition> out;
  std::vector<Partition> cur(r);
  auto rec = [&](auto&& self, int comp, int remaining) -> void {
    if (comp == r - 1) {
      for (const auto& p : by_size[remaining]) {
        cur[comp] = p;
        out.emplace_back(cur);
      }
      return;
    }
    for (int k = 0; k <= remaining; ++k)
      for (const auto& p : by_size[k]) {
        cur[comp] = p;
        self(self, comp + 1, remaining - k);
      }
  };
  rec(rec, 0, n);
  return out;
}

}  // namespace

std::vector<MultiPartition> enumerate_multipartitions(int n, int r, OrderKind kind) {
  if (n < 0 || r < 1) throw usage_error("enumerate_multipartitions: need n >= 0 and r >= 1");
  std::vector<MultiPartition> elems = all_multipartitions(n, r);
  int m = 0;
  for (const auto& e : elems) m = std::max(m, e.max_length());
  std::vector<Composition> cs;
  cs.reserve(elems.size());
  for (const auto& e : elems) cs.push_back(composition_c(e, m));

  if (kind == OrderKind::lex_c) {
    std::vector<size_t> idx(elems.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return cs[a] > cs[b]; });
    std::vector<MultiPartition> out;
    out.reserve(elems.size());
    for (size_t i : idx) out.push_back(elems[i]);
    return out;
  }

  // lex-c-reversed: a different linear extension of the same partial order,
  // built by repeatedly emitting a maximal remaining element; among the
  // currently maximal ones the lexicographically *smallest* composition wins.
  size_t N = elems.size();
  std::vector<std::vector<bool>> gt(N, std::vector<bool>(N, false));
  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; j < N; ++j)
      if (i != j) gt[i][j] = cs[i] != cs[j] && dominance_le(cs[j], cs[i]);
  std::vector<bool> used(N, false);
  std::vector<MultiPartition> out;
  out.reserve(N);
  for (size_t step = 0; step < N; ++step) {
    size_t best = N;
    for (size_t i = 0; i < N; ++i) {
      if (used[i]) continue;
      bool maximal = true;
      for (size_t j = 0; j < N && maximal; ++j)
        if (!used[j] && gt[j][i]) maximal = false;
      if (!maximal) continue;
      if (best == N || cs[i] < cs[best]) best = i;
    }
    used[best] = true;
    out.push_back(elems[best]);
  }
  return out;
}

MultiPartition concentrated_multipartition(const Partition& xi, int r) {
  std::vector<Partition> comps(r);
  comps[r - 1] = xi;
  return MultiPartition(std::move(comps));
}

}  // namespace kostka
