#include "kostka/tableaux.hpp"

#include <algorithm>
#include <numeric>

namespace kostka {

SkewShape::SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
  if (!outer.contains(inner)) throw usage_error("SkewShape: inner not contained in outer");
}

int SkewShape::cells() const { return outer.size() - inner.size(); }

SkewShape skew_star(const SkewShape& a, const SkewShape& b) {
  const int ka = a.outer.length(), kb = b.outer.length();
  if (ka == 0) return b;
  if (kb == 0) return a;
  const int shift = b.outer.part(0);
  std::vector<int> outer, inner;
  outer.reserve(ka + kb);
  inner.reserve(ka + kb);
  for (int i = 0; i < ka; ++i) {
    outer.push_back(a.outer.part(i) + shift);
    inner.push_back(a.inner.part(i) + shift);
  }
  for (int i = 0; i < kb; ++i) {
    outer.push_back(b.outer.part(i));
    inner.push_back(b.inner.part(i));
  }
  while (!inner.empty() && inner.back() == 0) inner.pop_back();
  return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

SkewTableau::SkewTableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  const int nrows = shape_.rows();
  if (static_cast<int>(rows_.size()) != nrows) throw usage_error("SkewTableau: wrong number of rows");
  for (int i = 0; i < nrows; ++i) {
    int expect = shape_.outer.part(i) - shape_.inner.part(i);
    if (static_cast<int>(rows_[i].size()) != expect) throw usage_error("SkewTableau: wrong row length");
    for (size_t j = 0; j < rows_[i].size(); ++j) {
      if (rows_[i][j] < 1) throw usage_error("SkewTableau: entries must be positive");
      if (j > 0 && rows_[i][j] < rows_[i][j - 1]) throw usage_error("SkewTableau: row not weakly increasing");
    }
  }
  for (int i = 0; i + 1 < nrows; ++i) {
    // column strictness where rows i and i+1 overlap
    int lo = std::max(shape_.inner.part(i), shape_.inner.part(i + 1));
    int hi = std::min(shape_.outer.part(i), shape_.outer.part(i + 1));
    for (int c = lo; c < hi; ++c) {
      int above = rows_[i][c - shape_.inner.part(i)];
      int below = rows_[i + 1][c - shape_.inner.part(i + 1)];
      if (below <= above) throw usage_error("SkewTableau: column not strictly increasing");
    }
  }
}

std::vector<int> SkewTableau::weight() const {
  std::vector<int> w;
  for (const auto& row : rows_)
    for (int e : row) {
      if (static_cast<int>(w.size()) < e) w.resize(e, 0);
      w[e - 1]++;
    }
  return w;
}

std::vector<int> SkewTableau::word() const {
  std::vector<int> w;
  for (const auto& row : rows_)
    for (auto it = row.rbegin(); it != row.rend(); ++it) w.push_back(*it);
  return w;
}

MultiTableau::MultiTableau(MultiPartition shp, std::vector<SkewTableau> comps)
    : shape(std::move(shp)), components(std::move(comps)) {
  if (static_cast<int>(components.size()) != shape.level())
    throw usage_error("MultiTableau: wrong number of components");
  for (int i = 0; i < shape.level(); ++i) {
    if (!components[i].is_straight() || !(components[i].shape().outer == shape.component(i)))
      throw usage_error("MultiTableau: component shape mismatch");
  }
}

std::vector<int> MultiTableau::weight() const {
  std::vector<int> w;
  for (const auto& comp : components) {
    std::vector<int> cw = comp.weight();
    if (cw.size() > w.size()) w.resize(cw.size(), 0);
    for (size_t i = 0; i < cw.size(); ++i) w[i] += cw[i];
  }
  return w;
}

SkewTableau multi_to_skew(const MultiTableau& t) {
  SkewShape shape;
  for (const auto& comp : t.shape.components()) shape = skew_star(shape, SkewShape(comp, Partition()));
  std::vector<std::vector<int>> rows;
  rows.reserve(shape.rows());
  for (const auto& comp : t.components)
    for (const auto& row : comp.rows()) rows.push_back(row);
  return SkewTableau(shape, std::move(rows));
}

namespace {

// Backtracking enumeration over the cells of a skew shape in row-major
// order. Letters are tried in increasing order, which makes the output
// deterministic and sorted by the reading of the filling.
void enumerate_rec(const SkewShape& shape, std::vector<int>& remaining, int row, int col,
                   std::vector<std::vector<int>>& rows, std::vector<SkewTableau>& out) {
  const int nrows = shape.rows();
  while (row < nrows && col >= shape.outer.part(row)) {
    ++row;
    col = row < nrows ? shape.inner.part(row) : 0;
  }
  if (row == nrows) {
    out.emplace_back(shape, rows);
    return;
  }
  int lo = 1;
  if (col > shape.inner.part(row)) lo = std::max(lo, rows[row][col - shape.inner.part(row) - 1]);
  if (row > 0 && col >= shape.inner.part(row - 1) && col < shape.outer.part(row - 1))
    lo = std::max(lo, rows[row - 1][col - shape.inner.part(row - 1)] + 1);
  for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
    if (remaining[v - 1] == 0) continue;
    remaining[v - 1]--;
    rows[row].push_back(v);
    enumerate_rec(shape, remaining, row, col + 1, rows, out);
    rows[row].pop_back();
    remaining[v - 1]++;
  }
}

}  // namespace

std::vector<SkewTableau> enumerate_skew_sst(const SkewShape& shape, const std::vector<int>& weight) {
  for (int w : weight)
    if (w < 0) throw usage_error("enumerate_skew_sst: negative weight entry");
  long total = std::accumulate(weight.begin(), weight.end(), 0L);
  std::vector<SkewTableau> out;
  if (total != shape.cells()) return out;  // size mismatch: empty, not an error
  std::vector<int> remaining = weight;
  std::vector<std::vector<int>> rows(shape.rows());
  int row0 = 0;
  int col0 = shape.rows() > 0 ? shape.inner.part(0) : 0;
  enumerate_rec(shape, remaining, row0, col0, rows, out);
  return out;
}

std::vector<MultiTableau> enumerate_multi_sst(const MultiPartition& shape, const std::vector<int>& weight) {
  SkewShape star;
  for (const auto& comp : shape.components()) star = skew_star(star, SkewShape(comp, Partition()));
  std::vector<MultiTableau> out;
  for (const auto& t : enumerate_skew_sst(star, weight)) {
    // slice the star rows back into straight components
    std::vector<SkewTableau> comps;
    size_t at = 0;
    for (int i = 0; i < shape.level(); ++i) {
      const Partition& part = shape.component(i);
      std::vector<std::vector<int>> rows;
      for (int j = 0; j < part.length(); ++j) rows.push_back(t.rows()[at++]);
      comps.emplace_back(SkewShape(part, Partition()), std::move(rows));
    }
    out.emplace_back(shape, std::move(comps));
  }
  return out;
}

bool is_lattice(const std::vector<int>& word) {
  std::vector<int> counts;
  for (int letter : word) {
    if (letter < 1) throw usage_error("is_lattice: letters must be positive");
    if (static_cast<int>(counts.size()) < letter) counts.resize(letter, 0);
    counts[letter - 1]++;
    if (letter > 1 && counts[letter - 1] > counts[letter - 2]) return false;
  }
  return true;
}

namespace {

// Charge of a standard subword given as (position, letter) pairs in
// positional order: index of 1 is 0; the index grows by one exactly when
// the next letter sits to the left of the previous one.
long standard_charge(const std::vector<std::pair<int, int>>& subword) {
  const int K = static_cast<int>(subword.size());
  std::vector<int> pos_of(K + 1, -1);
  for (const auto& [pos, letter] : subword) pos_of[letter] = pos;
  long idx = 0, total = 0;
  for (int l = 2; l <= K; ++l) {
    if (pos_of[l] < pos_of[l - 1]) ++idx;
    total += idx;
  }
  return total;
}

}  // namespace

long charge(const std::vector<int>& word) {
  std::vector<int> counts;
  for (int letter : word) {
    if (letter < 1) throw usage_error("charge: letters must be positive");
    if (static_cast<int>(counts.size()) < letter) counts.resize(letter, 0);
    counts[letter - 1]++;
  }
  for (size_t i = 1; i < counts.size(); ++i)
    if (counts[i] > counts[i - 1]) throw usage_error("charge: weight is not a partition");

  std::vector<std::pair<int, int>> remaining;  // (original position, letter)
  for (size_t i = 0; i < word.size(); ++i) remaining.emplace_back(static_cast<int>(i), word[i]);
  long total = 0;
  while (!remaining.empty()) {
    int kmax = 0;
    for (const auto& [pos, letter] : remaining) kmax = std::max(kmax, letter);
    const int n = static_cast<int>(remaining.size());
    std::vector<bool> marked(n, false);
    // rightmost 1, then each next letter scanning leftward with wraparound
    int at = -1;
    for (int i = n - 1; i >= 0; --i)
      if (remaining[i].second == 1) {
        at = i;
        break;
      }
    if (at < 0) throw internal_error("charge: missing letter 1");
    marked[at] = true;
    for (int l = 2; l <= kmax; ++l) {
      int i = at;
      while (true) {
        i = (i - 1 + n) % n;
        if (i == at) throw internal_error("charge: missing letter in extraction");
        if (!marked[i] && remaining[i].second == l) break;
      }
      marked[i] = true;
      at = i;
    }
    std::vector<std::pair<int, int>> subword;
    std::vector<std::pair<int, int>> rest;
    for (int i = 0; i < n; ++i)
      (marked[i] ? subword : rest).push_back(remaining[i]);
    total += standard_charge(subword);
    remaining = std::move(rest);
  }
  return total;
}

namespace {

struct SlideGrid {
  std::vector<int> inner, outer;           // [inner[i], outer[i]) per row
  std::vector<std::vector<int>> cells;     // absolute columns, 0 where absent

  explicit SlideGrid(const SkewTableau& t) {
    const int nrows = t.shape().rows();
    inner.resize(nrows);
    outer.resize(nrows);
    int width = nrows > 0 ? t.shape().outer.part(0) : 0;
    cells.assign(nrows, std::vector<int>(width, 0));
    for (int i = 0; i < nrows; ++i) {
      inner[i] = t.shape().inner.part(i);
      outer[i] = t.shape().outer.part(i);
      for (int c = inner[i]; c < outer[i]; ++c) cells[i][c] = t.rows()[i][c - inner[i]];
    }
  }

  std::vector<int> corner_rows() const {
    std::vector<int> rows;
    const int nrows = static_cast<int>(cells.size());
    for (int i = 0; i < nrows; ++i) {
      if (inner[i] == 0) continue;
      int below = i + 1 < nrows ? inner[i + 1] : 0;
      if (inner[i] > below) rows.push_back(i);  // removable corner of the inner shape
    }
    return rows;
  }

  void slide_from(int row) {
    int hi = row, hj = inner[row] - 1;
    inner[row] = hj;  // the corner cell joins the region as the hole
    while (true) {
      const int nrows = static_cast<int>(cells.size());
      bool has_right = hj + 1 < outer[hi];
      bool has_below = hi + 1 < nrows && hj >= inner[hi + 1] && hj < outer[hi + 1];
      if (!has_right && !has_below) {
        outer[hi] = hj;  // hole exits at the end of its row
        return;
      }
      bool move_below;
      if (!has_right)
        move_below = true;
      else if (!has_below)
        move_below = false;
      else
        move_below = cells[hi + 1][hj] <= cells[hi][hj + 1];
      if (move_below) {
        cells[hi][hj] = cells[hi + 1][hj];
        ++hi;
      } else {
        cells[hi][hj] = cells[hi][hj + 1];
        ++hj;
      }
    }
  }

  SkewTableau to_tableau() const {
    std::vector<int> out_parts, in_parts;
    std::vector<std::vector<int>> rows;
    for (size_t i = 0; i < cells.size(); ++i) {
      if (outer[i] == 0) continue;
      out_parts.push_back(outer[i]);
      in_parts.push_back(inner[i]);
      rows.emplace_back(cells[i].begin() + inner[i], cells[i].begin() + outer[i]);
    }
    while (!in_parts.empty() && in_parts.back() == 0) in_parts.pop_back();
    return SkewTableau(SkewShape(Partition(std::move(out_parts)), Partition(std::move(in_parts))),
                       std::move(rows));
  }
};

SkewTableau rectify_impl(const SkewTableau& t, std::uint64_t* rng) {
  SlideGrid grid(t);
  while (true) {
    std::vector<int> corners = grid.corner_rows();
    if (corners.empty()) break;
    size_t pick = 0;
    if (rng) {
      *rng = *rng * 6364136223846793005ULL + 1442695040888963407ULL;
      pick = static_cast<size_t>((*rng >> 33) % corners.size());
    }
    grid.slide_from(corners[pick]);
  }
  return grid.to_tableau();
}

}  // namespace

SkewTableau rectify(const SkewTableau& t) { return rectify_impl(t, nullptr); }

SkewTableau rectify_seeded(const SkewTableau& t, std::uint64_t seed) {
  std::uint64_t state = seed ^ 0x9e3779b97f4a7c15ULL;
  return rectify_impl(t, &state);
}

ThetaResult theta(const MultiTableau& t, const Partition& pi) {
  std::vector<int> w = t.weight();
  w.resize(std::max(w.size(), static_cast<size_t>(pi.length())), 0);
  for (int i = 0; i < static_cast<int>(w.size()); ++i)
    if (w[i] != pi.part(i)) throw usage_error("theta: tableau weight differs from pi");
  SkewTableau star = multi_to_skew(t);
  ThetaResult out;
  out.lattice = is_lattice(star.word());
  out.s = rectify(star);
  out.nu = out.s.shape().outer;
  return out;
}

long charge_of(const MultiTableau& t) { return charge(rectify(multi_to_skew(t)).word()); }

long long sst0_count(const MultiPartition& la, const Partition& nu) {
  if (nu.size() != la.size()) throw usage_error("sst0_count: |nu| != n");
  long long count = 0;
  for (const auto& t : enumerate_multi_sst(la, nu.parts()))
    if (is_lattice(multi_to_skew(t).word())) ++count;
  return count;
}

Poly ls_kostka_via_charge(const Partition& la, const Partition& mu) {
  if (la.size() != mu.size()) throw usage_error("ls_kostka_via_charge: |lambda| != |mu|");
  Poly acc(1);
  for (const auto& t : enumerate_skew_sst(SkewShape(la, Partition()), mu.parts()))
    acc += Poly::t_power(1, static_cast<int>(charge(t.word())));
  return acc;
}

RatFunc thm314_rhs(const MultiPartition& la, const Partition& xi, int r) {
  if (la.level() != r) throw usage_error("thm314_rhs: level mismatch");
  if (xi.size() != la.size()) throw usage_error("thm314_rhs: |xi| != n");
  MultiPartition mu = concentrated_multipartition(xi, r);
  Poly acc(1);
  for (const auto& t : enumerate_multi_sst(la, xi.parts()))
    acc += Poly::t_power(1, r * static_cast<int>(charge_of(t)));
  long shift = mu.b_stat() - la.b_stat();
  return RatFunc(acc).times_t_power(static_cast<int>(shift));
}

}  // namespace kostka
