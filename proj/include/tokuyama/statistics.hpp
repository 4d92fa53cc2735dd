#pragma once

// Statistics on tableaux of strict shape: the triangular count vectors
// a(T) and b(T), the boxing/circling decorations, segments, the flush
// count, gap detection, and the resulting coefficient in Z[t] computed by
// two independent routes.

#include "tokuyama/core.hpp"
#include "tokuyama/laurent.hpp"

#include <optional>
#include <vector>

namespace tokuyama {

/// Triangular array v_{i,j}, 1 <= i <= j <= r, flattened block by block:
/// (v_{1,1},...,v_{1,r}; v_{2,2},...,v_{2,r}; ...; v_{r,r}).
class StatVector {
public:
  explicit StatVector(int rank)
      : rank_(rank), v_(static_cast<std::size_t>(rank) * (rank + 1) / 2, 0) {
    if (rank < 1) throw std::invalid_argument("StatVector: rank must be >= 1");
  }
  StatVector(int rank, std::vector<int> flat) : StatVector(rank) {
    if (flat.size() != v_.size())
      throw std::invalid_argument("StatVector: flat length does not match rank");
    v_ = std::move(flat);
  }

  int rank() const { return rank_; }
  int size() const { return static_cast<int>(v_.size()); }
  int at(int i, int j) const { return v_[index(i, j)]; }
  int& at(int i, int j) { return v_[index(i, j)]; }
  const std::vector<int>& flat() const { return v_; }
  bool operator==(const StatVector&) const = default;

private:
  int rank_;
  std::vector<int> v_;
  std::size_t index(int i, int j) const {
    if (i < 1 || i > j || j > rank_)
      throw std::out_of_range("StatVector: index outside the triangle");
    return static_cast<std::size_t>(i - 1) * (2 * rank_ - i + 2) / 2 + (j - i);
  }
};

/// Maximal run of k-colored boxes in row i, recorded only for k >= i+1
/// (a color-i run in row i is never a segment).
struct Segment {
  int row;        // 1-based
  int color;      // k
  int start_col;  // 1-based column of the leftmost box
  int length;
  bool operator==(const Segment&) const = default;
};

struct Decorations {
  StatVector a;
  StatVector b;
  std::vector<bool> circled;  // flattened like StatVector
  std::vector<bool> boxed;

  int box_count() const {
    int n = 0;
    for (bool f : boxed) n += f;
    return n;
  }
  int circled_count() const {
    int n = 0;
    for (bool f : circled) n += f;
    return n;
  }
  int non_count() const {  // neither boxed nor circled
    int n = 0;
    for (std::size_t k = 0; k < boxed.size(); ++k) n += !boxed[k] && !circled[k];
    return n;
  }
  bool is_strict() const {  // no entry carries both decorations
    for (std::size_t k = 0; k < boxed.size(); ++k)
      if (boxed[k] && circled[k]) return false;
    return true;
  }
};

namespace detail {

/// Rank of the statistics context: the tableau must fill a strict shape
/// with entries bounded by row_count + 1.
inline int stat_rank(const Tableau& t) {
  const int r = t.row_count();
  if (r < 1) throw std::invalid_argument("statistics: tableau has no rows");
  if (!t.shape().is_strict())
    throw std::invalid_argument("statistics: tableau shape must be strict");
  if (t.max_entry() > r + 1)
    throw std::invalid_argument("statistics: entries must lie in 1..r+1");
  return r;
}

}  // namespace detail

/// a_{i,j} = number of (j+1)-colored boxes in rows 1 through i.
inline StatVector a_vector(const Tableau& t) {
  const int r = detail::stat_rank(t);
  StatVector a(r);
  for (int j = 1; j <= r; ++j) {
    int running = 0;
    for (int i = 1; i <= r; ++i) {
      for (int c : t.rows()[i - 1]) running += (c == j + 1);
      if (i <= j) a.at(i, j) = running;
    }
  }
  return a;
}

/// b_{i,j} = number of boxes in row i with color >= j+1.
inline StatVector b_vector(const Tableau& t) {
  const int r = detail::stat_rank(t);
  StatVector b(r);
  for (int i = 1; i <= r; ++i)
    for (int j = i; j <= r; ++j) {
      int n = 0;
      for (int c : t.rows()[i - 1]) n += (c >= j + 1);
      b.at(i, j) = n;
    }
  return b;
}

/// Circle (i,j) when a_{i,j} = a_{i-1,j} (with a_{0,j} = 0); box (i,j) when
/// b_{i,j} >= theta_i + b_{i+1,j+1} (entries outside the triangle read 0).
inline Decorations decorations(const Tableau& t) {
  const int r = detail::stat_rank(t);
  Decorations d{a_vector(t), b_vector(t), {}, {}};
  const std::vector<int> th = theta(t.shape());
  d.circled.assign(d.a.flat().size(), false);
  d.boxed.assign(d.a.flat().size(), false);
  std::size_t k = 0;
  for (int i = 1; i <= r; ++i)
    for (int j = i; j <= r; ++j, ++k) {
      const int above = (i >= 2) ? d.a.at(i - 1, j) : 0;
      d.circled[k] = (d.a.at(i, j) == above);
      const int below = (j + 1 <= r) ? d.b.at(i + 1, j + 1) : 0;
      d.boxed[k] = (d.b.at(i, j) >= th[i - 1] + below);
    }
  return d;
}

/// All segments of the tableau, ordered by (row, start_col).  Semistandard
/// rows carry at most one run per color; this is checked, not assumed.
inline std::vector<Segment> segments(const Tableau& t) {
  detail::stat_rank(t);
  std::vector<Segment> out;
  for (int i = 1; i <= t.row_count(); ++i) {
    const auto& row = t.rows()[i - 1];
    int last_color = 0;
    std::size_t j = 0;
    while (j < row.size()) {
      const int color = row[j];
      std::size_t s = j;
      while (j < row.size() && row[j] == color) ++j;
      if (color <= last_color)
        throw std::logic_error("segments: repeated run color within a row");
      last_color = color;
      if (color >= i + 1)
        out.push_back(Segment{i, color, static_cast<int>(s) + 1, static_cast<int>(j - s)});
    }
  }
  return out;
}

inline int seg_count(const Tableau& t) { return static_cast<int>(segments(t).size()); }

/// A k-segment in row i is flush when its leftmost box shares a column with
/// the leftmost box of the next segment below: the l-segment in row i+1 for
/// the smallest l > k.  When no such l exists, it is flush when the boxes
/// from the segment's leftmost box to the end of row i (the colors >= k
/// occupy a suffix, so this count is b_{i,k-1}) number exactly theta_i.
inline bool is_flush(const Tableau& t, const Segment& s) {
  const std::vector<Segment> segs = segments(t);
  const Segment* next_below = nullptr;
  for (const Segment& o : segs)
    if (o.row == s.row + 1 && o.color > s.color && (!next_below || o.color < next_below->color))
      next_below = &o;
  if (next_below) return next_below->start_col == s.start_col;
  const std::vector<int> th = theta(t.shape());
  const int row_len = static_cast<int>(t.rows()[s.row - 1].size());
  return row_len - s.start_col + 1 == th[s.row - 1];
}

inline int flush_count(const Tableau& t) {
  int n = 0;
  for (const Segment& s : segments(t)) n += is_flush(t, s);
  return n;
}

/// Gap test over pairs 1 <= i < k <= r: (a) row i has no k-segment, and
/// (b) for l the smallest color > k with an l-segment in row i, row i+1 has
/// no p-segment for k+1 <= p <= l and that l-segment is flush.  When no
/// such l exists, (b) fails.
inline bool has_gaps(const Tableau& t) {
  const int r = detail::stat_rank(t);
  const std::vector<Segment> segs = segments(t);
  for (int i = 1; i < r; ++i) {
    for (int k = i + 1; k <= r; ++k) {
      bool k_present = false;
      const Segment* ell = nullptr;
      for (const Segment& s : segs) {
        if (s.row != i) continue;
        if (s.color == k) k_present = true;
        if (s.color > k && (!ell || s.color < ell->color)) ell = &s;
      }
      if (k_present || !ell) continue;
      bool p_below = false;
      for (const Segment& s : segs)
        if (s.row == i + 1 && s.color >= k + 1 && s.color <= ell->color) p_below = true;
      if (!p_below && is_flush(t, *ell)) return true;
    }
  }
  return false;
}

inline bool is_strict(const Tableau& t) { return decorations(t).is_strict(); }

/// (-t)^boxed (1-t)^neither expanded in Z[t].
inline UniPoly coefficient_poly(int boxed, int neither) {
  if (boxed < 0 || neither < 0)
    throw std::invalid_argument("coefficient_poly: negative exponent");
  std::vector<Int> c(static_cast<std::size_t>(boxed + neither) + 1, Int(0));
  Int binom = 1;
  for (int k = 0; k <= neither; ++k) {
    c[boxed + k] = ((boxed + k) % 2 == 0) ? binom : -binom;
    binom = binom * (neither - k) / (k + 1);
  }
  return UniPoly(std::move(c));
}

/// Coefficient via the segment statistics: zero when the tableau has gaps,
/// otherwise (-t)^flush (1-t)^(seg - flush).
inline UniPoly tokuyama_coefficient(const Tableau& t) {
  if (has_gaps(t)) return UniPoly();
  const int f = flush_count(t);
  return coefficient_poly(f, seg_count(t) - f);
}

/// Coefficient via the decorations: zero when the tableau is not strict,
/// otherwise (-t)^box (1-t)^non.
inline UniPoly tokuyama_coefficient_via_decorations(const Tableau& t) {
  const Decorations d = decorations(t);
  if (!d.is_strict()) return UniPoly();
  return coefficient_poly(d.box_count(), d.non_count());
}

}  // namespace tokuyama
