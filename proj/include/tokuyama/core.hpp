#pragma once

// Shapes, dominant weights and semistandard Young tableaux: validation,
// exhaustive enumeration in row-major lexicographic order, and exact
// counting via the hook-content formula.

#include "tokuyama/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tokuyama {

/// Rank r of the type-A root system; tableau entries live in {1,...,r+1}.
class Rank {
public:
  explicit Rank(int r) : r_(r) {
    if (r < 1) throw std::invalid_argument("Rank: r must be >= 1");
  }
  int value() const { return r_; }
  int alphabet_size() const { return r_ + 1; }
  int positive_roots() const { return r_ * (r_ + 1) / 2; }
  bool operator==(const Rank&) const = default;

private:
  int r_;
};

/// Dominant weight written in the basis of fundamental weights.
class DominantWeight {
public:
  explicit DominantWeight(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
      throw std::invalid_argument("DominantWeight: needs at least one coefficient");
    for (int a : coeffs_)
      if (a < 0) throw std::invalid_argument("DominantWeight: negative coefficient");
  }
  const std::vector<int>& coeffs() const { return coeffs_; }
  int rank() const { return static_cast<int>(coeffs_.size()); }
  int level() const { return std::accumulate(coeffs_.begin(), coeffs_.end(), 0); }
  bool operator==(const DominantWeight&) const = default;

private:
  std::vector<int> coeffs_;
};

/// Row lengths of a Young diagram.  Strict shapes (all parts distinct and
/// positive) are the shifted shapes carrying the tableau statistics; weak
/// shapes are ordinary partitions used for Schur enumeration.
class Shape {
public:
  static Shape strict(std::vector<int> parts) {
    if (parts.empty()) throw std::invalid_argument("Shape::strict: empty shape");
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] <= 0) throw std::invalid_argument("Shape::strict: parts must be positive");
      if (i > 0 && parts[i] >= parts[i - 1])
        throw std::invalid_argument("Shape::strict: parts must strictly decrease");
    }
    return Shape(std::move(parts));
  }

  /// Weakly decreasing parts; trailing zeros are trimmed.
  static Shape partition(std::vector<int> parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] < 0) throw std::invalid_argument("Shape::partition: negative part");
      if (i > 0 && parts[i] > parts[i - 1])
        throw std::invalid_argument("Shape::partition: parts must weakly decrease");
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Shape(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int row_count() const { return static_cast<int>(parts_.size()); }
  int box_count() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  /// 1-based row length, 0 past the last row.
  int part(int i) const {
    return (i >= 1 && i <= row_count()) ? parts_[i - 1] : 0;
  }
  bool is_strict() const {
    for (std::size_t i = 1; i < parts_.size(); ++i)
      if (parts_[i] >= parts_[i - 1]) return false;
    return parts_.empty() || parts_.back() > 0;
  }
  bool operator==(const Shape&) const = default;

private:
  explicit Shape(std::vector<int> parts) : parts_(std::move(parts)) {}
  std::vector<int> parts_;
};

/// Gap vector theta_i = l_i - l_{i+1} (with l_{r+1} = 0) of a strict shape.
inline std::vector<int> theta(const Shape& shape) {
  if (!shape.is_strict()) throw std::invalid_argument("theta: shape must be strict");
  const auto& p = shape.parts();
  std::vector<int> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    out[i] = p[i] - (i + 1 < p.size() ? p[i + 1] : 0);
  return out;
}

/// The shifted shape with parts l_i = a_i + ... + a_r + (r - i + 1).
inline Shape shape_from_weight(const DominantWeight& w, const Rank& rank) {
  if (w.rank() != rank.value())
    throw std::invalid_argument("shape_from_weight: weight length does not match rank");
  const int r = rank.value();
  std::vector<int> parts(r);
  int tail = 0;
  for (int i = r - 1; i >= 0; --i) {
    tail += w.coeffs()[i];
    parts[i] = tail + (r - i);
  }
  return Shape::strict(std::move(parts));
}

/// The partition with a_i columns of height i, i.e. parts mu_j = sum_{i>=j} a_i.
inline Shape partition_from_weight(const DominantWeight& w) {
  const int r = w.rank();
  std::vector<int> parts(r);
  int tail = 0;
  for (int i = r - 1; i >= 0; --i) {
    tail += w.coeffs()[i];
    parts[i] = tail;
  }
  return Shape::partition(std::move(parts));
}

/// First semistandardness violation of a candidate filling, or nullopt.
/// Cells are reported 1-based.
inline std::optional<std::string> semistandard_violation(
    const std::vector<std::vector<int>>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) return "row " + std::to_string(i + 1) + " is empty";
    if (i > 0 && rows[i].size() > rows[i - 1].size())
      return "row " + std::to_string(i + 1) + " is longer than row " + std::to_string(i);
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] < 1)
        return "cell (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
               "): entry " + std::to_string(rows[i][j]) + " is not a positive color";
      if (j > 0 && rows[i][j] < rows[i][j - 1])
        return "cell (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
               "): entry " + std::to_string(rows[i][j]) + " decreases along the row";
      if (i > 0 && rows[i][j] <= rows[i - 1][j])
        return "cell (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
               "): entry " + std::to_string(rows[i][j]) +
               " does not strictly increase down the column";
    }
  }
  return std::nullopt;
}

inline bool is_semistandard(const std::vector<std::vector<int>>& rows) {
  return !semistandard_violation(rows).has_value();
}

inline bool is_semistandard(const std::vector<std::vector<int>>& rows, const Shape& shape) {
  if (static_cast<int>(rows.size()) != shape.row_count()) return false;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (static_cast<int>(rows[i].size()) != shape.parts()[i]) return false;
  return is_semistandard(rows);
}

/// A semistandard filling, stored row by row.  Immutable after construction.
class Tableau {
public:
  static Tableau from_rows(std::vector<std::vector<int>> rows) {
    if (auto why = semistandard_violation(rows))
      throw std::invalid_argument("Tableau: " + *why);
    return Tableau(std::move(rows));
  }
  /// Constructs without validation; the caller guarantees semistandardness
  /// (used by the enumerator, which builds only valid fillings).
  static Tableau trusted(std::vector<std::vector<int>> rows) {
    return Tableau(std::move(rows));
  }

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  /// 1-based entry access.
  int entry(int i, int j) const { return rows_.at(i - 1).at(j - 1); }
  Shape shape() const {
    std::vector<int> parts(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) parts[i] = static_cast<int>(rows_[i].size());
    return Shape::partition(std::move(parts));
  }
  int max_entry() const {
    int m = 0;
    for (const auto& row : rows_)
      for (int c : row) m = std::max(m, c);
    return m;
  }

  bool operator==(const Tableau&) const = default;
  bool operator<(const Tableau& o) const { return rows_ < o.rows_; }

private:
  explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {}
  std::vector<std::vector<int>> rows_;
};

/// Color multiplicities (m_1,...,m_n) of a tableau.
inline std::vector<int> content(const Tableau& t, int alphabet_size) {
  std::vector<int> m(static_cast<std::size_t>(alphabet_size), 0);
  for (const auto& row : t.rows())
    for (int c : row) {
      if (c > alphabet_size)
        throw std::invalid_argument("content: entry exceeds the alphabet size");
      ++m[c - 1];
    }
  return m;
}

/// Number of semistandard fillings with entries <= max_entry, by the
/// hook-content formula.  Zero when the shape has more rows than max_entry.
inline Int dimension(const Shape& shape, int max_entry) {
  if (max_entry < shape.row_count()) return 0;
  const auto& p = shape.parts();
  std::vector<int> conj(p.empty() ? 0 : p[0], 0);
  for (int len : p)
    for (int j = 0; j < len; ++j) ++conj[j];
  Int num = 1, den = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) {
      num *= max_entry + j - static_cast<int>(i);
      den *= (p[i] - j) + (conj[j] - static_cast<int>(i)) - 1;
    }
  if (num % den != 0) throw std::logic_error("dimension: hook-content division not exact");
  return num / den;
}

/// Visits every semistandard tableau of the shape with entries <= max_entry
/// exactly once, in row-major lexicographic order on the filling (smallest
/// colors first).  The visitor receives a const Tableau&.
template <typename Visitor>
void for_each_ssyt(const Shape& shape, int max_entry, Visitor&& visit) {
  const auto& parts = shape.parts();
  const int rows = shape.row_count();
  if (max_entry < rows)
    throw std::invalid_argument("for_each_ssyt: max_entry below row count, no filling exists");
  if (rows == 0) {
    visit(Tableau::trusted({}));
    return;
  }
  std::vector<int> conj(parts[0], 0);
  for (int len : parts)
    for (int j = 0; j < len; ++j) ++conj[j];

  std::vector<std::vector<int>> cur(rows);
  for (int i = 0; i < rows; ++i) cur[i].assign(parts[i], 0);
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < parts[i]; ++j) cells.emplace_back(i, j);

  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      visit(Tableau::trusted(cur));
      return;
    }
    const auto [i, j] = cells[k];
    int lo = 1;
    if (j > 0) lo = std::max(lo, cur[i][j - 1]);
    if (i > 0) lo = std::max(lo, cur[i - 1][j] + 1);
    // leave room for the strictly increasing column below
    const int hi = max_entry - (conj[j] - 1 - i);
    for (int c = lo; c <= hi; ++c) {
      cur[i][j] = c;
      self(self, k + 1);
    }
    cur[i][j] = 0;
  };
  rec(rec, 0);
}

inline std::vector<Tableau> enumerate_ssyt(const Shape& shape, int max_entry) {
  std::vector<Tableau> out;
  for_each_ssyt(shape, max_entry, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

}  // namespace tokuyama
