#pragma once

// Raising and lowering operators on tableaux via the bracket rule, and
// crystal graph construction under a size cap.
//
// Reading word: rows bottom to top, each row left to right.  For index i,
// an i-entry contributes '+' and an (i+1)-entry '-'; adjacent "-+" pairs
// cancel iteratively (each '+' cancels the most recent pending '-').  The
// lowering operator flips the rightmost surviving '+', the raising
// operator flips the leftmost surviving '-'.

#include "tokuyama/core.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tokuyama {

namespace detail {

struct BracketState {
  std::vector<std::pair<int, int>> surviving_plus;  // 0-based (row, col), word order
  std::vector<std::pair<int, int>> pending_minus;
};

inline BracketState bracket_scan(const Tableau& t, int i) {
  if (i < 1 || i > t.row_count())
    throw std::out_of_range("crystal operator: index outside 1..r");
  BracketState st;
  const auto& rows = t.rows();
  for (int ri = static_cast<int>(rows.size()) - 1; ri >= 0; --ri)
    for (std::size_t ci = 0; ci < rows[ri].size(); ++ci) {
      const int v = rows[ri][ci];
      if (v == i) {
        if (!st.pending_minus.empty())
          st.pending_minus.pop_back();
        else
          st.surviving_plus.emplace_back(ri, static_cast<int>(ci));
      } else if (v == i + 1) {
        st.pending_minus.emplace_back(ri, static_cast<int>(ci));
      }
    }
  return st;
}

inline Tableau flip_entry(const Tableau& t, std::pair<int, int> cell, int new_value) {
  std::vector<std::vector<int>> rows = t.rows();
  rows[cell.first][cell.second] = new_value;
  return Tableau::from_rows(std::move(rows));  // validated: the image must be semistandard
}

}  // namespace detail

/// Lowering operator: turns one i into i+1, or nullopt when phi_i = 0.
inline std::optional<Tableau> apply_f(const Tableau& t, int i) {
  const auto st = detail::bracket_scan(t, i);
  if (st.surviving_plus.empty()) return std::nullopt;
  return detail::flip_entry(t, st.surviving_plus.back(), i + 1);
}

/// Raising operator, the exact inverse of apply_f where defined.
inline std::optional<Tableau> apply_e(const Tableau& t, int i) {
  const auto st = detail::bracket_scan(t, i);
  if (st.pending_minus.empty()) return std::nullopt;
  return detail::flip_entry(t, st.pending_minus.front(), i);
}

struct StringLengths {
  int epsilon;  // raising applications until null
  int phi;      // lowering applications until null
};

/// String lengths by iterated application of the operators.
inline StringLengths epsilon_phi(const Tableau& t, int i) {
  StringLengths out{0, 0};
  for (Tableau cur = t;;) {
    auto up = apply_e(cur, i);
    if (!up) break;
    cur = std::move(*up);
    ++out.epsilon;
  }
  for (Tableau cur = t;;) {
    auto down = apply_f(cur, i);
    if (!down) break;
    cur = std::move(*down);
    ++out.phi;
  }
  return out;
}

/// The crystal would need more nodes than the configured cap allows.
class SizeCapExceeded : public std::runtime_error {
public:
  SizeCapExceeded(Int required, Int cap)
      : std::runtime_error("crystal needs " + required.str() + " nodes, cap is " + cap.str() +
                           "; raise the cap to at least " + required.str()),
        required_(std::move(required)),
        cap_(std::move(cap)) {}
  const Int& required() const { return required_; }
  const Int& cap() const { return cap_; }

private:
  Int required_;
  Int cap_;
};

struct CrystalEdge {
  int source;  // node indices into CrystalGraph::nodes
  int target;
  int index;   // the i with apply_f(nodes[source], i) == nodes[target]
  bool operator==(const CrystalEdge&) const = default;
};

struct CrystalGraph {
  Shape shape;
  int rank;
  std::vector<Tableau> nodes;      // enumeration order
  std::vector<CrystalEdge> edges;  // sorted by (source, index)
};

inline CrystalGraph build_crystal(const Shape& shape, const Rank& rank,
                                  const Int& node_cap = Int(1000000)) {
  if (!shape.is_strict() || shape.row_count() != rank.value())
    throw std::invalid_argument("build_crystal: shape must be strict with exactly r rows");
  const Int dim = dimension(shape, rank.alphabet_size());
  if (dim > node_cap) throw SizeCapExceeded(dim, node_cap);

  CrystalGraph g{shape, rank.value(), enumerate_ssyt(shape, rank.alphabet_size()), {}};
  std::map<Tableau, int> index;
  for (std::size_t k = 0; k < g.nodes.size(); ++k) index.emplace(g.nodes[k], static_cast<int>(k));
  for (std::size_t k = 0; k < g.nodes.size(); ++k)
    for (int i = 1; i <= rank.value(); ++i)
      if (auto img = apply_f(g.nodes[k], i)) {
        auto it = index.find(*img);
        if (it == index.end())
          throw std::logic_error("build_crystal: operator image left the crystal");
        g.edges.push_back(CrystalEdge{static_cast<int>(k), it->second, i});
      }
  return g;
}

}  // namespace tokuyama
