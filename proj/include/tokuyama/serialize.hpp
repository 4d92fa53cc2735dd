#pragma once

// JSON, DOT, CSV and plain-text rendering.  JSON documents use fixed key
// order and lexicographically sorted terms, so identical inputs always
// serialize byte-identically.

#include "tokuyama/characters.hpp"
#include "tokuyama/crystal.hpp"
#include "tokuyama/statistics.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <sstream>
#include <string>

namespace tokuyama {

using Json = nlohmann::ordered_json;

inline std::int64_t to_int64(const Int& v) {
  if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max())
    throw std::overflow_error("value does not fit in a 64-bit JSON number");
  return v.convert_to<std::int64_t>();
}

inline Json int_list(const std::vector<Int>& values) {
  Json out = Json::array();
  for (const Int& v : values) out.push_back(to_int64(v));
  return out;
}

// ---- tableaux ----

inline Json tableau_to_json(const Tableau& t) {
  Json out;
  out["shape"] = t.shape().parts();
  out["rows"] = t.rows();
  return out;
}

inline Tableau tableau_from_json(const Json& doc) {
  if (!doc.contains("rows")) throw std::invalid_argument("tableau JSON: missing \"rows\"");
  std::vector<std::vector<int>> rows = doc.at("rows").get<std::vector<std::vector<int>>>();
  Tableau t = Tableau::from_rows(std::move(rows));
  if (doc.contains("shape")) {
    const auto declared = doc.at("shape").get<std::vector<int>>();
    if (declared != t.shape().parts())
      throw std::invalid_argument("tableau JSON: declared shape does not match the rows");
  }
  return t;
}

/// Canonical compact id: entries comma-joined, rows '|'-joined.
inline std::string tableau_id(const Tableau& t) {
  std::string out;
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    if (i) out += '|';
    for (std::size_t j = 0; j < t.rows()[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(t.rows()[i][j]);
    }
  }
  return out;
}

/// English notation, one row per line.
inline std::string tableau_to_text(const Tableau& t) {
  std::string out;
  for (const auto& row : t.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(row[j]);
    }
    out += '\n';
  }
  return out;
}

// ---- polynomials ----

inline Json unipoly_to_json(const UniPoly& p) {
  Json out;
  out["coeffs_in_t"] = int_list(p.coeffs());
  return out;
}

inline Json laurent_to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json term;
    term["exp"] = e;
    term["coeff"] = int_list(c.coeffs());
    terms.push_back(std::move(term));
  }
  return terms;
}

inline std::string unipoly_to_string(const UniPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    const Int c = p.coeff(k);
    if (c == 0) continue;
    const Int mag = c < 0 ? Int(-c) : c;
    out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    if (k == 0) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "*";
      out += "t";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

inline std::string laurent_to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    std::string monom;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!monom.empty()) monom += "*";
      monom += "z" + std::to_string(k + 1);
      if (e[k] != 1) monom += "^" + std::to_string(e[k]);
    }
    std::string cs = unipoly_to_string(c);
    const bool simple = (c.degree() <= 0 || c.coeffs().size() == 1) &&
                        cs.find(' ') == std::string::npos;
    std::string term;
    if (monom.empty()) {
      term = simple ? cs : "(" + cs + ")";
    } else if (cs == "1") {
      term = monom;
    } else if (cs == "-1") {
      term = "-" + monom;
    } else {
      term = (simple ? cs : "(" + cs + ")") + "*" + monom;
    }
    out += out.empty() ? term : " + " + term;
  }
  return out;
}

// ---- statistic records ----

inline Json stats_record(const Tableau& t) {
  const int r = t.row_count();
  const Decorations d = decorations(t);
  Json rec;
  rec["rows"] = t.rows();
  rec["content"] = content(t, r + 1);
  rec["a"] = d.a.flat();
  rec["b"] = d.b.flat();
  rec["circled"] = d.circled;
  rec["boxed"] = d.boxed;
  rec["seg"] = seg_count(t);
  rec["flush"] = flush_count(t);
  rec["gapless"] = !has_gaps(t);
  rec["coefficient"] = unipoly_to_json(tokuyama_coefficient(t));
  return rec;
}

namespace detail {

inline std::string flag_positions(const std::vector<bool>& flags, int rank) {
  std::string out;
  std::size_t k = 0;
  for (int i = 1; i <= rank; ++i)
    for (int j = i; j <= rank; ++j, ++k)
      if (flags[k]) {
        if (!out.empty()) out += ' ';
        out += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
  return out.empty() ? "(none)" : out;
}

inline std::string triangular_string(const StatVector& v, const char* sep = "; ") {
  std::string out;
  for (int i = 1; i <= v.rank(); ++i) {
    if (i > 1) out += sep;
    for (int j = i; j <= v.rank(); ++j) {
      if (j > i) out += ",";
      out += std::to_string(v.at(i, j));
    }
  }
  return out;
}

inline std::string join_ints(const std::vector<int>& v, char sep) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(v[k]);
  }
  return out;
}

}  // namespace detail

inline std::string stats_csv_header() {
  return "rows,content,a,b,circled,boxed,seg,flush,gapless,coefficient";
}

/// One CSV line; list-valued fields use spaces and ';'/'|' so no quoting
/// is needed.
inline std::string stats_csv_row(const Tableau& t) {
  const int r = t.row_count();
  const Decorations d = decorations(t);
  std::string rows;
  for (int i = 0; i < r; ++i) {
    if (i) rows += '|';
    rows += detail::join_ints(t.rows()[i], ' ');
  }
  std::string coeff;
  for (const Int& c : tokuyama_coefficient(t).coeffs()) {
    if (!coeff.empty()) coeff += ' ';
    coeff += c.str();
  }
  std::ostringstream out;
  out << rows << ',' << detail::join_ints(content(t, r + 1), ' ') << ','
      << detail::triangular_string(d.a, ";") << ',' << detail::triangular_string(d.b, ";") << ','
      << detail::flag_positions(d.circled, r) << ',' << detail::flag_positions(d.boxed, r) << ','
      << seg_count(t) << ',' << flush_count(t) << ',' << (has_gaps(t) ? "false" : "true") << ','
      << (coeff.empty() ? "0" : coeff);
  return out.str();
}

inline std::string stats_to_text(const Tableau& t) {
  const int r = t.row_count();
  const Decorations d = decorations(t);
  std::ostringstream out;
  out << "shape: (" << detail::join_ints(t.shape().parts(), ',') << ")  theta: ("
      << detail::join_ints(theta(t.shape()), ',') << ")\n";
  out << tableau_to_text(t);
  out << "content: (" << detail::join_ints(content(t, r + 1), ',') << ")\n";
  out << "a: (" << detail::triangular_string(d.a) << ")\n";
  out << "b: (" << detail::triangular_string(d.b) << ")\n";
  out << "circled: " << detail::flag_positions(d.circled, r) << "\n";
  out << "boxed: " << detail::flag_positions(d.boxed, r) << "\n";
  out << "seg: " << seg_count(t) << "\n";
  out << "flush: " << flush_count(t) << "\n";
  out << "gapless: " << (has_gaps(t) ? "no" : "yes") << "\n";
  out << "coefficient: " << unipoly_to_string(tokuyama_coefficient(t)) << "\n";
  return out.str();
}

// ---- verification reports ----

inline Json report_to_json(const VerificationReport& rep, bool include_timing = false) {
  Json out;
  out["rank"] = rep.rank;
  out["lambda"] = rep.lambda;
  out["shape"] = rep.shape;
  out["tableau_count"] = to_int64(rep.tableau_count);
  out["lhs_terms"] = rep.lhs_terms;
  out["rhs_terms"] = rep.rhs_terms;
  out["equal"] = rep.equal;
  Json mism = Json::array();
  for (const auto& m : rep.mismatches) {
    Json entry;
    entry["exp"] = m.exponent;
    entry["lhs"] = int_list(m.lhs_coeff.coeffs());
    entry["rhs"] = int_list(m.rhs_coeff.coeffs());
    mism.push_back(std::move(entry));
  }
  out["mismatches"] = std::move(mism);
  if (include_timing) out["elapsed_ms"] = rep.elapsed_ms;
  return out;
}

inline std::string report_to_text(const VerificationReport& rep, bool include_timing = false) {
  std::ostringstream out;
  out << "r=" << rep.rank << " lambda=(" << detail::join_ints(rep.lambda, ',') << ") shape=("
      << detail::join_ints(rep.shape, ',') << ") tableaux=" << rep.tableau_count
      << " lhs_terms=" << rep.lhs_terms << " rhs_terms=" << rep.rhs_terms
      << " equal=" << (rep.equal ? "yes" : "NO");
  if (!rep.equal) out << " mismatches=" << rep.mismatches.size();
  if (include_timing) out << " (" << rep.elapsed_ms << " ms)";
  return out.str();
}

// ---- crystal graphs ----

inline Json graph_to_json(const CrystalGraph& g) {
  Json out;
  out["shape"] = g.shape.parts();
  out["rank"] = g.rank;
  Json nodes = Json::array();
  for (const Tableau& t : g.nodes) {
    Json node;
    node["id"] = tableau_id(t);
    node["rows"] = t.rows();
    node["seg"] = seg_count(t);
    node["flush"] = flush_count(t);
    node["gapless"] = !has_gaps(t);
    node["coefficient"] = unipoly_to_json(tokuyama_coefficient(t));
    nodes.push_back(std::move(node));
  }
  out["nodes"] = std::move(nodes);
  Json edges = Json::array();
  for (const CrystalEdge& e : g.edges) {
    Json edge;
    edge["source"] = e.source;
    edge["target"] = e.target;
    edge["i"] = e.index;
    edges.push_back(std::move(edge));
  }
  out["edges"] = std::move(edges);
  return out;
}

inline std::string graph_to_dot(const CrystalGraph& g) {
  std::ostringstream out;
  out << "digraph crystal {\n";
  out << "  label=\"shape (" << detail::join_ints(g.shape.parts(), ',') << "), rank " << g.rank
      << "\";\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    const Tableau& t = g.nodes[k];
    out << "  n" << k << " [label=\"";
    for (const auto& row : t.rows()) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j) out << ' ';
        out << row[j];
      }
      out << "\\n";
    }
    out << "seg=" << seg_count(t) << " flush=" << flush_count(t)
        << (has_gaps(t) ? " gaps" : " gapless") << "\\nC = "
        << unipoly_to_string(tokuyama_coefficient(t)) << "\"];\n";
  }
  for (const CrystalEdge& e : g.edges)
    out << "  n" << e.source << " -> n" << e.target << " [label=\"" << e.index << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace tokuyama
