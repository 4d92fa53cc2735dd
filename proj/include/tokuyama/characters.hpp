#pragma once

// Both sides of the deformed character identity
//
//   z^rho chi_lambda(z) prod_{i<j} (1 - t z_j/z_i)
//     = sum over gapless T of (-t)^flush(T) (1-t)^(seg(T)-flush(T)) z^content(T)
//
// in GL coordinates (rho = (r,...,1,0), the product runs over the N
// positive roots), Schur polynomials by tableau enumeration, and the
// bialternant determinant oracle for cross-checking them.

#include "tokuyama/core.hpp"
#include "tokuyama/laurent.hpp"
#include "tokuyama/statistics.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <random>
#include <thread>
#include <vector>

namespace tokuyama {

inline std::vector<int> rho_exponents(const Rank& rank) {
  std::vector<int> e(static_cast<std::size_t>(rank.alphabet_size()));
  for (int k = 0; k < rank.alphabet_size(); ++k) e[k] = rank.value() - k;
  return e;
}

/// Schur polynomial: sum of z^content over semistandard tableaux of the
/// partition shape with entries <= n.
inline LaurentPoly schur(const Shape& partition, int n) {
  if (partition.row_count() > n)
    throw std::invalid_argument("schur: partition has more parts than variables");
  LaurentPoly p(n);
  for_each_ssyt(partition, n, [&](const Tableau& t) { p.add_term(content(t, n), UniPoly(1)); });
  return p;
}

/// prod_{1 <= i < j <= n} (1 - t z_j / z_i): one factor per positive root.
inline LaurentPoly deformation_factor(const Rank& rank) {
  const int n = rank.alphabet_size();
  LaurentPoly p = LaurentPoly::constant(n, UniPoly(1));
  const UniPoly minus_t = -UniPoly::t();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> e(static_cast<std::size_t>(n), 0);
      e[i] = -1;
      e[j] = 1;
      LaurentPoly factor = LaurentPoly::constant(n, UniPoly(1));
      factor.add_term(std::move(e), minus_t);
      p *= factor;
    }
  return p;
}

inline LaurentPoly identity_lhs(const DominantWeight& w, const Rank& rank) {
  const int n = rank.alphabet_size();
  LaurentPoly p = LaurentPoly::monomial(rho_exponents(rank), UniPoly(1));
  p *= schur(partition_from_weight(w), n);
  p *= deformation_factor(rank);
  return p;
}

/// Accumulates coefficient(T) z^content(T) over the crystal of the shifted
/// shape.  The sum is an associative-commutative reduction, so it can be
/// sharded; exact arithmetic makes the result independent of the split.
inline LaurentPoly identity_rhs(const DominantWeight& w, const Rank& rank, int shards = 1) {
  const int n = rank.alphabet_size();
  if (shards <= 1) {
    LaurentPoly acc(n);
    for_each_ssyt(shape_from_weight(w, rank), n, [&](const Tableau& t) {
      UniPoly c = tokuyama_coefficient(t);
      if (!c.is_zero()) acc.add_term(content(t, n), std::move(c));
    });
    return acc;
  }
  const std::vector<Tableau> tabs = enumerate_ssyt(shape_from_weight(w, rank), n);
  const std::size_t count = tabs.size();
  const std::size_t nshards = std::min<std::size_t>(static_cast<std::size_t>(shards),
                                                    std::max<std::size_t>(count, 1));
  std::vector<LaurentPoly> partial(nshards, LaurentPoly(n));
  std::vector<std::thread> workers;
  for (std::size_t s = 0; s < nshards; ++s)
    workers.emplace_back([&, s] {
      const std::size_t lo = count * s / nshards;
      const std::size_t hi = count * (s + 1) / nshards;
      for (std::size_t k = lo; k < hi; ++k) {
        UniPoly c = tokuyama_coefficient(tabs[k]);
        if (!c.is_zero()) partial[s].add_term(content(tabs[k], n), std::move(c));
      }
    });
  for (auto& th : workers) th.join();
  LaurentPoly acc(n);
  for (auto& p : partial) acc += p;
  return acc;
}

struct VerificationMismatch {
  std::vector<int> exponent;
  UniPoly lhs_coeff;
  UniPoly rhs_coeff;
  bool operator==(const VerificationMismatch&) const = default;
};

struct VerificationReport {
  int rank = 0;
  std::vector<int> lambda;  // fundamental weight coefficients
  std::vector<int> shape;   // the shifted shape
  Int tableau_count;
  std::size_t lhs_terms = 0;
  std::size_t rhs_terms = 0;
  bool equal = false;
  std::vector<VerificationMismatch> mismatches;  // empty iff equal
  double elapsed_ms = 0.0;
};

/// Exact term-by-term comparison of the two sides; inequality is reported,
/// not thrown.
inline VerificationReport verify_identity(const DominantWeight& w, const Rank& rank,
                                          int shards = 1) {
  const auto started = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.rank = rank.value();
  rep.lambda = w.coeffs();
  const Shape shape = shape_from_weight(w, rank);
  rep.shape = shape.parts();
  rep.tableau_count = dimension(shape, rank.alphabet_size());

  const LaurentPoly left = identity_lhs(w, rank);
  const LaurentPoly right = identity_rhs(w, rank, shards);
  rep.lhs_terms = left.term_count();
  rep.rhs_terms = right.term_count();

  auto li = left.terms().begin();
  auto ri = right.terms().begin();
  while (li != left.terms().end() || ri != right.terms().end()) {
    if (ri == right.terms().end() || (li != left.terms().end() && li->first < ri->first)) {
      rep.mismatches.push_back({li->first, li->second, UniPoly()});
      ++li;
    } else if (li == left.terms().end() || ri->first < li->first) {
      rep.mismatches.push_back({ri->first, UniPoly(), ri->second});
      ++ri;
    } else {
      if (li->second != ri->second) rep.mismatches.push_back({li->first, li->second, ri->second});
      ++li;
      ++ri;
    }
  }
  rep.equal = rep.mismatches.empty();
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
          .count();
  return rep;
}

/// Fraction-free Bareiss determinant of an integer matrix.
inline Int determinant(std::vector<std::vector<Int>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  Int denom = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / denom;  // exact by Bareiss
    denom = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// det(z_i^(mu_j + n - j)) / det(z_i^(n - j)) at a point with distinct
/// nonzero integer coordinates.
inline Rational schur_bialternant_at(const Shape& partition, int n,
                                     const std::vector<Int>& point) {
  if (partition.row_count() > n)
    throw std::invalid_argument("schur_bialternant_at: partition has more parts than variables");
  if (static_cast<int>(point.size()) != n)
    throw std::invalid_argument("schur_bialternant_at: point arity mismatch");
  for (int a = 0; a < n; ++a) {
    if (point[a] == 0) throw std::domain_error("schur_bialternant_at: zero coordinate");
    for (int b = a + 1; b < n; ++b)
      if (point[a] == point[b])
        throw std::domain_error("schur_bialternant_at: repeated coordinate");
  }
  auto power_matrix = [&](const std::vector<int>& exps) {
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Int p = 1;
        for (int k = 0; k < exps[j]; ++k) p *= point[i];
        m[i][j] = p;
      }
    return m;
  };
  std::vector<int> top(n, 0), bottom(n, 0);
  for (int j = 0; j < n; ++j) {
    top[j] = partition.part(j + 1) + (n - 1 - j);
    bottom[j] = n - 1 - j;
  }
  return Rational(determinant(power_matrix(top))) / Rational(determinant(power_matrix(bottom)));
}

/// Compares schur() against the bialternant ratio at seeded pseudo-random
/// integer points; coordinates are resampled until nonzero and distinct.
inline bool schur_crosscheck(const Shape& partition, int n, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("schur_crosscheck: trials must be >= 1");
  const LaurentPoly s = schur(partition, n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<Int> point;
    while (static_cast<int>(point.size()) < n) {
      const int v = dist(rng);
      if (v == 0 || std::find(point.begin(), point.end(), Int(v)) != point.end()) continue;
      point.emplace_back(v);
    }
    std::vector<Rational> z(point.begin(), point.end());
    if (s.eval(z, Rational(0)) != schur_bialternant_at(partition, n, point)) return false;
  }
  return true;
}

}  // namespace tokuyama
