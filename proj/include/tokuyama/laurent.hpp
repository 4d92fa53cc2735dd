#pragma once

// Exact polynomial arithmetic: dense univariate polynomials in the
// deformation variable t over Z, and sparse multivariate Laurent
// polynomials in z_1,...,z_n with UniPoly coefficients.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tokuyama {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense polynomial in t with Int coefficients, constant term first.
/// Canonical form: no trailing zero coefficient; zero stores nothing.
class UniPoly {
public:
  UniPoly() = default;
  UniPoly(int c) : UniPoly(Int(c)) {}
  UniPoly(Int c) {
    if (c != 0) c_.push_back(std::move(c));
  }
  explicit UniPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly t() { return UniPoly(std::vector<Int>{0, 1}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 when zero
  Int coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Int(0);
  }
  const std::vector<Int>& coeffs() const { return c_; }

  UniPoly operator-() const {
    UniPoly out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Int> prod(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(prod));
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  UniPoly pow(int e) const {
    if (e < 0) throw std::invalid_argument("UniPoly::pow: negative exponent");
    UniPoly out(1);
    for (int k = 0; k < e; ++k) out *= *this;
    return out;
  }

  /// Exact substitution t := value.
  Int at_int(const Int& value) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * value + *it;
    return acc;
  }
  Rational at(const Rational& value) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * value + Rational(*it);
    return acc;
  }

  bool operator==(const UniPoly&) const = default;

private:
  std::vector<Int> c_;
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
};

inline Rational rational_pow(const Rational& base, int e) {
  if (e == 0) return Rational(1);
  if (base == 0) throw std::domain_error("rational_pow: zero base with nonzero exponent");
  Rational acc(1);
  const int k = e < 0 ? -e : e;
  for (int q = 0; q < k; ++q) acc *= base;
  return e < 0 ? Rational(1) / acc : acc;
}

/// Sparse Laurent polynomial in z_1,...,z_n over Z[t].  Terms are keyed by
/// exponent vectors (entries may be negative) under lexicographic order,
/// which also fixes the serialization order.  Zero coefficients are never
/// stored, so equality is plain member equality.
class LaurentPoly {
public:
  using Exponent = std::vector<int>;
  using TermMap = std::map<Exponent, UniPoly>;

  explicit LaurentPoly(int arity) : arity_(arity) {
    if (arity < 0) throw std::invalid_argument("LaurentPoly: negative arity");
  }

  static LaurentPoly monomial(Exponent e, UniPoly c) {
    LaurentPoly p(static_cast<int>(e.size()));
    if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
    return p;
  }
  static LaurentPoly constant(int arity, UniPoly c) {
    return monomial(Exponent(static_cast<std::size_t>(arity), 0), std::move(c));
  }

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Coefficient of z^e (zero polynomial if absent).
  UniPoly coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? UniPoly() : it->second;
  }

  void add_term(Exponent e, UniPoly c) {
    if (static_cast<int>(e.size()) != arity_)
      throw std::invalid_argument("LaurentPoly: exponent arity mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(std::move(e), std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    require_same_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    require_same_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  LaurentPoly operator-() const {
    LaurentPoly out(arity_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.require_same_arity(b);
    LaurentPoly out(a.arity_);
    for (const auto& [e1, c1] : a.terms_)
      for (const auto& [e2, c2] : b.terms_) {
        Exponent e(a.arity_);
        for (int k = 0; k < a.arity_; ++k) e[k] = e1[k] + e2[k];
        out.add_term(std::move(e), c1 * c2);
      }
    return out;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  /// Substitute t := value; the result has constant coefficients.
  LaurentPoly specialize_t(const Int& value) const {
    LaurentPoly out(arity_);
    for (const auto& [e, c] : terms_) out.add_term(e, UniPoly(c.at_int(value)));
    return out;
  }

  /// Exact evaluation at a point with nonzero z coordinates.
  Rational eval(const std::vector<Rational>& z, const Rational& t_value) const {
    if (static_cast<int>(z.size()) != arity_)
      throw std::invalid_argument("LaurentPoly::eval: point arity mismatch");
    for (const auto& zi : z)
      if (zi == 0) throw std::domain_error("LaurentPoly::eval: zero coordinate");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
      Rational term = c.at(t_value);
      for (int k = 0; k < arity_; ++k) term *= rational_pow(z[k], e[k]);
      acc += term;
    }
    return acc;
  }

  bool operator==(const LaurentPoly&) const = default;

private:
  int arity_ = 0;
  TermMap terms_;

  void require_same_arity(const LaurentPoly& o) const {
    if (arity_ != o.arity_)
      throw std::invalid_argument("LaurentPoly: arity mismatch between operands");
  }
};

}  // namespace tokuyama
