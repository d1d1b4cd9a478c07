#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "floerkit/scalar.hpp"

namespace floerkit {

enum class GammaMode {
  independent,  // gamma is its own even generator (commutative subring)
  expanded,     // gamma := sum_j psi_j psi_{j+g}
};

struct Generator {
  std::string name;    // ASCII name used by the text format
  std::string pretty;  // unicode rendering
  int degree = 0;
  bool odd = false;
  bool involution = false;  // x^2 = 1 rewrite (epsilon)
};

/// Ordered list of generators with degrees and parities.
///
/// Three families are provided:
///  - algebra(g, n, mode): alpha, beta, [gamma], delta_1..delta_n, psi_1..psi_2g, eps
///  - subring(n):          alpha, beta, gamma, delta_1..delta_n (all even)
///  - fiber_base():        alpha, beta, gamma, A, B (all even)
/// The order above is the monomial order alpha < beta < gamma < delta < psi < eps.
class GeneratorTable {
public:
  enum class Kind { algebra, subring, fiber_base };

  static std::shared_ptr<const GeneratorTable> algebra(int g, int n, GammaMode mode);
  static std::shared_ptr<const GeneratorTable> subring(int n);
  static std::shared_ptr<const GeneratorTable> fiber_base();

  Kind kind() const { return kind_; }
  int genus() const { return g_; }
  int points() const { return n_; }
  GammaMode gamma_mode() const { return mode_; }

  std::size_t size() const { return gens_.size(); }
  const Generator& operator[](std::size_t i) const { return gens_[i]; }
  std::span<const Generator> generators() const { return gens_; }

  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index(std::string_view name) const;  // throws if absent

  // delta_i and psi_j with 1-based indices, as in the usual notation.
  std::size_t delta(int i) const;
  std::size_t psi(int j) const;
  bool has_odd() const;

  friend bool operator==(const GeneratorTable& a, const GeneratorTable& b) {
    return a.kind_ == b.kind_ && a.g_ == b.g_ && a.n_ == b.n_ && a.mode_ == b.mode_;
  }

private:
  GeneratorTable(Kind kind, int g, int n, GammaMode mode);

  Kind kind_;
  int g_;
  int n_;
  GammaMode mode_;
  std::vector<Generator> gens_;
};

using TablePtr = std::shared_ptr<const GeneratorTable>;
using Exponents = std::vector<std::uint16_t>;

/// Polynomial over a GeneratorTable with exact Gaussian-rational coefficients.
///
/// Monomials are stored in canonical form: odd generators appear in ascending
/// order with exponent 0 or 1, involutive generators with exponent 0 or 1.
/// Zero coefficients are never stored.
class GradedPoly {
public:
  using Terms = std::map<Exponents, Scalar>;

  explicit GradedPoly(TablePtr table);
  GradedPoly(TablePtr table, const Scalar& c);

  static GradedPoly generator(TablePtr table, std::size_t index);
  static GradedPoly generator(TablePtr table, std::string_view name);
  // Builds c * x^e for an exponent vector; odd exponents above 1 give zero,
  // involutive exponents reduce mod 2.
  static GradedPoly monomial(TablePtr table, Exponents e, const Scalar& c = Scalar(1));

  const TablePtr& table() const { return table_; }
  const Terms& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  Scalar coefficient(const Exponents& e) const;

  // Common degree of all terms (involutive generators excluded); nullopt
  // when the polynomial is zero or mixes degrees.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const;
  // True when every term has an even number of odd generators.
  bool is_even() const;
  // Highest power of generator `index` that appears.
  int max_exponent(std::size_t index) const;

  GradedPoly& operator+=(const GradedPoly& o);
  GradedPoly& operator-=(const GradedPoly& o);
  GradedPoly& operator*=(const GradedPoly& o);
  GradedPoly& operator*=(const Scalar& c);

  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  friend GradedPoly operator*(GradedPoly a, const Scalar& c) { return a *= c; }
  friend GradedPoly operator*(const Scalar& c, GradedPoly a) { return a *= c; }
  friend GradedPoly operator-(GradedPoly a) { return a *= Scalar(-1); }
  friend bool operator==(const GradedPoly& a, const GradedPoly& b);
  friend bool operator!=(const GradedPoly& a, const GradedPoly& b) { return !(a == b); }

  GradedPoly pow(unsigned e) const;

  // Adds c * m where m is already canonical.
  void add_term(const Exponents& m, const Scalar& c);

  // Keeps only the terms for which keep(exponents) is true.
  template <class Pred>
  GradedPoly filtered(Pred keep) const {
    GradedPoly out(table_);
    for (const auto& [m, c] : terms_)
      if (keep(m)) out.terms_.emplace(m, c);
    return out;
  }

private:
  TablePtr table_;
  Terms terms_;
};

GradedPoly mul(const GradedPoly& a, const GradedPoly& b);

// Sign (+1, -1) and product monomial of m1*m2, or 0 when the product vanishes.
int multiply_monomials(const GeneratorTable& table, const Exponents& a, const Exponents& b,
                       Exponents& out);

// Ring homomorphism determined by images of the generators. Odd generators must
// map to odd elements for the result to be well defined.
GradedPoly substitute(const GradedPoly& p, std::span<const GradedPoly> images);

// delta_i -> -delta_i for i in S, alpha -> alpha + sum_{i in S} delta_i.
// S holds 1-based marked-point indices.
GradedPoly flip(std::span<const int> subset, const GradedPoly& p);

// gamma as a generator (independent mode) or sum_j psi_j psi_{j+g} (expanded mode).
GradedPoly gamma_element(const TablePtr& table);

// Maps generators by name into another table; throws if a name is missing.
GradedPoly rebase(const GradedPoly& p, const TablePtr& target);

using Assignment = std::map<std::string, std::complex<double>, std::less<>>;
std::complex<double> eval_numeric(const GradedPoly& p, const Assignment& values);

// Text format: terms "c * gen^e * ..." joined by " + "; zero is "0".
std::string to_text(const GradedPoly& p);
GradedPoly parse_poly(const TablePtr& table, std::string_view text);
// Unicode rendering, e.g. "α³ − 2αβ − γ".
std::string to_pretty(const GradedPoly& p);

}  // namespace floerkit
