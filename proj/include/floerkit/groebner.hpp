#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "floerkit/exact_linalg.hpp"
#include "floerkit/graded_poly.hpp"

namespace floerkit {

// Both orders rank variables as (table order with alpha moved last), so alpha
// is the smallest variable and univariate-in-alpha quotients come out in
// companion form.
enum class MonomialOrder { grevlex, lex };

inline constexpr std::size_t kMaxIdealVariables = 12;

class CommIdeal {
public:
  CommIdeal(TablePtr table, std::vector<GradedPoly> generators,
            MonomialOrder order = MonomialOrder::grevlex);

  const TablePtr& table() const { return table_; }
  const std::vector<GradedPoly>& generators() const { return generators_; }
  MonomialOrder order() const { return order_; }

  CommIdeal with_order(MonomialOrder order) const { return {table_, generators_, order}; }
  CommIdeal with_generator(GradedPoly f) const;

private:
  TablePtr table_;
  std::vector<GradedPoly> generators_;
  MonomialOrder order_;
};

/// Reduced Groebner basis together with the standard monomials of the quotient.
class QuotientBasis {
public:
  const TablePtr& table() const { return table_; }
  MonomialOrder order() const { return order_; }
  const std::vector<GradedPoly>& groebner_basis() const { return basis_; }
  bool is_finite() const { return standard_.has_value(); }
  // Throws precondition_error for an infinite-dimensional quotient.
  std::size_t dimension() const;
  const std::vector<Exponents>& standard_monomials() const;
  std::vector<GradedPoly> standard_polys() const;

  GradedPoly normal_form(const GradedPoly& f) const;
  // Coordinates of the normal form of f in the standard-monomial basis.
  std::vector<Scalar> coordinates(const GradedPoly& f) const;
  GradedPoly leading_term(const GradedPoly& f) const;

private:
  friend QuotientBasis groebner(const CommIdeal& ideal);
  TablePtr table_;
  MonomialOrder order_ = MonomialOrder::grevlex;
  std::vector<GradedPoly> basis_;
  std::optional<std::vector<Exponents>> standard_;
};

// Buchberger completion followed by inter-reduction.
QuotientBasis groebner(const CommIdeal& ideal);

// True when every S-polynomial of the basis reduces to zero.
bool is_groebner_basis(const QuotientBasis& q);

// Matrix of multiplication by f in the standard-monomial basis (column j is f * b_j).
ExactMatrix<Scalar> mult_operator(const QuotientBasis& q, const GradedPoly& f);
ExactMatrix<Scalar> mult_operator(const CommIdeal& ideal, const GradedPoly& f);

bool ideal_member(const GradedPoly& f, const QuotientBasis& q);
bool ideal_member(const GradedPoly& f, const CommIdeal& ideal);

struct Eigenvalue {
  std::complex<double> value;
  std::optional<Scalar> exact;  // set when the value was verified exactly
  int alg_mult = 0;
  int geo_mult = 0;
};

// Eigenvalues of an exact square matrix with algebraic and geometric
// multiplicities. Exact when every root of the characteristic polynomial is a
// Gaussian rational; otherwise numeric with tolerance 1e-10.
std::vector<Eigenvalue> eigenvalues(const ExactMatrix<Scalar>& m);

// Spectrum of multiplication by alpha on the quotient.
std::vector<Eigenvalue> alpha_spectrum(const QuotientBasis& q);
std::vector<Eigenvalue> alpha_spectrum(const CommIdeal& ideal);

// Univariate polynomials over Gaussian rationals, coefficients low to high.
using UniPoly = std::vector<Scalar>;
UniPoly characteristic_polynomial(const ExactMatrix<Scalar>& m);
// Square-free decomposition: result[i] is the product of the roots of
// multiplicity i+1 (monic, possibly constant 1).
std::vector<UniPoly> squarefree_decomposition(const UniPoly& f);

/// Sign pattern for lambda_i with |lambda_i| = 2i - 1.
class LambdaSequence {
public:
  // lambda_i = (-1)^{i+1} (2i - 1)
  LambdaSequence() = default;
  // Explicit signs for lambda_1, lambda_2, ...; later indices repeat the
  // alternating default.
  explicit LambdaSequence(std::vector<int> signs);
  // "alternating", "positive", "negative", or a comma list such as "+,-,-".
  static LambdaSequence parse(const std::string& spec);

  long operator()(int i) const;
  LambdaSequence negated() const;
  std::string describe() const;

private:
  std::vector<int> signs_;
  int global_ = 1;
};

// prod_{i=1}^{g+m} (alpha - lambda_i)^power in Q[alpha, beta, gamma, delta_1..delta_n];
// the empty product is 1 (in particular for g = -1 when m = 0).
GradedPoly lambda_product(int g, int n, int power, const LambdaSequence& lambda);
GradedPoly spectral_P(int g, int n, int N, const LambdaSequence& lambda = {});
GradedPoly spectral_Q(int g, int n, const LambdaSequence& lambda = {});
GradedPoly spectral_H(int g, int n, int M, const LambdaSequence& lambda = {});

// (alpha, beta, gamma, delta_1..delta_n)
CommIdeal maximal_ideal(int n);
// (beta - 2, gamma, delta_1..delta_n, Q_{g,n}(alpha))
CommIdeal model_q_ideal(int g, int n, const LambdaSequence& lambda = {});
// (alpha - lambda_{g+m}, beta - 2, delta_1..delta_n, gamma)
CommIdeal model_top_ideal(int g, int n, const LambdaSequence& lambda = {});

// Ideal file: one generator per line in the polynomial text format; '#' starts a comment.
CommIdeal parse_ideal(const TablePtr& table, const std::string& text,
                      MonomialOrder order = MonomialOrder::grevlex);

}  // namespace floerkit
