#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "floerkit/scalar.hpp"

namespace floerkit {

/// Element of the exterior algebra on W = C^{2g} with basis e_1..e_{2g}.
/// A wedge monomial e_{i1} ^ ... ^ e_{ik} (i1 < ... < ik) is keyed by the bit
/// mask with bit (i-1) set for each index.
class WedgeElement {
public:
  using Mask = std::uint32_t;
  using Terms = std::map<Mask, Rational>;

  explicit WedgeElement(int g);

  static WedgeElement unit(int g);
  // e_{i1} ^ ... ^ e_{ik} for 1-based indices in any order (sign from sorting).
  static WedgeElement basis(int g, std::vector<int> indices);
  // gamma_omega = sum_j e_j ^ e_{j+g}
  static WedgeElement gamma_omega(int g);

  int genus() const { return g_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(Mask m) const;
  void add_term(Mask m, const Rational& c);

  // Homogeneous component of the given wedge degree.
  WedgeElement component(int degree) const;
  int max_degree() const;

  WedgeElement& operator+=(const WedgeElement& o);
  WedgeElement& operator-=(const WedgeElement& o);
  WedgeElement& operator*=(const Rational& c);
  friend WedgeElement operator+(WedgeElement a, const WedgeElement& b) { return a += b; }
  friend WedgeElement operator-(WedgeElement a, const WedgeElement& b) { return a -= b; }
  friend WedgeElement operator*(WedgeElement a, const Rational& c) { return a *= c; }
  friend WedgeElement operator*(const Rational& c, WedgeElement a) { return a *= c; }
  friend bool operator==(const WedgeElement& a, const WedgeElement& b) {
    return a.g_ == b.g_ && a.terms_ == b.terms_;
  }

private:
  int g_;
  Terms terms_;
};

WedgeElement wedge(const WedgeElement& a, const WedgeElement& b);
WedgeElement wedge_power(const WedgeElement& a, unsigned e, int g);

// Contraction with omega, omega(e_j, e_{j+g}) = 1; lowers degree by 2.
WedgeElement contract(const WedgeElement& x);

// C(2g,k) - C(2g,k-2)
long primitive_dimension(int g, int k);

// Basis of the kernel of the contraction on Lambda^k W, 0 <= k <= g.
std::vector<WedgeElement> primitive_basis(int g, int k);

/// x = sum_{k=0}^{g} sum_{j=0}^{g-k} gamma_omega^j ^ parts[k][j],
/// with parts[k][j] primitive of degree k.
struct PrimitiveDecomposition {
  int g = 0;
  std::vector<std::vector<WedgeElement>> parts;

  WedgeElement reconstruct() const;
};

PrimitiveDecomposition decompose(const WedgeElement& x);

}  // namespace floerkit
