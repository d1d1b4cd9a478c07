#include "floerkit/lefschetz.hpp"

#include <bit>
#include <memory>
#include <mutex>

#include "floerkit/errors.hpp"
#include "floerkit/exact_linalg.hpp"

namespace floerkit {

namespace {

using Mask = WedgeElement::Mask;

void check_genus(int g) {
  require(g >= 0 && g <= 10, "genus must lie in 0..10 for the exterior algebra");
}

// Sign of e_a ^ e_b for disjoint masks: (-1)^{#(i in a, j in b, i > j)}.
int wedge_sign(Mask a, Mask b) {
  int swaps = 0;
  while (a) {
    int i = std::countr_zero(a);
    a &= a - 1;
    swaps += std::popcount(b & ((Mask(1) << i) - 1));
  }
  return (swaps % 2) ? -1 : 1;
}

// Position (0-based) of bit i among the set bits of m.
int position(Mask m, int i) { return std::popcount(m & ((Mask(1) << i) - 1)); }

// Masks of wedge degree k over 2g indices, ascending.
std::vector<Mask> degree_masks(int g, int k) {
  std::vector<Mask> out;
  Mask limit = Mask(1) << (2 * g);
  for (Mask m = 0; m < limit; ++m)
    if (std::popcount(m) == k) out.push_back(m);
  return out;
}

// Per-genus change of basis: degree d -> (inverse matrix, column labels).
struct Decomposer {
  struct Column {
    int k;
    int j;
    WedgeElement primitive;
  };
  struct Degree {
    std::vector<Mask> masks;
    std::vector<Column> columns;
    ExactMatrix<Rational> inverse;
  };

  explicit Decomposer(int g) : g(g) {
    std::vector<std::vector<WedgeElement>> prim(static_cast<std::size_t>(g) + 1);
    for (int k = 0; k <= g; ++k) prim[k] = primitive_basis(g, k);
    WedgeElement gamma = WedgeElement::gamma_omega(g);
    for (int d = 0; d <= 2 * g; ++d) {
      Degree deg;
      deg.masks = degree_masks(g, d);
      std::map<Mask, std::size_t> row;
      for (std::size_t i = 0; i < deg.masks.size(); ++i) row[deg.masks[i]] = i;
      ExactMatrix<Rational> m = zero_matrix<Rational>(deg.masks.size(), 0);
      for (int k = d % 2; k <= g && k <= d; k += 2) {
        int j = (d - k) / 2;
        if (j > g - k) continue;
        WedgeElement gj = wedge_power(gamma, static_cast<unsigned>(j), g);
        for (const auto& p : prim[k]) {
          WedgeElement img = wedge(gj, p);
          for (auto& r : m) r.emplace_back(0);
          for (const auto& [mask, c] : img.terms()) m[row.at(mask)].back() = c;
          deg.columns.push_back({k, j, p});
        }
      }
      // Direct-sum decomposition: the column images form a basis of Lambda^d.
      deg.inverse = inverse(m);
      degrees.push_back(std::move(deg));
    }
  }

  int g;
  std::vector<Degree> degrees;
};

std::shared_ptr<const Decomposer> decomposer_for(int g) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const Decomposer>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[g];
  if (!slot) slot = std::make_shared<const Decomposer>(g);
  return slot;
}

}  // namespace

WedgeElement::WedgeElement(int g) : g_(g) { check_genus(g); }

WedgeElement WedgeElement::unit(int g) {
  WedgeElement x(g);
  x.terms_.emplace(0, Rational(1));
  return x;
}

WedgeElement WedgeElement::basis(int g, std::vector<int> indices) {
  WedgeElement x(g);
  Mask m = 0;
  int sign = 1;
  for (int i : indices) {
    require(i >= 1 && i <= 2 * g, "wedge index " + std::to_string(i) + " out of range 1.." +
                                      std::to_string(2 * g));
    Mask bit = Mask(1) << (i - 1);
    if (m & bit) return x;
    // moving e_i left past the larger indices already present
    if (std::popcount(m & ~((bit << 1) - 1)) % 2) sign = -sign;
    m |= bit;
  }
  x.terms_.emplace(m, Rational(sign));
  return x;
}

WedgeElement WedgeElement::gamma_omega(int g) {
  WedgeElement x(g);
  for (int j = 1; j <= g; ++j) x += basis(g, {j, j + g});
  return x;
}

Rational WedgeElement::coefficient(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void WedgeElement::add_term(Mask m, const Rational& c) {
  if (sgn(c) == 0) return;
  require(m < (Mask(1) << (2 * g_)), "wedge monomial outside Lambda*W");
  Rational v = c;
  v.canonicalize();
  auto [it, inserted] = terms_.try_emplace(m, v);
  if (!inserted) {
    it->second += v;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

WedgeElement WedgeElement::component(int degree) const {
  WedgeElement out(g_);
  for (const auto& [m, c] : terms_)
    if (std::popcount(m) == degree) out.terms_.emplace(m, c);
  return out;
}

int WedgeElement::max_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, std::popcount(m));
  return d;
}

WedgeElement& WedgeElement::operator+=(const WedgeElement& o) {
  require(g_ == o.g_, "wedge elements of different genus");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

WedgeElement& WedgeElement::operator-=(const WedgeElement& o) {
  require(g_ == o.g_, "wedge elements of different genus");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

WedgeElement& WedgeElement::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

WedgeElement wedge(const WedgeElement& a, const WedgeElement& b) {
  require(a.genus() == b.genus(), "wedge elements of different genus");
  WedgeElement out(a.genus());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      Rational c = ca * cb;
      if (wedge_sign(ma, mb) < 0) c = -c;
      out.add_term(ma | mb, c);
    }
  }
  return out;
}

WedgeElement wedge_power(const WedgeElement& a, unsigned e, int g) {
  WedgeElement out = WedgeElement::unit(g);
  for (unsigned i = 0; i < e; ++i) out = wedge(out, a);
  return out;
}

WedgeElement contract(const WedgeElement& x) {
  const int g = x.genus();
  WedgeElement out(g);
  for (const auto& [m, c] : x.terms()) {
    for (int j = 0; j < g; ++j) {
      Mask pair = (Mask(1) << j) | (Mask(1) << (j + g));
      if ((m & pair) != pair) continue;
      // interior product with e^{j+g} after e^j
      int s = position(m, j) + position(m, j + g) - 1;
      out.add_term(m & ~pair, (s % 2) ? Rational(-c) : c);
    }
  }
  return out;
}

long primitive_dimension(int g, int k) {
  check_genus(g);
  require(k >= 0 && k <= g, "primitive degree must satisfy 0 <= k <= g");
  Rational d = binomial(2 * g, k) - binomial(2 * g, k - 2);
  return d.get_num().get_si();
}

std::vector<WedgeElement> primitive_basis(int g, int k) {
  check_genus(g);
  require(k >= 0 && k <= g, "primitive degree must satisfy 0 <= k <= g");
  auto cols = degree_masks(g, k);
  auto rows = degree_masks(g, k - 2 < 0 ? 0 : k - 2);
  std::map<Mask, std::size_t> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
  ExactMatrix<Rational> m = zero_matrix<Rational>(k >= 2 ? rows.size() : 0, cols.size());
  if (k >= 2) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      WedgeElement e(g);
      e.add_term(cols[c], Rational(1));
      WedgeElement img = contract(e);
      for (const auto& [mask, v] : img.terms()) m[row_index.at(mask)][c] = v;
    }
  }
  std::vector<WedgeElement> out;
  for (const auto& v : nullspace(m, cols.size())) {
    WedgeElement x(g);
    for (std::size_t c = 0; c < cols.size(); ++c) x.add_term(cols[c], v[c]);
    out.push_back(std::move(x));
  }
  return out;
}

WedgeElement PrimitiveDecomposition::reconstruct() const {
  WedgeElement sum(g);
  WedgeElement gamma = WedgeElement::gamma_omega(g);
  for (std::size_t k = 0; k < parts.size(); ++k)
    for (std::size_t j = 0; j < parts[k].size(); ++j)
      if (!parts[k][j].is_zero())
        sum += wedge(wedge_power(gamma, static_cast<unsigned>(j), g), parts[k][j]);
  return sum;
}

PrimitiveDecomposition decompose(const WedgeElement& x) {
  const int g = x.genus();
  auto dec = decomposer_for(g);
  PrimitiveDecomposition out;
  out.g = g;
  out.parts.resize(static_cast<std::size_t>(g) + 1);
  for (int k = 0; k <= g; ++k) out.parts[k].assign(static_cast<std::size_t>(g - k) + 1, WedgeElement(g));
  for (int d = 0; d <= 2 * g; ++d) {
    const auto& deg = dec->degrees[d];
    std::vector<Rational> rhs(deg.masks.size(), Rational(0));
    bool any = false;
    for (std::size_t i = 0; i < deg.masks.size(); ++i) {
      rhs[i] = x.coefficient(deg.masks[i]);
      any = any || sgn(rhs[i]) != 0;
    }
    if (!any) continue;
    auto coeffs = multiply(deg.inverse, rhs);
    for (std::size_t c = 0; c < coeffs.size(); ++c) {
      if (sgn(coeffs[c]) == 0) continue;
      const auto& col = deg.columns[c];
      out.parts[col.k][col.j] += col.primitive * coeffs[c];
    }
  }
  return out;
}

}  // namespace floerkit
