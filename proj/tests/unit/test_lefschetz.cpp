#include <doctest.h>

#include <random>

#include "floerkit/errors.hpp"
#include "floerkit/exact_linalg.hpp"
#include "floerkit/lefschetz.hpp"

using namespace floerkit;

namespace {

WedgeElement random_wedge(int g, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<WedgeElement::Mask> mask(0, (WedgeElement::Mask(1) << (2 * g)) - 1);
  WedgeElement x(g);
  for (int i = 0; i < 12; ++i) x.add_term(mask(rng), Rational(coef(rng), 1 + (i % 3)));
  return x;
}

}  // namespace

TEST_CASE("contraction examples") {
  for (int g = 1; g <= 4; ++g) {
    CHECK(contract(WedgeElement::basis(g, {1, 1 + g})) == WedgeElement::unit(g));
    CHECK(contract(WedgeElement::gamma_omega(g)) == WedgeElement::unit(g) * Rational(g));
    CHECK(contract(WedgeElement::unit(g)).is_zero());
    CHECK(contract(WedgeElement::basis(g, {1})).is_zero());
  }
  CHECK(contract(WedgeElement::basis(2, {1, 2})).is_zero());
}

TEST_CASE("basis sorting sign") {
  CHECK(WedgeElement::basis(2, {2, 1}) == WedgeElement::basis(2, {1, 2}) * Rational(-1));
  CHECK(WedgeElement::basis(2, {1, 1}).is_zero());
  CHECK_THROWS_AS(WedgeElement::basis(2, {5}), precondition_error);
}

TEST_CASE("primitive basis sizes") {
  CHECK(primitive_basis(1, 1).size() == 2);
  CHECK(primitive_basis(2, 2).size() == 5);
  CHECK(primitive_basis(2, 0).size() == 1);
  CHECK_THROWS_AS(primitive_basis(2, 3), precondition_error);
  for (int g = 0; g <= 4; ++g)
    for (int k = 0; k <= g; ++k) {
      auto basis = primitive_basis(g, k);
      CHECK(static_cast<long>(basis.size()) == primitive_dimension(g, k));
      for (const auto& p : basis) CHECK(contract(p).is_zero());
    }
}

TEST_CASE("weighted dimension identity") {
  for (int g = 0; g <= 6; ++g) {
    long sum = 0;
    for (int k = 0; k <= g; ++k) sum += (g - k + 1) * primitive_dimension(g, k);
    CHECK(sum == (1L << (2 * g)));
  }
}

TEST_CASE("gamma powers kill primitives and are injective below the top") {
  for (int g = 1; g <= 4; ++g) {
    auto gamma = WedgeElement::gamma_omega(g);
    for (int k = 0; k <= g; ++k) {
      auto basis = primitive_basis(g, k);
      auto top = wedge_power(gamma, static_cast<unsigned>(g - k), g);
      auto kill = wedge_power(gamma, static_cast<unsigned>(g - k + 1), g);
      // images of the basis under gamma^{g-k} as columns
      std::map<WedgeElement::Mask, std::size_t> rows;
      std::vector<WedgeElement> images;
      for (const auto& p : basis) {
        CHECK(wedge(kill, p).is_zero());
        images.push_back(wedge(top, p));
        for (const auto& [m, c] : images.back().terms()) rows.emplace(m, rows.size());
      }
      auto mat = zero_matrix<Rational>(rows.size(), images.size());
      for (std::size_t j = 0; j < images.size(); ++j)
        for (const auto& [m, c] : images[j].terms()) mat[rows.at(m)][j] = c;
      CHECK(rank(mat) == basis.size());
    }
  }
}

TEST_CASE("decompose examples") {
  auto d = decompose(WedgeElement::gamma_omega(1));
  CHECK(d.parts[0][1] == WedgeElement::unit(1));
  CHECK(d.parts[0][0].is_zero());

  auto e1 = WedgeElement::basis(3, {1});
  auto de = decompose(e1);
  CHECK(de.parts[1][0] == e1);

  auto x = WedgeElement::basis(2, {1, 3});
  auto dx = decompose(x);
  CHECK(dx.parts[0][1] == WedgeElement::unit(2) * Rational(1, 2));
  CHECK(contract(dx.parts[2][0]).is_zero());
  CHECK_FALSE(dx.parts[2][0].is_zero());
  CHECK(dx.reconstruct() == x);
}

TEST_CASE("decompose round trip on random elements") {
  std::mt19937_64 rng(5);
  for (int g = 0; g <= 4; ++g)
    for (int i = 0; i < 25; ++i) {
      auto x = random_wedge(g, rng);
      auto d = decompose(x);
      CHECK(d.reconstruct() == x);
      for (std::size_t k = 0; k < d.parts.size(); ++k)
        for (const auto& p : d.parts[k]) {
          CHECK(contract(p).is_zero());
          if (!p.is_zero()) CHECK(p.max_degree() == static_cast<int>(k));
        }
    }
}
