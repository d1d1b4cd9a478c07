#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "floerkit/errors.hpp"
#include "floerkit/groebner.hpp"
#include "floerkit/mumford.hpp"

using namespace floerkit;

namespace {

GradedPoly var(const TablePtr& t, std::string_view name) { return GradedPoly::generator(t, name); }
GradedPoly cst(const TablePtr& t, long c) { return GradedPoly(t, Scalar(c)); }

ExactMatrix<Scalar> diag(std::size_t n, const Scalar& c) {
  auto m = zero_matrix<Scalar>(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = c;
  return m;
}

}  // namespace

TEST_CASE("maximal ideal") {
  for (int n : {0, 1, 3}) {
    auto q = groebner(maximal_ideal(n));
    CHECK(q.dimension() == 1);
    CHECK(q.standard_monomials().size() == 1);
    CHECK(q.standard_polys()[0] == cst(q.table(), 1));
    auto spec = alpha_spectrum(q);
    REQUIRE(spec.size() == 1);
    CHECK(spec[0].exact.has_value());
    CHECK(*spec[0].exact == Scalar(0));
  }
}

TEST_CASE("model ideal spectra") {
  for (int g = 0; g <= 3; ++g)
    for (int n : {1, 3, 5}) {
      if (g == 0 && n == 1) continue;
      const int m = half_points(n);
      LambdaSequence lambda;
      auto ideal = model_q_ideal(g, n, lambda);
      auto q = groebner(ideal);
      CHECK(q.dimension() == static_cast<std::size_t>(g + m));
      CHECK(is_groebner_basis(q));
      auto spec = alpha_spectrum(q);
      REQUIRE(spec.size() == static_cast<std::size_t>(g + m));
      std::vector<long> expected;
      for (int i = 1; i <= g + m; ++i) expected.push_back(lambda(i));
      std::sort(expected.begin(), expected.end());
      for (std::size_t i = 0; i < spec.size(); ++i) {
        REQUIRE(spec[i].exact.has_value());
        CHECK(*spec[i].exact == Scalar(expected[i]));
        CHECK(spec[i].alg_mult == 1);
        CHECK(spec[i].geo_mult == 1);
      }
      auto t = q.table();
      const auto d = q.dimension();
      CHECK(mult_operator(q, var(t, "beta")) == diag(d, Scalar(2)));
      CHECK(mult_operator(q, var(t, "gamma")) == diag(d, Scalar(0)));
      CHECK(groebner(ideal.with_order(MonomialOrder::lex)).dimension() == d);

      auto top = groebner(model_top_ideal(g, n, lambda));
      CHECK(top.dimension() == 1);
      auto ts = alpha_spectrum(top);
      CHECK(*ts[0].exact == Scalar(lambda(g + m)));
    }
}

TEST_CASE("companion matrix of a small model") {
  // Q = (alpha - 1)(alpha + 3) = alpha^2 + 2 alpha - 3
  auto q = groebner(model_q_ideal(1, 3));
  ExactMatrix<Scalar> expected{{Scalar(0), Scalar(3)}, {Scalar(1), Scalar(-2)}};
  CHECK(mult_operator(q, var(q.table(), "alpha")) == expected);
  CHECK(spectral_Q(1, 3) == var(q.table(), "alpha").pow(2) + var(q.table(), "alpha") * Scalar(2) -
                                 cst(q.table(), 3));
}

TEST_CASE("nilpotent alpha") {
  auto t = GeneratorTable::subring(1);
  CommIdeal ideal(t, {var(t, "alpha").pow(2), var(t, "beta") - cst(t, 2), var(t, "gamma"),
                      var(t, "delta1")});
  auto spec = alpha_spectrum(ideal);
  REQUIRE(spec.size() == 1);
  CHECK(*spec[0].exact == Scalar(0));
  CHECK(spec[0].alg_mult == 2);
  CHECK(spec[0].geo_mult == 1);
}

TEST_CASE("complex eigenvalues") {
  ExactMatrix<Scalar> rot{{Scalar(0), Scalar(-1), Scalar(0), Scalar(0)},
                          {Scalar(1), Scalar(0), Scalar(0), Scalar(0)},
                          {Scalar(0), Scalar(0), Scalar(0), Scalar(-1)},
                          {Scalar(0), Scalar(0), Scalar(1), Scalar(0)}};
  auto spec = eigenvalues(rot);
  REQUIRE(spec.size() == 2);
  CHECK(*spec[0].exact == Scalar(Rational(0), Rational(-1)));
  CHECK(*spec[1].exact == Scalar(Rational(0), Rational(1)));
  CHECK(spec[0].alg_mult == 2);
  CHECK(spec[0].geo_mult == 2);

  // x^2 - 2: irrational roots fall back to numeric values
  ExactMatrix<Scalar> c{{Scalar(0), Scalar(2)}, {Scalar(1), Scalar(0)}};
  auto s2 = eigenvalues(c);
  REQUIRE(s2.size() == 2);
  CHECK_FALSE(s2[0].exact.has_value());
  CHECK(s2[1].value.real() == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("characteristic polynomial and square-free parts") {
  ExactMatrix<Scalar> c{{Scalar(0), Scalar(3)}, {Scalar(1), Scalar(-2)}};
  UniPoly p = characteristic_polynomial(c);
  CHECK(p == UniPoly{Scalar(-3), Scalar(2), Scalar(1)});
  // (x-1)^2 (x+2) = x^3 - 3x + 2
  auto sf = squarefree_decomposition(UniPoly{Scalar(2), Scalar(-3), Scalar(0), Scalar(1)});
  REQUIRE(sf.size() >= 2);
  CHECK(sf[0] == UniPoly{Scalar(2), Scalar(1)});
  CHECK(sf[1] == UniPoly{Scalar(-1), Scalar(1)});
}

TEST_CASE("ideal membership") {
  for (int g = 1; g <= 2; ++g) {
    const int n = 3;
    auto ideal = model_q_ideal(g, n);
    auto t = ideal.table();
    // Q * anything lies in the ideal; Q_{g,n} = P_{g-1,n} H_{g,n-2} stays consistent
    GradedPoly f = spectral_Q(g, n) * (var(t, "alpha") + cst(t, 5));
    CHECK(ideal_member(f, ideal));
    CHECK_FALSE(ideal_member(var(t, "alpha").pow(static_cast<unsigned>(g)) , ideal));
  }
  auto t = GeneratorTable::subring(1);
  CommIdeal a1(t, {var(t, "alpha") - cst(t, 1)});
  CHECK_FALSE(ideal_member(var(t, "alpha"), a1));
  CHECK(ideal_member(var(t, "alpha").pow(3) - cst(t, 1), a1));
  CommIdeal bd(t, {var(t, "beta") - cst(t, 2), var(t, "delta1")});
  CHECK(ideal_member(var(t, "beta") - cst(t, 2) + var(t, "delta1").pow(2), bd));
  CHECK_FALSE(groebner(bd).is_finite());
  CHECK_THROWS_AS(groebner(bd).dimension(), precondition_error);
}

TEST_CASE("multiplication operators compose") {
  auto q = groebner(model_q_ideal(2, 3));
  auto t = q.table();
  GradedPoly f = var(t, "alpha") + var(t, "beta");
  GradedPoly h = var(t, "alpha").pow(2) - cst(t, 3);
  CHECK(mult_operator(q, f * h) == multiply(mult_operator(q, f), mult_operator(q, h)));
  CHECK(q.normal_form(f * h) == q.normal_form(q.normal_form(f) * q.normal_form(h)));
}

TEST_CASE("input validation") {
  auto big = GeneratorTable::subring(10);  // 13 variables
  CHECK_THROWS_AS(groebner(CommIdeal(big, {GradedPoly::generator(big, "alpha")})), precondition_error);
  auto odd = GeneratorTable::algebra(1, 0, GammaMode::expanded);
  CHECK_THROWS_AS(CommIdeal(odd, {GradedPoly::generator(odd, "alpha")}), precondition_error);
  auto t = GeneratorTable::subring(0);
  CHECK_THROWS_AS(CommIdeal(t, {GradedPoly(t)}), precondition_error);
}

TEST_CASE("parse ideal") {
  auto t = GeneratorTable::subring(1);
  auto ideal = parse_ideal(t, "# comment\nalpha^2 - 1\n\nbeta - 2  # trailing\ngamma\ndelta1\n");
  CHECK(ideal.generators().size() == 4);
  auto spec = alpha_spectrum(ideal);
  REQUIRE(spec.size() == 2);
  CHECK(*spec[0].exact == Scalar(-1));
  CHECK(*spec[1].exact == Scalar(1));
}

TEST_CASE("lambda sequences") {
  LambdaSequence alt;
  CHECK(alt(1) == 1);
  CHECK(alt(2) == -3);
  CHECK(alt(3) == 5);
  CHECK(alt.negated()(1) == -1);
  CHECK(LambdaSequence::parse("positive")(2) == 3);
  CHECK(LambdaSequence::parse("negative")(1) == -1);
  auto p = LambdaSequence::parse("+,+,-");
  CHECK(p(2) == 3);
  CHECK(p(3) == -5);
  CHECK_THROWS_AS(LambdaSequence::parse("sideways"), precondition_error);
}
