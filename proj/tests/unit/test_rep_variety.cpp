#include <doctest.h>

#include <cmath>
#include <vector>

#include "floerkit/errors.hpp"
#include "floerkit/rep_variety.hpp"

using namespace floerkit;

TEST_CASE("residual examples") {
  Su2Tuple x = Su2Tuple::identity(0, 3, -1);
  x.c = {Quat(0, 1, 0, 0), Quat(0, 0, 1, 0), Quat(0, 0, 0, -1)};
  // i * j * (-k) = 1... up to sign: i j = k, k (-k) = 1
  CHECK(residual(x) == doctest::Approx(4.0));
  x.epsilon = 1;
  CHECK(residual(x) == doctest::Approx(0.0));
  for (int n : {1, 3, 5}) CHECK(residual(Su2Tuple::identity(1, n, -1)) == doctest::Approx(4.0 + n));
  CHECK(residual(Su2Tuple::identity(1, 2, 1)) == doctest::Approx(2.0));
  CHECK(defining_map(Su2Tuple::identity(2, 3, 1)).size() == 7);
}

TEST_CASE("conjugation invariance") {
  Quat q(0.5, 0.5, -0.5, 0.5);
  for (std::uint64_t i = 0; i < 10; ++i) {
    Su2Tuple x = random_tuple(1, 3, -1, 11, i);
    Su2Tuple y = conjugate(x, q);
    CHECK(residual(y) == doctest::Approx(residual(x)).epsilon(1e-12));
    auto tx = trace_fingerprint(x), ty = trace_fingerprint(y);
    CHECK(tx.size() == ty.size());
    for (auto& [k, v] : tx) CHECK(ty[k] == doctest::Approx(v).epsilon(1e-12));
  }
}

TEST_CASE("flip map") {
  Su2Tuple x = random_tuple(0, 3, 1, 2, 0);
  std::vector<int> s{1, 3};
  Su2Tuple y = flip_map(x, s);
  CHECK(y.epsilon == 1);
  CHECK(y.c[0].coeffs().isApprox(-x.c[0].coeffs()));
  CHECK(y.c[1].coeffs().isApprox(x.c[1].coeffs()));
  CHECK(residual(y) == doctest::Approx(residual(x)));
  std::vector<int> one{2};
  CHECK(flip_map(x, one).epsilon == -1);
  Su2Tuple z = flip_map(flip_map(x, one), one);
  CHECK(z.epsilon == x.epsilon);
  CHECK(z.c[1].coeffs().isApprox(x.c[1].coeffs()));
  CHECK(flip_map(x, std::span<const int>{}).epsilon == 1);
  std::vector<int> bad{4};
  CHECK_THROWS_AS(flip_map(x, bad), precondition_error);
}

TEST_CASE("diagonal membership") {
  Su2Tuple x = Su2Tuple::identity(0, 3, 1);
  x.c = {Quat(0, 1, 0, 0), Quat(0, 1, 0, 0), Quat(0, -1, 0, 0)};
  CHECK(on_diagonal(x, 1, 2) == Diagonal::plus);
  CHECK(on_diagonal(x, 1, 3) == Diagonal::minus);
  x.c[2] = Quat(0, 0, 1, 0);
  CHECK(on_diagonal(x, 1, 3) == Diagonal::neither);
  CHECK(to_string(Diagonal::plus) == "plus");
}

TEST_CASE("analytic and numeric Jacobians agree") {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {1, 3}, {2, 1}}) {
    Su2Tuple x = random_tuple(g, n, 1, 5, 0);
    Eigen::MatrixXd a = analytic_jacobian(x), b = numeric_jacobian(x);
    CHECK(a.rows() == 4 + n);
    CHECK(a.cols() == 3 * (2 * g + n));
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("solver and local dimension") {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {1, 3}, {0, 5}}) {
    auto r = solve(g, n, -1, 1);
    CHECK(r.report.converged);
    CHECK(r.report.residual < 1e-20);
    REQUIRE(r.report.quotient_dim.has_value());
    CHECK(*r.report.quotient_dim == expected_quotient_dim(g, n));
  }
  // determinism
  auto a = solve(1, 3, 1, 42), b = solve(1, 3, 1, 42);
  CHECK(a.report.residual == b.report.residual);
  CHECK(a.report.traces == b.report.traces);
  CHECK_THROWS_AS(local_dimension(random_tuple(1, 3, 1, 3, 0)), precondition_error);
}

TEST_CASE("expected dimension identity") {
  for (int g = 0; g <= 5; ++g)
    for (int n = 1; n <= 9; ++n) CHECK(expected_quotient_dim(g, n) == 6 * g + 2 * n - 6);
}
