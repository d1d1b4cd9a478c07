#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace floerkit {

using Quat = Eigen::Quaterniond;

/// Point of SU(2)^{2g+n}: B_1..B_2g, C_1..C_n as unit quaternions, with the
/// target sign of [B_1,B_{g+1}]...[B_g,B_2g] C_1...C_n.
struct Su2Tuple {
  int g = 0;
  int n = 0;
  int epsilon = 1;
  std::vector<Quat> b;
  std::vector<Quat> c;

  static Su2Tuple identity(int g, int n, int epsilon);
  std::size_t num_factors() const { return b.size() + c.size(); }
  // Factor k: B's first, then C's.
  const Quat& factor(std::size_t k) const { return k < b.size() ? b[k] : c[k - b.size()]; }
  Quat& factor(std::size_t k) { return k < b.size() ? b[k] : c[k - b.size()]; }
};

// prod_j [B_j, B_{j+g}] * prod_i C_i
Quat relator_word(const Su2Tuple& x);

// Defining map: the 4 components of (word - epsilon) followed by Re C_1..Re C_n.
Eigen::VectorXd defining_map(const Su2Tuple& x);
// |word - epsilon|^2 + sum_i (Re C_i)^2
double residual(const Su2Tuple& x);

// Derivative of the defining map along x_k -> x_k exp(v), v in R^3 per factor.
Eigen::MatrixXd analytic_jacobian(const Su2Tuple& x);
// Central differences with step h in the same tangent coordinates.
Eigen::MatrixXd numeric_jacobian(const Su2Tuple& x, double h = 1e-6);

// x_k -> x_k exp(v_k) followed by renormalization.
Su2Tuple retract(const Su2Tuple& x, const Eigen::VectorXd& v);

// Simultaneous conjugation q x q^{-1}.
Su2Tuple conjugate(const Su2Tuple& x, const Quat& q);

// C_i -> -C_i for i in S (1-based); epsilon picks up (-1)^{|S|}.
Su2Tuple flip_map(const Su2Tuple& x, std::span<const int> subset);

enum class Diagonal { plus, minus, neither };
Diagonal on_diagonal(const Su2Tuple& x, int i, int j, double tol = 1e-8);
std::string to_string(Diagonal d);

// Conjugation-invariant traces: "trB<j>", "trC<i>C<j>" (i<j).
std::map<std::string, double> trace_fingerprint(const Su2Tuple& x);

struct SolveReport {
  double residual = 0.0;
  int restarts = 0;  // restarts used before convergence
  int iterations = 0;
  bool converged = false;
  std::optional<int> jacobian_rank;  // nullopt when no clear singular-value gap
  std::optional<int> raw_nullity;
  std::optional<int> quotient_dim;   // raw_nullity - 3, odd n only
  std::vector<double> singular_values;
  std::map<std::string, double> traces;
};

struct SolveOptions {
  int max_restarts = 100;
  int max_iterations = 400;
  double target = 1e-26;    // stop once the residual is this small
  double accept = 1e-10;    // residual needed to count as a solution
};

struct SolveResult {
  Su2Tuple x;
  SolveReport report;
};

// Projected descent on (S^3)^{2g+n} with backtracking; restarts from seeded
// random points. Throws convergence_error once the restart cap is exhausted.
SolveResult solve(int g, int n, int epsilon, std::uint64_t seed, const SolveOptions& opts = {});

// Rank of the finite-difference Jacobian at a solution, decided by a
// singular-value ratio gap >= 1e4. Requires residual < 1e-8.
SolveReport local_dimension(const Su2Tuple& x);

// Uniform random unit quaternion from a seeded stream.
Su2Tuple random_tuple(int g, int n, int epsilon, std::uint64_t seed, std::uint64_t index);

// 3(2g+n) - 3 - n - 3
int expected_quotient_dim(int g, int n);

}  // namespace floerkit
