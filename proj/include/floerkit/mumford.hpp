#pragma once

#include <cstdint>
#include <vector>

#include "floerkit/graded_poly.hpp"

namespace floerkit {

// m = (n-1)/2 for odd n; throws for even or nonpositive n.
int half_points(int n);

// xi_{k,n} in Q[alpha, beta, gamma] from
//   (k+1) xi_{k+1} = alpha xi_k + (m-k) beta xi_{k-1} - (gamma/2) xi_{k-2},
//   xi_0 = 1, xi_1 = alpha.
// Sequences are memoized per n; safe to call from several threads.
GradedPoly xi(int k, int n);
std::vector<GradedPoly> xi_sequence(int max_k, int n);

struct MumfordRelation {
  int g;
  int n;
  int m;
  int degree;             // 2(g+m)
  GradedPoly raw;         // xi_{g+m,n}
  GradedPoly normalized;  // (g+m)! xi_{g+m,n}, leading alpha coefficient 1
};

MumfordRelation mumford_relation(int g, int n);

struct OdeResidualReport {
  int max_k = 0;
  int n = 0;
  int orders_checked = 0;
  int nonzero_coefficients = 0;
};

// Exact check that (1 + beta t^2) F' - (alpha + (m-1) beta t - gamma t^2 / 2) F
// vanishes through order K-1 for F = sum_{k<=K} xi_k t^k.
OdeResidualReport ode_residual(int max_k, int n);

struct ClosedFormSample {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

// alpha, gamma uniform in [-2, 2], beta uniform in [-4, -1]; depends only on (seed, index).
ClosedFormSample closed_form_sample(std::uint64_t seed, std::uint64_t index);

// F(t) = (1+beta t^2)^{(m-1)/2} ((1 - t s)/(1 + t s))^{(2 alpha beta + gamma)/(4 s^3)}
//        * exp(-t gamma / (2 beta)),  s = sqrt(-beta), for real beta < 0.
// With gamma_order >= 0 the gamma-dependence is truncated to powers <= gamma_order.
double closed_form_F(double alpha, double beta, double gamma, int m, double t,
                     int gamma_order = -1);

struct ClosedFormReport {
  int k = 0;
  int n = 0;
  int samples = 0;
  double t = 0.05;
  double max_residual = 0.0;
  double tail_estimate = 0.0;  // max |xi_{k+1} t^{k+1}| over the samples
};

ClosedFormReport closed_form_oracle(int k, int n, int samples = 20, std::uint64_t seed = 0,
                                    double t = 0.05);

}  // namespace floerkit
