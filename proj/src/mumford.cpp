#include "floerkit/mumford.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <random>

#include "floerkit/errors.hpp"

namespace floerkit {

namespace {

const TablePtr& xi_table() {
  static const TablePtr table = GeneratorTable::subring(0);
  return table;
}

class XiMemo {
public:
  std::vector<GradedPoly> sequence(int max_k, int n) {
    std::lock_guard lock(mutex_);
    auto& seq = memo_[n];
    const int m = half_points(n);
    const auto& t = xi_table();
    const GradedPoly alpha = GradedPoly::generator(t, "alpha");
    const GradedPoly beta = GradedPoly::generator(t, "beta");
    const GradedPoly half_gamma = GradedPoly::generator(t, "gamma") * Scalar::fraction(1, 2);
    if (seq.empty()) {
      seq.emplace_back(t, Scalar(1));
      seq.push_back(alpha);
    }
    while (static_cast<int>(seq.size()) <= max_k) {
      const int k = static_cast<int>(seq.size()) - 1;
      GradedPoly next = alpha * seq[k] + Scalar(m - k) * (beta * seq[k - 1]);
      if (k >= 2) next -= half_gamma * seq[k - 2];
      seq.push_back(next * Scalar::fraction(1, k + 1));
    }
    return {seq.begin(), seq.begin() + max_k + 1};
  }

private:
  std::mutex mutex_;
  std::map<int, std::vector<GradedPoly>> memo_;
};

XiMemo& memo() {
  static XiMemo instance;
  return instance;
}

double unit_interval(std::uint64_t seed, std::uint64_t index, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    static_cast<std::uint32_t>(stream)};
  std::mt19937_64 rng(seq);
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

int half_points(int n) {
  require(n >= 1 && n % 2 == 1, "n must be a positive odd integer (got " + std::to_string(n) + ")");
  return (n - 1) / 2;
}

GradedPoly xi(int k, int n) {
  require(k >= 0, "xi: k must be nonnegative");
  return memo().sequence(k, n).back();
}

std::vector<GradedPoly> xi_sequence(int max_k, int n) {
  require(max_k >= 0, "xi_sequence: max_k must be nonnegative");
  return memo().sequence(max_k, n);
}

MumfordRelation mumford_relation(int g, int n) {
  require(g >= 0, "mumford_relation: g must be nonnegative");
  const int m = half_points(n);
  require(!(g == 0 && n == 1), "mumford_relation: (g,n) = (0,1) is excluded");
  GradedPoly raw = xi(g + m, n);
  GradedPoly normalized = raw * Scalar(factorial(static_cast<unsigned>(g + m)));
  return {g, n, m, 2 * (g + m), std::move(raw), std::move(normalized)};
}

OdeResidualReport ode_residual(int max_k, int n) {
  require(max_k >= 3, "ode_residual: K must be at least 3");
  const int m = half_points(n);
  auto seq = xi_sequence(max_k, n);
  const auto& t = xi_table();
  const GradedPoly alpha = GradedPoly::generator(t, "alpha");
  const GradedPoly beta = GradedPoly::generator(t, "beta");
  const GradedPoly gamma = GradedPoly::generator(t, "gamma");
  auto at = [&](int k) { return (k >= 0 && k <= max_k) ? seq[k] : GradedPoly(t); };
  OdeResidualReport report{max_k, n, 0, 0};
  for (int j = 0; j <= max_k - 1; ++j) {
    // [t^j] (1 + beta t^2) F'
    GradedPoly lhs = at(j + 1) * Scalar(j + 1);
    if (j >= 1) lhs += beta * at(j - 1) * Scalar(j - 1);
    // [t^j] (alpha + (m-1) beta t - gamma t^2 / 2) F
    GradedPoly rhs = alpha * at(j);
    if (j >= 1) rhs += beta * at(j - 1) * Scalar(m - 1);
    if (j >= 2) rhs -= gamma * at(j - 2) * Scalar::fraction(1, 2);
    ++report.orders_checked;
    if (lhs != rhs) ++report.nonzero_coefficients;
  }
  return report;
}

ClosedFormSample closed_form_sample(std::uint64_t seed, std::uint64_t index) {
  ClosedFormSample s;
  s.alpha = -2.0 + 4.0 * unit_interval(seed, index, 0);
  s.beta = -4.0 + 3.0 * unit_interval(seed, index, 1);
  s.gamma = -2.0 + 4.0 * unit_interval(seed, index, 2);
  return s;
}

double closed_form_F(double alpha, double beta, double gamma, int m, double t, int gamma_order) {
  require(beta < 0.0, "closed form is evaluated only for beta < 0");
  const double s = std::sqrt(-beta);
  require(std::abs(t) * s < 1.0, "closed form needs |t sqrt(-beta)| < 1");
  const double log_ratio = std::log((1.0 - t * s) / (1.0 + t * s));
  const double s3 = 4.0 * s * s * s;
  // ln F = ln F|_{gamma=0} + gamma * L
  const double log_f0 = 0.5 * (m - 1) * std::log1p(beta * t * t) + (2.0 * alpha * beta / s3) * log_ratio;
  const double L = log_ratio / s3 - t / (2.0 * beta);
  if (gamma_order < 0) return std::exp(log_f0 + gamma * L);
  double sum = 0.0;
  double term = 1.0;
  for (int p = 0; p <= gamma_order; ++p) {
    sum += term;
    term *= gamma * L / (p + 1);
  }
  return std::exp(log_f0) * sum;
}

ClosedFormReport closed_form_oracle(int k, int n, int samples, std::uint64_t seed, double t) {
  require(k >= 0, "closed_form_oracle: k must be nonnegative");
  require(samples >= 1, "closed_form_oracle: need at least one sample");
  const int m = half_points(n);
  auto seq = xi_sequence(k + 1, n);
  ClosedFormReport report;
  report.k = k;
  report.n = n;
  report.samples = samples;
  report.t = t;
  for (int i = 0; i < samples; ++i) {
    ClosedFormSample x = closed_form_sample(seed, static_cast<std::uint64_t>(i));
    require(std::abs(t) * std::sqrt(-x.beta) < 1.0, "closed_form_oracle: |t sqrt(-beta)| >= 1");
    Assignment at{{"alpha", x.alpha}, {"beta", x.beta}, {"gamma", x.gamma}};
    double partial = 0.0;
    double tj = 1.0;
    for (int j = 0; j <= k; ++j) {
      partial += eval_numeric(seq[j], at).real() * tj;
      tj *= t;
    }
    double exact = closed_form_F(x.alpha, x.beta, x.gamma, m, t);
    report.max_residual = std::max(report.max_residual, std::abs(partial - exact));
    report.tail_estimate =
        std::max(report.tail_estimate, std::abs(eval_numeric(seq[k + 1], at).real() * tj));
  }
  return report;
}

}  // namespace floerkit
