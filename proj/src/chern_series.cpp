#include "floerkit/chern_series.hpp"

#include <cmath>
#include <random>

#include "floerkit/mumford.hpp"

namespace floerkit {

namespace {

const TablePtr& base_table() {
  static const TablePtr table = GeneratorTable::fiber_base();
  return table;
}

enum BaseIndex : std::size_t { kAlpha = 0, kBeta = 1, kGamma = 2, kA = 3, kB = 4 };

}  // namespace

GradedPoly base_var(std::string_view name) { return GradedPoly::generator(base_table(), name); }
GradedPoly base_const(const Scalar& c) { return GradedPoly(base_table(), c); }

// ---------------------------------------------------------------- FiberElement

FiberElement::FiberElement()
    : u_(base_table()), d_(base_table()), psi_(base_table()), w_(base_table()) {}

FiberElement::FiberElement(GradedPoly u)
    : u_(std::move(u)), d_(base_table()), psi_(base_table()), w_(base_table()) {}

FiberElement::FiberElement(GradedPoly u, GradedPoly d, GradedPoly psi, GradedPoly w)
    : u_(std::move(u)), d_(std::move(d)), psi_(std::move(psi)), w_(std::move(w)) {}

FiberElement FiberElement::one() { return FiberElement(base_const(1)); }

FiberElement FiberElement::D() {
  FiberElement x;
  x.d_ = base_const(1);
  return x;
}

FiberElement FiberElement::Psi() {
  FiberElement x;
  x.psi_ = base_const(1);
  return x;
}

FiberElement FiberElement::sigma() {
  FiberElement x;
  x.w_ = base_const(1);
  return x;
}

FiberElement& FiberElement::operator+=(const FiberElement& o) {
  u_ += o.u_;
  d_ += o.d_;
  psi_ += o.psi_;
  w_ += o.w_;
  return *this;
}

FiberElement& FiberElement::operator-=(const FiberElement& o) {
  u_ -= o.u_;
  d_ -= o.d_;
  psi_ -= o.psi_;
  w_ -= o.w_;
  return *this;
}

FiberElement& FiberElement::operator*=(const Scalar& c) {
  u_ *= c;
  d_ *= c;
  psi_ *= c;
  w_ *= c;
  return *this;
}

FiberElement operator*(const FiberElement& a, const FiberElement& b) {
  static const GradedPoly A = base_var("A");
  static const GradedPoly B = base_var("B");
  static const GradedPoly gamma = base_var("gamma");
  FiberElement out;
  out.u_ = a.u_ * b.u_;
  out.d_ = a.u_ * b.d_ + a.d_ * b.u_;
  out.psi_ = a.u_ * b.psi_ + a.psi_ * b.u_;
  GradedPoly w = a.u_ * b.w_ + a.w_ * b.u_;
  if (!a.d_.is_zero() && !b.d_.is_zero()) w -= Scalar(2) * (A * (a.d_ * b.d_));
  if (!a.psi_.is_zero() && !b.psi_.is_zero()) w -= Scalar(2) * (gamma * (a.psi_ * b.psi_));
  GradedPoly cross = a.d_ * b.psi_ + a.psi_ * b.d_;
  if (!cross.is_zero()) w += B * cross;
  out.w_ = std::move(w);
  return out;
}

FiberElement operator*(const GradedPoly& a, const FiberElement& b) {
  return {a * b.u_, a * b.d_, a * b.psi_, a * b.w_};
}

// ---------------------------------------------------------------- series

FiberSeries fiber_series(int order) { return FiberSeries(order, FiberElement()); }
BaseSeries base_series(int order) { return BaseSeries(order, base_const(0)); }

FiberSeries lift(const BaseSeries& s) {
  std::vector<FiberElement> c;
  c.reserve(s.coefficients().size());
  for (const auto& x : s.coefficients()) c.emplace_back(x);
  return FiberSeries(std::move(c));
}

FiberSeries grr_pushforward(const FiberSeries& log_series, int g) {
  require(g >= 0, "genus must be nonnegative");
  require(log_series[0].is_zero(), "grr_pushforward: input must have zero constant term");
  require(log_series.order() >= 1, "grr_pushforward: truncation order must be at least 1");
  const int T = log_series.order() - 1;
  FiberSeries out = fiber_series(T);
  const Scalar u_factor(-(g - 1));
  for (int j = 1; j <= T; ++j) {
    // t^j coefficient: -(g-1) u_j - w_{j+1} / j
    GradedPoly c = log_series[j].u() * u_factor;
    c -= log_series[j + 1].w() * Scalar::fraction(1, j);
    out[j] = FiberElement(std::move(c));
  }
  return out;
}

GradedPoly slant_jacobian(const GradedPoly& p, int g) {
  require(g >= 0, "genus must be nonnegative");
  GradedPoly out(p.table());
  require(p.table()->kind() == GeneratorTable::Kind::fiber_base,
          "slant_jacobian expects polynomials in alpha, beta, gamma, A, B");
  for (const auto& [m, c] : p.terms()) {
    unsigned r = m[kA];
    unsigned s = m[kB];
    if (2 * r + s != static_cast<unsigned>(2 * g)) continue;
    unsigned q = s / 2;
    Rational factor = factorial(r) * factorial(s) / factorial(q);
    if (q % 2) factor = -factor;
    Exponents e = m;
    e[kA] = 0;
    e[kB] = 0;
    e[kGamma] = static_cast<std::uint16_t>(e[kGamma] + q);
    out.add_term(e, c * Scalar(factor));
  }
  return out;
}

FiberSeries slant_jacobian(const FiberSeries& s, int g) {
  for (int k = 0; k <= s.order(); ++k)
    require(s[k].is_base(), "slant_jacobian: D, Psi or sigma component present at order " +
                                std::to_string(k));
  return s.map([g](const FiberElement& x) { return FiberElement(slant_jacobian(x.u(), g)); });
}

GradedPoly reduce_jacobian_degree(const GradedPoly& p, int g) {
  return p.filtered([g](const Exponents& e) { return 2 * e[kA] + e[kB] <= 2 * g; });
}

GradedPoly reduce_gamma(const GradedPoly& p, int g) {
  std::size_t gi = p.table()->index("gamma");
  return p.filtered([g, gi](const Exponents& e) { return e[gi] <= g; });
}

FiberSeries hom_chern_series(int m, int order) {
  require(order >= 2, "hom_chern_series: truncation order must be at least 2");
  FiberSeries c = fiber_series(order);
  c[0] = FiberElement::one();
  c[1] = FiberElement::sigma() * Scalar(-(m + 1)) + FiberElement::D();
  c[2] = base_var("alpha") * FiberElement::sigma() + FiberElement::Psi() +
         FiberElement(base_var("beta")) -
         base_var("A") * FiberElement::sigma() * Scalar::fraction(1, 2);
  return c;
}

int r1_rank(const FiberSeries& log_hom, int g, int bundle_rank) {
  const GradedPoly& w1 = log_hom[1].w();
  require(w1.is_constant() && w1.constant_term().is_real() &&
              w1.constant_term().re().get_den() == 1,
          "r1_rank: degree-zero fiber term must be an integer constant");
  long w0 = w1.constant_term().re().get_num().get_si();
  // rank R pi_* = ch_0 = -k(g-1) + w^{(0)}; R^0 vanishes so rank R^1 = -ch_0.
  return static_cast<int>(bundle_rank * (g - 1) - w0);
}

R1Pipeline r1_pipeline(int g, int m, int order) {
  require(g >= 0 && m >= 0, "r1_pipeline: g and m must be nonnegative");
  require(order >= 3, "r1_pipeline: truncation order must be at least 3");
  R1Pipeline out{g, m, order, fiber_series(0), fiber_series(0), fiber_series(0), fiber_series(0), 0};
  FiberSeries hom = hom_chern_series(m, order);
  out.log_hom = series_log(hom).map([g](const FiberElement& x) {
    return x.map([g](const GradedPoly& p) { return reduce_jacobian_degree(p, g); });
  });
  out.rank = r1_rank(out.log_hom, g);
  out.log_pushed = grr_pushforward(out.log_hom, g);

  // c_t(R^1) = 1 / c_t(R pi_*) = exp(-ln c_t(R pi_*)), computed in the base
  // ring modulo classes of J-degree above 2g.
  const int T = out.log_pushed.order();
  BaseSeries neg = base_series(T);
  for (int k = 1; k <= T; ++k) neg[k] = out.log_pushed[k].u() * Scalar(-1);
  BaseSeries r1 = base_series(T);
  r1[0] = base_const(1);
  for (int n = 1; n <= T; ++n) {
    GradedPoly acc = base_const(0);
    for (int k = 1; k <= n; ++k) acc += neg[k] * r1[n - k] * Scalar(k);
    r1[n] = reduce_jacobian_degree(acc * Scalar::fraction(1, n), g);
  }
  out.r1 = lift(r1);
  out.slanted = slant_jacobian(out.r1, g);
  return out;
}

std::complex<double> eval_series(const BaseSeries& s, const Assignment& values, double t) {
  std::complex<double> sum = 0.0;
  double tk = 1.0;
  for (int k = 0; k <= s.order(); ++k) {
    if (!s[k].is_zero()) sum += eval_numeric(s[k], values) * tk;
    tk *= t;
  }
  return sum;
}

R1CheckReport r1_closed_form_check(int g, int m, int order, int samples, std::uint64_t seed,
                                   double t) {
  require(order >= 2 * (g + m) + 2, "r1_closed_form_check: need T >= 2(g+m)+2");
  require(samples >= 1, "r1_closed_form_check: need at least one sample");
  R1Pipeline pipe = r1_pipeline(g, m, order + 1);
  BaseSeries series = base_series(pipe.slanted.order());
  for (int k = 0; k <= series.order(); ++k) series[k] = reduce_gamma(pipe.slanted[k].u(), g);

  R1CheckReport report;
  report.g = g;
  report.m = m;
  report.order = series.order();
  report.samples = samples;
  report.rank = pipe.rank;
  report.t = t;
  for (int i = 0; i < samples; ++i) {
    ClosedFormSample x = closed_form_sample(seed, static_cast<std::uint64_t>(i));
    require(t * std::sqrt(-x.beta) < 1.0, "r1_closed_form_check: |t sqrt(-beta)| >= 1");
    Assignment at{{"alpha", x.alpha}, {"beta", x.beta}, {"gamma", x.gamma}};
    std::complex<double> lhs = eval_series(series, at, t);
    double rhs = std::pow(t / 2.0, g) * closed_form_F(x.alpha, x.beta, x.gamma, m, t, g);
    double scale = std::max(std::abs(rhs), 1e-300);
    report.max_residual = std::max(report.max_residual, std::abs(lhs - rhs) / scale);
    const auto& last = series[series.order()];
    if (!last.is_zero())
      report.tail_estimate = std::max(
          report.tail_estimate,
          std::abs(eval_numeric(last, at)) * std::pow(t, series.order()) / scale);
  }
  return report;
}

BaseSeries x_twist(const BaseSeries& c, const GradedPoly& x, int rank) {
  const int T = c.order();
  BaseSeries out = base_series(T);
  std::vector<GradedPoly> xp{base_const(1)};
  for (int i = 1; i <= T; ++i) xp.push_back(xp.back() * x);
  for (int k = 0; k <= T; ++k) {
    if (c[k].is_zero()) continue;
    // c_k t^k (1 - t x)^{rank - k}
    int e = rank - k;
    for (int i = 0; k + i <= T; ++i) {
      Rational coeff = e >= 0 ? binomial(e, i) * ((i % 2) ? -1 : 1) : binomial(-e + i - 1, i);
      if (sgn(coeff) == 0) continue;
      out[k + i] += c[k] * xp[i] * Scalar(coeff);
    }
  }
  return out;
}

}  // namespace floerkit
