#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "floerkit/errors.hpp"
#include "floerkit/graded_poly.hpp"

namespace floerkit {

/// u*1 + d*D + p*Psi + w*sigma with components in Q[alpha, beta, gamma, A, B].
///
/// Multiplication follows the Kunneth fiber relations
///   D^2 = -2A sigma,  Psi^2 = -2 gamma sigma,  D Psi = Psi D = B sigma,
///   sigma * (D, Psi, sigma) = 0.
class FiberElement {
public:
  FiberElement();
  explicit FiberElement(GradedPoly u);
  FiberElement(GradedPoly u, GradedPoly d, GradedPoly psi, GradedPoly w);

  static FiberElement zero() { return FiberElement(); }
  static FiberElement one();
  static FiberElement D();
  static FiberElement Psi();
  static FiberElement sigma();

  const GradedPoly& u() const { return u_; }
  const GradedPoly& d() const { return d_; }
  const GradedPoly& psi() const { return psi_; }
  const GradedPoly& w() const { return w_; }

  bool is_zero() const { return u_.is_zero() && d_.is_zero() && psi_.is_zero() && w_.is_zero(); }
  bool is_base() const { return d_.is_zero() && psi_.is_zero() && w_.is_zero(); }

  FiberElement& operator+=(const FiberElement& o);
  FiberElement& operator-=(const FiberElement& o);
  FiberElement& operator*=(const Scalar& c);
  friend FiberElement operator+(FiberElement a, const FiberElement& b) { return a += b; }
  friend FiberElement operator-(FiberElement a, const FiberElement& b) { return a -= b; }
  friend FiberElement operator*(FiberElement a, const Scalar& c) { return a *= c; }
  friend FiberElement operator*(const Scalar& c, FiberElement a) { return a *= c; }
  friend FiberElement operator*(const FiberElement& a, const FiberElement& b);
  friend FiberElement operator*(const GradedPoly& a, const FiberElement& b);
  friend bool operator==(const FiberElement& a, const FiberElement& b) {
    return a.u_ == b.u_ && a.d_ == b.d_ && a.psi_ == b.psi_ && a.w_ == b.w_;
  }

  // Applies f to each component.
  template <class Fn>
  FiberElement map(Fn f) const {
    return {f(u_), f(d_), f(psi_), f(w_)};
  }

private:
  GradedPoly u_, d_, psi_, w_;
};

// Base-ring helpers on Q[alpha, beta, gamma, A, B].
GradedPoly base_var(std::string_view name);
GradedPoly base_const(const Scalar& c);

/// Power series c_0 + c_1 t + ... + c_T t^T, truncated at order T.
template <class C>
class TruncatedSeries {
public:
  TruncatedSeries(int order, C zero) : coeffs_(static_cast<std::size_t>(order) + 1, zero) {
    if (order < 0) throw precondition_error("truncation order must be nonnegative");
  }
  TruncatedSeries(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {  // NOLINT
    if (coeffs_.empty()) throw precondition_error("series needs at least one coefficient");
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const C& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  C& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<C>& coefficients() const { return coeffs_; }

  TruncatedSeries truncated(int order) const {
    std::vector<C> c(coeffs_.begin(), coeffs_.begin() + std::min(order, this->order()) + 1);
    return TruncatedSeries(std::move(c));
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    *this = truncated(std::min(order(), o.order()));
    for (int k = 0; k <= order(); ++k) (*this)[k] += o[k];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    *this = truncated(std::min(order(), o.order()));
    for (int k = 0; k <= order(); ++k) (*this)[k] -= o[k];
    return *this;
  }
  TruncatedSeries& operator*=(const Scalar& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Scalar& s) { return a *= s; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    int T = std::min(a.order(), b.order());
    TruncatedSeries out = a.truncated(T);
    for (int n = 0; n <= T; ++n) {
      C acc = a[0] * b[n];
      for (int k = 1; k <= n; ++k) acc += a[k] * b[n - k];
      out[n] = acc;
    }
    return out;
  }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  template <class Fn>
  TruncatedSeries map(Fn f) const {
    std::vector<C> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(f(x));
    return TruncatedSeries(std::move(c));
  }

private:
  std::vector<C> coeffs_;
};

using FiberSeries = TruncatedSeries<FiberElement>;
using BaseSeries = TruncatedSeries<GradedPoly>;

namespace detail {
inline bool is_one(const FiberElement& x) { return x == FiberElement::one(); }
inline bool is_one(const GradedPoly& x) { return x.is_constant() && x.constant_term().is_one(); }
inline bool is_zero(const FiberElement& x) { return x.is_zero(); }
inline bool is_zero(const GradedPoly& x) { return x.is_zero(); }
}  // namespace detail

// Formal logarithm; constant term must be 1. l_n = s_n - (1/n) sum_{k<n} k l_k s_{n-k}.
template <class C>
TruncatedSeries<C> series_log(const TruncatedSeries<C>& s) {
  if (!detail::is_one(s[0])) throw precondition_error("series_log: constant term must be 1");
  TruncatedSeries<C> out = s;
  out[0] = s[0] - s[0];
  for (int n = 1; n <= s.order(); ++n) {
    C acc = s[n] * Scalar(n);
    for (int k = 1; k < n; ++k) acc -= out[k] * s[n - k] * Scalar(k);
    out[n] = acc * Scalar::fraction(1, n);
  }
  return out;
}

// Formal exponential; constant term must be 0. e_n = (1/n) sum_{k=1}^n k s_k e_{n-k}.
template <class C>
TruncatedSeries<C> series_exp(const TruncatedSeries<C>& s, const C& one) {
  if (!detail::is_zero(s[0])) throw precondition_error("series_exp: constant term must be 0");
  TruncatedSeries<C> out = s;
  out[0] = one;
  for (int n = 1; n <= s.order(); ++n) {
    C acc = s[1] * out[n - 1];
    for (int k = 2; k <= n; ++k) acc += s[k] * out[n - k] * Scalar(k);
    out[n] = acc * Scalar::fraction(1, n);
  }
  return out;
}

FiberSeries fiber_series(int order);
BaseSeries base_series(int order);
FiberSeries lift(const BaseSeries& s);

// ln c_t(R pi_* V) = -(g-1) u(t) - int_0^t (w(s) - w'(0) s) / s^2 ds, from the
// (u, w) components of ln c_t(V). The result has order T-1 and only u populated.
FiberSeries grr_pushforward(const FiberSeries& log_series, int g);

// Slant product with the Jacobian: A^r B^s -> r! s! (-gamma)^p / p! when
// 2r + s = 2g (p = s/2), else 0.
GradedPoly slant_jacobian(const GradedPoly& p, int g);
FiberSeries slant_jacobian(const FiberSeries& s, int g);

// Drops monomials with J-degree 2*deg_A + deg_B > 2g (they vanish on J_g).
GradedPoly reduce_jacobian_degree(const GradedPoly& p, int g);
// Drops monomials with gamma exponent > g.
GradedPoly reduce_gamma(const GradedPoly& p, int g);

// c_t(Hom(L, E)) = 1 + (-(m+1) sigma + D) t + (alpha sigma + Psi + beta - A sigma / 2) t^2.
FiberSeries hom_chern_series(int m, int order);

struct R1Pipeline {
  int g = 0;
  int m = 0;
  int order = 0;
  FiberSeries log_hom;      // ln c_t(Hom(L, E))
  FiberSeries log_pushed;   // ln c_t(R pi_*), order-1
  FiberSeries r1;           // c_t(R^1 pi_*) before the slant
  FiberSeries slanted;      // c_t(R^1 pi_*) / [J_g]
  int rank = 0;             // rank of R^1, from the Riemann-Roch constant
};

R1Pipeline r1_pipeline(int g, int m, int order);

// Rank of R^1 pi_* Hom(L,E) from ch_0 = -k(g-1) + w^{(0)}, k = 2.
int r1_rank(const FiberSeries& log_hom, int g, int bundle_rank = 2);

struct R1CheckReport {
  int g = 0;
  int m = 0;
  int order = 0;
  int samples = 0;
  int rank = 0;
  double t = 0.05;
  double max_residual = 0.0;
  double tail_estimate = 0.0;  // max relative size of the order-T term over the samples
};

// Numerical comparison of the pipeline against
// (t/2)^g (1+bt^2)^{(m-1)/2} ((1-t s)/(1+t s))^{(2ab+c)/(4 s^3)} exp(-t c/(2b)),
// s = sqrt(-b), evaluated modulo gamma^{g+1}.
R1CheckReport r1_closed_form_check(int g, int m, int order, int samples = 20,
                                   std::uint64_t seed = 0, double t = 0.05);

// c_0(t) = (1 - t x)^rank c_x(t / (1 - t x)) for a base-ring element x.
BaseSeries x_twist(const BaseSeries& c, const GradedPoly& x, int rank);

// Numeric evaluation of a base-ring series at t: sum_k c_k(assignment) t^k.
std::complex<double> eval_series(const BaseSeries& s, const Assignment& values, double t);

}  // namespace floerkit
