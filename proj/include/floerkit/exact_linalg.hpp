#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "floerkit/scalar.hpp"

namespace floerkit {

inline bool is_zero_value(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero_value(const Scalar& x) { return x.is_zero(); }

// Dense row-major matrix over an exact field.
template <class F>
using ExactMatrix = std::vector<std::vector<F>>;

template <class F>
ExactMatrix<F> zero_matrix(std::size_t rows, std::size_t cols) {
  return ExactMatrix<F>(rows, std::vector<F>(cols, F(0)));
}

template <class F>
ExactMatrix<F> identity_matrix(std::size_t n) {
  auto m = zero_matrix<F>(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = F(1);
  return m;
}

template <class F>
ExactMatrix<F> multiply(const ExactMatrix<F>& a, const ExactMatrix<F>& b) {
  std::size_t inner = b.size();
  std::size_t cols = inner ? b[0].size() : 0;
  auto out = zero_matrix<F>(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (is_zero_value(a[i][k])) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

template <class F>
std::vector<F> multiply(const ExactMatrix<F>& a, const std::vector<F>& x) {
  std::vector<F> out(a.size(), F(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!is_zero_value(x[j])) out[i] += a[i][j] * x[j];
  return out;
}

// Reduced row echelon form in place; returns pivot columns.
template <class F>
std::vector<std::size_t> rref(ExactMatrix<F>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size();
  std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero_value(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    F inv = F(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero_value(m[i][c])) continue;
      F f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank(ExactMatrix<F> m) {
  return rref(m).size();
}

// Basis of {x : m x = 0}.
template <class F>
std::vector<std::vector<F>> nullspace(ExactMatrix<F> m, std::size_t cols) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(cols, F(0));
    v[free] = F(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
ExactMatrix<F> inverse(const ExactMatrix<F>& a) {
  std::size_t n = a.size();
  ExactMatrix<F> aug = zero_matrix<F>(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = F(1);
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
    throw std::domain_error("matrix is singular");
  ExactMatrix<F> inv = zero_matrix<F>(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

}  // namespace floerkit
