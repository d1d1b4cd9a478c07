#include "floerkit/rep_variety.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "floerkit/errors.hpp"

namespace floerkit {

namespace {

// Unit imaginary quaternions i, j, k.
const Quat& unit_imag(int a) {
  static const Quat e[3] = {Quat(0, 1, 0, 0), Quat(0, 0, 1, 0), Quat(0, 0, 0, 1)};
  return e[a];
}

Quat exp_imag(double x, double y, double z) {
  double t = std::sqrt(x * x + y * y + z * z);
  if (t < 1e-300) return Quat(1, x, y, z);
  double s = std::sin(t) / t;
  return Quat(std::cos(t), s * x, s * y, s * z);
}

Eigen::Vector4d coeffs(const Quat& q) { return {q.w(), q.x(), q.y(), q.z()}; }

// Letter of the relator word: factor index and whether it is inverted.
struct Letter {
  std::size_t k;
  bool inverse;
};

std::vector<Letter> relator_letters(const Su2Tuple& x) {
  std::vector<Letter> w;
  const auto g = static_cast<std::size_t>(x.g);
  for (std::size_t j = 0; j < g; ++j) {
    w.push_back({j, false});
    w.push_back({j + g, false});
    w.push_back({j, true});
    w.push_back({j + g, true});
  }
  for (std::size_t i = 0; i < x.c.size(); ++i) w.push_back({x.b.size() + i, false});
  return w;
}

Quat letter_value(const Su2Tuple& x, const Letter& l) {
  const Quat& q = x.factor(l.k);
  return l.inverse ? q.conjugate() : q;
}

double uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Quat random_unit(std::mt19937_64& rng) {
  for (;;) {
    double v[4];
    double r2 = 0;
    for (double& a : v) {
      a = 2 * uniform(rng) - 1;
      r2 += a * a;
    }
    if (r2 > 1 || r2 < 1e-6) continue;
    double r = std::sqrt(r2);
    return Quat(v[0] / r, v[1] / r, v[2] / r, v[3] / r);
  }
}

void check_shape(int g, int n, int epsilon) {
  require(g >= 0, "genus must be nonnegative");
  require(n >= 1, "need at least one marked point");
  require(epsilon == 1 || epsilon == -1, "epsilon must be +1 or -1");
}

}  // namespace

Su2Tuple Su2Tuple::identity(int g, int n, int epsilon) {
  check_shape(g, n, epsilon);
  Su2Tuple x;
  x.g = g;
  x.n = n;
  x.epsilon = epsilon;
  x.b.assign(static_cast<std::size_t>(2 * g), Quat::Identity());
  x.c.assign(static_cast<std::size_t>(n), Quat::Identity());
  return x;
}

Quat relator_word(const Su2Tuple& x) {
  Quat w = Quat::Identity();
  for (const auto& l : relator_letters(x)) w = w * letter_value(x, l);
  return w;
}

Eigen::VectorXd defining_map(const Su2Tuple& x) {
  Eigen::VectorXd f(4 + x.c.size());
  Eigen::Vector4d w = coeffs(relator_word(x));
  w(0) -= x.epsilon;
  f.head<4>() = w;
  for (std::size_t i = 0; i < x.c.size(); ++i) f(static_cast<Eigen::Index>(4 + i)) = x.c[i].w();
  return f;
}

double residual(const Su2Tuple& x) { return defining_map(x).squaredNorm(); }

Eigen::MatrixXd analytic_jacobian(const Su2Tuple& x) {
  const auto letters = relator_letters(x);
  const std::size_t L = letters.size();
  std::vector<Quat> prefix(L + 1, Quat::Identity()), suffix(L + 1, Quat::Identity());
  for (std::size_t i = 0; i < L; ++i) prefix[i + 1] = prefix[i] * letter_value(x, letters[i]);
  for (std::size_t i = L; i-- > 0;) suffix[i] = letter_value(x, letters[i]) * suffix[i + 1];

  const auto cols = static_cast<Eigen::Index>(3 * x.num_factors());
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(4 + x.c.size()), cols);
  for (std::size_t i = 0; i < L; ++i) {
    const auto& l = letters[i];
    const Quat& q = x.factor(l.k);
    for (int a = 0; a < 3; ++a) {
      // q -> q e; q^{-1} -> -e q^{-1}
      Quat d = l.inverse ? Quat(-(unit_imag(a) * q.conjugate()).coeffs()) : q * unit_imag(a);
      Eigen::Vector4d col = coeffs(prefix[i] * d * suffix[i + 1]);
      j.block<4, 1>(0, static_cast<Eigen::Index>(3 * l.k + a)) += col;
    }
  }
  for (std::size_t i = 0; i < x.c.size(); ++i) {
    std::size_t k = x.b.size() + i;
    for (int a = 0; a < 3; ++a)
      j(static_cast<Eigen::Index>(4 + i), static_cast<Eigen::Index>(3 * k + a)) =
          (x.c[i] * unit_imag(a)).w();
  }
  return j;
}

Su2Tuple retract(const Su2Tuple& x, const Eigen::VectorXd& v) {
  require(v.size() == static_cast<Eigen::Index>(3 * x.num_factors()), "tangent vector size mismatch");
  Su2Tuple y = x;
  for (std::size_t k = 0; k < x.num_factors(); ++k) {
    auto o = static_cast<Eigen::Index>(3 * k);
    Quat q = x.factor(k) * exp_imag(v(o), v(o + 1), v(o + 2));
    q.normalize();
    y.factor(k) = q;
  }
  return y;
}

Eigen::MatrixXd numeric_jacobian(const Su2Tuple& x, double h) {
  const auto cols = static_cast<Eigen::Index>(3 * x.num_factors());
  Eigen::MatrixXd j(static_cast<Eigen::Index>(4 + x.c.size()), cols);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(cols);
  for (Eigen::Index c = 0; c < cols; ++c) {
    v(c) = h;
    Eigen::VectorXd fp = defining_map(retract(x, v));
    v(c) = -h;
    Eigen::VectorXd fm = defining_map(retract(x, v));
    v(c) = 0;
    j.col(c) = (fp - fm) / (2 * h);
  }
  return j;
}

Su2Tuple conjugate(const Su2Tuple& x, const Quat& q) {
  Quat u = q.normalized();
  Su2Tuple y = x;
  for (std::size_t k = 0; k < y.num_factors(); ++k) y.factor(k) = u * x.factor(k) * u.conjugate();
  return y;
}

Su2Tuple flip_map(const Su2Tuple& x, std::span<const int> subset) {
  Su2Tuple y = x;
  std::vector<bool> seen(x.c.size(), false);
  for (int i : subset) {
    require(i >= 1 && i <= x.n, "flip index " + std::to_string(i) + " out of range");
    require(!seen[static_cast<std::size_t>(i - 1)], "flip subset has a repeated index");
    seen[static_cast<std::size_t>(i - 1)] = true;
    auto& c = y.c[static_cast<std::size_t>(i - 1)];
    c = Quat(-c.coeffs());
    y.epsilon = -y.epsilon;
  }
  return y;
}

Diagonal on_diagonal(const Su2Tuple& x, int i, int j, double tol) {
  require(i >= 1 && i <= x.n && j >= 1 && j <= x.n, "diagonal index out of range");
  const Quat& a = x.c[static_cast<std::size_t>(i - 1)];
  const Quat& b = x.c[static_cast<std::size_t>(j - 1)];
  if ((a.coeffs() - b.coeffs()).norm() < tol) return Diagonal::plus;
  if ((a.coeffs() + b.coeffs()).norm() < tol) return Diagonal::minus;
  return Diagonal::neither;
}

std::string to_string(Diagonal d) {
  switch (d) {
    case Diagonal::plus: return "plus";
    case Diagonal::minus: return "minus";
    default: return "neither";
  }
}

std::map<std::string, double> trace_fingerprint(const Su2Tuple& x) {
  std::map<std::string, double> t;
  for (std::size_t j = 0; j < x.b.size(); ++j) t["trB" + std::to_string(j + 1)] = 2 * x.b[j].w();
  for (std::size_t i = 0; i < x.c.size(); ++i)
    for (std::size_t j = i + 1; j < x.c.size(); ++j)
      t["trC" + std::to_string(i + 1) + "C" + std::to_string(j + 1)] = 2 * (x.c[i] * x.c[j]).w();
  return t;
}

Su2Tuple random_tuple(int g, int n, int epsilon, std::uint64_t seed, std::uint64_t index) {
  Su2Tuple x = Su2Tuple::identity(g, n, epsilon);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    0x5u};
  std::mt19937_64 rng(seq);
  for (std::size_t k = 0; k < x.num_factors(); ++k) x.factor(k) = random_unit(rng);
  return x;
}

int expected_quotient_dim(int g, int n) { return 3 * (2 * g + n) - 3 - n - 3; }

SolveResult solve(int g, int n, int epsilon, std::uint64_t seed, const SolveOptions& opts) {
  check_shape(g, n, epsilon);
  require(opts.max_restarts >= 1, "need at least one start");
  int total_iterations = 0;
  double best = INFINITY;
  for (int r = 0; r < opts.max_restarts; ++r) {
    Su2Tuple x = random_tuple(g, n, epsilon, seed, static_cast<std::uint64_t>(r));
    Eigen::VectorXd f = defining_map(x);
    double fx = f.squaredNorm();
    double mu = 1e-3;
    for (int it = 0; it < opts.max_iterations && fx > opts.target; ++it) {
      ++total_iterations;
      Eigen::MatrixXd j = analytic_jacobian(x);
      Eigen::VectorXd grad = j.transpose() * f;
      // Damped Gauss-Newton direction; large mu approaches steepest descent.
      Eigen::MatrixXd h = j.transpose() * j;
      h.diagonal().array() += mu;
      Eigen::VectorXd dir = -h.ldlt().solve(grad);
      double slope = grad.dot(dir);
      if (!(slope < 0)) {
        dir = -grad;
        slope = -grad.squaredNorm();
      }
      double step = 1.0;
      bool moved = false;
      for (int bt = 0; bt < 40; ++bt) {
        Su2Tuple y = retract(x, step * dir);
        Eigen::VectorXd fy = defining_map(y);
        double fyv = fy.squaredNorm();
        if (fyv <= fx + 1e-4 * step * 2 * slope || fyv < opts.target) {
          x = std::move(y);
          f = std::move(fy);
          fx = fyv;
          moved = true;
          break;
        }
        step *= 0.5;
      }
      if (!moved) break;
      mu = step == 1.0 ? std::max(mu * 0.1, 1e-14) : std::min(mu * 10, 1e6);
    }
    best = std::min(best, fx);
    if (fx < opts.accept) {
      SolveResult out{x, local_dimension(x)};
      out.report.residual = fx;
      out.report.restarts = r;
      out.report.iterations = total_iterations;
      out.report.converged = true;
      out.report.traces = trace_fingerprint(x);
      return out;
    }
  }
  throw convergence_error("solve(" + std::to_string(g) + "," + std::to_string(n) + "," +
                          std::to_string(epsilon) + "): no solution after " +
                          std::to_string(opts.max_restarts) + " restarts (best residual " +
                          std::to_string(best) + ")");
}

SolveReport local_dimension(const Su2Tuple& x) {
  SolveReport rep;
  rep.residual = residual(x);
  require(rep.residual < 1e-8, "local_dimension: residual " + std::to_string(rep.residual) +
                                   " is not below 1e-8");
  rep.converged = true;
  rep.traces = trace_fingerprint(x);
  Eigen::MatrixXd j = numeric_jacobian(x);
  const Eigen::Index cols = j.cols();
  const Eigen::Index size = std::max(cols, j.rows());
  Eigen::MatrixXd sq = Eigen::MatrixXd::Zero(size, size);
  sq.topLeftCorner(j.rows(), j.cols()) = j;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(sq);
  const Eigen::VectorXd s = svd.singularValues();
  rep.singular_values.assign(s.data(), s.data() + s.size());

  // Rank = position of the first consecutive ratio >= 1e4.
  const double floor = s.size() ? 1e-16 * std::max(s(0), 1.0) : 1e-16;
  if (s.size() && s(0) < 1e-8) rep.jacobian_rank = 0;
  for (Eigen::Index i = 0; !rep.jacobian_rank && i + 1 < s.size(); ++i)
    if (s(i) / std::max(s(i + 1), floor) >= 1e4) rep.jacobian_rank = static_cast<int>(i + 1);
  if (!rep.jacobian_rank && s.size() && s(s.size() - 1) > 1e-4 * s(0))
    rep.jacobian_rank = static_cast<int>(s.size());
  if (rep.jacobian_rank) {
    rep.raw_nullity = static_cast<int>(cols) - *rep.jacobian_rank;
    if (x.n % 2 == 1) rep.quotient_dim = *rep.raw_nullity - 3;
  }
  return rep;
}

}  // namespace floerkit
