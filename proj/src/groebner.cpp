#include "floerkit/groebner.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <sstream>

#include "floerkit/errors.hpp"
#include "floerkit/mumford.hpp"

namespace floerkit {

namespace {

struct Term {
  Exponents e;
  Scalar c;
};
// Terms sorted by decreasing monomial.
using IPoly = std::vector<Term>;

// Variable ranking: table order with alpha (index 0) moved to the end.
class Order {
public:
  Order(MonomialOrder kind, std::size_t nvars) : kind_(kind) {
    for (std::size_t i = 1; i < nvars; ++i) rank_.push_back(i);
    if (nvars) rank_.push_back(0);
  }

  // a > b
  bool greater(const Exponents& a, const Exponents& b) const {
    if (kind_ == MonomialOrder::grevlex) {
      long da = 0, db = 0;
      for (auto x : a) da += x;
      for (auto x : b) db += x;
      if (da != db) return da > db;
      // smaller exponent in the last differing variable wins
      for (auto it = rank_.rbegin(); it != rank_.rend(); ++it)
        if (a[*it] != b[*it]) return a[*it] < b[*it];
      return false;
    }
    for (auto v : rank_)
      if (a[v] != b[v]) return a[v] > b[v];
    return false;
  }

private:
  MonomialOrder kind_;
  std::vector<std::size_t> rank_;
};

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Exponents quotient(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<std::uint16_t>(a[i] - b[i]);
  return out;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

IPoly to_internal(const GradedPoly& p, const Order& ord) {
  IPoly out;
  out.reserve(p.num_terms());
  for (const auto& [m, c] : p.terms()) out.push_back({m, c});
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.e, b.e); });
  return out;
}

GradedPoly to_graded(const IPoly& p, const TablePtr& table) {
  GradedPoly out(table);
  for (const auto& t : p) out.add_term(t.e, t.c);
  return out;
}

// a - c * x^shift * b
IPoly sub_scaled(const IPoly& a, const Scalar& c, const Exponents& shift, const IPoly& b,
                 const Order& ord) {
  IPoly out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Exponents e(shift.size());
  while (i < a.size() || j < b.size()) {
    if (j < b.size()) {
      for (std::size_t k = 0; k < shift.size(); ++k)
        e[k] = static_cast<std::uint16_t>(b[j].e[k] + shift[k]);
    }
    if (j == b.size() || (i < a.size() && ord.greater(a[i].e, e))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || ord.greater(e, a[i].e)) {
      out.push_back({e, -(c * b[j++].c)});
    } else {
      Scalar v = a[i].c - c * b[j].c;
      if (!v.is_zero()) out.push_back({e, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(IPoly& p) {
  if (p.empty() || p.front().c.is_one()) return;
  Scalar inv = p.front().c.inverse();
  for (auto& t : p) t.c *= inv;
}

// Full reduction of f modulo the polynomials of g.
IPoly reduce(IPoly f, const std::vector<IPoly>& g, const Order& ord) {
  IPoly rem;
  while (!f.empty()) {
    const Term& lt = f.front();
    const IPoly* div = nullptr;
    for (const auto& h : g)
      if (!h.empty() && divides(h.front().e, lt.e)) {
        div = &h;
        break;
      }
    if (!div) {
      rem.push_back(lt);
      f.erase(f.begin());
      continue;
    }
    Scalar c = lt.c / div->front().c;
    f = sub_scaled(f, c, quotient(lt.e, div->front().e), *div, ord);
  }
  return rem;
}

IPoly s_polynomial(const IPoly& a, const IPoly& b, const Order& ord) {
  Exponents l = lcm(a.front().e, b.front().e);
  Exponents sa = quotient(l, a.front().e);
  IPoly left;
  left.reserve(a.size());
  Scalar ia = a.front().c.inverse();
  for (const auto& t : a) {
    Exponents e(t.e.size());
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = static_cast<std::uint16_t>(t.e[k] + sa[k]);
    left.push_back({std::move(e), t.c * ia});
  }
  return sub_scaled(left, b.front().c.inverse(), quotient(l, b.front().e), b, ord);
}

void check_table(const TablePtr& table) {
  require(table != nullptr, "ideal needs a generator table");
  require(table->size() <= kMaxIdealVariables,
          "groebner: " + std::to_string(table->size()) + " variables exceed the cap of " +
              std::to_string(kMaxIdealVariables));
  for (const auto& g : table->generators())
    require(!g.odd && !g.involution, "ideal generators must live in a commutative even ring");
}

const TablePtr& subring_table(int n) {
  static std::mutex mutex;
  static std::map<int, TablePtr> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = GeneratorTable::subring(n);
  return slot;
}

int half(int n) { return half_points(n); }

}  // namespace

// ---------------------------------------------------------------- ideals

CommIdeal::CommIdeal(TablePtr table, std::vector<GradedPoly> generators, MonomialOrder order)
    : table_(std::move(table)), generators_(std::move(generators)), order_(order) {
  check_table(table_);
  for (const auto& f : generators_) {
    require(!f.is_zero(), "ideal generators must be nonzero");
    require(*f.table() == *table_, "ideal generator over a different generator table");
  }
}

CommIdeal CommIdeal::with_generator(GradedPoly f) const {
  auto gens = generators_;
  gens.push_back(std::move(f));
  return {table_, std::move(gens), order_};
}

QuotientBasis groebner(const CommIdeal& ideal) {
  const auto& table = ideal.table();
  const std::size_t nv = table->size();
  Order ord(ideal.order(), nv);

  std::vector<IPoly> g;
  for (const auto& f : ideal.generators()) {
    IPoly p = reduce(to_internal(f, ord), g, ord);
    if (p.empty()) continue;
    make_monic(p);
    g.push_back(std::move(p));
  }

  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    if (coprime(g[i].front().e, g[j].front().e)) continue;
    IPoly r = reduce(s_polynomial(g[i], g[j], ord), g, ord);
    if (r.empty()) continue;
    make_monic(r);
    g.push_back(std::move(r));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }

  // minimal basis, then inter-reduction
  std::vector<IPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !divides(g[j].front().e, g[i].front().e)) continue;
      // equal leading terms: keep the earliest
      redundant = g[j].front().e != g[i].front().e || j < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<IPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<IPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    IPoly head{minimal[i].front()};
    IPoly tail(minimal[i].begin() + 1, minimal[i].end());
    IPoly r = reduce(tail, others, ord);
    head.insert(head.end(), r.begin(), r.end());
    reduced.push_back(std::move(head));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const IPoly& a, const IPoly& b) {
    return ord.greater(b.front().e, a.front().e);
  });

  QuotientBasis q;
  q.table_ = table;
  q.order_ = ideal.order();
  for (const auto& p : reduced) q.basis_.push_back(to_graded(p, table));

  // finite iff each variable has a pure power among the leading terms
  Exponents bound(nv, 0);
  bool finite = true;
  for (std::size_t v = 0; v < nv; ++v) {
    bool found = false;
    for (const auto& p : reduced) {
      const auto& e = p.front().e;
      bool pure = true;
      for (std::size_t k = 0; k < nv; ++k)
        if (k != v && e[k]) pure = false;
      if (pure && e[v] > 0) {
        bound[v] = found ? std::min(bound[v], e[v]) : e[v];
        found = true;
      }
    }
    finite = finite && found;
  }
  if (reduced.size() == 1 && reduced.front().front().e == Exponents(nv, 0)) finite = true;
  if (finite) {
    std::vector<Exponents> standard;
    Exponents e(nv, 0);
    auto in_lt_ideal = [&](const Exponents& m) {
      for (const auto& p : reduced)
        if (divides(p.front().e, m)) return true;
      return false;
    };
    // odometer over the bounding box
    bool unit_ideal = in_lt_ideal(e);
    while (!unit_ideal) {
      if (!in_lt_ideal(e)) standard.push_back(e);
      std::size_t v = 0;
      while (v < nv) {
        if (e[v] + 1 < bound[v]) {
          ++e[v];
          break;
        }
        e[v] = 0;
        ++v;
      }
      if (v == nv) break;
    }
    std::sort(standard.begin(), standard.end(),
              [&](const Exponents& a, const Exponents& b) { return ord.greater(b, a); });
    q.standard_ = std::move(standard);
  }
  return q;
}

std::size_t QuotientBasis::dimension() const { return standard_monomials().size(); }

const std::vector<Exponents>& QuotientBasis::standard_monomials() const {
  if (!standard_) throw precondition_error("quotient is infinite-dimensional");
  return *standard_;
}

std::vector<GradedPoly> QuotientBasis::standard_polys() const {
  std::vector<GradedPoly> out;
  for (const auto& e : standard_monomials()) out.push_back(GradedPoly::monomial(table_, e));
  return out;
}

GradedPoly QuotientBasis::normal_form(const GradedPoly& f) const {
  require(*f.table() == *table_, "normal_form: polynomial over a different table");
  Order ord(order_, table_->size());
  std::vector<IPoly> g;
  for (const auto& p : basis_) g.push_back(to_internal(p, ord));
  return to_graded(reduce(to_internal(f, ord), g, ord), table_);
}

std::vector<Scalar> QuotientBasis::coordinates(const GradedPoly& f) const {
  const auto& std_monos = standard_monomials();
  GradedPoly nf = normal_form(f);
  std::vector<Scalar> out;
  out.reserve(std_monos.size());
  for (const auto& e : std_monos) out.push_back(nf.coefficient(e));
  return out;
}

GradedPoly QuotientBasis::leading_term(const GradedPoly& f) const {
  Order ord(order_, table_->size());
  IPoly p = to_internal(f, ord);
  GradedPoly out(table_);
  if (!p.empty()) out.add_term(p.front().e, p.front().c);
  return out;
}

bool is_groebner_basis(const QuotientBasis& q) {
  Order ord(q.order(), q.table()->size());
  std::vector<IPoly> g;
  for (const auto& p : q.groebner_basis()) g.push_back(to_internal(p, ord));
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!reduce(s_polynomial(g[i], g[j], ord), g, ord).empty()) return false;
  return true;
}

ExactMatrix<Scalar> mult_operator(const QuotientBasis& q, const GradedPoly& f) {
  require(q.is_finite(), "mult_operator: quotient is infinite-dimensional");
  auto basis = q.standard_polys();
  auto m = zero_matrix<Scalar>(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto col = q.coordinates(f * basis[j]);
    for (std::size_t i = 0; i < col.size(); ++i) m[i][j] = col[i];
  }
  return m;
}

ExactMatrix<Scalar> mult_operator(const CommIdeal& ideal, const GradedPoly& f) {
  return mult_operator(groebner(ideal), f);
}

bool ideal_member(const GradedPoly& f, const QuotientBasis& q) {
  return q.normal_form(f).is_zero();
}

bool ideal_member(const GradedPoly& f, const CommIdeal& ideal) {
  return ideal_member(f, groebner(ideal));
}

// ---------------------------------------------------------------- univariate

namespace {

void trim(UniPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UniPoly derivative(const UniPoly& p) {
  UniPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * Scalar(static_cast<long>(i)));
  trim(out);
  return out;
}

UniPoly monic(UniPoly p) {
  trim(p);
  if (p.empty()) return p;
  Scalar inv = p.back().inverse();
  for (auto& c : p) c *= inv;
  return p;
}

// a = q b + r
std::pair<UniPoly, UniPoly> divmod(UniPoly a, UniPoly b) {
  trim(a);
  trim(b);
  require(!b.empty(), "polynomial division by zero");
  if (a.size() < b.size()) return {UniPoly{}, a};
  UniPoly q(a.size() - b.size() + 1, Scalar(0));
  Scalar inv = b.back().inverse();
  for (std::size_t k = q.size(); k-- > 0;) {
    Scalar c = a[k + b.size() - 1] * inv;
    q[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= c * b[i];
  }
  trim(a);
  trim(q);
  return {q, a};
}

UniPoly gcd(UniPoly a, UniPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

UniPoly sub(UniPoly a, const UniPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Scalar(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

Scalar evaluate(const UniPoly& p, const Scalar& x) {
  Scalar acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// Best rational approximation with denominator at most max_den.
Rational rationalize(double x, long max_den = 1000000) {
  if (std::abs(x) < 1e-14) return Rational(0);
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double r = x;
  for (int it = 0; it < 64; ++it) {
    double a = std::floor(r);
    if (std::abs(a) > 1e15) break;
    long ai = static_cast<long>(a);
    long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double frac = r - a;
    if (std::abs(frac) < 1e-12) break;
    r = 1.0 / frac;
  }
  return Rational(p1, q1);
}

std::vector<std::complex<double>> numeric_roots(const UniPoly& monic_p) {
  const auto d = static_cast<Eigen::Index>(monic_p.size()) - 1;
  if (d <= 0) return {};
  if (d == 1) return {-monic_p[0].to_complex()};
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index i = 1; i < d; ++i) c(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < d; ++i) c(i, d - 1) = -monic_p[static_cast<std::size_t>(i)].to_complex();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(c, false);
  std::vector<std::complex<double>> out;
  for (Eigen::Index i = 0; i < d; ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

Eigen::MatrixXcd to_numeric(const ExactMatrix<Scalar>& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXcd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = m[i][j].to_complex();
  return out;
}

}  // namespace

UniPoly characteristic_polynomial(const ExactMatrix<Scalar>& a) {
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k
  const std::size_t n = a.size();
  for (const auto& row : a) require(row.size() == n, "characteristic_polynomial: matrix not square");
  UniPoly c(n + 1, Scalar(0));
  c[n] = Scalar(1);
  auto m = zero_matrix<Scalar>(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    auto am = multiply(a, m);
    for (std::size_t i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
    m = std::move(am);
    auto prod = multiply(a, m);
    Scalar tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += prod[i][i];
    c[n - k] = -tr * Scalar::fraction(1, static_cast<long>(k));
  }
  return c;
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& f_in) {
  UniPoly f = monic(f_in);
  require(!f.empty(), "squarefree_decomposition of zero");
  std::vector<UniPoly> out;
  if (f.size() == 1) return out;
  UniPoly fp = derivative(f);
  UniPoly a = gcd(f, fp);
  UniPoly b = divmod(f, a).first;
  UniPoly c = divmod(fp, a).first;
  UniPoly d = sub(c, derivative(b));
  while (b.size() > 1) {
    UniPoly ai = gcd(b, d);
    out.push_back(ai);
    b = divmod(b, ai).first;
    c = divmod(d, ai).first;
    d = sub(c, derivative(b));
  }
  return out;
}

std::vector<Eigenvalue> eigenvalues(const ExactMatrix<Scalar>& m) {
  const std::size_t n = m.size();
  std::vector<Eigenvalue> out;
  if (n == 0) return out;
  auto parts = squarefree_decomposition(characteristic_polynomial(m));
  Eigen::MatrixXcd mn = to_numeric(m);
  const double scale = std::max(1.0, mn.norm());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const int mult = static_cast<int>(i) + 1;
    for (const auto& z : numeric_roots(parts[i])) {
      Eigenvalue ev;
      ev.value = z;
      ev.alg_mult = mult;
      Scalar guess(rationalize(z.real()), rationalize(z.imag()));
      if (evaluate(parts[i], guess).is_zero()) {
        ev.exact = guess;
        ev.value = guess.to_complex();
        auto shifted = m;
        for (std::size_t k = 0; k < n; ++k) shifted[k][k] -= guess;
        ev.geo_mult = static_cast<int>(n - rank(shifted));
      } else {
        Eigen::MatrixXcd shifted = mn - z * Eigen::MatrixXcd::Identity(n, n);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(shifted);
        int nullity = 0;
        for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k)
          if (svd.singularValues()(k) < 1e-10 * scale) ++nullity;
        ev.geo_mult = std::max(1, nullity);
      }
      out.push_back(std::move(ev));
    }
  }
  std::sort(out.begin(), out.end(), [](const Eigenvalue& a, const Eigenvalue& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

std::vector<Eigenvalue> alpha_spectrum(const QuotientBasis& q) {
  return eigenvalues(mult_operator(q, GradedPoly::generator(q.table(), "alpha")));
}

std::vector<Eigenvalue> alpha_spectrum(const CommIdeal& ideal) {
  return alpha_spectrum(groebner(ideal));
}

// ---------------------------------------------------------------- lambda and P/Q/H

LambdaSequence::LambdaSequence(std::vector<int> signs) : signs_(std::move(signs)) {
  for (int s : signs_) require(s == 1 || s == -1, "lambda signs must be +1 or -1");
}

LambdaSequence LambdaSequence::parse(const std::string& spec) {
  if (spec.empty() || spec == "alternating") return {};
  if (spec == "positive" || spec == "negative") {
    LambdaSequence out(std::vector<int>(64, 1));
    if (spec == "negative") out.global_ = -1;
    return out;
  }
  std::vector<int> signs;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "+" || tok == "+1" || tok == "1")
      signs.push_back(1);
    else if (tok == "-" || tok == "-1")
      signs.push_back(-1);
    else
      throw precondition_error("bad lambda sign '" + tok + "'");
  }
  return LambdaSequence(std::move(signs));
}

long LambdaSequence::operator()(int i) const {
  require(i >= 1, "lambda index starts at 1");
  int s = static_cast<std::size_t>(i) <= signs_.size() ? signs_[static_cast<std::size_t>(i) - 1]
                                                       : ((i % 2) ? 1 : -1);
  return global_ * s * (2L * i - 1);
}

LambdaSequence LambdaSequence::negated() const {
  LambdaSequence out = *this;
  out.global_ = -global_;
  return out;
}

std::string LambdaSequence::describe() const {
  std::string out;
  for (int i = 1; i <= 6; ++i) {
    if (i > 1) out += ",";
    out += std::to_string((*this)(i));
  }
  return out + ",...";
}

GradedPoly lambda_product(int g, int n, int power, const LambdaSequence& lambda) {
  require(power >= 0, "exponent must be nonnegative");
  const int m = half(n);
  const auto& table = subring_table(n);
  GradedPoly out(table, Scalar(1));
  if (g + m <= 0) return out;
  require(g >= 0, "genus must be -1 or nonnegative");
  GradedPoly alpha = GradedPoly::generator(table, "alpha");
  for (int i = 1; i <= g + m; ++i)
    out *= (alpha - GradedPoly(table, Scalar(lambda(i)))).pow(static_cast<unsigned>(power));
  return out;
}

GradedPoly spectral_P(int g, int n, int N, const LambdaSequence& lambda) {
  require(N >= 1, "P exponent must be positive");
  if (g == -1) return GradedPoly(subring_table(n), Scalar(1));
  return lambda_product(g, n, N, lambda);
}

GradedPoly spectral_Q(int g, int n, const LambdaSequence& lambda) {
  require(g >= 0, "Q needs a nonnegative genus");
  return lambda_product(g, n, 1, lambda);
}

GradedPoly spectral_H(int g, int n, int M, const LambdaSequence& lambda) {
  require(M >= 1, "H exponent must be positive");
  require(g >= 0, "H needs a nonnegative genus");
  return lambda_product(g, n, M, lambda);
}

namespace {

std::vector<GradedPoly> beta_gamma_deltas(int n) {
  const auto& t = subring_table(n);
  std::vector<GradedPoly> gens;
  gens.push_back(GradedPoly::generator(t, "beta") - GradedPoly(t, Scalar(2)));
  gens.push_back(GradedPoly::generator(t, "gamma"));
  for (int i = 1; i <= n; ++i) gens.push_back(GradedPoly::generator(t, t->delta(i)));
  return gens;
}

}  // namespace

CommIdeal maximal_ideal(int n) {
  require(n >= 0, "n must be nonnegative");
  const auto& t = subring_table(n);
  std::vector<GradedPoly> gens;
  for (std::size_t i = 0; i < t->size(); ++i) gens.push_back(GradedPoly::generator(t, i));
  return {t, gens};
}

CommIdeal model_q_ideal(int g, int n, const LambdaSequence& lambda) {
  auto gens = beta_gamma_deltas(n);
  GradedPoly q = spectral_Q(g, n, lambda);
  require(!q.is_constant(), "model ideal needs g + m >= 1");
  gens.push_back(q);
  return {subring_table(n), gens};
}

CommIdeal model_top_ideal(int g, int n, const LambdaSequence& lambda) {
  const int m = half(n);
  require(g >= 0 && g + m >= 1, "model ideal needs g >= 0 and g + m >= 1");
  const auto& t = subring_table(n);
  auto gens = beta_gamma_deltas(n);
  gens.insert(gens.begin(),
              GradedPoly::generator(t, "alpha") - GradedPoly(t, Scalar(lambda(g + m))));
  return {t, gens};
}

CommIdeal parse_ideal(const TablePtr& table, const std::string& text, MonomialOrder order) {
  std::vector<GradedPoly> gens;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      gens.push_back(parse_poly(table, line));
    } catch (const std::exception& e) {
      throw precondition_error("ideal line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  require(!gens.empty(), "ideal file has no generators");
  return {table, gens, order};
}

}  // namespace floerkit
