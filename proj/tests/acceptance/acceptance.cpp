// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "floerkit/chern_series.hpp"
#include "floerkit/cli.hpp"
#include "floerkit/floer_tables.hpp"
#include "floerkit/groebner.hpp"
#include "floerkit/lefschetz.hpp"
#include "floerkit/mumford.hpp"
#include "floerkit/rep_variety.hpp"

using namespace floerkit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// ---------------------------------------------------------------- 1
Outcome mumford_closed_form() {
  Outcome o;
  auto t0 = Clock::now();
  double worst = 0.0;
  const std::array<std::pair<int, int>, 5> cases{{{0, 3}, {0, 5}, {1, 3}, {1, 5}, {2, 3}}};
  for (auto [g, n] : cases) {
    auto r = closed_form_oracle(30, n, 20, 0, 0.05);
    worst = std::max(worst, r.max_residual);
    if (!(r.max_residual < 1e-8))
      o.fail("(g,n)=(" + std::to_string(g) + "," + std::to_string(n) + ") residual " +
             std::to_string(r.max_residual));
  }
  double dt = seconds_since(t0);
  if (dt >= 5.0) o.fail("runtime " + std::to_string(dt) + " s");
  if (o.pass) {
    std::ostringstream s;
    s << "max residual " << worst << ", " << dt << " s";
    o.detail = s.str();
  }
  return o;
}

// ---------------------------------------------------------------- 2
Outcome mumford_structure() {
  Outcome o;
  for (int n : {3, 5, 7}) {
    auto seq = xi_sequence(40, n);
    for (int k = 0; k <= 40; ++k) {
      if (seq[k].homogeneous_degree() != 2 * k) o.fail("xi_" + std::to_string(k) + " not homogeneous");
      Exponents e{static_cast<std::uint16_t>(k), 0, 0};
      if (!(seq[k].coefficient(e) == Scalar(Rational(1) / factorial(static_cast<unsigned>(k)))))
        o.fail("[alpha^k] xi_" + std::to_string(k) + " != 1/k!");
    }
  }
  int relations = 0;
  for (int g = 0; g <= 6; ++g)
    for (int n : {1, 3, 5, 7}) {
      if (g == 0 && n == 1) continue;
      auto r = mumford_relation(g, n);
      Exponents e{static_cast<std::uint16_t>(g + r.m), 0, 0};
      if (!r.normalized.coefficient(e).is_one())
        o.fail("leading coefficient at (" + std::to_string(g) + "," + std::to_string(n) + ")");
      ++relations;
    }
  if (o.pass) o.detail = "k <= 40, n in {3,5,7}; " + std::to_string(relations) + " relations";
  return o;
}

// ---------------------------------------------------------------- 3
BaseSeries kappa_series(int T) {
  BaseSeries k = base_series(T);
  GradedPoly p = base_const(Scalar::fraction(-1, 2));
  for (int j = 1; j <= T; j += 2) {
    k[j] = p;
    p = p * base_var("beta") * Scalar(-1);
  }
  return k;
}

Outcome grr_pipeline() {
  Outcome o;
  double worst = 0.0;
  const std::array<std::pair<int, int>, 4> cases{{{0, 1}, {1, 1}, {0, 2}, {1, 2}}};
  for (auto [g, m] : cases) {
    auto r = r1_closed_form_check(g, m, 12);
    worst = std::max(worst, r.max_residual);
    if (!(r.max_residual < 1e-9))
      o.fail("(g,m)=(" + std::to_string(g) + "," + std::to_string(m) + ") residual " +
             std::to_string(r.max_residual));
  }
  // slant of exp(kappa(-A + B t)) against (-1)^g kappa^g exp(kappa gamma t^2), mod gamma^{g+1}
  const int T = 12;
  for (int g = 0; g <= 4; ++g) {
    BaseSeries kappa = kappa_series(T);
    BaseSeries lin = base_series(T);
    lin[0] = base_var("A") * Scalar(-1);
    lin[1] = base_var("B");
    BaseSeries lhs = series_exp(kappa * lin, base_const(1));
    BaseSeries kg = base_series(T);
    kg[0] = base_const(g % 2 ? -1 : 1);
    for (int i = 0; i < g; ++i) kg = kg * kappa;
    BaseSeries kct = base_series(T);
    for (int k = 0; k + 2 <= T; ++k) kct[k + 2] = kappa[k] * base_var("gamma");
    BaseSeries rhs = kg * series_exp(kct, base_const(1));
    for (int k = 0; k <= T; ++k)
      if (!(reduce_gamma(slant_jacobian(lhs[k], g), g) == reduce_gamma(rhs[k], g)))
        o.fail("slant identity at g=" + std::to_string(g) + ", t^" + std::to_string(k));
  }
  if (o.pass) {
    std::ostringstream s;
    s << "T=12, max residual " << worst << "; slant identity exact for g <= 4";
    o.detail = s.str();
  }
  return o;
}

// ---------------------------------------------------------------- 4
Outcome lefschetz() {
  Outcome o;
  for (int g = 0; g <= 6; ++g) {
    long sum = 0;
    for (int k = 0; k <= g; ++k) sum += (g - k + 1) * primitive_dimension(g, k);
    if (sum != (1L << (2 * g))) o.fail("weighted sum at g=" + std::to_string(g));
  }
  std::mt19937_64 rng(4);
  for (int g = 0; g <= 4; ++g) {
    std::uniform_int_distribution<int> coef(-5, 5), den(1, 4);
    std::uniform_int_distribution<WedgeElement::Mask> mask(0, (WedgeElement::Mask(1) << (2 * g)) - 1);
    for (int i = 0; i < 100; ++i) {
      WedgeElement x(g);
      for (int j = 0; j < 10; ++j) x.add_term(mask(rng), Rational(coef(rng), den(rng)));
      auto d = decompose(x);
      if (!(d.reconstruct() == x)) o.fail("round trip at g=" + std::to_string(g));
      for (const auto& row : d.parts)
        for (const auto& p : row)
          if (!contract(p).is_zero()) o.fail("non-primitive part at g=" + std::to_string(g));
    }
    for (int k = 0; k <= g; ++k) {
      auto kill = wedge_power(WedgeElement::gamma_omega(g), static_cast<unsigned>(g - k + 1), g);
      for (const auto& b : primitive_basis(g, k))
        if (!wedge(kill, b).is_zero())
          o.fail("gamma^{g-k+1} ^ primitive != 0 at g=" + std::to_string(g) + ", k=" + std::to_string(k));
    }
  }
  if (o.pass) o.detail = "identity g <= 6; 500 round trips; kill property on all primitive bases g <= 4";
  return o;
}

// ---------------------------------------------------------------- 5
Outcome quotient_spectra() {
  Outcome o;
  auto t0 = Clock::now();
  int ideals = 0;
  for (int n : {3, 5, 7}) {
    const int m = half_points(n);
    for (int g = 0; g <= 3; ++g) {
      for (const LambdaSequence& lambda : {LambdaSequence(), LambdaSequence().negated()}) {
        auto top = groebner(model_top_ideal(g, n, lambda));
        if (top.dimension() != 1) o.fail("top ideal dimension at (" + std::to_string(g) + "," + std::to_string(n) + ")");
        auto q = groebner(model_q_ideal(g, n, lambda));
        if (q.dimension() != static_cast<std::size_t>(g + m)) {
          o.fail("Q ideal dimension at (" + std::to_string(g) + "," + std::to_string(n) + ")");
          continue;
        }
        std::vector<long> expected;
        for (int i = 1; i <= g + m; ++i) expected.push_back(lambda(i));
        std::sort(expected.begin(), expected.end());
        auto spec = alpha_spectrum(q);
        bool ok = spec.size() == expected.size();
        for (std::size_t i = 0; ok && i < spec.size(); ++i)
          ok = spec[i].exact && *spec[i].exact == Scalar(expected[i]) && spec[i].alg_mult == 1 &&
               spec[i].geo_mult == 1;
        if (!ok) o.fail("alpha spectrum at (" + std::to_string(g) + "," + std::to_string(n) + ")");
        ideals += 2;
      }
    }
  }
  double dt = seconds_since(t0);
  if (dt >= 10.0) o.fail("runtime " + std::to_string(dt) + " s");
  if (o.pass) {
    std::ostringstream s;
    s << ideals << " ideals, g <= 3, n in {3,5,7}, both lambda signs, " << dt << " s";
    o.detail = s.str();
  }
  return o;
}

// ---------------------------------------------------------------- 6
Outcome rep_varieties() {
  Outcome o;
  struct Case { int g, n, eps; };
  const std::array<Case, 5> cases{{{0, 3, 1}, {0, 3, -1}, {0, 5, 1}, {1, 3, 1}, {1, 5, 1}}};
  double worst = 0.0;
  for (auto c : cases) {
    std::string tag = "(" + std::to_string(c.g) + "," + std::to_string(c.n) + "," + std::to_string(c.eps) + ")";
    try {
      auto r = solve(c.g, c.n, c.eps, 0);
      worst = std::max(worst, r.report.residual);
      if (!(r.report.residual < 1e-10)) o.fail(tag + " residual");
      auto ld = local_dimension(r.x);
      if (!ld.quotient_dim || *ld.quotient_dim != 6 * c.g + 2 * c.n - 6)
        o.fail(tag + " quotient dimension " + (ld.quotient_dim ? std::to_string(*ld.quotient_dim) : "?"));
    } catch (const convergence_error& e) {
      o.fail(tag + " " + e.what());
    }
  }
  double spread = 0.0;
  for (int eps : {1, -1}) {
    std::map<std::string, double> first;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      auto tr = solve(0, 3, eps, seed).report.traces;
      if (seed == 0) {
        first = tr;
        continue;
      }
      for (auto& [k, v] : first) spread = std::max(spread, std::abs(tr.at(k) - v));
    }
  }
  if (!(spread < 1e-8)) o.fail("(0,3) fingerprint spread " + std::to_string(spread));
  if (o.pass) {
    std::ostringstream s;
    s << "max residual " << worst << "; (0,3) fingerprint spread " << spread << " over 50 seeds";
    o.detail = s.str();
  }
  return o;
}

// ---------------------------------------------------------------- 7
Outcome floer_tables() {
  Outcome o;
  for (int g = 0; g <= 5; ++g)
    for (int n = 2; n <= 9; ++n) {
      std::vector<int> expected;
      for (int e = -(2 * g + n - 2); e <= 2 * g + n - 2; e += 2) expected.push_back(e);
      std::vector<int> got;
      for (const auto& e : spectrum(Space::U, g, n).entries) got.push_back(e.eigenvalue);
      if (got != expected) o.fail("U spectrum at (" + std::to_string(g) + "," + std::to_string(n) + ")");
    }
  for (int n = 1; n <= 12; ++n) {
    auto p = ahi_product(n);
    std::uint64_t total = 0, binom = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
      total += p[i].second;
      if (p[i].second != binom || p[i].first != -n + 2 * static_cast<int>(i))
        o.fail("AHI product at n=" + std::to_string(n));
      binom = binom * (n - i) / (i + 1);
    }
    if (total != (std::uint64_t(1) << n)) o.fail("AHI total at n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "U spectra g <= 5, 2 <= n <= 9; AHI n <= 12";
  return o;
}

// ---------------------------------------------------------------- 8
GradedPoly random_poly(const TablePtr& t, std::mt19937_64& rng, int terms, int parity) {
  std::uniform_int_distribution<int> coef(-3, 3), expo(0, 2), pick(0, 1);
  GradedPoly p(t);
  for (int i = 0; i < terms; ++i) {
    Exponents e(t->size(), 0);
    int odd = 0;
    for (std::size_t k = 0; k < t->size(); ++k) {
      const auto& gen = (*t)[k];
      if (gen.odd || gen.involution) {
        e[k] = static_cast<std::uint16_t>(pick(rng));
        if (gen.odd) odd += e[k];
      } else {
        e[k] = static_cast<std::uint16_t>(expo(rng) * pick(rng));
      }
    }
    if (parity >= 0 && odd % 2 != parity) continue;
    if (int c = coef(rng)) p += GradedPoly::monomial(t, e, Scalar(c));
  }
  return p;
}

Outcome algebra_laws() {
  Outcome o;
  std::mt19937_64 rng(8);
  int checks = 0;
  const std::array<std::pair<int, int>, 4> shapes{{{1, 2}, {2, 1}, {2, 3}, {3, 2}}};
  for (int i = 0; i < 10000; ++i) {
    auto [g, n] = shapes[i % shapes.size()];
    auto t = GeneratorTable::algebra(g, n, i % 2 ? GammaMode::expanded : GammaMode::independent);
    int pa = static_cast<int>(rng() % 2), pb = static_cast<int>(rng() % 2);
    GradedPoly a = random_poly(t, rng, 3, pa), b = random_poly(t, rng, 3, pb), c = random_poly(t, rng, 3, -1);
    Scalar sign(pa * pb ? -1 : 1);
    if (!(a * b == b * a * sign)) o.fail("graded commutativity");
    if (!((a * b) * c == a * (b * c))) o.fail("associativity");
    std::vector<int> subset;
    for (int k = 1; k <= n; ++k)
      if (rng() % 2) subset.push_back(k);
    if (!(flip(subset, flip(subset, c)) == c)) o.fail("flip involution");
    if (!(flip(subset, a * c) == flip(subset, a) * flip(subset, c))) o.fail("flip homomorphism");
    if (!(flip(subset, a + c) == flip(subset, a) + flip(subset, c))) o.fail("flip additivity");
    checks += 5;
  }
  if (o.pass) o.detail = std::to_string(checks) + " exact checks";
  return o;
}

// ---------------------------------------------------------------- 9
std::string run_binary(const std::string& exe, const std::string& args) {
  std::string cmd = "\"" + exe + "\" " + args + " 2>&1";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return out + "\n<status " + std::to_string(status) + ">";
}

std::string run_in_process(const std::string& args) {
  std::istringstream in(args);
  std::vector<std::string> words{"floerkit"};
  for (std::string w; in >> w;) words.push_back(w);
  std::vector<const char*> argv;
  for (auto& w : words) argv.push_back(w.c_str());
  std::ostringstream out, err;
  int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str() + err.str() + "\n<status " + std::to_string(code) + ">";
}

Outcome determinism(const std::string& exe) {
  Outcome o;
  const std::vector<std::string> commands{
      "mumford --g 2 --n 3",
      "mumford --g 1 --n 5 --expand-gamma --format text",
      "xi --k 6 --n 7",
      "spectrum --space V --g 2 --n 3 --format tsv",
      "lefschetz --g 4",
      "repvariety --g 1 --n 3 --eps 1 --seed 3",
      "repvariety --g 0 --n 5 --eps 1 --seed 11 --format tsv",
      "grr-check --g 1 --m 2 --T 12 --seed 5",
      "quotient --model q --g 2 --n 5 --both-signs",
      "ahi --n 9",
      "thurston --surface 1,3 --surface 2,0",
      "spectrum --space V --g 0 --n 1",
  };
  for (const auto& c : commands) {
    std::string a = exe.empty() ? run_in_process(c) : run_binary(exe, c);
    std::string b = exe.empty() ? run_in_process(c) : run_binary(exe, c);
    if (a != b) o.fail("differs: " + c);
  }
  if (o.pass)
    o.detail = std::to_string(commands.size()) + " commands, " +
               (exe.empty() ? "in process" : "separate processes");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string exe = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"mumford recursion vs closed form", mumford_closed_form},
      {"mumford structure", mumford_structure},
      {"GRR pipeline", grr_pipeline},
      {"Lefschetz decomposition", lefschetz},
      {"quotient spectra", quotient_spectra},
      {"representation varieties", rep_varieties},
      {"Floer tables", floer_tables},
      {"algebra laws", algebra_laws},
      {"CLI determinism", [&] { return determinism(exe); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << ": "
              << o.detail << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
