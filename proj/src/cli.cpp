#include "floerkit/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "floerkit/chern_series.hpp"
#include "floerkit/errors.hpp"
#include "floerkit/floer_tables.hpp"
#include "floerkit/groebner.hpp"
#include "floerkit/lefschetz.hpp"
#include "floerkit/mumford.hpp"
#include "floerkit/rep_variety.hpp"

namespace floerkit {

namespace {

using Json = nlohmann::ordered_json;

// One report, renderable as JSON, TSV (header + rows) or aligned text.
struct Report {
  Json json;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> lines;  // text-mode preamble
};

std::string fmt_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "unknown";
  if (v.is_number_float()) return fmt_double(v.get<double>());
  return v.dump();
}

void add_row(Report& r, const Json& row) {
  if (r.columns.empty())
    for (const auto& [key, v] : row.items()) r.columns.push_back(key);
  std::vector<std::string> cells;
  for (const auto& c : r.columns) cells.push_back(row.contains(c) ? cell(row[c]) : "");
  r.rows.push_back(std::move(cells));
}

void emit(const Report& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << r.json.dump(2) << "\n";
    return;
  }
  if (format == "tsv") {
    std::vector<std::string> cols = r.columns;
    std::vector<std::vector<std::string>> rows = r.rows;
    if (cols.empty()) {
      // scalar record: one row from the top-level fields
      std::vector<std::string> one;
      for (const auto& [key, v] : r.json.items()) {
        if (v.is_structured()) continue;
        cols.push_back(key);
        one.push_back(cell(v));
      }
      rows.push_back(std::move(one));
    }
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "\t" : "") << cols[i];
    out << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << row[i];
      out << "\n";
    }
    return;
  }
  for (const auto& l : r.lines) out << l << "\n";
  if (r.columns.empty()) {
    if (r.lines.empty())
      for (const auto& [key, v] : r.json.items())
        if (!v.is_structured()) out << key << ": " << cell(v) << "\n";
    return;
  }
  std::vector<std::size_t> width(r.columns.size());
  for (std::size_t i = 0; i < r.columns.size(); ++i) width[i] = r.columns[i].size();
  for (const auto& row : r.rows)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  auto print = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += "  ";
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size(), ' ');
    }
    out << line << "\n";
  };
  print(r.columns);
  for (const auto& row : r.rows) print(row);
}

Json scalar_json(const Scalar& s) {
  if (s.is_real() && s.re().get_den() == 1 && s.re().get_num().fits_slong_p())
    return s.re().get_num().get_si();
  return s.to_string();
}

MonomialOrder parse_order(const std::string& s) {
  if (s == "grevlex") return MonomialOrder::grevlex;
  if (s == "lex") return MonomialOrder::lex;
  throw precondition_error("unknown monomial order '" + s + "'");
}

// ---------------------------------------------------------------- subcommands

Report cmd_mumford(const RunConfig& c) {
  MumfordRelation rel = mumford_relation(c.g, c.n);
  GradedPoly p = c.raw ? rel.raw : rel.normalized;
  if (c.expand_gamma) p = rebase(p, GeneratorTable::algebra(c.g, 0, GammaMode::expanded));
  Report r;
  r.json["g"] = c.g;
  r.json["n"] = c.n;
  r.json["m"] = rel.m;
  r.json["degree"] = rel.degree;
  r.json["leading_coeff"] = scalar_json(rel.normalized.coefficient(
      Exponents{static_cast<std::uint16_t>(rel.g + rel.m), 0, 0}));
  r.json["num_terms"] = p.num_terms();
  r.json["normalization"] = c.raw ? "xi_{g+m,n}" : "(g+m)! xi_{g+m,n}";
  r.json["gamma"] = c.expand_gamma ? "expanded" : "generator";
  r.json["polynomial"] = to_text(p);
  r.json["pretty"] = to_pretty(p);
  r.json["paper_ref"] = "Mumford relation f = (g+m)! xi_{g+m,n}; coefficient of alpha^{g+m} is 1";
  r.lines.push_back(to_pretty(p));
  return r;
}

Report cmd_xi(const RunConfig& c) {
  require(c.k.has_value(), "xi needs --k");
  require(*c.k >= 0, "xi needs k >= 0");
  GradedPoly p = xi(*c.k, c.n);
  if (c.expand_gamma) p = rebase(p, GeneratorTable::algebra(c.g, 0, GammaMode::expanded));
  Report r;
  r.json["k"] = *c.k;
  r.json["n"] = c.n;
  r.json["m"] = half_points(c.n);
  r.json["degree"] = 2 * *c.k;
  r.json["num_terms"] = p.num_terms();
  r.json["polynomial"] = to_text(p);
  r.json["pretty"] = to_pretty(p);
  r.json["paper_ref"] =
      "(k+1) xi_{k+1} = alpha xi_k + (m-k) beta xi_{k-1} - (gamma/2) xi_{k-2}, xi_0 = 1, xi_1 = alpha";
  r.lines.push_back(to_pretty(p));
  return r;
}

Report cmd_spectrum(const RunConfig& c) {
  require(!c.space.empty(), "spectrum needs --space (V, U, W2 or AHI)");
  SpectrumReport s = spectrum(parse_space(c.space), c.g, c.n);
  Report r;
  r.json["space"] = to_string(s.space);
  r.json["g"] = s.g;
  r.json["n"] = s.n;
  r.json["paper_ref"] = s.paper_ref;
  Json rows = Json::array();
  for (const auto& e : s.entries) {
    Json row;
    row[s.space == Space::AHI ? "f" : "eigenvalue"] = e.eigenvalue;
    row[s.space == Space::AHI ? "dimension" : "multiplicity"] =
        e.multiplicity ? Json(*e.multiplicity) : Json("unknown");
    row["paper_ref"] = s.paper_ref;
    add_row(r, row);
    rows.push_back(row);
  }
  r.json["entries"] = rows;
  return r;
}

Report cmd_lefschetz(const RunConfig& c) {
  Report r;
  r.json["g"] = c.g;
  Json rows = Json::array();
  Rational weighted(0);
  for (int k = 0; k <= c.g; ++k) {
    if (c.k && *c.k != k) continue;
    long d = primitive_dimension(c.g, k);
    long computed = static_cast<long>(primitive_basis(c.g, k).size());
    Json row;
    row["k"] = k;
    row["primitive_dim"] = d;
    row["nullspace_dim"] = computed;
    row["weight"] = c.g - k + 1;
    row["paper_ref"] = "Lambda^k_0 = ker of the symplectic contraction on Lambda^k W";
    add_row(r, row);
    rows.push_back(row);
    weighted += Rational(d * (c.g - k + 1));
  }
  r.json["rows"] = rows;
  if (!c.k) {
    mpz_class four_g;
    mpz_ui_pow_ui(four_g.get_mpz_t(), 4, static_cast<unsigned long>(c.g));
    r.json["weighted_sum"] = weighted.get_num().get_str();
    r.json["four_pow_g"] = four_g.get_str();
    r.json["identity_holds"] = weighted == Rational(four_g);
  }
  r.json["paper_ref"] = "Lambda*W = direct sum of gamma^j Lambda^k_0, 0 <= j <= g-k";
  return r;
}

Report cmd_repvariety(const RunConfig& c) {
  SolveResult res = solve(c.g, c.n, c.epsilon, c.seed);
  const SolveReport& ld = res.report;
  Report r;
  r.json["g"] = c.g;
  r.json["n"] = c.n;
  r.json["epsilon"] = c.epsilon;
  r.json["seed"] = c.seed;
  r.json["residual"] = res.report.residual;
  r.json["restarts"] = res.report.restarts;
  r.json["jacobian_rank"] = ld.jacobian_rank ? Json(*ld.jacobian_rank) : Json(nullptr);
  r.json["raw_nullity"] = ld.raw_nullity ? Json(*ld.raw_nullity) : Json(nullptr);
  r.json["quotient_dim"] = ld.quotient_dim ? Json(*ld.quotient_dim) : Json(nullptr);
  r.json["expected_dim"] = expected_quotient_dim(c.g, c.n);
  Json traces = Json::object();
  for (const auto& [k, v] : ld.traces) traces[k] = std::abs(v) < 1e-12 ? 0.0 : v;
  r.json["traces"] = traces;
  r.json["paper_ref"] = "dim R_{g,n} = 6g+2n-6";
  return r;
}

Report cmd_grr(const RunConfig& c) {
  require(c.m.has_value(), "grr-check needs --m");
  int T = c.T.value_or(2 * (c.g + *c.m) + 4);
  R1CheckReport rep = r1_closed_form_check(c.g, *c.m, T, c.samples, c.seed);
  Report r;
  r.json["g"] = rep.g;
  r.json["m"] = rep.m;
  r.json["T"] = T;
  r.json["samples"] = rep.samples;
  r.json["rank"] = rep.rank;
  r.json["t"] = rep.t;
  r.json["max_residual"] = rep.max_residual;
  r.json["tail_estimate"] = rep.tail_estimate;
  r.json["tol"] = c.tol;
  const bool pass = rep.max_residual < c.tol + rep.tail_estimate;
  r.json["pass"] = pass;
  r.json["paper_ref"] =
      "c_t(R^1 pi_*)/[J] = (t/2)^g F(t) modulo gamma^{g+1}, via GRR and the slant product";
  if (!pass)
    throw convergence_error("grr-check residual " + fmt_double(rep.max_residual) +
                            " exceeds tolerance " + fmt_double(c.tol) + " plus truncation tail " +
                            fmt_double(rep.tail_estimate));
  return r;
}

Json spectrum_json(const std::vector<Eigenvalue>& spec) {
  Json out = Json::array();
  for (const auto& e : spec) {
    Json row;
    if (e.exact)
      row["value"] = scalar_json(*e.exact);
    else if (std::abs(e.value.imag()) < 1e-12)
      row["value"] = e.value.real();
    else
      row["value"] = Json::array({e.value.real(), e.value.imag()});
    row["exact"] = e.exact.has_value();
    row["alg_mult"] = e.alg_mult;
    row["geo_mult"] = e.geo_mult;
    out.push_back(row);
  }
  return out;
}

Report cmd_quotient(const RunConfig& c) {
  require(c.ideal_file.empty() != c.model.empty(), "quotient needs exactly one of --ideal or --model");
  MonomialOrder order = parse_order(c.order);
  LambdaSequence lambda = LambdaSequence::parse(c.lambda_signs);
  auto build = [&](const LambdaSequence& lam) {
    if (!c.ideal_file.empty()) {
      std::ifstream in(c.ideal_file);
      require(in.good(), "cannot read ideal file '" + c.ideal_file + "'");
      std::stringstream ss;
      ss << in.rdbuf();
      return parse_ideal(GeneratorTable::subring(c.n), ss.str(), order);
    }
    CommIdeal base = c.model == "q"     ? model_q_ideal(c.g, c.n, lam)
                     : c.model == "top" ? model_top_ideal(c.g, c.n, lam)
                     : c.model == "max" ? maximal_ideal(c.n)
                                        : model_q_ideal(c.g, c.n, lam);
    if (c.model == "p" || c.model == "h") {
      auto gens = base.generators();
      gens.back() = c.model == "p" ? spectral_P(c.g, c.n, c.N, lam) : spectral_H(c.g, c.n, c.M, lam);
      base = CommIdeal(base.table(), gens);
    } else {
      require(c.model == "q" || c.model == "top" || c.model == "max",
              "unknown model '" + c.model + "' (expected q, p, h, top or max)");
    }
    return base.with_order(order);
  };
  auto describe = [&](const CommIdeal& ideal, Json& j) {
    QuotientBasis q = groebner(ideal);
    Json gens = Json::array(), gb = Json::array();
    for (const auto& f : ideal.generators()) gens.push_back(to_text(f));
    for (const auto& f : q.groebner_basis()) gb.push_back(to_text(f));
    j["generators"] = gens;
    j["groebner_basis"] = gb;
    if (!q.is_finite()) {
      j["dimension"] = "infinite";
      return;
    }
    j["dimension"] = q.dimension();
    Json sm = Json::array();
    for (const auto& p : q.standard_polys()) sm.push_back(to_text(p));
    j["standard_monomials"] = sm;
    j["spectrum"] = spectrum_json(alpha_spectrum(q));
  };
  Report r;
  r.json["g"] = c.g;
  r.json["n"] = c.n;
  r.json["order"] = c.order;
  if (!c.model.empty()) {
    r.json["model"] = c.model;
    r.json["lambda"] = lambda.describe();
  }
  describe(build(lambda), r.json);
  if (c.both_signs && !c.model.empty()) {
    Json neg;
    neg["lambda"] = lambda.negated().describe();
    describe(build(lambda.negated()), neg);
    r.json["negated"] = neg;
  }
  r.json["paper_ref"] = "multiplication by alpha on the quotient; top eigenspace has dimension 1";
  if (r.json.contains("spectrum"))
    for (const auto& e : r.json["spectrum"]) {
      Json row = e;
      row["paper_ref"] = r.json["paper_ref"];
      add_row(r, row);
    }
  return r;
}

Report cmd_ahi(const RunConfig& c) {
  Report r;
  r.json["n"] = c.n;
  Json rows = Json::array();
  std::uint64_t total = 0;
  for (auto [f, d] : ahi_product(c.n)) {
    Json row;
    row["f"] = f;
    row["dimension"] = d;
    row["paper_ref"] = "AHI(K_n) = AHI(K_1)^{tensor n}; AHI(K_1) is 1-dimensional at f = +-1";
    add_row(r, row);
    rows.push_back(row);
    total += d;
  }
  r.json["entries"] = rows;
  r.json["total"] = total;
  r.json["paper_ref"] = "AHI(K_n) = AHI(K_1)^{tensor n}";
  return r;
}

Report cmd_thurston(const RunConfig& c) {
  std::vector<MeridionalSurface> surfaces;
  for (const auto& s : c.surfaces) {
    auto comma = s.find(',');
    require(comma != std::string::npos, "surface must be given as g,n: '" + s + "'");
    try {
      surfaces.push_back({std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))});
    } catch (const std::logic_error&) {
      throw precondition_error("surface must be given as g,n: '" + s + "'");
    }
  }
  ThurstonReport rep = thurston_bound(surfaces);
  Report r;
  r.json["bound"] = rep.bound;
  r.json["minimizer"] = Json::array({surfaces[rep.minimizer].g, surfaces[rep.minimizer].n});
  r.json["statement"] = rep.statement;
  r.json["paper_ref"] = rep.paper_ref;
  r.lines.push_back(rep.statement);
  return r;
}

}  // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    require(c.format == "json" || c.format == "tsv" || c.format == "text",
            "unknown format '" + c.format + "'");
    Report r;
    const auto& s = c.subcommand;
    if (s == "mumford") r = cmd_mumford(c);
    else if (s == "xi") r = cmd_xi(c);
    else if (s == "spectrum") r = cmd_spectrum(c);
    else if (s == "lefschetz") r = cmd_lefschetz(c);
    else if (s == "repvariety") r = cmd_repvariety(c);
    else if (s == "grr-check") r = cmd_grr(c);
    else if (s == "quotient") r = cmd_quotient(c);
    else if (s == "ahi") r = cmd_ahi(c);
    else if (s == "thurston") r = cmd_thurston(c);
    else {
      err << "floerkit: unknown subcommand '" << s << "'\n";
      return kExitUsage;
    }
    emit(r, c.format, out);
    return kExitOk;
  } catch (const convergence_error& e) {
    err << "floerkit: " << e.what() << "\n";
    return kExitConvergence;
  } catch (const std::exception& e) {
    err << "floerkit: " << e.what() << "\n";
    return kExitPrecondition;
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Cohomology-ring and Floer-spectrum toolkit", "floerkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", c.format, "json | tsv | text")->check(CLI::IsMember({"json", "tsv", "text"}));

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "json | tsv | text")
        ->check(CLI::IsMember({"json", "tsv", "text"}));
    return sub;
  };
  auto* mumford = common(app.add_subcommand("mumford", "Mumford relation (g+m)! xi_{g+m,n}"));
  mumford->add_option("--g", c.g, "genus")->required();
  mumford->add_option("--n", c.n, "number of marked points (odd)")->required();
  mumford->add_flag("--expand-gamma", c.expand_gamma, "write gamma as sum psi_j psi_{j+g}");
  mumford->add_flag("--raw", c.raw, "print xi_{g+m,n} without the factorial");

  auto* xi_cmd = common(app.add_subcommand("xi", "xi_{k,n} from the recursion"));
  xi_cmd->add_option("--k", c.k, "index")->required();
  xi_cmd->add_option("--n", c.n, "number of marked points (odd)")->required();
  xi_cmd->add_option("--g", c.g, "genus used with --expand-gamma");
  xi_cmd->add_flag("--expand-gamma", c.expand_gamma, "write gamma as sum psi_j psi_{j+g}");

  auto* spec = common(app.add_subcommand("spectrum", "eigenvalue table for V, U, W2 or AHI"));
  spec->add_option("--space", c.space, "V | U | W2 | AHI")->required();
  spec->add_option("--g", c.g, "genus");
  spec->add_option("--n", c.n, "number of marked points");

  auto* lef = common(app.add_subcommand("lefschetz", "primitive dimensions of Lambda*W"));
  lef->add_option("--g", c.g, "genus")->required();
  lef->add_option("--k", c.k, "single primitive degree");

  auto* rep = common(app.add_subcommand("repvariety", "solve for a point of R_{g,n}"));
  rep->add_option("--g", c.g, "genus")->required();
  rep->add_option("--n", c.n, "number of marked points")->required();
  rep->add_option("--eps", c.epsilon, "target sign +1 or -1");
  rep->add_option("--seed", c.seed, "random seed");

  auto* grr = common(app.add_subcommand("grr-check", "GRR pipeline against the closed form"));
  grr->add_option("--g", c.g, "genus")->required();
  grr->add_option("--m", c.m, "bundle twist m")->required();
  grr->add_option("--T", c.T, "truncation order (default 2(g+m)+4)");
  grr->add_option("--tol", c.tol, "residual tolerance");
  grr->add_option("--samples", c.samples, "number of sample points");
  grr->add_option("--seed", c.seed, "random seed");

  auto* quot = common(app.add_subcommand("quotient", "Groebner basis, dimension and alpha-spectrum"));
  quot->add_option("--ideal", c.ideal_file, "ideal file, one generator per line");
  quot->add_option("--model", c.model, "q | p | h | top | max");
  quot->add_option("--g", c.g, "genus");
  quot->add_option("--n", c.n, "number of marked points");
  quot->add_option("--N", c.N, "exponent of P");
  quot->add_option("--M", c.M, "exponent of H");
  quot->add_option("--order", c.order, "grevlex | lex");
  quot->add_option("--lambda-signs", c.lambda_signs, "alternating | positive | negative | +,-,...");
  quot->add_flag("--both-signs", c.both_signs, "also report the globally negated lambda");

  auto* ahi = common(app.add_subcommand("ahi", "graded dimensions of AHI(K_n)"));
  ahi->add_option("--n", c.n, "number of strands")->required();

  auto* th = common(app.add_subcommand("thurston", "2g+n bound over meridional surfaces"));
  th->add_option("--surface", c.surfaces, "g,n (repeatable)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  for (auto* sub : app.get_subcommands()) c.subcommand = sub->get_name();
  return run(c, out, err);
}

}  // namespace floerkit
