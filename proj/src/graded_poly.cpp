#include "floerkit/graded_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "floerkit/errors.hpp"

namespace floerkit {

namespace {

std::string subscript(int i) {
  static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string s;
  for (char c : std::to_string(i)) s += digits[c - '0'];
  return s;
}

std::string superscript(int i) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s;
  for (char c : std::to_string(i)) s += digits[c - '0'];
  return s;
}

int term_degree(const GeneratorTable& t, const Exponents& e) {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (!t[i].involution) d += t[i].degree * e[i];
  return d;
}

void check_same_table(const GradedPoly& a, const GradedPoly& b) {
  if (a.table() != b.table() && !(*a.table() == *b.table()))
    throw precondition_error("polynomials live over different generator tables");
}

}  // namespace

// ---------------------------------------------------------------- tables

GeneratorTable::GeneratorTable(Kind kind, int g, int n, GammaMode mode)
    : kind_(kind), g_(g), n_(n), mode_(mode) {
  require(g >= 0 && n >= 0, "genus and number of marked points must be nonnegative");
  gens_.push_back({"alpha", "α", 2, false, false});
  gens_.push_back({"beta", "β", 4, false, false});
  if (kind == Kind::fiber_base) {
    gens_.push_back({"gamma", "γ", 6, false, false});
    gens_.push_back({"A", "A", 2, false, false});
    gens_.push_back({"B", "B", 4, false, false});
    return;
  }
  if (kind == Kind::subring || mode == GammaMode::independent)
    gens_.push_back({"gamma", "γ", 6, false, false});
  for (int i = 1; i <= n; ++i)
    gens_.push_back({"delta" + std::to_string(i), "δ" + subscript(i), 2, false, false});
  if (kind == Kind::algebra) {
    for (int j = 1; j <= 2 * g; ++j)
      gens_.push_back({"psi" + std::to_string(j), "ψ" + subscript(j), 3, true, false});
    gens_.push_back({"eps", "ε", 2, false, true});
  }
}

std::shared_ptr<const GeneratorTable> GeneratorTable::algebra(int g, int n, GammaMode mode) {
  return std::shared_ptr<const GeneratorTable>(new GeneratorTable(Kind::algebra, g, n, mode));
}

std::shared_ptr<const GeneratorTable> GeneratorTable::subring(int n) {
  return std::shared_ptr<const GeneratorTable>(
      new GeneratorTable(Kind::subring, 0, n, GammaMode::independent));
}

std::shared_ptr<const GeneratorTable> GeneratorTable::fiber_base() {
  static const auto table = std::shared_ptr<const GeneratorTable>(
      new GeneratorTable(Kind::fiber_base, 0, 0, GammaMode::independent));
  return table;
}

std::optional<std::size_t> GeneratorTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return i;
  return std::nullopt;
}

std::size_t GeneratorTable::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw precondition_error("unknown generator '" + std::string(name) + "'");
  return *i;
}

std::size_t GeneratorTable::delta(int i) const {
  require(i >= 1 && i <= n_, "marked-point index " + std::to_string(i) + " out of range 1.." +
                                 std::to_string(n_));
  return index("delta" + std::to_string(i));
}

std::size_t GeneratorTable::psi(int j) const {
  require(j >= 1 && j <= 2 * g_ && kind_ == Kind::algebra,
          "psi index " + std::to_string(j) + " out of range");
  return index("psi" + std::to_string(j));
}

bool GeneratorTable::has_odd() const {
  return std::any_of(gens_.begin(), gens_.end(), [](const Generator& g) { return g.odd; });
}

// ---------------------------------------------------------------- monomials

int multiply_monomials(const GeneratorTable& table, const Exponents& a, const Exponents& b,
                       Exponents& out) {
  out.assign(a.size(), 0);
  int swaps = 0;
  int odd_b_seen = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Generator& gen = table[i];
    if (gen.odd) {
      if (a[i] && b[i]) return 0;
      if (a[i]) swaps += odd_b_seen;
      if (b[i]) ++odd_b_seen;
      out[i] = static_cast<std::uint16_t>(a[i] + b[i]);
    } else if (gen.involution) {
      out[i] = static_cast<std::uint16_t>((a[i] + b[i]) % 2);
    } else {
      unsigned e = unsigned(a[i]) + b[i];
      if (e > 0xFFFFU) throw std::overflow_error("exponent overflow");
      out[i] = static_cast<std::uint16_t>(e);
    }
  }
  return (swaps % 2 == 0) ? 1 : -1;
}

// ---------------------------------------------------------------- GradedPoly

GradedPoly::GradedPoly(TablePtr table) : table_(std::move(table)) {}

GradedPoly::GradedPoly(TablePtr table, const Scalar& c) : table_(std::move(table)) {
  if (!c.is_zero()) terms_.emplace(Exponents(table_->size(), 0), c);
}

GradedPoly GradedPoly::generator(TablePtr table, std::size_t index) {
  require(index < table->size(), "generator index out of range");
  Exponents e(table->size(), 0);
  e[index] = 1;
  GradedPoly p(std::move(table));
  p.terms_.emplace(std::move(e), Scalar(1));
  return p;
}

GradedPoly GradedPoly::generator(TablePtr table, std::string_view name) {
  std::size_t i = table->index(name);
  return generator(std::move(table), i);
}

GradedPoly GradedPoly::monomial(TablePtr table, Exponents e, const Scalar& c) {
  require(e.size() == table->size(), "exponent vector length does not match generator table");
  GradedPoly p(table);
  if (c.is_zero()) return p;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if ((*table)[i].odd && e[i] > 1) return p;
    if ((*table)[i].involution) e[i] %= 2;
  }
  p.terms_.emplace(std::move(e), c);
  return p;
}

bool GradedPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](auto x) { return x == 0; });
}

Scalar GradedPoly::constant_term() const {
  return coefficient(Exponents(table_->size(), 0));
}

Scalar GradedPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::optional<int> GradedPoly::homogeneous_degree() const {
  std::optional<int> deg;
  for (const auto& [m, c] : terms_) {
    int d = term_degree(*table_, m);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

bool GradedPoly::is_homogeneous() const {
  return is_zero() || homogeneous_degree().has_value();
}

bool GradedPoly::is_even() const {
  for (const auto& [m, c] : terms_) {
    int odd = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
      if ((*table_)[i].odd) odd += m[i];
    if (odd % 2) return false;
  }
  return true;
}

int GradedPoly::max_exponent(std::size_t index) const {
  int e = 0;
  for (const auto& [m, c] : terms_) e = std::max<int>(e, m[index]);
  return e;
}

void GradedPoly::add_term(const Exponents& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
  check_same_table(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
  check_same_table(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GradedPoly& GradedPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

GradedPoly& GradedPoly::operator*=(const GradedPoly& o) {
  *this = *this * o;
  return *this;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  check_same_table(a, b);
  GradedPoly out(a.table_);
  Exponents prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      int sign = multiply_monomials(*a.table_, ma, mb, prod);
      if (sign == 0) continue;
      Scalar c = ca * cb;
      if (sign < 0) c = -c;
      out.add_term(prod, c);
    }
  }
  return out;
}

bool operator==(const GradedPoly& a, const GradedPoly& b) {
  return *a.table_ == *b.table_ && a.terms_ == b.terms_;
}

GradedPoly GradedPoly::pow(unsigned e) const {
  GradedPoly result(table_, Scalar(1));
  GradedPoly base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

GradedPoly mul(const GradedPoly& a, const GradedPoly& b) { return a * b; }

// ---------------------------------------------------------------- homomorphisms

GradedPoly substitute(const GradedPoly& p, std::span<const GradedPoly> images) {
  const auto& table = p.table();
  require(images.size() == table->size(), "substitution needs one image per generator");
  // cached powers per generator
  std::vector<std::vector<GradedPoly>> powers(table->size());
  GradedPoly out(images.empty() ? table : images[0].table());
  for (const auto& [m, c] : p.terms()) {
    GradedPoly term(out.table(), c);
    for (std::size_t i = 0; i < m.size() && !term.is_zero(); ++i) {
      if (m[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(GradedPoly(out.table(), Scalar(1)));
      while (cache.size() <= m[i]) cache.push_back(cache.back() * images[i]);
      term = term * cache[m[i]];
    }
    out += term;
  }
  return out;
}

GradedPoly flip(std::span<const int> subset, const GradedPoly& p) {
  const auto& table = p.table();
  require(table->kind() != GeneratorTable::Kind::fiber_base || subset.empty(),
          "flip symmetry needs marked-point generators");
  std::vector<GradedPoly> images;
  images.reserve(table->size());
  for (std::size_t i = 0; i < table->size(); ++i) images.push_back(GradedPoly::generator(table, i));
  std::vector<bool> seen(static_cast<std::size_t>(table->points()) + 1, false);
  for (int i : subset) {
    require(i >= 1 && i <= table->points(),
            "flip index " + std::to_string(i) + " out of range 1.." + std::to_string(table->points()));
    require(!seen[static_cast<std::size_t>(i)], "flip index " + std::to_string(i) + " repeated");
    seen[static_cast<std::size_t>(i)] = true;
    std::size_t d = table->delta(i);
    images[d] = -GradedPoly::generator(table, d);
    images[0] += GradedPoly::generator(table, d);
  }
  return substitute(p, images);
}

GradedPoly gamma_element(const TablePtr& table) {
  if (auto i = table->find("gamma")) return GradedPoly::generator(table, *i);
  GradedPoly g(table);
  for (int j = 1; j <= table->genus(); ++j)
    g += GradedPoly::generator(table, table->psi(j)) *
         GradedPoly::generator(table, table->psi(j + table->genus()));
  return g;
}

GradedPoly rebase(const GradedPoly& p, const TablePtr& target) {
  const auto& src = p.table();
  std::vector<GradedPoly> images;
  images.reserve(src->size());
  for (std::size_t i = 0; i < src->size(); ++i) {
    const auto& name = (*src)[i].name;
    if (auto j = target->find(name)) {
      images.push_back(GradedPoly::generator(target, *j));
    } else if (name == "gamma" && target->kind() == GeneratorTable::Kind::algebra) {
      images.push_back(gamma_element(target));
    } else if (p.max_exponent(i) == 0) {
      images.push_back(GradedPoly(target));  // unused
    } else {
      throw precondition_error("generator '" + name + "' has no counterpart in target table");
    }
  }
  return substitute(p, images);
}

std::complex<double> eval_numeric(const GradedPoly& p, const Assignment& values) {
  const auto& table = *p.table();
  std::vector<std::optional<std::complex<double>>> val(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (p.max_exponent(i) == 0) continue;
    require(!table[i].odd, "cannot evaluate odd generator '" + table[i].name + "' numerically");
    auto it = values.find(table[i].name);
    require(it != values.end(), "no value assigned to generator '" + table[i].name + "'");
    val[i] = it->second;
  }
  std::complex<double> sum = 0.0;
  for (const auto& [m, c] : p.terms()) {
    std::complex<double> term = c.to_complex();
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) term *= std::pow(*val[i], static_cast<int>(m[i]));
    sum += term;
  }
  return sum;
}

// ---------------------------------------------------------------- text format

namespace {

// Terms in print order: higher degree first, then reverse lexicographic on exponents.
std::vector<const GradedPoly::Terms::value_type*> print_order(const GradedPoly& p) {
  std::vector<const GradedPoly::Terms::value_type*> order;
  for (const auto& t : p.terms()) order.push_back(&t);
  const auto& table = *p.table();
  std::stable_sort(order.begin(), order.end(), [&](auto* x, auto* y) {
    int dx = term_degree(table, x->first);
    int dy = term_degree(table, y->first);
    if (dx != dy) return dx > dy;
    return x->first > y->first;
  });
  return order;
}

}  // namespace

std::string to_text(const GradedPoly& p) {
  if (p.is_zero()) return "0";
  const auto& table = *p.table();
  std::string out;
  bool first = true;
  for (const auto* t : print_order(p)) {
    if (!first) out += " + ";
    first = false;
    out += t->second.to_string();
    for (std::size_t i = 0; i < t->first.size(); ++i) {
      if (t->first[i] == 0) continue;
      out += " * " + table[i].name;
      if (t->first[i] > 1) out += "^" + std::to_string(t->first[i]);
    }
  }
  return out;
}

std::string to_pretty(const GradedPoly& p) {
  if (p.is_zero()) return "0";
  const auto& table = *p.table();
  std::string out;
  bool first = true;
  for (const auto* t : print_order(p)) {
    Scalar c = t->second;
    bool negative = c.is_real() && sgn(c.re()) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "−";
    } else {
      out += negative ? " − " : " + ";
    }
    first = false;
    bool constant = std::all_of(t->first.begin(), t->first.end(), [](auto e) { return e == 0; });
    if (!c.is_one() || constant) {
      if (!c.is_real())
        out += c.to_string();
      else if (c.re().get_den() != 1 && !constant)
        out += "(" + c.to_string() + ")";
      else
        out += c.to_string();
    }
    for (std::size_t i = 0; i < t->first.size(); ++i) {
      if (t->first[i] == 0) continue;
      out += table[i].pretty;
      if (t->first[i] > 1) out += superscript(t->first[i]);
    }
  }
  return out;
}

namespace {

class PolyParser {
public:
  PolyParser(const TablePtr& table, std::string_view text) : table_(table), s_(text) {}

  GradedPoly parse() {
    skip_ws();
    if (pos_ == s_.size()) throw error("empty polynomial");
    GradedPoly sum(table_);
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (!first) {
        char op = s_[pos_];
        if (op != '+' && op != '-') throw error("expected '+' between terms");
        if (op == '-') sign = -1;
        ++pos_;
      }
      first = false;
      GradedPoly t = term();
      if (sign < 0) t = -t;
      sum += t;
    }
    return sum;
  }

private:
  precondition_error error(const std::string& what) const {
    return precondition_error("polynomial parse error at offset " + std::to_string(pos_) + ": " +
                              what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  GradedPoly term() {
    GradedPoly t(table_, Scalar(1));
    skip_ws();
    while (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      if (s_[pos_] == '-') t = -t;
      ++pos_;
      skip_ws();
    }
    t = t * factor();
    while (true) {
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        t = t * factor();
      } else {
        break;
      }
    }
    return t;
  }

  GradedPoly factor() {
    skip_ws();
    if (pos_ == s_.size()) throw error("expected factor");
    char c = s_[pos_];
    if (c == '(') {
      std::size_t close = s_.find(')', pos_);
      if (close == std::string_view::npos) throw error("unterminated '('");
      Scalar v = Scalar::parse(s_.substr(pos_, close - pos_ + 1));
      pos_ = close + 1;
      return GradedPoly(table_, v);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t b = pos_;
      while (pos_ < s_.size() &&
             (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
        ++pos_;
      return GradedPoly(table_, Scalar::parse(s_.substr(b, pos_ - b)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t b = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name(s_.substr(b, pos_ - b));
      auto idx = table_->find(name);
      GradedPoly base = idx ? GradedPoly::generator(table_, *idx)
                            : (name == "gamma" ? gamma_element(table_) : GradedPoly(table_));
      if (!idx && name != "gamma") throw error("unknown generator '" + name + "'");
      skip_ws();
      unsigned e = 1;
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        skip_ws();
        std::size_t eb = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (eb == pos_) throw error("expected exponent");
        e = static_cast<unsigned>(std::stoul(std::string(s_.substr(eb, pos_ - eb))));
      }
      return base.pow(e);
    }
    throw error(std::string("unexpected character '") + c + "'");
  }

  const TablePtr& table_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

GradedPoly parse_poly(const TablePtr& table, std::string_view text) {
  return PolyParser(table, text).parse();
}

}  // namespace floerkit
