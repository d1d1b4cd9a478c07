#include "floerkit/scalar.hpp"

#include <cctype>

#include "floerkit/errors.hpp"

namespace floerkit {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

Rational parse_rational(std::string_view text) {
  std::string s = trim(text);
  if (s.empty()) throw precondition_error("empty rational literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool slash = false;
  bool digits = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits = true;
    } else if (s[i] == '/' && !slash && digits) {
      slash = true;
      digits = false;
    } else {
      throw precondition_error("malformed rational literal '" + s + "'");
    }
  }
  if (!digits) throw precondition_error("malformed rational literal '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational q(s, 10);
  if (q.get_den() == 0) throw precondition_error("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rational_string(const Rational& q) {
  return q.get_str(10);
}

}  // namespace

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw precondition_error("zero denominator");
  return Scalar(Rational(num, den));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  Rational norm = re_ * re_ + im_ * im_;
  return {re_ / norm, -im_ / norm};
}

Scalar Scalar::pow(unsigned e) const {
  Scalar result(1);
  Scalar base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string Scalar::to_string() const {
  if (is_real()) return rational_string(re_);
  return "(" + rational_string(re_) + "," + rational_string(im_) + ")";
}

Scalar Scalar::parse(std::string_view text) {
  std::string s = trim(text);
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw precondition_error("unterminated complex literal '" + s + "'");
    auto comma = s.find(',');
    if (comma == std::string::npos) throw precondition_error("complex literal needs a comma: '" + s + "'");
    return {parse_rational(std::string_view(s).substr(1, comma - 1)),
            parse_rational(std::string_view(s).substr(comma + 1, s.size() - comma - 2))};
  }
  return Scalar(parse_rational(s));
}

Rational factorial(unsigned k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rational(f);
}

Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

}  // namespace floerkit
