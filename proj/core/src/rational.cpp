#include "mapcount/rational.hpp"

#include <cctype>

#include "mapcount/error.hpp"

namespace mapcount {

namespace {

bool digits_only(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

bool valid_signed_digits(const std::string& s) {
  if (!s.empty() && s[0] == '-') return digits_only(s.substr(1));
  return digits_only(s);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);

  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!valid_signed_digits(num) || !digits_only(den))
    fail(errc::parse_error, "malformed rational literal: '" + text + "'");

  Integer d(den);
  if (d == 0) fail(errc::parse_error, "zero denominator in rational literal: '" + text + "'");

  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool as_integer(const Rational& value, Integer& out) {
  if (value.get_den() != 1) return false;
  out = value.get_num();
  return true;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer double_factorial(unsigned long n) {
  Integer r;
  mpz_2fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer pow_integer(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rational pow_rational(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  const unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  Rational r(pow_integer(Integer(base.get_num()), e), pow_integer(Integer(base.get_den()), e));
  r.canonicalize();
  if (exp < 0) {
    if (r == 0) fail(errc::bad_domain, "zero raised to a negative power");
    r = Rational(1) / r;
  }
  return r;
}

Integer vertex_weight(int nu) {
  if (nu < 2) fail(errc::bad_domain, "nu must be at least 2");
  return Integer(2 * nu) * binomial(2 * nu - 1, nu - 1);
}

}  // namespace mapcount
