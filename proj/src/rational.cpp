#include "gvkit/rational.hpp"

#include "gvkit/error.hpp"

#include <string>

namespace gvkit {

std::string to_string(const Rational &r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+'))
    s.remove_prefix(1);
  if (s.empty())
    return false;
  for (char c : s)
    if (c < '0' || c > '9')
      return false;
  return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  auto num = text.substr(0, slash);
  auto den = slash == std::string_view::npos ? std::string_view("1")
                                             : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) ||
      den.front() == '-' || den.front() == '+')
    throw PreconditionError("series_core", "parse_rational",
                            "not a rational literal", std::string(text));
  std::string n(num);
  if (n.front() == '+')
    n.erase(0, 1);
  Integer d(std::string(den), 10);
  if (d == 0)
    throw PreconditionError("series_core", "parse_rational", "zero denominator",
                            std::string(text));
  Rational r(Integer(n, 10), d);
  r.canonicalize();
  return r;
}

Rational ratio(long num, long den) {
  if (den == 0)
    throw PreconditionError("series_core", "ratio", "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

bool is_integer(const Rational &r) { return r.get_den() == 1; }

std::optional<long> to_long(const Rational &r) {
  if (!is_integer(r) || !r.get_num().fits_slong_p())
    return std::nullopt;
  return r.get_num().get_si();
}

Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n)
    return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Rational(out);
}

} // namespace gvkit
