#include "gvkit/half_laurent.hpp"

#include "gvkit/error.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace gvkit {

namespace {

constexpr const char *kModule = "series_core";

std::optional<HalfUnit> min_precision(std::optional<HalfUnit> a,
                                      std::optional<HalfUnit> b) {
  if (!a)
    return b;
  if (!b)
    return a;
  return std::min(*a, *b);
}

} // namespace

HalfLaurent HalfLaurent::polynomial(Coeffs coeffs) {
  HalfLaurent out;
  out.coeffs_ = std::move(coeffs);
  out.prune();
  return out;
}

HalfLaurent HalfLaurent::series(Coeffs coeffs, HalfUnit precision) {
  HalfLaurent out;
  out.coeffs_ = std::move(coeffs);
  out.precision_ = precision;
  out.prune();
  return out;
}

HalfLaurent HalfLaurent::constant(const Rational &c) { return monomial(c, 0); }

HalfLaurent HalfLaurent::monomial(const Rational &c, HalfUnit u) {
  return polynomial({{u, c}});
}

HalfLaurent HalfLaurent::zero_series(HalfUnit precision) {
  return series({}, precision);
}

void HalfLaurent::prune() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second == 0 || (precision_ && it->first > *precision_))
      it = coeffs_.erase(it);
    else
      ++it;
  }
}

HalfUnit HalfLaurent::floor() const {
  if (!coeffs_.empty())
    return coeffs_.begin()->first;
  if (precision_)
    return *precision_ + 1;
  throw PreconditionError(kModule, "floor", "exact zero has no valuation");
}

Window HalfLaurent::window() const {
  if (is_exact_zero())
    return {0, std::nullopt};
  return {floor(), precision_};
}

Rational HalfLaurent::coeff(HalfUnit u) const {
  if (precision_ && u > *precision_)
    throw WindowError(kModule, "coeff", "exponent beyond known window",
                      "u=" + std::to_string(u));
  auto it = coeffs_.find(u);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

bool HalfLaurent::has_integer_exponents() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const auto &kv) { return kv.first % 2 == 0; });
}

bool HalfLaurent::is_symmetric() const {
  for (const auto &[u, c] : coeffs_) {
    auto it = coeffs_.find(-u);
    if (it == coeffs_.end() || it->second != c)
      return false;
  }
  return true;
}

HalfLaurent HalfLaurent::truncated(HalfUnit precision) const {
  auto p = min_precision(precision_, precision);
  return series(coeffs_, *p);
}

HalfLaurent HalfLaurent::as_polynomial() const { return polynomial(coeffs_); }

HalfLaurent HalfLaurent::dilated(long k) const {
  if (k < 1)
    throw PreconditionError(kModule, "dilated", "factor must be positive");
  Coeffs out;
  for (const auto &[u, c] : coeffs_)
    out.emplace(u * k, c);
  HalfLaurent r;
  r.coeffs_ = std::move(out);
  // Known through p means known through k*p + (k-1) after dilation: the
  // exponents strictly between multiples of k are zero.
  if (precision_)
    r.precision_ = *precision_ * k + (k - 1);
  return r;
}

HalfLaurent HalfLaurent::with_negated_variable() const {
  if (!has_integer_exponents())
    throw PreconditionError(kModule, "with_negated_variable",
                            "half-integer exponents present");
  HalfLaurent r = *this;
  for (auto &[u, c] : r.coeffs_)
    if ((u / 2) % 2 != 0)
      c = -c;
  return r;
}

bool HalfLaurent::agrees_with(const HalfLaurent &other) const {
  auto p = min_precision(precision_, other.precision_);
  auto a = coeffs_.begin();
  auto b = other.coeffs_.begin();
  auto in_window = [&](HalfUnit u) { return !p || u <= *p; };
  while (true) {
    bool a_ok = a != coeffs_.end() && in_window(a->first);
    bool b_ok = b != other.coeffs_.end() && in_window(b->first);
    if (!a_ok && !b_ok)
      return true;
    if (!a_ok || !b_ok)
      return false;
    if (a->first != b->first || a->second != b->second)
      return false;
    ++a;
    ++b;
  }
}

HalfLaurent &HalfLaurent::operator+=(const HalfLaurent &rhs) {
  precision_ = min_precision(precision_, rhs.precision_);
  for (const auto &[u, c] : rhs.coeffs_)
    coeffs_[u] += c;
  prune();
  return *this;
}

HalfLaurent &HalfLaurent::operator-=(const HalfLaurent &rhs) {
  precision_ = min_precision(precision_, rhs.precision_);
  for (const auto &[u, c] : rhs.coeffs_)
    coeffs_[u] -= c;
  prune();
  return *this;
}

HalfLaurent &HalfLaurent::operator*=(const Rational &c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto &kv : coeffs_)
    kv.second *= c;
  return *this;
}

HalfLaurent hl_mul(const HalfLaurent &a, const HalfLaurent &b) {
  if (a.is_exact_zero() || b.is_exact_zero())
    return {};
  std::optional<HalfUnit> precision;
  if (a.precision())
    precision = *a.precision() + b.floor();
  if (b.precision())
    precision = min_precision(precision, *b.precision() + a.floor());

  HalfLaurent::Coeffs out;
  for (const auto &[ua, ca] : a.coeffs()) {
    for (const auto &[ub, cb] : b.coeffs()) {
      HalfUnit u = ua + ub;
      if (precision && u > *precision)
        break;
      out[u] += ca * cb;
    }
  }
  return precision ? HalfLaurent::series(std::move(out), *precision)
                   : HalfLaurent::polynomial(std::move(out));
}

HalfLaurent power(const HalfLaurent &a, unsigned n) {
  HalfLaurent result = HalfLaurent::constant(1);
  HalfLaurent base = a;
  while (n > 0) {
    if (n & 1u)
      result = hl_mul(result, base);
    n >>= 1u;
    if (n > 0)
      base = hl_mul(base, base);
  }
  return result;
}

HalfLaurent inverse(const HalfLaurent &a, HalfUnit precision) {
  if (a.empty())
    throw PreconditionError(kModule, "inverse", "no invertible leading term");
  const HalfUnit v = a.floor();
  const Rational lead = a.coeffs().begin()->second;
  HalfUnit target = precision;
  if (a.precision())
    target = std::min(target, *a.precision() - 2 * v);
  if (target < -v)
    throw WindowError(kModule, "inverse", "input window too shallow");

  // b_{-v+j} = -(1/lead) * sum_{i=1..j} a_{v+i} b_{-v+j-i}
  const HalfUnit steps = target + v;
  std::vector<Rational> b(static_cast<size_t>(steps + 1));
  b[0] = 1 / lead;
  for (HalfUnit j = 1; j <= steps; ++j) {
    Rational acc = 0;
    for (auto it = std::next(a.coeffs().begin()); it != a.coeffs().end(); ++it) {
      HalfUnit i = it->first - v;
      if (i > j)
        break;
      acc += it->second * b[static_cast<size_t>(j - i)];
    }
    b[static_cast<size_t>(j)] = -acc / lead;
  }
  HalfLaurent::Coeffs out;
  for (HalfUnit j = 0; j <= steps; ++j)
    out.emplace(j - v, b[static_cast<size_t>(j)]);
  return HalfLaurent::series(std::move(out), target);
}

Rational eval_at_minus_one(const HalfLaurent &p) {
  if (!p.is_polynomial())
    throw WindowError(kModule, "eval_at_minus_one",
                      "evaluation needs a polynomial");
  if (!p.has_integer_exponents())
    throw PreconditionError("genus_basis", "eval_minus_one",
                            "half-integer exponents present");
  Rational total = 0;
  for (const auto &[u, c] : p.coeffs())
    total += ((u / 2) % 2 == 0) ? c : Rational(-c);
  return total;
}

namespace {

std::string power_text(HalfUnit u, char variable) {
  std::string out(1, variable);
  if (u == 2)
    return out;
  out += '^';
  if (u % 2 == 0)
    return out + std::to_string(u / 2);
  return out + "(" + std::to_string(u) + "/2)";
}

std::string magnitude_text(const Rational &c) {
  Rational a = abs(c);
  return a.get_den() == 1 ? a.get_num().get_str() : a.get_str();
}

} // namespace

std::string to_string(const HalfLaurent &p, char variable) {
  std::ostringstream os;
  bool first = true;
  auto sign = [&](bool negative) {
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
  };
  for (const auto &[u, c] : p.coeffs()) {
    sign(c < 0);
    const std::string mag = magnitude_text(c);
    if (u == 0)
      os << mag;
    else if (mag == "1")
      os << power_text(u, variable);
    else
      os << mag << '*' << power_text(u, variable);
  }
  if (first && !p.precision())
    os << '0';
  if (p.precision()) {
    // First exponent not covered by the window.
    HalfUnit next = *p.precision() + 1;
    if (p.has_integer_exponents() && next % 2 != 0)
      ++next;
    sign(false);
    os << "O(" << (next == 0 ? std::string("1") : power_text(next, variable))
       << ')';
  }
  return os.str();
}

} // namespace gvkit
