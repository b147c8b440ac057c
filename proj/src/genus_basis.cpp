#include "gvkit/genus_basis.hpp"

#include "gvkit/error.hpp"

#include <climits>

namespace gvkit {

namespace {

constexpr const char *kModule = "genus_basis";

// u = q - 2 + q^{-1} = (q^{1/2} - q^{-1/2})^2, in q^k.
HalfLaurent u_poly(long k) {
  return HalfLaurent::polynomial(
      {{units_of(-k), 1}, {0, -2}, {units_of(k), 1}});
}

long sign_of_power(long e) { return e % 2 == 0 ? 1 : -1; }

long require_long(const Rational &r, const char *op, long g) {
  auto v = to_long(r);
  if (!v)
    throw IntegralityError(kModule, op, "non-integral genus coordinate " +
                                            to_string(r),
                           "g=" + std::to_string(g));
  return *v;
}

// q^{km} (1 - q^k)^{-2m}, m >= 1, exact through q^{q_order}.
HalfLaurent negative_power_series(long m, long k, long q_order) {
  HalfLaurent::Coeffs c;
  for (long j = 0; k * (m + j) <= q_order; ++j)
    c.emplace(units_of(k * (m + j)), binomial(2 * m + j - 1, j));
  return HalfLaurent::series(std::move(c), units_of(q_order));
}

} // namespace

HalfLaurent genus_basis_element(long g) {
  if (g < 0)
    throw PreconditionError(kModule, "recompose", "negative genus",
                            "g=" + std::to_string(g));
  HalfLaurent base = HalfLaurent::polynomial({{-2, 1}, {0, 2}, {2, 1}});
  return power(base, static_cast<unsigned>(g));
}

GenusVector decompose_symmetric(const HalfLaurent &p) {
  if (!p.is_polynomial())
    throw PreconditionError(kModule, "decompose_symmetric",
                            "input must be a polynomial");
  if (!p.has_integer_exponents())
    throw PreconditionError(kModule, "decompose_symmetric",
                            "half-integer exponents present");
  if (!p.is_symmetric())
    throw PreconditionError(kModule, "decompose_symmetric",
                            "not symmetric under y -> 1/y");
  GenusVector out;
  HalfLaurent rest = p;
  while (!rest.empty()) {
    // Leading coefficient of (y+2+1/y)^g at y^g is 1.
    HalfUnit top = rest.coeffs().rbegin()->first;
    long g = top / 2;
    Rational c = rest.coeffs().rbegin()->second;
    out.add(g, require_long(c, "decompose_symmetric", g));
    rest -= genus_basis_element(g) * c;
  }
  return out;
}

HalfLaurent recompose(const GenusVector &n) {
  HalfLaurent out;
  for (const auto &[g, c] : n.entries)
    out += genus_basis_element(g) * Rational(c);
  return out;
}

Rational eval_minus_one(const HalfLaurent &p) { return eval_at_minus_one(p); }

HalfLaurent kernel_plus(long g, long q_order) {
  if (g >= 1)
    return genus_basis_element(g - 1);
  // (q/(1+q)^2)^m = q^m sum_j C(2m+j-1, j) (-q)^j
  const long m = 1 - g;
  HalfLaurent::Coeffs c;
  for (long j = 0; m + j <= q_order; ++j) {
    Rational b = binomial(2 * m + j - 1, j);
    c.emplace(units_of(m + j), j % 2 == 0 ? b : Rational(-b));
  }
  return HalfLaurent::series(std::move(c), units_of(q_order));
}

HalfLaurent kernel_minus(long g, long k, long q_order) {
  if (k < 1)
    throw PreconditionError(kModule, "kernel_minus", "k must be positive");
  if (g >= 1)
    return power(u_poly(k), static_cast<unsigned>(g - 1));
  return negative_power_series(1 - g, k, q_order);
}

HalfLaurent kernel_minus_local(long g, long k, long q_order) {
  return kernel_minus(g, k, q_order).with_negated_variable();
}

HalfLaurent tagged_kernel_sum(const GenusVector &n, long q_order) {
  HalfLaurent out;
  for (const auto &[g, c] : n.entries)
    out += kernel_minus(g, 1, q_order) * Rational(sign_of_power(g - 1) * c);
  return out;
}

GenusVector extract_genus_from_qseries(const HalfLaurent &l,
                                       GenusRange range) {
  constexpr const char *op = "extract_genus_from_qseries";
  if (!l.has_integer_exponents())
    throw PreconditionError(kModule, op, "half-integer exponents present");
  if (range.min && *range.min > range.max)
    throw PreconditionError(kModule, op, "empty genus range");
  const long floor_genus = range.min.value_or(LONG_MIN);

  // G = L * u = sum_g n_g (-1)^{g-1} u^g. For g >= 0, u^g has lowest term
  // q^{-g}; for g = -m < 0, u^g = q^m (1-q)^{-2m} has lowest term q^m. Both
  // leading coefficients are 1, so the system is triangular.
  HalfLaurent g_series = l * u_poly(1);
  const long top = std::max(range.max, 0L);
  if (!g_series.empty() && g_series.floor() < units_of(-top))
    throw ResidualError(kModule, op, "genus support exceeds g_max",
                        "g_max=" + std::to_string(range.max));

  auto known_through = [&](long q_power) {
    return !g_series.precision() || units_of(q_power) <= *g_series.precision();
  };

  GenusVector out;
  for (long g = range.max; g >= std::max(floor_genus, 0L); --g) {
    if (!known_through(-g))
      throw WindowError(kModule, op, "window too small",
                        "g=" + std::to_string(g));
    Rational c = g_series.coeff(units_of(-g));
    if (c == 0)
      continue;
    long n = require_long(c, op, g) * sign_of_power(g - 1);
    out.add(g, n);
    g_series -= power(u_poly(1), static_cast<unsigned>(g)) * c;
  }
  // A polynomial G cannot absorb any negative-genus term: its leftover part
  // goes straight to the residual check.
  for (long g = -1; g >= floor_genus && !g_series.is_polynomial(); --g) {
    const long m = -g;
    if (!known_through(m)) {
      if (!range.min)
        break;
      throw WindowError(kModule, op,
                        "window too small to resolve negative genus",
                        "g=" + std::to_string(g));
    }
    Rational c = g_series.coeff(units_of(m));
    if (c == 0)
      continue;
    long n = require_long(c, op, g) * sign_of_power(g - 1);
    out.add(g, n);
    long q_order = *g_series.precision() / 2;
    g_series -= negative_power_series(m, 1, q_order) * c;
  }
  if (!g_series.empty())
    throw ResidualError(
        kModule, op, "genus support exceeds g_max or window too small",
        "residual lowest exponent q^" + std::to_string(g_series.floor() / 2));
  return out;
}

} // namespace gvkit
