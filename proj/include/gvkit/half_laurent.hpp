#pragma once

#include "gvkit/rational.hpp"

#include <map>
#include <optional>
#include <string>

namespace gvkit {

/// Exponents are stored in half-units: u stands for s^u where s^2 is the
/// ambient variable (q or y). q^k therefore lives at u = 2k.
using HalfUnit = long;

constexpr HalfUnit units_of(long integer_power) { return 2 * integer_power; }

struct Window {
  HalfUnit lo;
  std::optional<HalfUnit> hi; // nullopt: unbounded (exact polynomial)
};

/// Laurent polynomial or truncated Laurent series with rational coefficients
/// in a square-root variable.
///
/// A series carries a precision p: every coefficient at an exponent <= p is
/// known exactly, nothing above p is. Because the principal part is finite
/// and fully known, the lower end of the window is the lowest stored exponent
/// (or p + 1 for a series whose known part vanishes). A polynomial has no
/// upper bound. Zero coefficients are never stored.
class HalfLaurent {
public:
  using Coeffs = std::map<HalfUnit, Rational>;

  HalfLaurent() = default;

  static HalfLaurent polynomial(Coeffs coeffs);
  static HalfLaurent series(Coeffs coeffs, HalfUnit precision);
  static HalfLaurent constant(const Rational &c);
  static HalfLaurent monomial(const Rational &c, HalfUnit u);
  /// O(s^{precision+1}): nothing known to be nonzero up to precision.
  static HalfLaurent zero_series(HalfUnit precision);

  const Coeffs &coeffs() const noexcept { return coeffs_; }
  std::optional<HalfUnit> precision() const noexcept { return precision_; }
  bool is_polynomial() const noexcept { return !precision_.has_value(); }

  /// Known-part valuation; p + 1 for a vanishing series. Undefined (throws)
  /// for the exact zero polynomial.
  HalfUnit floor() const;
  Window window() const;

  /// Coefficient at u; throws WindowError above the precision.
  Rational coeff(HalfUnit u) const;

  bool empty() const noexcept { return coeffs_.empty(); }
  bool is_exact_zero() const noexcept { return coeffs_.empty() && !precision_; }
  bool has_integer_exponents() const;
  /// Invariant under u -> -u. Only meaningful for polynomials.
  bool is_symmetric() const;

  HalfLaurent truncated(HalfUnit precision) const;
  /// Drops the precision bound: the known part is taken as exact.
  HalfLaurent as_polynomial() const;
  /// s -> s^k for k >= 1.
  HalfLaurent dilated(long k) const;
  /// q -> -q for integer-exponent objects (flips signs at odd powers of q).
  HalfLaurent with_negated_variable() const;

  /// Coefficient-wise equality on the common window.
  bool agrees_with(const HalfLaurent &other) const;

  bool operator==(const HalfLaurent &) const = default;

  HalfLaurent &operator+=(const HalfLaurent &rhs);
  HalfLaurent &operator-=(const HalfLaurent &rhs);
  HalfLaurent &operator*=(const Rational &c);

  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent &b) { return a += b; }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent &b) { return a -= b; }
  friend HalfLaurent operator*(HalfLaurent a, const Rational &c) { return a *= c; }
  friend HalfLaurent operator*(const Rational &c, HalfLaurent a) { return a *= c; }
  friend HalfLaurent operator-(HalfLaurent a) { return a *= Rational(-1); }

private:
  void prune();

  Coeffs coeffs_;
  std::optional<HalfUnit> precision_;
};

/// Exact product. Precision of the result is min(p_a + v_b, p_b + v_a),
/// where v is the valuation of the known part.
HalfLaurent hl_mul(const HalfLaurent &a, const HalfLaurent &b);
inline HalfLaurent operator*(const HalfLaurent &a, const HalfLaurent &b) {
  return hl_mul(a, b);
}

HalfLaurent power(const HalfLaurent &a, unsigned n);

/// Multiplicative inverse as a series exact through `precision`. The lowest
/// known coefficient must be nonzero and the input must be known deep enough.
HalfLaurent inverse(const HalfLaurent &a, HalfUnit precision);

/// Value at s^2 = -1 for integer-exponent polynomials.
Rational eval_at_minus_one(const HalfLaurent &p);

std::string to_string(const HalfLaurent &p, char variable = 'q');

} // namespace gvkit
