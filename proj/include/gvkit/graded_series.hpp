#pragma once

#include "gvkit/half_laurent.hpp"
#include "gvkit/lattice.hpp"

#include <map>
#include <vector>

namespace gvkit {

/// Series sum_beta c_beta t^beta over effective classes admitted by a
/// degree cutoff, with HalfLaurent coefficients.
///
/// An absent class is an exact zero. A class whose coefficient is only known
/// to vanish up to some precision is stored explicitly as a zero series, so
/// that precision loss is never silent. Each coefficient keeps its own window.
class GradedSeries {
public:
  using Terms = std::map<CurveClass, HalfLaurent>;

  GradedSeries() = default;
  explicit GradedSeries(DegreeCutoff cutoff);
  GradedSeries(DegreeCutoff cutoff, Terms terms);

  /// 1 * t^0.
  static GradedSeries unit(DegreeCutoff cutoff);
  static GradedSeries monomial(DegreeCutoff cutoff, const CurveClass &beta,
                               HalfLaurent coeff);

  std::size_t rank() const noexcept { return cutoff_.rank(); }
  const DegreeCutoff &cutoff() const noexcept { return cutoff_; }
  const Terms &terms() const noexcept { return terms_; }

  /// Coefficient at beta (exact zero when absent).
  const HalfLaurent &at(const CurveClass &beta) const;
  bool contains(const CurveClass &beta) const { return terms_.count(beta) != 0; }

  /// Adds to the coefficient at beta; dropped if beta is outside the cutoff.
  void add_term(const CurveClass &beta, const HalfLaurent &coeff);

  /// True when every known coefficient vanishes.
  bool is_zero() const;
  /// Coefficient-wise agreement on common windows, over every class.
  bool agrees_with(const GradedSeries &other) const;

  /// Same terms, smaller (or equal) cutoff.
  GradedSeries restricted(const DegreeCutoff &cutoff) const;
  /// Every q-coefficient truncated to the given precision.
  GradedSeries truncated(HalfUnit precision) const;
  /// Applies q -> -q to every coefficient.
  GradedSeries with_negated_variable() const;

  bool operator==(const GradedSeries &) const = default;

  GradedSeries &operator+=(const GradedSeries &rhs);
  GradedSeries &operator-=(const GradedSeries &rhs);
  GradedSeries &operator*=(const Rational &c);
  friend GradedSeries operator+(GradedSeries a, const GradedSeries &b) { return a += b; }
  friend GradedSeries operator-(GradedSeries a, const GradedSeries &b) { return a -= b; }
  friend GradedSeries operator*(const Rational &c, GradedSeries a) { return a *= c; }

private:
  void require_compatible(const GradedSeries &rhs, const char *op) const;

  DegreeCutoff cutoff_;
  Terms terms_;
};

/// Monoid-ring product, parallel over output classes.
GradedSeries gs_mul(const GradedSeries &a, const GradedSeries &b);
/// Reference implementation of gs_mul: plain double loop over term pairs.
GradedSeries gs_mul_serial(const GradedSeries &a, const GradedSeries &b);

/// log(1 + x) = sum (-1)^(k-1) x^k / k. Constant term must be exactly 1.
GradedSeries gs_log(const GradedSeries &a);
/// sum x^k / k!. Constant term must vanish.
GradedSeries gs_exp(const GradedSeries &a);
/// a / b for b with constant term 1.
GradedSeries gs_div(const GradedSeries &a, const GradedSeries &b);

/// Moving the whole series by t^beta -> t^{phi(beta)}.
struct PushResult {
  GradedSeries series;
  /// Effective images beyond the target cutoff.
  std::vector<CurveClass> beyond_cutoff;
};

/// Throws ConeError naming every class whose image is not effective.
PushResult push_class(const GradedSeries &a, const LatticeMap &phi,
                      const DegreeCutoff &target);

/// Image under phi with arbitrary (possibly non-effective) support.
using SignedSeries = std::map<CurveClass, HalfLaurent>;
SignedSeries push_class_signed(const GradedSeries &a, const LatticeMap &phi);

} // namespace gvkit
