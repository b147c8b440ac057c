#pragma once

#include "gvkit/genus_basis.hpp"
#include "gvkit/graded_series.hpp"

#include <map>

namespace gvkit {

/// n_{g,beta} keyed by class; the zero class never appears.
struct GVTable {
  std::size_t rank = 0;
  std::map<CurveClass, GenusVector> entries;

  long at(long g, const CurveClass &beta) const;
  void add(long g, const CurveClass &beta, long n);
  bool empty() const { return entries.empty(); }
  bool operator==(const GVTable &) const = default;
};

/// GW_{g,beta} keyed by class, then genus.
struct GWTable {
  std::size_t rank = 0;
  std::map<CurveClass, std::map<long, Rational>> entries;

  Rational at(long g, const CurveClass &beta) const;
  void add(long g, const CurveClass &beta, const Rational &value);
  bool empty() const { return entries.empty(); }
  bool operator==(const GWTable &) const = default;
};

/// Laurent series in lambda; the HalfLaurent exponent index counts whole
/// powers of lambda here, not half-units.
struct LambdaSeries {
  HalfLaurent coeffs;
  Rational at(long lambda_power) const { return coeffs.coeff(lambda_power); }
};

/// (2 sin(k lambda / 2))^{2g-2} exact through lambda^order.
LambdaSeries sin_kernel_lambda(long g, long k, long order);

/// Coefficients of lambda^{2g-2} t^beta in
/// sum n_{g,beta}/k (2 sin(k lambda/2))^{2g-2} t^{k beta}, for every genus
/// with 2g - 2 <= lambda_order.
GWTable gw_from_gv(const GVTable &n, const DegreeCutoff &cutoff,
                   long lambda_order);
/// Inverse of gw_from_gv for genera 0..g_max. Non-integral solutions throw
/// IntegralityError.
GVTable gv_from_gw(const GWTable &gw, const DegreeCutoff &cutoff, long g_max);

/// Z with log Z = sum (n_{g,beta}/k) (-1)^{g-1} (q^{k/2}-q^{-k/2})^{2g-2}
/// t^{k beta}. In the global convention the coefficient of t^beta is
/// sum_n P_{n,beta} (-q)^n; local_minus_q returns sum_n P_{n,beta} q^n.
GradedSeries pt_from_gv(const GVTable &n, const DegreeCutoff &cutoff,
                        long q_order, Convention convention = Convention::global_q);
/// Inverse of pt_from_gv, genus by genus inside `range` for every class.
GVTable gv_from_pt(const GradedSeries &z, GenusRange range,
                   Convention convention = Convention::global_q);

/// sum_g n_g (q^{1/2}+q^{-1/2})^{2g-2}: the local stable-pair series of an
/// irreducible one-cycle.
HalfLaurent pt_local_irreducible(const GenusVector &n, long q_order);

} // namespace gvkit
