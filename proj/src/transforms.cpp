#include "gvkit/transforms.hpp"

#include "gvkit/error.hpp"

#include <algorithm>

namespace gvkit {

namespace {

constexpr const char *kModule = "transforms";

long sign_of_power(long e) { return e % 2 == 0 ? 1 : -1; }

std::string at_class(long g, const CurveClass &beta) {
  return "g=" + std::to_string(g) + " beta=" + to_string(beta);
}

void check_rank(std::size_t rank, const DegreeCutoff &cutoff, const char *op) {
  if (rank != cutoff.rank())
    throw PreconditionError(kModule, op, "rank mismatch");
}

} // namespace

long GVTable::at(long g, const CurveClass &beta) const {
  auto it = entries.find(beta);
  return it == entries.end() ? 0 : it->second.at(g);
}

void GVTable::add(long g, const CurveClass &beta, long n) {
  if (n == 0)
    return;
  if (beta.rank() != rank)
    throw PreconditionError(kModule, "GVTable", "rank mismatch",
                            to_string(beta));
  if (beta.is_zero() || !beta.is_effective())
    throw PreconditionError(kModule, "GVTable",
                            "classes must be effective and nonzero",
                            to_string(beta));
  auto &v = entries[beta];
  v.add(g, n);
  if (v.empty())
    entries.erase(beta);
}

Rational GWTable::at(long g, const CurveClass &beta) const {
  auto it = entries.find(beta);
  if (it == entries.end())
    return 0;
  auto jt = it->second.find(g);
  return jt == it->second.end() ? Rational(0) : jt->second;
}

void GWTable::add(long g, const CurveClass &beta, const Rational &value) {
  if (value == 0)
    return;
  if (beta.rank() != rank)
    throw PreconditionError(kModule, "GWTable", "rank mismatch",
                            to_string(beta));
  if (beta.is_zero() || !beta.is_effective())
    throw PreconditionError(kModule, "GWTable",
                            "classes must be effective and nonzero",
                            to_string(beta));
  auto &row = entries[beta];
  if ((row[g] += value) == 0)
    row.erase(g);
  if (row.empty())
    entries.erase(beta);
}

LambdaSeries sin_kernel_lambda(long g, long k, long order) {
  if (g < 0 || k < 1)
    throw PreconditionError(kModule, "sin_kernel_lambda",
                            "need g >= 0 and k >= 1");
  if (order < 2 * g - 2)
    throw PreconditionError(kModule, "sin_kernel_lambda",
                            "order below leading power 2g-2");
  if (g == 1)
    return {HalfLaurent::constant(1)};

  // 2 sin(k lambda / 2) = sum_j (-1)^j 2 (k/2)^{2j+1} lambda^{2j+1} / (2j+1)!
  const long depth = order + 4;
  HalfLaurent::Coeffs sine;
  Rational factorial = 1;
  Rational half_k_power(k, 2);
  for (long j = 0; 2 * j + 1 <= depth; ++j) {
    if (j > 0) {
      factorial *= (2 * j) * (2 * j + 1);
      half_k_power *= ratio(k * k, 4);
    }
    Rational c = 2 * half_k_power / factorial;
    sine.emplace(2 * j + 1, j % 2 == 0 ? c : Rational(-c));
  }
  HalfLaurent s = HalfLaurent::series(std::move(sine), depth);
  HalfLaurent result =
      g == 0 ? inverse(power(s, 2), order)
             : power(s, static_cast<unsigned>(2 * g - 2));
  return {result.truncated(order)};
}

GWTable gw_from_gv(const GVTable &n, const DegreeCutoff &cutoff,
                   long lambda_order) {
  check_rank(n.rank, cutoff, "gw_from_gv");
  GWTable out{n.rank, {}};
  std::map<std::pair<long, long>, LambdaSeries> kernels;
  auto kernel = [&](long g, long k) -> const LambdaSeries & {
    auto key = std::make_pair(g, k);
    auto it = kernels.find(key);
    if (it == kernels.end())
      it = kernels.emplace(key, sin_kernel_lambda(g, k, lambda_order)).first;
    return it->second;
  };

  for (const auto &[beta, genus] : n.entries) {
    for (const auto &[g, value] : genus.entries) {
      if (g < 0)
        throw PreconditionError(kModule, "gw_from_gv",
                                "negative genus has no GW counterpart",
                                at_class(g, beta));
      if (2 * g - 2 > lambda_order)
        throw PreconditionError(kModule, "gw_from_gv",
                                "lambda order too small to resolve genus",
                                at_class(g, beta));
      for (long k = 1; cutoff.admits(k * beta); ++k) {
        for (const auto &[e, c] : kernel(g, k).coeffs.coeffs()) {
          if (e > lambda_order || e % 2 != 0)
            continue;
          out.add((e + 2) / 2, k * beta, ratio(value, k) * c);
        }
      }
    }
  }
  return out;
}

GVTable gv_from_gw(const GWTable &gw, const DegreeCutoff &cutoff, long g_max) {
  check_rank(gw.rank, cutoff, "gv_from_gw");
  if (g_max < 0)
    throw PreconditionError(kModule, "gv_from_gw", "g_max must be >= 0");
  const long order = 2 * g_max + 2;
  std::map<std::pair<long, long>, LambdaSeries> kernels;
  auto kernel = [&](long g, long k) -> const LambdaSeries & {
    auto key = std::make_pair(g, k);
    auto it = kernels.find(key);
    if (it == kernels.end())
      it = kernels.emplace(key, sin_kernel_lambda(g, k, order)).first;
    return it->second;
  };

  GVTable out{gw.rank, {}};
  for (const auto &beta : cutoff.classes()) {
    if (beta.is_zero())
      continue;
    std::vector<Rational> rest(static_cast<std::size_t>(g_max + 1));
    for (long g = 0; g <= g_max; ++g)
      rest[static_cast<std::size_t>(g)] = gw.at(g, beta);

    // Multiple-cover contributions from beta/k, already solved.
    for (long k = 2; k <= cutoff.degree(beta); ++k) {
      auto base = beta.divided_by(k);
      if (!base)
        continue;
      auto it = out.entries.find(*base);
      if (it == out.entries.end())
        continue;
      for (const auto &[g, value] : it->second.entries)
        for (long gp = g; gp <= g_max; ++gp)
          rest[static_cast<std::size_t>(gp)] -=
              ratio(value, k) * kernel(g, k).at(2 * gp - 2);
    }

    // Triangular in genus: the k = 1 kernel of genus g starts at
    // lambda^{2g-2} with coefficient 1.
    GenusVector solved;
    for (long gp = 0; gp <= g_max; ++gp) {
      Rational r = rest[static_cast<std::size_t>(gp)];
      for (const auto &[g, value] : solved.entries)
        r -= Rational(value) * kernel(g, 1).at(2 * gp - 2);
      auto v = to_long(r);
      if (!v)
        throw IntegralityError(kModule, "gv_from_gw",
                               "input not of GV form: n = " + to_string(r),
                               at_class(gp, beta));
      solved.add(gp, *v);
    }
    if (!solved.empty())
      out.entries.emplace(beta, std::move(solved));
  }
  return out;
}

GradedSeries pt_from_gv(const GVTable &n, const DegreeCutoff &cutoff,
                        long q_order, Convention convention) {
  check_rank(n.rank, cutoff, "pt_from_gv");
  if (q_order < 1)
    throw WindowError(kModule, "pt_from_gv", "window must reach q^1");
  GradedSeries log_z(cutoff);
  for (const auto &[beta, genus] : n.entries)
    for (long k = 1; cutoff.admits(k * beta); ++k)
      for (const auto &[g, value] : genus.entries)
        log_z.add_term(k * beta, kernel_minus(g, k, q_order) *
                                     ratio(sign_of_power(g - 1) * value, k));

  GradedSeries z = gs_exp(log_z);
  for (const auto &[beta, c] : z.terms())
    if (c.precision() && *c.precision() < 0)
      throw WindowError(kModule, "pt_from_gv",
                        "window too shallow for requested cutoff",
                        "beta=" + to_string(beta));
  return convention == Convention::global_q ? z : z.with_negated_variable();
}

GVTable gv_from_pt(const GradedSeries &z, GenusRange range,
                   Convention convention) {
  const GradedSeries zg =
      convention == Convention::global_q ? z : z.with_negated_variable();
  const GradedSeries log_z = gs_log(zg);

  std::optional<HalfUnit> fallback;
  for (const auto &[beta, c] : log_z.terms())
    if (c.precision())
      fallback = std::max(fallback.value_or(*c.precision()), *c.precision());

  GVTable out{z.rank(), {}};
  for (const auto &beta : z.cutoff().classes()) {
    if (beta.is_zero())
      continue;
    HalfLaurent rest = log_z.at(beta);
    const HalfUnit units =
        rest.precision() ? *rest.precision() : fallback.value_or(0);
    const long q_order = units >= 0 ? units / 2 : -((-units + 1) / 2);
    for (long k = 2; k <= z.cutoff().degree(beta); ++k) {
      auto base = beta.divided_by(k);
      if (!base)
        continue;
      auto it = out.entries.find(*base);
      if (it == out.entries.end())
        continue;
      for (const auto &[g, value] : it->second.entries)
        rest -= kernel_minus(g, k, q_order) *
                ratio(sign_of_power(g - 1) * value, k);
    }
    GenusVector genus =
        located("beta=" + to_string(beta),
                [&] { return extract_genus_from_qseries(rest, range); });
    if (!genus.empty())
      out.entries.emplace(beta, std::move(genus));
  }
  return out;
}

HalfLaurent pt_local_irreducible(const GenusVector &n, long q_order) {
  HalfLaurent out;
  for (const auto &[g, value] : n.entries) {
    if (g < 0)
      throw PreconditionError(kModule, "pt_local_irreducible",
                              "negative genus", "g=" + std::to_string(g));
    out += kernel_plus(g, q_order) * Rational(value);
  }
  return out;
}

} // namespace gvkit
