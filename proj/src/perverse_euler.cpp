#include "gvkit/perverse_euler.hpp"

#include "gvkit/error.hpp"
#include "gvkit/genus_basis.hpp"

#include <algorithm>
#include <set>

namespace gvkit {

namespace {

constexpr const char *kModule = "perverse_euler";

long dim_at(const std::map<PageIndex, long> &m, PageIndex ix) {
  auto it = m.find(ix);
  return it == m.end() ? 0 : it->second;
}

std::string at_index(PageIndex ix) {
  return "(" + std::to_string(ix.first) + "," + std::to_string(ix.second) +
         ")";
}

} // namespace

LocalGVTable gv_from_perverse(const PerverseDatum &d) {
  LocalGVTable out;
  for (const auto &[c, poly] : d.values) {
    if (!poly.is_polynomial() || !poly.is_symmetric())
      throw PreconditionError(kModule, "gv_from_perverse",
                              "datum must be a self-dual polynomial",
                              to_string(c));
    for (const auto &[g, n] : decompose_symmetric(poly).entries)
      out.add(c, g, n);
  }
  return out;
}

std::map<PageIndex, long> e2_from_e1(const SpectralPage &page) {
  for (const auto &[ix, d] : page.e1)
    if (d < 0)
      throw PreconditionError(kModule, "e2_from_e1", "negative dimension",
                              at_index(ix));
  for (const auto &[ix, r] : page.d1_ranks) {
    PageIndex target{ix.first + 1, ix.second};
    if (r < 0 || r > std::min(dim_at(page.e1, ix), dim_at(page.e1, target)))
      throw PreconditionError(kModule, "e2_from_e1",
                              "differential rank out of bounds", at_index(ix));
  }
  std::set<PageIndex> support;
  for (const auto &kv : page.e1)
    support.insert(kv.first);
  std::map<PageIndex, long> e2;
  for (const auto &ix : support) {
    long d = dim_at(page.e1, ix) - dim_at(page.d1_ranks, ix) -
             dim_at(page.d1_ranks, {ix.first - 1, ix.second});
    if (d < 0)
      throw PreconditionError(kModule, "e2_from_e1",
                              "inconsistent rank data", at_index(ix));
    if (d > 0)
      e2.emplace(ix, d);
  }
  return e2;
}

SpectralPage e1_page(const SummandTable &summands, const Cycle &point,
                     const std::map<PageIndex, long> &ranks) {
  SpectralPage page;
  page.d1_ranks = ranks;
  for (const auto &s : summands) {
    if (s.point != point)
      continue;
    if (!s.poly.is_polynomial() || !s.poly.has_integer_exponents())
      throw PreconditionError(kModule, "e1_page",
                              "summand must be an integer-exponent polynomial",
                              s.label);
    for (const auto &[u, c] : s.poly.coeffs()) {
      auto d = to_long(c);
      if (!d || *d < 0)
        throw PreconditionError(kModule, "e1_page",
                                "summand coefficient is not a dimension",
                                s.label);
      long m = u / 2;
      page.e1[{-s.weight, m + s.weight}] += *d;
    }
  }
  return page;
}

PerverseDatum assemble_datum(const SummandTable &summands, AssemblyMode mode,
                             const RankTable &ranks) {
  for (const auto &s : summands)
    if (s.weight == 0 && !s.poly.is_symmetric())
      throw PreconditionError(kModule, "assemble_datum",
                              "weight-zero summand is not self-dual", s.label);

  PerverseDatum out;
  if (mode == AssemblyMode::pure) {
    for (const auto &s : summands)
      out.values[s.point] += s.poly;
  } else {
    for (const auto &[c, r] : ranks) {
      bool known = std::any_of(summands.begin(), summands.end(),
                               [&](const Summand &s) { return s.point == c; });
      if (!known)
        throw PreconditionError(kModule, "assemble_datum",
                                "ranks given for a point without summands",
                                to_string(c));
    }
    std::set<Cycle> points;
    for (const auto &s : summands)
      points.insert(s.point);
    static const std::map<PageIndex, long> no_ranks;
    for (const auto &c : points) {
      auto it = ranks.find(c);
      auto page = e1_page(summands, c, it == ranks.end() ? no_ranks : it->second);
      HalfLaurent poly;
      for (const auto &[ix, d] : e2_from_e1(page))
        poly += HalfLaurent::monomial(d, units_of(ix.first + ix.second));
      out.values[c] = poly;
    }
  }
  for (auto it = out.values.begin(); it != out.values.end();)
    it = it->second.is_exact_zero() ? out.values.erase(it) : std::next(it);
  return out;
}

long behrend_euler_check(std::span<const BehrendStratum> strata) {
  long total = 0;
  for (const auto &s : strata)
    total += s.euler * s.nu;
  return total;
}

namespace {

HalfLaurent versal_rhs(const HalfLaurent &jac, long q_order) {
  if (!jac.is_polynomial() || !jac.has_integer_exponents())
    throw PreconditionError(kModule, "versal_identity_check",
                            "Jacobian datum must be an integer-exponent "
                            "polynomial");
  if (jac.empty())
    return HalfLaurent::zero_series(units_of(q_order));
  // kernel_plus(0) has valuation q^1, so the product is known through
  // (kernel precision) + floor(J).
  long shift = std::max(0L, -jac.floor() / 2);
  return (kernel_plus(0, q_order + shift) * jac).truncated(units_of(q_order));
}

} // namespace

VersalCheck versal_identity_check(std::span<const long> hilb,
                                  const HalfLaurent &jac, long g,
                                  long q_order) {
  // The data e_0..e_N pin down exponents up to N + 1 - g.
  const long top = std::min<long>(q_order, static_cast<long>(hilb.size()) - g);
  HalfLaurent::Coeffs lhs;
  for (std::size_t n = 0; n < hilb.size(); ++n)
    lhs.emplace(units_of(static_cast<long>(n) + 1 - g), hilb[n]);
  HalfLaurent left = HalfLaurent::series(std::move(lhs), units_of(top));
  HalfLaurent residual = left - versal_rhs(jac, top);
  return {residual.empty(), residual};
}

std::vector<long> versal_hilbert_numbers(const HalfLaurent &jac, long g,
                                         long count) {
  HalfLaurent rhs = versal_rhs(jac, count - g);
  std::vector<long> out;
  for (long n = 0; n < count; ++n) {
    auto v = to_long(rhs.coeff(units_of(n + 1 - g)));
    if (!v)
      throw IntegralityError(kModule, "versal_hilbert_numbers",
                             "non-integral Euler number",
                             "n=" + std::to_string(n));
    out.push_back(*v);
  }
  return out;
}

} // namespace gvkit
