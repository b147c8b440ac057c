#include "gvkit/flop_transform.hpp"

#include "gvkit/error.hpp"

namespace gvkit {

namespace {

constexpr const char *kModule = "flop_transform";

void require_fiber_support(const GradedSeries &s,
                           const std::vector<CurveClass> &basis,
                           const char *which) {
  for (const auto &[beta, c] : s.terms())
    if (!beta.is_zero() && !in_span(beta, basis) && !c.empty())
      throw PreconditionError(kModule, "flop_check",
                              std::string(which) +
                                  " has a term off the fiber sublattice",
                              to_string(beta));
}

GradedSeries quotient(const GradedSeries &a, const GradedSeries &b,
                      const char *which) {
  if (a.rank() != b.rank() || !(a.cutoff() == b.cutoff()))
    throw PreconditionError(kModule, "flop_check",
                            std::string(which) +
                                ": numerator and denominator disagree on "
                                "cutoff");
  return gs_div(a, b);
}

} // namespace

GradedSeries restrict_to_sublattice(const GradedSeries &a,
                                    const std::vector<CurveClass> &basis) {
  GradedSeries out(a.cutoff());
  for (const auto &[beta, c] : a.terms())
    if (beta.is_zero() || in_span(beta, basis))
      out.add_term(beta, c);
  return out;
}

FlopCheck flop_check(const FlopFixture &fx) {
  if (fx.phi.rank() != fx.pt_x.rank() || fx.pt_x.rank() != fx.pt_xdag.rank())
    throw PreconditionError(kModule, "flop_check", "rank mismatch");
  require_fiber_support(fx.pt_x_over_y, fx.fiber_basis, "PT(X/Y)");
  require_fiber_support(fx.pt_xdag_over_y, fx.fiber_basis, "PT(X+/Y)");

  GradedSeries lhs_x = quotient(fx.pt_x, fx.pt_x_over_y, "X");
  GradedSeries rhs = quotient(fx.pt_xdag, fx.pt_xdag_over_y, "X+");
  SignedSeries pushed = push_class_signed(lhs_x, fx.phi);

  FlopCheck out;
  out.residual = GradedSeries(rhs.cutoff());
  for (const auto &[image, c] : pushed)
    if (!image.is_effective() && !c.empty())
      out.non_effective.push_back(image);

  const LatticeMap back = fx.phi.inverse();
  const DegreeCutoff &source = lhs_x.cutoff();
  for (const auto &beta : rhs.cutoff().classes()) {
    CurveClass pre = back(beta);
    if (!pre.is_effective() || !source.admits(pre))
      continue;
    HalfLaurent diff = lhs_x.at(pre) - rhs.at(beta);
    if (!diff.is_exact_zero())
      out.residual.add_term(beta, diff);
  }
  out.holds = out.residual.is_zero();
  return out;
}

GVTable transport_table(const GVTable &n, const LatticeMap &phi,
                        const std::vector<CurveClass> &fiber_basis) {
  if (phi.rank() != n.rank)
    throw PreconditionError(kModule, "transport_table", "rank mismatch");
  GVTable out{n.rank, {}};
  for (const auto &[beta, genus] : n.entries) {
    CurveClass image = phi(beta);
    if (!image.is_effective()) {
      if (in_span(beta, fiber_basis) && (-image).is_effective())
        image = -image;
      else
        throw ConeError(kModule, "transport_table",
                        "leaves effective cone",
                        to_string(beta) + "->" + to_string(image));
    }
    for (const auto &[g, value] : genus.entries)
      out.add(g, image, value);
  }
  return out;
}

FlopFixture flop_fixture_from_gv(const GVTable &n, const LatticeMap &phi,
                                 const std::vector<CurveClass> &fiber_basis,
                                 const DegreeCutoff &cutoff_x,
                                 const DegreeCutoff &cutoff_xdag,
                                 long q_order) {
  auto fiber_part = [&](const GVTable &t) {
    GVTable f{t.rank, {}};
    for (const auto &[beta, genus] : t.entries)
      if (in_span(beta, fiber_basis))
        f.entries.emplace(beta, genus);
    return f;
  };
  GVTable ndag = transport_table(n, phi, fiber_basis);
  FlopFixture fx;
  fx.pt_x = pt_from_gv(n, cutoff_x, q_order);
  fx.pt_x_over_y = pt_from_gv(fiber_part(n), cutoff_x, q_order);
  fx.pt_xdag = pt_from_gv(ndag, cutoff_xdag, q_order);
  fx.pt_xdag_over_y = pt_from_gv(fiber_part(ndag), cutoff_xdag, q_order);
  fx.phi = phi;
  fx.fiber_basis = fiber_basis;
  return fx;
}

FlopFixture standard_flop_fixture(long q_order) {
  GVTable n{2, {}};
  n.add(0, CurveClass{1, 0}, 1);
  n.add(0, CurveClass{0, 1}, 1);
  auto cutoff = DegreeCutoff::uniform(2, 6);
  return flop_fixture_from_gv(n, LatticeMap({{1, 0}, {1, -1}}),
                              {CurveClass{0, 1}}, cutoff, cutoff, q_order);
}

FlopFixture identity_flop_fixture(long q_order) {
  GVTable n{2, {}};
  n.add(0, CurveClass{1, 0}, 1);
  n.add(0, CurveClass{0, 1}, 1);
  n.add(1, CurveClass{1, 1}, -2);
  auto cutoff = DegreeCutoff::uniform(2, 4);
  return flop_fixture_from_gv(n, LatticeMap::identity(2), {CurveClass{0, 1}},
                              cutoff, cutoff, q_order);
}

LocalGVTable transport_gv(const LocalGVTable &n, const LatticeMap &phi,
                          const ChowModel &model, const ChowModel &target) {
  if (phi.rank() != model.class_rank() || phi.rank() != target.class_rank())
    throw PreconditionError(kModule, "transport_gv", "rank mismatch");
  LocalGVTable out;
  for (const auto &[c, genus] : n.entries) {
    if (!model.contains(c))
      throw PreconditionError(kModule, "transport_gv",
                              "support outside source model", to_string(c));
    if (c.is_zero()) {
      for (const auto &[g, value] : genus.entries)
        out.add(target.zero_cycle(), g, value);
      continue;
    }
    const CurveClass image = phi(model.class_of(c));
    const Cycle *match = nullptr;
    for (const auto &p : target.points()) {
      if (p.cycle.is_zero() || !(target.class_of(p.cycle) == image))
        continue;
      if (match)
        throw PreconditionError(kModule, "transport_gv",
                                "image class has several target points",
                                to_string(c));
      match = &p.cycle;
    }
    if (!match)
      throw PreconditionError(kModule, "transport_gv",
                              "no target point over the image class",
                              to_string(c) + "->" + to_string(image));
    for (const auto &[g, value] : genus.entries)
      out.add(*match, g, value);
  }
  return out;
}

} // namespace gvkit
