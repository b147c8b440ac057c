#pragma once

#include "gvkit/chow_local.hpp"
#include "gvkit/graded_series.hpp"
#include "gvkit/lattice.hpp"
#include "gvkit/transforms.hpp"

#include <vector>

namespace gvkit {

/// Stable-pair series on both sides of a flop X --> X+ over Y, with the
/// induced map on curve classes. The "over Y" series must be supported on
/// the span of `fiber_basis` (classes contracted to Y).
struct FlopFixture {
  GradedSeries pt_x;
  GradedSeries pt_x_over_y;
  GradedSeries pt_xdag;
  GradedSeries pt_xdag_over_y;
  LatticeMap phi;
  std::vector<CurveClass> fiber_basis;
};

struct FlopCheck {
  /// Difference of the two quotients over classes known on both sides,
  /// indexed by classes of X+.
  GradedSeries residual;
  /// Images phi(beta) outside the effective cone that carry a nonzero
  /// coefficient of PT(X)/PT(X/Y). Tracked, not compared.
  std::vector<CurveClass> non_effective;
  bool holds = false;
};

/// Compares phi_* (PT(X)/PT(X/Y)) with PT(X+)/PT(X+/Y).
FlopCheck flop_check(const FlopFixture &fx);

/// Terms whose class lies in the rational span of the basis.
GradedSeries restrict_to_sublattice(const GradedSeries &a,
                                    const std::vector<CurveClass> &basis);

/// GV table of X+: n at phi(beta), or at -phi(beta) for a fiber class whose
/// image flips sign.
GVTable transport_table(const GVTable &n, const LatticeMap &phi,
                        const std::vector<CurveClass> &fiber_basis);

/// Builds all four series of a fixture from a GV table of X, regenerating
/// the X+ side from the transported table.
FlopFixture flop_fixture_from_gv(const GVTable &n, const LatticeMap &phi,
                                 const std::vector<CurveClass> &fiber_basis,
                                 const DegreeCutoff &cutoff_x,
                                 const DegreeCutoff &cutoff_xdag,
                                 long q_order);

/// The rank-2 example: n_{0,(1,0)} = n_{0,(0,1)} = 1, fiber span (0,1),
/// phi(a,b) = (a, a-b).
FlopFixture standard_flop_fixture(long q_order = 6);
/// X = X+ with phi the identity.
FlopFixture identity_flop_fixture(long q_order = 6);

/// Relabels each support cycle by the unique point of `target` whose class
/// is phi of its class. Genus entries are unchanged.
LocalGVTable transport_gv(const LocalGVTable &n, const LatticeMap &phi,
                          const ChowModel &model, const ChowModel &target);

} // namespace gvkit
