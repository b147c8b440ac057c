#pragma once

#include "gvkit/chow_local.hpp"
#include "gvkit/perverse_euler.hpp"

#include <vector>

namespace gvkit {

/// Enriques-type example: an I_n double fiber (n >= 2). The Chow variety
/// near the class is modeled by the four points y_1..y_4, each the image of
/// a cycle C_i of n rational curves.
struct EnriquesFixture {
  long n = 0;
  ChowModel model;
  /// Weight-graded summands over each y_i.
  SummandTable summands;
  /// d_1 ranks per point: the gluing map of the n components of C_i onto
  /// their n nodes, and its Verdier dual.
  RankTable ranks;
  /// Transcribed from the published table; the normalization pushforward is
  /// not available in closed form.
  HalfLaurent hst_datum;
  /// 4 e(C) + n (e(E) - 4), all with Behrend value -1.
  std::vector<BehrendStratum> strata;
};

EnriquesFixture enriques_In(long n);

/// The three genus tables (integrated over the model) for one fixture.
struct EnriquesTable {
  GenusVector hst;
  GenusVector kl;
  GenusVector ours;
};
EnriquesTable enriques_table(const EnriquesFixture &fx);

/// Elliptic fibration X -> S with integral fibers, fiber class beta = [F].
/// Strata of S by fiber type: smooth (e(fiber) = 0) and nodal
/// (e(fiber) = 1), with e(nodal stratum) = e(X).
struct EllipticFixture {
  long euler_x = 0;
  long euler_s = 0;
  ChowModel model;
  PerverseDatum fiberwise;
  HalfLaurent global_datum;
  std::vector<BehrendStratum> strata;
};

EllipticFixture elliptic_fibration(long euler_x, long euler_s);

/// One irreducible cycle gamma with its local GV data.
struct LocalCurveFixture {
  ChowModel model;
  Cycle point;
  GenusVector gv;
  HalfLaurent datum;
  std::vector<BehrendStratum> strata;
};

LocalCurveFixture nodal_local();
LocalCurveFixture cusp_local();
/// Smooth curve of genus g with Behrend value nu at O_C.
LocalCurveFixture smooth_curve(long g, long nu);

} // namespace gvkit
