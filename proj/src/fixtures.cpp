#include "gvkit/fixtures.hpp"

#include "gvkit/error.hpp"
#include "gvkit/genus_basis.hpp"

namespace gvkit {

namespace {

constexpr const char *kModule = "perverse_euler";

Cycle unit_cycle(std::size_t size, std::size_t i) {
  auto c = Cycle::zero(size);
  std::vector<long> v(c.coords().begin(), c.coords().end());
  v[i] = 1;
  return Cycle(std::move(v));
}

HalfLaurent y_poly(HalfLaurent::Coeffs c) {
  return HalfLaurent::polynomial(std::move(c));
}

GenusVector global_of(const LocalGVTable &table, const ChowModel &model) {
  auto integrated = integrate_chow(table, model);
  auto it = integrated.find(CurveClass{1});
  return it == integrated.end() ? GenusVector{} : it->second;
}

LocalCurveFixture single_curve(const char *label, GenusVector gv,
                               std::vector<BehrendStratum> strata) {
  ChowModel model({{label, CurveClass{1}}}, {{Cycle{0}, 1}, {Cycle{1}, 1}});
  HalfLaurent datum = recompose(gv);
  return {std::move(model), Cycle{1}, std::move(gv), std::move(datum),
          std::move(strata)};
}

} // namespace

EnriquesFixture enriques_In(long n) {
  if (n < 2)
    throw PreconditionError(kModule, "enriques_In", "type I_n needs n >= 2");
  EnriquesFixture fx;
  fx.n = n;

  std::vector<ChowModel::Generator> gens;
  std::vector<ChowModel::Point> points{{Cycle::zero(4), 1}};
  for (std::size_t i = 0; i < 4; ++i) {
    gens.push_back({"C_" + std::to_string(i + 1), CurveClass{1}});
    points.push_back({unit_cycle(4, i), 1});
  }
  fx.model = ChowModel(std::move(gens), std::move(points));

  const HalfLaurent p1 = y_poly({{-2, 1}, {2, 1}});
  const HalfLaurent point = HalfLaurent::constant(1);
  for (std::size_t i = 0; i < 4; ++i) {
    const Cycle y = unit_cycle(4, i);
    const std::string tag = std::to_string(i + 1);
    for (long j = 1; j <= n; ++j) {
      const std::string jt = std::to_string(j);
      fx.summands.push_back({"IC(C_" + tag + "^" + jt + ")", y, p1, 0});
      fx.summands.push_back({"Q_p" + tag + "^" + jt + " (gr_W^-1)", y, point, -1});
      fx.summands.push_back({"Q_p" + tag + "^" + jt + " (gr_W^+1)", y, point, 1});
    }
    fx.ranks[y] = {{{0, -1}, n - 1}, {{-1, 1}, n - 1}};
  }
  // The components M_k lie over curves through the y_i and contribute no
  // Euler characteristic to the datum.
  for (long k = 1; k <= n; ++k)
    fx.summands.push_back({"IC(L_" + std::to_string(k) + ") on M_" +
                               std::to_string(k),
                           unit_cycle(4, 0), HalfLaurent{}, 0});

  fx.hst_datum = recompose(GenusVector{{{0, -8 * n}, {1, 4 * n}}});

  const long euler_c = n;   // cycle of n rational curves
  const long euler_e = 0;   // elliptic curve
  fx.strata = {{4 * euler_c, -1}, {n * (euler_e - 4), -1}};
  return fx;
}

EnriquesTable enriques_table(const EnriquesFixture &fx) {
  EnriquesTable t;
  t.hst = decompose_symmetric(fx.hst_datum);
  t.kl = global_of(gv_from_perverse(assemble_datum(fx.summands,
                                                   AssemblyMode::pure)),
                   fx.model);
  t.ours = global_of(gv_from_perverse(assemble_datum(
                         fx.summands, AssemblyMode::weight_filtered, fx.ranks)),
                     fx.model);
  return t;
}

EllipticFixture elliptic_fibration(long euler_x, long euler_s) {
  EllipticFixture fx;
  fx.euler_x = euler_x;
  fx.euler_s = euler_s;
  fx.model = ChowModel({{"smooth fiber", CurveClass{1}},
                        {"nodal fiber", CurveClass{1}}},
                       {{Cycle{0, 0}, 1},
                        {Cycle{1, 0}, euler_s - euler_x},
                        {Cycle{0, 1}, euler_x}});
  // Stalk of chi(IC) y^-1 + chi(V) + chi(IC) y at a fiber F:
  // y^-1 + (2 - e(F)) + y.
  fx.fiberwise.values[Cycle{1, 0}] = y_poly({{-2, 1}, {0, 2}, {2, 1}});
  fx.fiberwise.values[Cycle{0, 1}] = y_poly({{-2, 1}, {0, 1}, {2, 1}});
  fx.global_datum = recompose(GenusVector{{{0, -euler_x}, {1, euler_s}}});
  // The moduli space is X itself, smooth of dimension 3.
  fx.strata = {{euler_x, -1}};
  return fx;
}

LocalCurveFixture nodal_local() {
  // C union A^1 glued at the node: e = 1 + 1 - 1, Behrend value -1.
  return single_curve("nodal rational curve", GenusVector{{{0, -1}, {1, 1}}},
                      {{1, -1}});
}

LocalCurveFixture cusp_local() {
  // C union a double line at the cusp: e = 2 + 1 - 1, Behrend value -1.
  return single_curve("cuspidal rational curve",
                      GenusVector{{{0, -2}, {1, 1}}}, {{2, -1}});
}

LocalCurveFixture smooth_curve(long g, long nu) {
  if (g < 0)
    throw PreconditionError(kModule, "smooth_curve", "negative genus");
  // Near O_C the moduli space is fibered by the Jacobian, e = 0 for g >= 1.
  long sign = g % 2 == 0 ? 1 : -1;
  return single_curve("smooth curve", GenusVector{{{g, sign * nu}}},
                      {{g == 0 ? 1 : 0, nu}});
}

} // namespace gvkit
