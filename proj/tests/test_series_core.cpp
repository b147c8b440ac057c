#include "gvkit/error.hpp"
#include "gvkit/graded_series.hpp"

#include <doctest.h>

#include <random>

using namespace gvkit;

namespace {

HalfLaurent q(long k, long c = 1) { return HalfLaurent::monomial(c, units_of(k)); }

// q / (1 - q)^2 by long division, written out independently of inverse().
HalfLaurent q_over_one_minus_q_sq(long through) {
  // Divide q by 1 - 2q + q^2: remainder r, quotient digit at q^k.
  std::vector<Rational> rem(static_cast<size_t>(through + 3), 0);
  rem[1] = 1;
  HalfLaurent::Coeffs out;
  for (long k = 0; k <= through; ++k) {
    Rational d = rem[static_cast<size_t>(k)];
    if (d != 0) {
      out.emplace(units_of(k), d);
      rem[static_cast<size_t>(k + 1)] += 2 * d;
      rem[static_cast<size_t>(k + 2)] -= d;
    }
  }
  return HalfLaurent::series(out, units_of(through));
}

HalfLaurent random_hl(std::mt19937 &rng, bool poly) {
  std::uniform_int_distribution<int> c(-4, 4), lo(-3, 1), len(0, 6), prec(2, 8);
  HalfLaurent::Coeffs m;
  int start = lo(rng);
  for (int i = 0, n = len(rng); i < n; ++i)
    if (int v = c(rng))
      m.emplace(start + i, v);
  return poly ? HalfLaurent::polynomial(m) : HalfLaurent::series(m, prec(rng));
}

GradedSeries unit_plus(const DegreeCutoff &cut,
                       std::initializer_list<std::pair<CurveClass, HalfLaurent>> t) {
  GradedSeries s = GradedSeries::unit(cut);
  for (const auto &[b, c] : t)
    s.add_term(b, c);
  return s;
}

} // namespace

TEST_CASE("rational parse and print") {
  CHECK(parse_rational("-3/6") == ratio(-1, 2));
  CHECK(parse_rational("7") == 7);
  CHECK(to_string(Rational(3)) == "3/1");
  CHECK_THROWS_AS(parse_rational("1/0"), PreconditionError);
  CHECK_THROWS_AS(parse_rational("x"), PreconditionError);
  CHECK(binomial(6, 3) == 20);
}

TEST_CASE("half-laurent basic products") {
  HalfLaurent s = HalfLaurent::polynomial({{1, 1}, {-1, 1}});
  CHECK(s * s == HalfLaurent::polynomial({{2, 1}, {0, 2}, {-2, 1}}));
  CHECK(s * HalfLaurent::constant(1) == s);
  CHECK((s * s).is_polynomial());
}

TEST_CASE("(q - 2 + 1/q) * q/(1-q)^2 is 1 within the window") {
  HalfLaurent u = q(1) + q(0, -2) + q(-1);
  HalfLaurent k = q_over_one_minus_q_sq(5);
  CHECK(k.coeff(units_of(5)) == 5);
  HalfLaurent prod = u * k;
  REQUIRE(prod.precision());
  // Known through q^4: the q^5 digit of k only reaches q^4 of the product.
  CHECK(*prod.precision() == units_of(4));
  CHECK(prod.agrees_with(HalfLaurent::constant(1)));
  CHECK(prod.coeffs() == HalfLaurent::Coeffs{{0, 1}});
}

TEST_CASE("coefficient access beyond the window is an error") {
  HalfLaurent a = HalfLaurent::series({{0, 1}}, 4);
  CHECK(a.coeff(4) == 0);
  CHECK_THROWS_AS(a.coeff(5), WindowError);
  CHECK(a.window().lo == 0);
  CHECK(*a.window().hi == 4);
}

TEST_CASE("inverse against long division") {
  HalfLaurent denom = q(0) + q(1, -2) + q(2);
  HalfLaurent inv = inverse(denom, units_of(8)) * q(1);
  CHECK(inv.agrees_with(q_over_one_minus_q_sq(9)));
  CHECK_THROWS_AS(inverse(HalfLaurent::zero_series(4), 4), PreconditionError);
}

TEST_CASE("dilation and variable sign") {
  HalfLaurent a = HalfLaurent::series({{2, 1}, {4, 3}}, 4);
  HalfLaurent d = a.dilated(2);
  CHECK(d.coeffs() == HalfLaurent::Coeffs{{4, 1}, {8, 3}});
  CHECK(*d.precision() == 9);
  CHECK(a.with_negated_variable().coeffs() == HalfLaurent::Coeffs{{2, -1}, {4, 3}});
  CHECK_THROWS_AS(HalfLaurent::polynomial({{1, 1}}).with_negated_variable(),
                  PreconditionError);
}

TEST_CASE("half-laurent ring laws on random inputs") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    bool pa = i % 3 == 0, pb = i % 5 == 0, pc = i % 2 == 0;
    auto a = random_hl(rng, pa), b = random_hl(rng, pb), c = random_hl(rng, pc);
    CHECK((a * b).agrees_with(b * a));
    CHECK(((a * b) * c).agrees_with(a * (b * c)));
    CHECK((a * (b + c)).agrees_with(a * b + a * c));
  }
}

TEST_CASE("degree cutoff and lattice maps") {
  DegreeCutoff cut({1, 2}, 3);
  auto cls = cut.classes();
  REQUIRE(cls.size() == 6);
  CHECK(cls.front() == CurveClass{0, 0});
  CHECK(cls[1] == CurveClass{1, 0});
  CHECK(cls[2] == CurveClass{0, 1});
  CHECK(cls[3] == CurveClass{2, 0});
  CHECK_THROWS_AS(DegreeCutoff({1, 0}, 3), PreconditionError);

  LatticeMap phi({{1, 0}, {1, -1}});
  CHECK(phi(CurveClass{1, 0}) == CurveClass{1, 1});
  CHECK(phi.compose(phi) == LatticeMap::identity(2));
  CHECK(phi.inverse() == phi);
  CHECK_THROWS_AS(LatticeMap({{2, 0}, {0, 1}}), PreconditionError);
  CHECK(in_span(CurveClass{0, 3}, {CurveClass{0, 1}}));
  CHECK_FALSE(in_span(CurveClass{1, 3}, {CurveClass{0, 1}}));
}

TEST_CASE("graded products") {
  auto cut = DegreeCutoff::uniform(1, 3);
  auto a = unit_plus(cut, {{CurveClass{1}, q(0)}});
  auto b = unit_plus(cut, {{CurveClass{1}, q(0, -1)}});
  CHECK(gs_mul(a, b) == unit_plus(cut, {{CurveClass{2}, q(0, -1)}}));
  CHECK(gs_mul(a, GradedSeries::unit(cut)) == a);

  // (1 + q t)^3 against the binomial theorem.
  auto x = unit_plus(cut, {{CurveClass{1}, q(1)}});
  auto cube = gs_mul(gs_mul(x, x), x);
  for (long k = 0; k <= 3; ++k)
    CHECK(cube.at(CurveClass{k}) ==
          HalfLaurent::monomial(Rational(binomial(3, static_cast<unsigned long>(k))),
                                units_of(k)));

  auto other = GradedSeries::unit(DegreeCutoff::uniform(2, 3));
  CHECK_THROWS_AS(gs_mul(a, other), PreconditionError);
}

TEST_CASE("log, exp and division") {
  auto cut = DegreeCutoff::uniform(1, 4);
  auto one_plus_t = unit_plus(cut, {{CurveClass{1}, q(0)}});
  auto lg = gs_log(one_plus_t);
  CHECK(lg.at(CurveClass{1}) == HalfLaurent::constant(1));
  CHECK(lg.at(CurveClass{2}) == HalfLaurent::constant(ratio(-1, 2)));
  CHECK(lg.at(CurveClass{3}) == HalfLaurent::constant(ratio(1, 3)));
  CHECK(gs_log(GradedSeries::unit(cut)).is_zero());

  auto t = GradedSeries::monomial(cut, CurveClass{1}, q(0));
  auto e = gs_exp(t);
  CHECK(e.at(CurveClass{4}) == HalfLaurent::constant(ratio(1, 24)));
  CHECK(gs_exp(GradedSeries(cut)) == GradedSeries::unit(cut));

  auto small = DegreeCutoff::uniform(1, 2);
  auto f = unit_plus(small, {{CurveClass{1}, q(1)}, {CurveClass{2}, q(2)}});
  CHECK(gs_exp(gs_log(f)) == f);

  auto cut3 = DegreeCutoff::uniform(1, 3);
  auto num = unit_plus(cut3, {{CurveClass{2}, q(0, -1)}});
  auto den = unit_plus(cut3, {{CurveClass{1}, q(0, -1)}});
  CHECK(gs_div(num, den) == unit_plus(cut3, {{CurveClass{1}, q(0)}}));
  CHECK(gs_div(num, num) == GradedSeries::unit(cut3));

  CHECK_THROWS_AS(gs_log(t), PreconditionError);
  CHECK_THROWS_AS(gs_exp(one_plus_t), PreconditionError);
  CHECK_THROWS_AS(gs_div(num, t), PreconditionError);
}

TEST_CASE("graded laws on random series") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(-3, 3);
  auto cut = DegreeCutoff::uniform(2, 3);
  auto rand_series = [&](bool unit) {
    GradedSeries s = unit ? GradedSeries::unit(cut) : GradedSeries(cut);
    for (const auto &b : cut.classes()) {
      if (b.is_zero())
        continue;
      HalfLaurent::Coeffs m;
      for (long k = -1; k <= 3; ++k)
        if (int v = c(rng))
          m.emplace(units_of(k), v);
      s.add_term(b, HalfLaurent::series(m, units_of(6)));
    }
    return s;
  };
  for (int i = 0; i < 30; ++i) {
    auto a = rand_series(true), b = rand_series(true), d = rand_series(true);
    CHECK(gs_mul(a, b).agrees_with(gs_mul(b, a)));
    CHECK(gs_mul(gs_mul(a, b), d).agrees_with(gs_mul(a, gs_mul(b, d))));
    CHECK(gs_mul(a, b) == gs_mul_serial(a, b));
    CHECK(gs_exp(gs_log(a)).agrees_with(a));
    auto z = rand_series(false);
    CHECK(gs_log(gs_exp(z)).agrees_with(z));
    CHECK(gs_div(gs_mul(a, b), b).agrees_with(a));
  }
}

TEST_CASE("pushing classes through a lattice map") {
  auto cut = DegreeCutoff::uniform(2, 4);
  LatticeMap phi({{1, 0}, {1, -1}});
  auto a = GradedSeries::monomial(cut, CurveClass{1, 0}, q(1));
  auto pushed = push_class(a, phi, cut);
  CHECK(pushed.series.at(CurveClass{1, 1}) == q(1));
  CHECK(push_class(a, LatticeMap::identity(2), cut).series == a);
  CHECK(push_class(pushed.series, phi.inverse(), cut).series == a);

  auto bad = GradedSeries::monomial(cut, CurveClass{0, 1}, q(1));
  try {
    push_class(bad, phi, cut);
    FAIL("expected a cone error");
  } catch (const ConeError &e) {
    CHECK(e.reason() == "leaves effective cone");
    CHECK(e.location().find("[0,1]->[0,-1]") != std::string::npos);
  }
  auto far = GradedSeries::monomial(DegreeCutoff::uniform(2, 6), CurveClass{3, 0}, q(0));
  auto r = push_class(far, phi, cut);
  REQUIRE(r.beyond_cutoff.size() == 1);
  CHECK(r.beyond_cutoff[0] == CurveClass{3, 3});
}
