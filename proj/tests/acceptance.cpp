// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Everything is exact; timings are wall clock.
#include "gvkit/cli.hpp"
#include "gvkit/error.hpp"
#include "gvkit/fixtures.hpp"
#include "gvkit/flop_transform.hpp"
#include "gvkit/genus_basis.hpp"
#include "gvkit/json_io.hpp"
#include "gvkit/transforms.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

using namespace gvkit;
using gvkit::json_io::json;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string &what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

int failures = 0;

void report(int id, const char *title, const std::function<Verdict()> &body,
            double limit_ms = 0) {
  auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception &e) {
    v.pass = false;
    v.detail = std::string("exception: ") + e.what();
  }
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  if (limit_ms > 0 && ms >= limit_ms)
    v.require(false, "runtime " + std::to_string(ms) + " ms over limit");
  if (!v.pass)
    ++failures;
  std::printf("%s  criterion %2d  %-58s %9.1f ms%s%s\n", v.pass ? "PASS" : "FAIL",
              id, title, ms, v.detail.empty() ? "" : "  -- ",
              v.detail.c_str());
}

std::pair<int, std::string> run_cli(std::vector<std::string> args,
                                const std::string &input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int status = cli::run(args, in, out, err);
  return {status, out.str() + err.str()};
}

// Oracle for q/(1+q)^2: the q^k coefficient is (-1)^{k-1} k.
Rational plus_kernel_oracle(long k) { return k <= 0 ? 0 : ratio(k % 2 ? k : -k, 1); }

// Laurent coefficients of (2 sin(x/2))^{-2} = 1/(2 - 2 cos x): d_j at x^{2j-2}.
std::vector<Rational> cosine_oracle(int terms) {
  std::vector<Rational> c(static_cast<size_t>(terms)), d(c.size());
  Rational fact = 2;
  for (int j = 0; j < terms; ++j) {
    if (j > 0)
      fact *= (2 * j + 1) * (2 * j + 2);
    c[static_cast<size_t>(j)] = Rational(j % 2 == 0 ? 2 : -2) / fact;
  }
  for (int j = 0; j < terms; ++j) {
    Rational acc = j == 0 ? Rational(1) : Rational(0);
    for (int i = 1; i <= j; ++i)
      acc -= c[static_cast<size_t>(i)] * d[static_cast<size_t>(j - i)];
    d[static_cast<size_t>(j)] = acc / c[0];
  }
  return d;
}

LocalFunction local_series(const LocalCurveFixture &fx, const HalfLaurent &s) {
  LocalFunction f = LocalFunction::delta(fx.model.zero_cycle());
  f.add(fx.point, s);
  return f;
}

GVTable random_gv(std::mt19937 &rng, const DegreeCutoff &cut, long gmin,
                  long gmax, int max_entries) {
  std::uniform_int_distribution<long> v(-4, 4);
  auto classes = cut.classes();
  std::uniform_int_distribution<std::size_t> pick(1, classes.size() - 1);
  std::uniform_int_distribution<long> genus(gmin, gmax);
  std::uniform_int_distribution<int> count(1, max_entries);
  GVTable n{cut.rank(), {}};
  for (int i = 0, m = count(rng); i < m; ++i)
    n.add(genus(rng), classes[pick(rng)], v(rng));
  return n;
}

DegreeCutoff random_cutoff(std::mt19937 &rng) {
  std::uniform_int_distribution<long> bound(1, 6), rank(1, 2), w(1, 2);
  std::size_t r = static_cast<std::size_t>(rank(rng));
  std::vector<long> weights(r);
  for (auto &x : weights)
    x = w(rng);
  // Keep at least one nonzero class inside the cutoff.
  long b = bound(rng);
  for (long x : weights)
    b = std::max(b, x);
  return DegreeCutoff(weights, b);
}

} // namespace

int main() {
  report(1, "Enriques table HST/KL/ours for n = 2..9", [] {
    Verdict v;
    for (long n = 2; n <= 9; ++n) {
      auto [status, out] = run_cli({"fixture", "enriques", "--n", std::to_string(n)});
      v.require(status == 0, "cli failed for n=" + std::to_string(n));
      json rows = json::parse(out)["rows"];
      v.require(rows["HST"] == json({-8 * n, 4 * n, 0}), "HST n=" + std::to_string(n));
      v.require(rows["KL"] == json({0, 4 * n, 0}), "KL n=" + std::to_string(n));
      v.require(rows["ours"] == json({0, 4, 0}), "ours n=" + std::to_string(n));
    }
    return v;
  }, 1000);

  report(2, "ours n_1 constant in n, KL n_1 not", [] {
    Verdict v;
    std::vector<long> ours, kl;
    for (long n = 2; n <= 9; ++n) {
      auto t = enriques_table(enriques_In(n));
      ours.push_back(t.ours.at(1));
      kl.push_back(t.kl.at(1));
    }
    for (long x : ours)
      v.require(x == 4, "ours n_1 differs from the I_0 value 4");
    bool kl_constant = true;
    for (long x : kl)
      kl_constant = kl_constant && x == kl.front();
    v.require(!kl_constant, "KL n_1 unexpectedly constant");
    return v;
  });

  report(3, "nodal/cusp local series and inversion", [] {
    Verdict v;
    struct Case {
      LocalCurveFixture fx;
      std::vector<long> expect;
    };
    for (auto &c : {Case{nodal_local(), {1, -1, 2, -3}},
                    Case{cusp_local(), {1, -2, 4, -6}}}) {
      HalfLaurent s = pt_local_irreducible(c.fx.gv, 3);
      for (long k = 0; k <= 3; ++k) {
        // Oracle: n_1 * 1 + n_0 * q/(1+q)^2 expanded by hand.
        Rational oracle = (k == 0 ? Rational(c.fx.gv.at(1)) : Rational(0)) +
                          c.fx.gv.at(0) * plus_kernel_oracle(k);
        v.require(s.coeff(units_of(k)) == c.expect[static_cast<size_t>(k)] &&
                      oracle == c.expect[static_cast<size_t>(k)],
                  "coefficient q^" + std::to_string(k));
      }
      LocalGVTable back = local_gv_from_pt(local_series(c.fx, s), c.fx.model, {});
      v.require(back.entries.size() == 1 && back.entries.at(c.fx.point) == c.fx.gv,
                "inversion");
    }
    return v;
  });

  report(4, "smooth curves g = 0..3, nu = -2..2 round trip", [] {
    Verdict v;
    for (long g = 0; g <= 3; ++g)
      for (long nu = -2; nu <= 2; ++nu) {
        auto fx = smooth_curve(g, nu);
        LocalGVTable table;
        for (const auto &[h, n] : fx.gv.entries)
          table.add(fx.point, h, n);
        LocalFunction f = local_pt_from_gv(table, fx.model, 8);
        HalfLaurent expect = kernel_plus(g, 8) * Rational((g % 2 ? -1 : 1) * nu);
        v.require(f.at(fx.point).agrees_with(expect), "series g=" + std::to_string(g));
        v.require(local_gv_from_pt(f, fx.model, {}) == table,
                  "inversion g=" + std::to_string(g) + " nu=" + std::to_string(nu));
      }
    return v;
  });

  report(5, "elliptic fibration n_0 = -e(X), n_1 = e(S)", [] {
    Verdict v;
    std::mt19937 rng(20261016);
    std::uniform_int_distribution<long> e(-1000, 1000);
    for (int i = 0; i < 10; ++i) {
      long ex = e(rng), es = e(rng);
      auto fx = elliptic_fibration(ex, es);
      PerverseDatum global;
      global.values[Cycle{1}] =
          HalfLaurent::constant(-ex) + genus_basis_element(1) * Rational(es);
      auto gv = gv_from_perverse(global).entries.at(Cycle{1});
      v.require(gv == GenusVector{{{0, -ex}, {1, es}}}, "global decomposition");
      auto summed = integrate_chow(gv_from_perverse(fx.fiberwise), fx.model);
      v.require(summed.at(CurveClass{1}) == gv, "fiberwise integration");
    }
    return v;
  });

  report(6, "multiple cover GW_{g,k} for k <= 6, g <= 2", [] {
    Verdict v;
    GVTable n{1, {}};
    n.add(0, CurveClass{1}, 1);
    GWTable gw = gw_from_gv(n, DegreeCutoff::uniform(1, 6), 6);
    auto d = cosine_oracle(5); // through lambda^6
    for (long k = 1; k <= 6; ++k) {
      v.require(gw.at(0, CurveClass{k}) == ratio(1, k * k * k), "GW_0");
      v.require(gw.at(1, CurveClass{k}) == ratio(1, 12 * k), "GW_1");
      v.require(gw.at(2, CurveClass{k}) == ratio(k, 240), "GW_2");
      // (1/k) (2 sin(k x/2))^{-2}: the x^{2g-2} coefficient is d_g k^{2g-3}.
      Rational kpow = ratio(1, k * k * k);
      for (long g = 0; g <= 4; ++g) {
        v.require(gw.at(g, CurveClass{k}) == d[static_cast<size_t>(g)] * kpow,
                  "oracle g=" + std::to_string(g) + " k=" + std::to_string(k));
        kpow *= k * k;
      }
    }
    return v;
  }, 1000);

  report(7, "round-trip suites, 200 cases each", [] {
    Verdict v;
    std::mt19937 rng(7);
    int bad = 0;
    for (int i = 0; i < 200; ++i) {
      auto cut = random_cutoff(rng);
      GVTable n = random_gv(rng, cut, -1, 3, 6);
      auto conv = i % 2 ? Convention::global_q : Convention::local_minus_q;
      long depth = 2 * cut.bound() * 3 + 6;
      bad += gv_from_pt(pt_from_gv(n, cut, depth, conv), {}, conv) != n;
    }
    v.require(bad == 0, std::to_string(bad) + " gv->pt->gv failures");
    for (int i = 0; i < 200; ++i) {
      auto cut = random_cutoff(rng);
      GVTable n = random_gv(rng, cut, 0, 3, 6);
      bad += gv_from_gw(gw_from_gv(n, cut, 8), cut, 3) != n;
    }
    v.require(bad == 0, std::to_string(bad) + " gv->gw->gv failures");

    std::uniform_int_distribution<long> val(-5, 5);
    for (int i = 0; i < 200; ++i) {
      GenusVector n;
      for (long g = 0; g <= 3; ++g)
        n.add(g, val(rng));
      bad += decompose_symmetric(recompose(n)) != n;
    }
    v.require(bad == 0, std::to_string(bad) + " decompose/recompose failures");

    for (int i = 0; i < 200; ++i) {
      std::vector<ChowModel::Point> points;
      std::uniform_int_distribution<long> e(-3, 3);
      long top = 1 + static_cast<long>(rng() % 3);
      for (long a = 0; a <= top; ++a)
        for (long b = 0; a + b <= top; ++b)
          points.push_back({Cycle{a, b}, a + b == 0 ? 1 : e(rng)});
      ChowModel m({{"A", CurveClass{1, 0}}, {"B", CurveClass{0, 1}}}, points);
      LocalGVTable t;
      for (const auto &p : points)
        if (!p.cycle.is_zero())
          for (long g = -1; g <= 3; ++g)
            if (rng() % 4 == 0)
              t.add(p.cycle, g, val(rng));
      auto conv = i % 2 ? Convention::global_q : Convention::local_minus_q;
      LocalFunction f = local_pt_from_gv(t, m, 2 * top * 3 + 6, conv);
      bad += local_gv_from_pt(f, m, {}, conv) != t;
      LocalFunction back = conv_exp(conv_log(f, m), m);
      for (const auto &p : points)
        bad += !back.at(p.cycle).agrees_with(f.at(p.cycle));
    }
    v.require(bad == 0, std::to_string(bad) + " local or conv_exp/conv_log failures");
    if (v.pass)
      v.detail = "1000 cases";
    return v;
  });

  report(8, "eval at y = -1 equals n_0 equals Behrend sum", [] {
    Verdict v;
    auto check = [&](const HalfLaurent &datum, std::span<const BehrendStratum> s,
                     const std::string &what) {
      Rational at_minus_one = eval_minus_one(datum);
      long n0 = decompose_symmetric(datum).at(0);
      v.require(at_minus_one == n0 && n0 == behrend_euler_check(s), what);
    };
    for (long n = 2; n <= 9; ++n) {
      auto fx = enriques_In(n);
      for (auto mode : {AssemblyMode::pure, AssemblyMode::weight_filtered}) {
        auto d = assemble_datum(fx.summands, mode, fx.ranks);
        auto sums = integrate_chow(LocalFunction{d.values}, fx.model);
        check(sums.at(CurveClass{1}), fx.strata, "Enriques n=" + std::to_string(n));
        for (const auto &[c, poly] : d.values)
          v.require(eval_minus_one(poly) ==
                        gv_from_perverse(d).entries.at(c).at(0),
                    "Enriques pointwise");
      }
    }
    std::mt19937 rng(8);
    std::uniform_int_distribution<long> e(-300, 300);
    for (int i = 0; i < 10; ++i) {
      auto fx = elliptic_fibration(e(rng), e(rng));
      check(fx.global_datum, fx.strata, "elliptic");
    }
    check(nodal_local().datum, nodal_local().strata, "nodal");
    check(cusp_local().datum, cusp_local().strata, "cusp");
    for (long g = 0; g <= 3; ++g)
      for (long nu = -2; nu <= 2; ++nu) {
        auto fx = smooth_curve(g, nu);
        check(fx.datum, fx.strata, "smooth g=" + std::to_string(g));
      }
    return v;
  });

  report(9, "flop identity and perturbation detection", [] {
    Verdict v;
    v.require(flop_check(standard_flop_fixture()).residual.is_zero(),
              "rank-2 fixture residual");
    v.require(flop_check(identity_flop_fixture()).residual.is_zero(),
              "identity fixture residual");
    auto fx = standard_flop_fixture();
    auto [ok, unused] = run_cli({"flop-check"}, json_io::to_json(fx).dump());
    v.require(ok == 0, "cli exit on the derived fixture");
    int detected = 0, tried = 0;
    for (const auto &[beta, c] : fx.pt_xdag.terms()) {
      if (beta.is_zero())
        continue;
      auto perturbed = fx;
      auto terms = fx.pt_xdag.terms();
      terms[beta] += HalfLaurent::monomial(1, units_of(1));
      perturbed.pt_xdag = GradedSeries(fx.pt_xdag.cutoff(), terms);
      // Only classes inside the comparison window can be detected.
      auto pre = fx.phi.inverse()(beta);
      if (!pre.is_effective() || !fx.pt_x.cutoff().admits(pre))
        continue;
      ++tried;
      auto [status, out] = run_cli({"flop-check"}, json_io::to_json(perturbed).dump());
      detected += status == 2;
    }
    v.require(tried > 0 && detected == tried,
              std::to_string(detected) + "/" + std::to_string(tried) + " perturbations");
    if (v.pass)
      v.detail = std::to_string(detected) + " perturbations detected";
    return v;
  });

  report(10, "versal identity, g <= 3, window q^8", [] {
    Verdict v;
    std::mt19937 rng(10);
    std::uniform_int_distribution<long> val(-4, 4);
    for (long g = 0; g <= 3; ++g)
      for (int i = 0; i < 5; ++i) {
        GenusVector n;
        for (long h = 0; h <= g; ++h)
          n.add(h, val(rng));
        n.add(g, 1);
        HalfLaurent jac = recompose(n);
        auto hilb = versal_hilbert_numbers(jac, g, 8 + g);
        v.require(versal_identity_check(hilb, jac, g, 8).holds,
                  "forward data g=" + std::to_string(g));
        for (std::size_t k = 0; k < hilb.size(); ++k) {
          auto bad = hilb;
          bad[k] += 1;
          v.require(!versal_identity_check(bad, jac, g, 8).holds,
                    "undetected perturbation g=" + std::to_string(g));
        }
      }
    return v;
  });

  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAILED" : "OK",
              failures);
  return failures ? 1 : 0;
}
