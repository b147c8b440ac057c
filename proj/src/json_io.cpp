#include "gvkit/json_io.hpp"

#include "gvkit/error.hpp"

namespace gvkit::json_io {

namespace {

constexpr const char *kModule = "json_io";

template <class F> auto guarded(const char *what, F &&f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception &e) {
    throw PreconditionError(kModule, what, e.what());
  }
}

std::vector<long> longs(const json &j) { return j.get<std::vector<long>>(); }

json coeff_pairs(const HalfLaurent::Coeffs &c) {
  json out = json::array();
  for (const auto &[u, v] : c)
    out.push_back(json::array({u, to_string(v)}));
  return out;
}

HalfLaurent::Coeffs coeffs_from(const json &j) {
  HalfLaurent::Coeffs out;
  for (const auto &pair : j) {
    if (!pair.is_array() || pair.size() != 2)
      throw PreconditionError(kModule, "read", "coefficient must be [u, value]");
    const HalfUnit u = pair[0].get<long>();
    Rational v = pair[1].is_string() ? parse_rational(pair[1].get<std::string>())
                                     : Rational(pair[1].get<long>());
    if (out.count(u))
      throw PreconditionError(kModule, "read", "repeated exponent",
                              std::to_string(u));
    if (v != 0)
      out.emplace(u, v);
  }
  return out;
}

json precision_json(const HalfLaurent &p) {
  return p.precision() ? json(*p.precision()) : json(nullptr);
}

} // namespace

json to_json(const HalfLaurent &p) {
  return {{"precision", precision_json(p)}, {"coeffs", coeff_pairs(p.coeffs())}};
}

HalfLaurent half_laurent_from_json(const json &j) {
  return guarded("half_laurent", [&] {
    auto coeffs = coeffs_from(j.at("coeffs"));
    const json &p = j.contains("precision") ? j.at("precision") : json(nullptr);
    return p.is_null() ? HalfLaurent::polynomial(std::move(coeffs))
                       : HalfLaurent::series(std::move(coeffs), p.get<long>());
  });
}

json to_json(const DegreeCutoff &c) {
  return {{"weights", c.weights()}, {"bound", c.bound()}};
}

DegreeCutoff cutoff_from_json(const json &j) {
  return guarded("cutoff", [&] {
    return DegreeCutoff(longs(j.at("weights")), j.at("bound").get<long>());
  });
}

json to_json(const GradedSeries &s) {
  json terms = json::array();
  std::optional<HalfUnit> lo, hi;
  for (const auto &[beta, c] : s.terms()) {
    json t = to_json(c);
    t["beta"] = std::vector<long>(beta.coords().begin(), beta.coords().end());
    terms.push_back(std::move(t));
    if (!c.is_exact_zero()) {
      if (!c.coeffs().empty())
        lo = lo ? std::min(*lo, c.floor()) : c.floor();
      if (c.precision())
        hi = hi ? std::min(*hi, *c.precision()) : *c.precision();
    }
  }
  json window = nullptr;
  if (hi)
    window = json::array({lo.value_or(*hi), *hi});
  return {{"rank", s.rank()},
          {"cutoff", to_json(s.cutoff())},
          {"window", window},
          {"terms", terms}};
}

GradedSeries series_from_json(const json &j) {
  return guarded("series", [&] {
    DegreeCutoff cutoff = cutoff_from_json(j.at("cutoff"));
    if (j.contains("rank") && j.at("rank").get<std::size_t>() != cutoff.rank())
      throw PreconditionError(kModule, "series", "rank disagrees with cutoff");
    std::optional<HalfUnit> default_precision;
    if (j.contains("window") && !j.at("window").is_null())
      default_precision = j.at("window").at(1).get<long>();
    GradedSeries::Terms terms;
    for (const auto &t : j.at("terms")) {
      CurveClass beta(longs(t.at("beta")));
      if (beta.rank() != cutoff.rank())
        throw PreconditionError(kModule, "series", "class of wrong rank",
                                to_string(beta));
      auto coeffs = coeffs_from(t.at("coeffs"));
      std::optional<HalfUnit> p = default_precision;
      if (t.contains("precision"))
        p = t.at("precision").is_null() ? std::nullopt
                                        : std::optional<HalfUnit>(
                                              t.at("precision").get<long>());
      HalfLaurent c = p ? HalfLaurent::series(std::move(coeffs), *p)
                        : HalfLaurent::polynomial(std::move(coeffs));
      if (!terms.emplace(beta, std::move(c)).second)
        throw PreconditionError(kModule, "series", "repeated class",
                                to_string(beta));
    }
    return GradedSeries(cutoff, std::move(terms));
  });
}

json to_json(const GenusVector &n) {
  json e = json::array();
  for (const auto &[g, v] : n.entries)
    e.push_back(json::array({g, v}));
  return {{"entries", e}};
}

GenusVector genus_vector_from_json(const json &j) {
  return guarded("genus_vector", [&] {
    GenusVector out;
    for (const auto &e : j.at("entries"))
      out.add(e.at(0).get<long>(), e.at(1).get<long>());
    return out;
  });
}

json to_json(const GVTable &t) {
  json e = json::array();
  for (const auto &[beta, genus] : t.entries)
    for (const auto &[g, v] : genus.entries)
      e.push_back({{"beta", std::vector<long>(beta.coords().begin(),
                                              beta.coords().end())},
                   {"g", g},
                   {"n", v}});
  return {{"rank", t.rank}, {"entries", e}};
}

GVTable gv_table_from_json(const json &j) {
  return guarded("gv_table", [&] {
    GVTable out{j.at("rank").get<std::size_t>(), {}};
    for (const auto &e : j.at("entries")) {
      CurveClass beta(longs(e.at("beta")));
      if (beta.rank() != out.rank)
        throw PreconditionError(kModule, "gv_table", "class of wrong rank",
                                to_string(beta));
      out.add(e.at("g").get<long>(), beta, e.at("n").get<long>());
    }
    return out;
  });
}

json to_json(const GWTable &t) {
  json e = json::array();
  for (const auto &[beta, genus] : t.entries)
    for (const auto &[g, v] : genus)
      e.push_back({{"beta", std::vector<long>(beta.coords().begin(),
                                              beta.coords().end())},
                   {"g", g},
                   {"gw", to_string(v)}});
  return {{"rank", t.rank}, {"entries", e}};
}

GWTable gw_table_from_json(const json &j) {
  return guarded("gw_table", [&] {
    GWTable out{j.at("rank").get<std::size_t>(), {}};
    for (const auto &e : j.at("entries")) {
      CurveClass beta(longs(e.at("beta")));
      if (beta.rank() != out.rank)
        throw PreconditionError(kModule, "gw_table", "class of wrong rank",
                                to_string(beta));
      out.add(e.at("g").get<long>(), beta,
              parse_rational(e.at("gw").get<std::string>()));
    }
    return out;
  });
}

json to_json(const ChowModel &m) {
  json gens = json::array(), points = json::array();
  for (const auto &g : m.generators())
    gens.push_back({{"label", g.label},
                    {"class", std::vector<long>(g.curve_class.coords().begin(),
                                                g.curve_class.coords().end())}});
  for (const auto &p : m.points())
    points.push_back({{"cycle", std::vector<long>(p.cycle.coords().begin(),
                                                  p.cycle.coords().end())},
                      {"euler", p.euler}});
  return {{"generators", gens}, {"points", points}};
}

ChowModel chow_model_from_json(const json &j) {
  return guarded("chow_model", [&] {
    std::vector<ChowModel::Generator> gens;
    std::vector<ChowModel::Point> points;
    for (const auto &g : j.at("generators"))
      gens.push_back({g.at("label").get<std::string>(),
                      CurveClass(longs(g.at("class")))});
    for (const auto &p : j.at("points"))
      points.push_back({Cycle(longs(p.at("cycle"))), p.at("euler").get<long>()});
    return ChowModel(std::move(gens), std::move(points));
  });
}

namespace {
json cycle_json(const Cycle &c) {
  return std::vector<long>(c.coords().begin(), c.coords().end());
}
} // namespace

json to_json(const LocalFunction &f) {
  json v = json::array();
  for (const auto &[c, s] : f.values) {
    json e = to_json(s);
    e["cycle"] = cycle_json(c);
    v.push_back(std::move(e));
  }
  return {{"values", v}};
}

LocalFunction local_function_from_json(const json &j) {
  return guarded("local_function", [&] {
    LocalFunction out;
    for (const auto &e : j.at("values")) {
      Cycle c(longs(e.at("cycle")));
      if (out.values.count(c))
        throw PreconditionError(kModule, "local_function", "repeated cycle",
                                to_string(c));
      out.values.emplace(c, half_laurent_from_json(e));
    }
    return out;
  });
}

json to_json(const LocalGVTable &t) {
  json e = json::array();
  for (const auto &[c, genus] : t.entries)
    for (const auto &[g, v] : genus.entries)
      e.push_back({{"cycle", cycle_json(c)}, {"g", g}, {"n", v}});
  return {{"entries", e}};
}

LocalGVTable local_gv_table_from_json(const json &j) {
  return guarded("local_gv_table", [&] {
    LocalGVTable out;
    for (const auto &e : j.at("entries"))
      out.add(Cycle(longs(e.at("cycle"))), e.at("g").get<long>(),
              e.at("n").get<long>());
    return out;
  });
}

json to_json(const PerverseDatum &d) {
  LocalFunction f{d.values};
  return to_json(f);
}

PerverseDatum perverse_datum_from_json(const json &j) {
  return PerverseDatum{local_function_from_json(j).values};
}

json to_json(const SummandTable &s, const RankTable &ranks) {
  json summands = json::array(), r = json::array();
  for (const auto &x : s) {
    json e = to_json(x.poly);
    e["label"] = x.label;
    e["point"] = cycle_json(x.point);
    e["weight"] = x.weight;
    summands.push_back(std::move(e));
  }
  for (const auto &[c, m] : ranks)
    for (const auto &[ix, rank] : m)
      r.push_back({{"point", cycle_json(c)},
                   {"i", ix.first},
                   {"j", ix.second},
                   {"rank", rank}});
  return {{"summands", summands}, {"ranks", r}};
}

std::pair<SummandTable, RankTable> summands_from_json(const json &j) {
  return guarded("summands", [&] {
    SummandTable s;
    RankTable r;
    for (const auto &e : j.at("summands"))
      s.push_back({e.value("label", std::string{}), Cycle(longs(e.at("point"))),
                   half_laurent_from_json(e), e.at("weight").get<long>()});
    if (j.contains("ranks"))
      for (const auto &e : j.at("ranks"))
        r[Cycle(longs(e.at("point")))][{e.at("i").get<long>(),
                                        e.at("j").get<long>()}] =
            e.at("rank").get<long>();
    return std::pair{std::move(s), std::move(r)};
  });
}

json page_to_json(const std::map<PageIndex, long> &dims) {
  json out = json::array();
  for (const auto &[ix, d] : dims)
    out.push_back(json::array({ix.first, ix.second, d}));
  return out;
}

namespace {
std::map<PageIndex, long> page_from(const json &j) {
  std::map<PageIndex, long> out;
  for (const auto &e : j)
    out[{e.at(0).get<long>(), e.at(1).get<long>()}] += e.at(2).get<long>();
  return out;
}
} // namespace

json to_json(const SpectralPage &p) {
  return {{"e1", page_to_json(p.e1)}, {"d1_ranks", page_to_json(p.d1_ranks)}};
}

SpectralPage spectral_page_from_json(const json &j) {
  return guarded("spectral_page", [&] {
    SpectralPage p;
    p.e1 = page_from(j.at("e1"));
    if (j.contains("d1_ranks"))
      p.d1_ranks = page_from(j.at("d1_ranks"));
    return p;
  });
}

json to_json(const LatticeMap &m) { return m.rows(); }

LatticeMap lattice_map_from_json(const json &j) {
  return guarded("lattice_map", [&] {
    return LatticeMap(j.get<std::vector<std::vector<long>>>());
  });
}

json to_json(const FlopFixture &fx) {
  json basis = json::array();
  for (const auto &b : fx.fiber_basis)
    basis.push_back(std::vector<long>(b.coords().begin(), b.coords().end()));
  return {{"pt_x", to_json(fx.pt_x)},
          {"pt_x_over_y", to_json(fx.pt_x_over_y)},
          {"pt_xdag", to_json(fx.pt_xdag)},
          {"pt_xdag_over_y", to_json(fx.pt_xdag_over_y)},
          {"phi", to_json(fx.phi)},
          {"fiber_basis", basis}};
}

FlopFixture flop_fixture_from_json(const json &j) {
  return guarded("flop_fixture", [&] {
    FlopFixture fx;
    fx.pt_x = series_from_json(j.at("pt_x"));
    fx.pt_x_over_y = series_from_json(j.at("pt_x_over_y"));
    fx.pt_xdag = series_from_json(j.at("pt_xdag"));
    fx.pt_xdag_over_y = series_from_json(j.at("pt_xdag_over_y"));
    fx.phi = lattice_map_from_json(j.at("phi"));
    for (const auto &b : j.at("fiber_basis"))
      fx.fiber_basis.emplace_back(longs(b));
    return fx;
  });
}

} // namespace gvkit::json_io
