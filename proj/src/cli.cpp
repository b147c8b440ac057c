#include "gvkit/cli.hpp"

#include "gvkit/error.hpp"
#include "gvkit/fixtures.hpp"
#include "gvkit/flop_transform.hpp"
#include "gvkit/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace gvkit::cli {

namespace {

using json = nlohmann::json;
namespace jio = json_io;

constexpr const char *kModule = "cli";

struct Options {
  std::string verb;
  std::string fixture;
  std::string input;
  std::string output;
  std::string cutoff;
  std::string convention;
  std::string format = "json";
  std::string mode;
  std::optional<long> window;
  std::optional<long> gmin;
  long gmax = GenusRange{}.max;
  long n = 3;
  long euler_x = -200;
  long euler_s = 24;
  long genus = 0;
  long nu = 1;
};

struct Result {
  json value;
  std::string table;
  int status = 0;
};

const std::vector<std::string> kVerbs = {
    "decompose", "recompose",   "gv2pt",     "pt2gv",    "gv2gw",
    "gw2gv",     "local-pt2gv", "local-gv2pt", "integrate", "perverse",
    "spectral",  "flop-check",  "fixture"};

[[noreturn]] void bad(const std::string &op, const std::string &reason,
                      const std::string &location = {}) {
  throw PreconditionError(kModule, op, reason, location);
}

json read_input(const Options &o, std::istream &in) {
  std::string text;
  if (o.input.empty() || o.input == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(o.input);
    if (!f)
      bad("read", "cannot open input", o.input);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::exception &e) {
    bad("read", std::string("invalid JSON: ") + e.what());
  }
}

/// "B" (uniform weights) or "w1,w2,...:B".
DegreeCutoff parse_cutoff(const std::string &spec, std::size_t rank) {
  if (spec.empty())
    bad("cutoff", "--cutoff is required");
  try {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
      return DegreeCutoff::uniform(rank, std::stol(spec));
    std::vector<long> weights;
    std::stringstream ws(spec.substr(0, colon));
    for (std::string part; std::getline(ws, part, ',');)
      weights.push_back(std::stol(part));
    if (weights.size() != rank)
      bad("cutoff", "weight count differs from lattice rank", spec);
    return DegreeCutoff(std::move(weights), std::stol(spec.substr(colon + 1)));
  } catch (const std::logic_error &) {
    bad("cutoff", "expected B or w1,...,wr:B", spec);
  }
}

Convention parse_convention(const std::string &s, Convention fallback) {
  if (s.empty())
    return fallback;
  if (s == "global-q")
    return Convention::global_q;
  if (s == "local-minus-q")
    return Convention::local_minus_q;
  bad("convention", "expected global-q or local-minus-q", s);
}

long require_window(const Options &o) {
  if (!o.window)
    bad("window", "--window is required for this verb");
  return *o.window;
}

GenusRange range_of(const Options &o) {
  if (o.gmin && *o.gmin > o.gmax)
    bad("genus range", "--gmin exceeds --gmax");
  return {o.gmin, o.gmax};
}

std::string class_label(std::span<const long> coords) { return to_string(coords); }

// --- table renderers -------------------------------------------------------

std::string render_rows(const std::vector<std::vector<std::string>> &rows) {
  std::vector<std::size_t> width;
  for (const auto &r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i)
        width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  std::ostringstream out;
  for (const auto &r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i)
        out << "  ";
      out << std::setw(static_cast<int>(width[i])) << r[i];
    }
    out << '\n';
  }
  return out.str();
}

std::string table_of(const GenusVector &n) {
  std::vector<std::vector<std::string>> rows{{"g", "n"}};
  for (const auto &[g, v] : n.entries)
    rows.push_back({std::to_string(g), std::to_string(v)});
  return render_rows(rows);
}

std::string table_of(const GVTable &t) {
  std::vector<std::vector<std::string>> rows{{"beta", "g", "n"}};
  for (const auto &[beta, genus] : t.entries)
    for (const auto &[g, v] : genus.entries)
      rows.push_back({class_label(beta.coords()), std::to_string(g),
                      std::to_string(v)});
  return render_rows(rows);
}

std::string table_of(const GWTable &t) {
  std::vector<std::vector<std::string>> rows{{"beta", "g", "GW"}};
  for (const auto &[beta, genus] : t.entries)
    for (const auto &[g, v] : genus)
      rows.push_back({class_label(beta.coords()), std::to_string(g),
                      v.get_den() == 1 ? v.get_num().get_str() : v.get_str()});
  return render_rows(rows);
}

std::string table_of(const LocalGVTable &t) {
  std::vector<std::vector<std::string>> rows{{"cycle", "g", "n"}};
  for (const auto &[c, genus] : t.entries)
    for (const auto &[g, v] : genus.entries)
      rows.push_back({class_label(c.coords()), std::to_string(g),
                      std::to_string(v)});
  return render_rows(rows);
}

std::string table_of(const GradedSeries &s) {
  std::vector<std::vector<std::string>> rows{{"beta", "coefficient"}};
  for (const auto &[beta, c] : s.terms())
    rows.push_back({class_label(beta.coords()), to_string(c, 'q')});
  return render_rows(rows);
}

std::string table_of(const LocalFunction &f) {
  std::vector<std::vector<std::string>> rows{{"cycle", "value"}};
  for (const auto &[c, v] : f.values)
    rows.push_back({class_label(c.coords()), to_string(v, 'q')});
  return render_rows(rows);
}

std::string table_of(const std::map<PageIndex, long> &dims) {
  std::vector<std::vector<std::string>> rows{{"i", "j", "dim"}};
  for (const auto &[ix, d] : dims)
    rows.push_back({std::to_string(ix.first), std::to_string(ix.second),
                    std::to_string(d)});
  return render_rows(rows);
}

template <class T> Result make(const T &value) {
  return {jio::to_json(value), table_of(value), 0};
}

// --- verbs -----------------------------------------------------------------

Result verb_decompose(const Options &o, std::istream &in) {
  HalfLaurent p = jio::half_laurent_from_json(read_input(o, in));
  if (!p.is_polynomial())
    bad("decompose", "input must be a polynomial");
  return make(decompose_symmetric(p));
}

Result verb_recompose(const Options &o, std::istream &in) {
  HalfLaurent p = recompose(jio::genus_vector_from_json(read_input(o, in)));
  return {jio::to_json(p), to_string(p, 'y') + "\n", 0};
}

Result verb_gv2pt(const Options &o, std::istream &in) {
  GVTable n = jio::gv_table_from_json(read_input(o, in));
  auto cutoff = parse_cutoff(o.cutoff, n.rank);
  return make(pt_from_gv(n, cutoff, require_window(o),
                         parse_convention(o.convention, Convention::global_q)));
}

Result verb_pt2gv(const Options &o, std::istream &in) {
  GradedSeries z = jio::series_from_json(read_input(o, in));
  return make(gv_from_pt(z, range_of(o),
                         parse_convention(o.convention, Convention::global_q)));
}

Result verb_gv2gw(const Options &o, std::istream &in) {
  GVTable n = jio::gv_table_from_json(read_input(o, in));
  auto cutoff = parse_cutoff(o.cutoff, n.rank);
  long order = o.window ? *o.window : 2 * o.gmax + 2;
  GWTable gw = gw_from_gv(n, cutoff, order);
  for (auto &[beta, genus] : gw.entries)
    std::erase_if(genus, [&](const auto &kv) { return kv.first > o.gmax; });
  std::erase_if(gw.entries, [](const auto &kv) { return kv.second.empty(); });
  return make(gw);
}

Result verb_gw2gv(const Options &o, std::istream &in) {
  GWTable gw = jio::gw_table_from_json(read_input(o, in));
  auto cutoff = parse_cutoff(o.cutoff, gw.rank);
  return make(gv_from_gw(gw, cutoff, o.gmax));
}

Result verb_local_gv2pt(const Options &o, std::istream &in) {
  json j = read_input(o, in);
  ChowModel model = jio::chow_model_from_json(j.at("model"));
  LocalGVTable n = jio::local_gv_table_from_json(j.at("table"));
  return make(local_pt_from_gv(
      n, model, require_window(o),
      parse_convention(o.convention, Convention::local_minus_q)));
}

Result verb_local_pt2gv(const Options &o, std::istream &in) {
  json j = read_input(o, in);
  ChowModel model = jio::chow_model_from_json(j.at("model"));
  LocalFunction f = jio::local_function_from_json(j.at("function"));
  return make(local_gv_from_pt(
      f, model, range_of(o),
      parse_convention(o.convention, Convention::local_minus_q)));
}

Result verb_integrate(const Options &o, std::istream &in) {
  json j = read_input(o, in);
  ChowModel model = jio::chow_model_from_json(j.at("model"));
  return make(integrate_to_gv(jio::local_gv_table_from_json(j.at("table")),
                              model));
}

AssemblyMode parse_mode(const std::string &s) {
  if (s.empty() || s == "weight-filtered")
    return AssemblyMode::weight_filtered;
  if (s == "pure")
    return AssemblyMode::pure;
  bad("mode", "expected pure or weight-filtered", s);
}

Result verb_perverse(const Options &o, std::istream &in) {
  json j = read_input(o, in);
  PerverseDatum datum;
  if (j.contains("summands")) {
    auto [summands, ranks] = jio::summands_from_json(j);
    datum = assemble_datum(summands, parse_mode(o.mode), ranks);
  } else {
    datum = jio::perverse_datum_from_json(j);
  }
  LocalGVTable gv = gv_from_perverse(datum);
  Result r;
  r.value = {{"datum", jio::to_json(datum)}, {"gv", jio::to_json(gv)}};
  r.table = table_of(gv);
  return r;
}

Result verb_spectral(const Options &o, std::istream &in) {
  auto e2 = e2_from_e1(jio::spectral_page_from_json(read_input(o, in)));
  return {{{"e2", jio::page_to_json(e2)}}, table_of(e2), 0};
}

Result flop_result(const FlopCheck &c) {
  json non_eff = json::array();
  for (const auto &b : c.non_effective)
    non_eff.push_back(std::vector<long>(b.coords().begin(), b.coords().end()));
  Result r;
  r.value = {{"holds", c.holds},
             {"residual", jio::to_json(c.residual)},
             {"non_effective", non_eff}};
  std::vector<std::vector<std::string>> rows{{"beta", "residual"}};
  for (const auto &[beta, v] : c.residual.terms())
    if (!v.empty())
      rows.push_back({class_label(beta.coords()), to_string(v, 'q')});
  r.table = std::string(c.holds ? "identity holds" : "identity fails") + "\n" +
            (rows.size() > 1 ? render_rows(rows) : "");
  r.status = c.holds ? 0 : 2;
  return r;
}

Result verb_flop_check(const Options &o, std::istream &in) {
  return flop_result(flop_check(jio::flop_fixture_from_json(read_input(o, in))));
}

json row_json(const GenusVector &n) {
  return json::array({n.at(0), n.at(1), n.at(2)});
}

Result fixture_enriques(const Options &o) {
  const std::string mode = o.mode.empty() ? "all" : o.mode;
  if (mode != "all" && mode != "hst" && mode != "kl" && mode != "ours")
    bad("fixture", "mode must be hst, kl, ours or all", mode);
  auto fx = enriques_In(o.n);
  auto table = enriques_table(fx);
  std::vector<std::pair<std::string, const GenusVector *>> rows;
  if (mode == "all" || mode == "hst")
    rows.emplace_back("HST", &table.hst);
  if (mode == "all" || mode == "kl")
    rows.emplace_back("KL", &table.kl);
  if (mode == "all" || mode == "ours")
    rows.emplace_back("ours", &table.ours);
  Result r;
  json jr = json::object();
  std::vector<std::vector<std::string>> text{{"", "n_0", "n_1", "n_2"}};
  for (const auto &[name, gv] : rows) {
    jr[name] = row_json(*gv);
    text.push_back({name, std::to_string(gv->at(0)), std::to_string(gv->at(1)),
                    std::to_string(gv->at(2))});
  }
  r.value = {{"fixture", "enriques"}, {"n", o.n}, {"rows", jr}};
  r.table = render_rows(text);
  return r;
}

Result fixture_curve(const std::string &name, const LocalCurveFixture &fx) {
  Result r;
  r.value = {{"fixture", name},
             {"model", jio::to_json(fx.model)},
             {"table", jio::to_json(LocalGVTable{{{fx.point, fx.gv}}})},
             {"datum", jio::to_json(fx.datum)}};
  r.table = table_of(fx.gv);
  return r;
}

Result verb_fixture(const Options &o) {
  const std::string &name = o.fixture;
  if (name == "enriques")
    return fixture_enriques(o);
  if (name == "elliptic") {
    auto fx = elliptic_fibration(o.euler_x, o.euler_s);
    GenusVector gv = decompose_symmetric(fx.global_datum);
    Result r;
    r.value = {{"fixture", "elliptic"},
               {"model", jio::to_json(fx.model)},
               {"fiberwise", jio::to_json(fx.fiberwise)},
               {"global", jio::to_json(gv)}};
    r.table = table_of(gv);
    return r;
  }
  if (name == "nodal")
    return fixture_curve(name, nodal_local());
  if (name == "cusp")
    return fixture_curve(name, cusp_local());
  if (name == "smooth")
    return fixture_curve(name, smooth_curve(o.genus, o.nu));
  if (name == "flop" || name == "flop-identity") {
    long q = o.window.value_or(6);
    auto fx = name == "flop" ? standard_flop_fixture(q) : identity_flop_fixture(q);
    return {jio::to_json(fx), "four series and lattice map; use --format json\n",
            0};
  }
  bad("fixture",
      "unknown fixture (enriques, elliptic, nodal, cusp, smooth, flop, "
      "flop-identity)",
      name);
}

Result dispatch(const Options &o, std::istream &in) {
  const std::string &v = o.verb;
  if (v != "fixture" && !o.fixture.empty())
    bad(v, "unexpected positional argument", o.fixture);
  if (v == "decompose")
    return verb_decompose(o, in);
  if (v == "recompose")
    return verb_recompose(o, in);
  if (v == "gv2pt")
    return verb_gv2pt(o, in);
  if (v == "pt2gv")
    return verb_pt2gv(o, in);
  if (v == "gv2gw")
    return verb_gv2gw(o, in);
  if (v == "gw2gv")
    return verb_gw2gv(o, in);
  if (v == "local-gv2pt")
    return verb_local_gv2pt(o, in);
  if (v == "local-pt2gv")
    return verb_local_pt2gv(o, in);
  if (v == "integrate")
    return verb_integrate(o, in);
  if (v == "perverse")
    return verb_perverse(o, in);
  if (v == "spectral")
    return verb_spectral(o, in);
  if (v == "flop-check")
    return verb_flop_check(o, in);
  return verb_fixture(o);
}

void write_error(std::ostream &err, const std::string &module,
                 const std::string &operation, const std::string &reason,
                 const std::string &location) {
  json e = {{"module", module},
            {"operation", operation},
            {"reason", reason},
            {"location", location}};
  err << e.dump() << '\n';
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in,
        std::ostream &out, std::ostream &err) {
  Options o;
  CLI::App app{"Gopakumar-Vafa invariant toolkit", "gvkit"};
  app.add_option("verb", o.verb, "command")
      ->required()
      ->check(CLI::IsMember(kVerbs));
  app.add_option("fixture", o.fixture, "fixture name (fixture verb only)");
  app.add_option("--input,-i", o.input, "input JSON path (default stdin)");
  app.add_option("--output,-o", o.output, "output path (default stdout)");
  app.add_option("--cutoff", o.cutoff, "degree cutoff: B or w1,...,wr:B");
  app.add_option("--window", o.window,
                 "q order for stable-pair series, lambda order for gv2gw");
  app.add_option("--gmin", o.gmin, "lowest genus to extract (default: as deep as the window resolves)");
  app.add_option("--gmax", o.gmax, "highest genus to extract");
  app.add_option("--convention", o.convention)
      ->check(CLI::IsMember({"global-q", "local-minus-q"}));
  app.add_option("--format", o.format)->check(CLI::IsMember({"json", "table"}));
  app.add_option("--mode", o.mode,
                 "perverse: pure|weight-filtered; enriques: hst|kl|ours|all");
  app.add_option("--n", o.n, "Enriques fiber type I_n");
  app.add_option("--ex", o.euler_x, "e(X) for the elliptic fixture");
  app.add_option("--es", o.euler_s, "e(S) for the elliptic fixture");
  app.add_option("--g", o.genus, "genus for the smooth-curve fixture");
  app.add_option("--nu", o.nu, "Behrend value for the smooth-curve fixture");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError &e) {
    write_error(err, kModule, "parse", e.what(), "");
    return 1;
  }

  try {
    Result r = dispatch(o, in);
    std::string text = o.format == "table" ? r.table : r.value.dump(2) + "\n";
    if (o.output.empty() || o.output == "-") {
      out << text;
    } else {
      std::ofstream f(o.output, std::ios::binary);
      if (!f)
        bad("write", "cannot open output", o.output);
      f << text;
    }
    return r.status;
  } catch (const Error &e) {
    write_error(err, e.module(), e.operation(), e.reason(), e.location());
    return e.kind() == ErrorKind::check_failed ? 2 : 1;
  } catch (const json::exception &e) {
    write_error(err, "json_io", "read", e.what(), "");
    return 1;
  }
}

} // namespace gvkit::cli
