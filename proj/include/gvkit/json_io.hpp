#pragma once

#include "gvkit/chow_local.hpp"
#include "gvkit/flop_transform.hpp"
#include "gvkit/graded_series.hpp"
#include "gvkit/perverse_euler.hpp"
#include "gvkit/transforms.hpp"

#include <json.hpp>

// JSON encodings. Exponents are written in half-units (q^k is 2k) and
// rationals as "num/den" strings, so every encoding is exact and
// round-trips bit for bit.
namespace gvkit::json_io {

using json = nlohmann::json;

json to_json(const HalfLaurent &p);
HalfLaurent half_laurent_from_json(const json &j);

json to_json(const DegreeCutoff &c);
DegreeCutoff cutoff_from_json(const json &j);

json to_json(const GradedSeries &s);
GradedSeries series_from_json(const json &j);

json to_json(const GenusVector &n);
GenusVector genus_vector_from_json(const json &j);

json to_json(const GVTable &t);
GVTable gv_table_from_json(const json &j);

json to_json(const GWTable &t);
GWTable gw_table_from_json(const json &j);

json to_json(const ChowModel &m);
ChowModel chow_model_from_json(const json &j);

json to_json(const LocalFunction &f);
LocalFunction local_function_from_json(const json &j);

json to_json(const LocalGVTable &t);
LocalGVTable local_gv_table_from_json(const json &j);

json to_json(const PerverseDatum &d);
PerverseDatum perverse_datum_from_json(const json &j);

/// {"summands": [...], "ranks": [...]}.
json to_json(const SummandTable &s, const RankTable &ranks);
std::pair<SummandTable, RankTable> summands_from_json(const json &j);

json to_json(const SpectralPage &p);
SpectralPage spectral_page_from_json(const json &j);
json page_to_json(const std::map<PageIndex, long> &dims);

json to_json(const LatticeMap &m);
LatticeMap lattice_map_from_json(const json &j);

json to_json(const FlopFixture &fx);
FlopFixture flop_fixture_from_json(const json &j);

} // namespace gvkit::json_io
