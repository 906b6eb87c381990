#pragma once
/* JSON bridge. Coefficients leave as plain JSON integers, checked against the
   int64 range on the way out; anything larger fails loudly. Join provenance is
   a cache, not data, so a reparsed join compares equal but forgets it. */
#include "steiner/cells.hpp"
#include "steiner/certify.hpp"
#include "steiner/nerve_msset.hpp"
#include <json.hpp>

namespace steiner {

using json = nlohmann::json;

/* {"degree": q, "coeffs": {name: int}} */
json chain_to_json(const Adc& a, const Chain& c);
Chain chain_from_json(const Adc& a, const json& j);

/* {"name", "basis": [[names by dim]], "differential": {name: {name: int}},
   "augmentation": {name: int}}; omitted differential entry means zero. */
json adc_to_json(const Adc& a);
Adc adc_from_json(const json& j);

/* {"dim": m, "rows": [[chain, chain], ...]} */
json cell_to_json(const Adc& a, const CellTable& t);
CellTable cell_from_json(const Adc& a, const json& j);

/* {"dim": m, "target": name, "images": {"[0,2]": chain, ...}}; zero images omitted. */
json simplex_to_json(const SimplexMap& x);
SimplexMap simplex_from_json(std::shared_ptr<const Adc> target, const json& j);

json enumeration_to_json(const EnumerationResult& r);
EnumerationResult enumeration_from_json(std::shared_ptr<const Adc> target, const json& j);

/* {"class", "rank", "corank", "suspect_index", "degenerate_at": [...]} */
json classification_to_json(const ConeContext& c, const SimplexMap& x);

/* {"name", "truncation": d|null, "simplices": per-dim cell lists with face
   tables, "marked": per-dim flag lists} */
json msset_to_json(const MSSet& s);
MSSet msset_from_json(const json& j);

json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const json& j);

json basis_analysis_to_json(const BasisAnalysis& b);

json dual_report_to_json(const DualReport& r);
json oriental_stages_to_json(const std::vector<OrientalStage>& st);

}
