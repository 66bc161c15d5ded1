#ifndef OMF_REPORT_HPP
#define OMF_REPORT_HPP

#include <string>

#include <json.hpp>

#include "omf/montes.hpp"

namespace omf {

/// JSON report document, schema "om-factor/1". All integer payloads are
/// decimal strings so downstream consumers never overflow.
nlohmann::json report_to_json(const MontesResult& result, const IntPoly& input, long long p,
                              bool squarefree_applied, double elapsed_ms);

std::string report_to_text(const MontesResult& result, const IntPoly& input, long long p);

nlohmann::json tower_poly_to_json(const FieldTower& t, const TowerPoly& g);

} // namespace omf

#endif
