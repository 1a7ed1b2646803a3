#pragma once

#include "qgw/wallcross.hpp"

#include "json.hpp"

#include <string>

namespace qgw {

using nlohmann::json;

/* Serialization used by the CLI and the Python module. Rationals become
 * canonical "p/q" strings, series become coefficient arrays from q^0, and
 * objects keep nlohmann's sorted key order, so dump() is a canonical form:
 * parsing an emitted document and re-dumping it is byte-identical. */

json series_to_json(const PowerSeries& series);

/* Full report: spec, order, I0, I1, C, F_qm, F_gw_q, Q_of_q, N, chi_top
 * (null when absent), chern_coeff, diagnostics {L, mu, R0, loop}. */
json report_to_json(const PotentialReport& report);

/* Subsets emitted by the narrower CLI commands. */
json ifun_to_json(const PotentialReport& report);
json ck_to_json(const PotentialReport& report);
json potential_to_json(const PotentialReport& report);

/* Canonical text: dump(2) plus a trailing newline. */
std::string render_json(const json& document);

/* Aligned-table rendering of the same document: one row per leaf path,
 * value columns aligned; numeric content identical to the JSON form. */
std::string render_table(const json& document);

} // namespace qgw
