#include "qgw/report.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace qgw {

json series_to_json(const PowerSeries& series)
{
    json coeffs = json::array();
    for (const Rational& c : series.coeffs())
        coeffs.push_back(to_string(c));
    return coeffs;
}

namespace {

json spec_to_json(const GeometrySpec& spec)
{
    return json{{"n", spec.n}, {"l", spec.l}, {"lp", spec.lp}};
}

} // namespace

json report_to_json(const PotentialReport& report)
{
    json constants = json::array();
    for (const PowerSeries& ck : report.constants.C)
        constants.push_back(series_to_json(ck));
    json invariants = json::array();
    for (const Rational& nd : report.N)
        invariants.push_back(to_string(nd));

    return json{
        {"spec", spec_to_json(report.spec)},
        {"order", report.order},
        {"I0", series_to_json(report.I0)},
        {"I1", series_to_json(report.I1)},
        {"C", constants},
        {"F_qm", series_to_json(report.F_qm)},
        {"F_gw_q", series_to_json(report.F_gw_q)},
        {"Q_of_q", series_to_json(report.Q_of_q)},
        {"N", invariants},
        {"chi_top", report.chi_top ? json(to_string(*report.chi_top)) : json(nullptr)},
        {"chern_coeff", to_string(report.chern_coeff)},
        {"diagnostics",
         json{{"L", series_to_json(report.diag.L)},
              {"mu", series_to_json(report.diag.mu)},
              {"R0", series_to_json(report.diag.R0)},
              {"loop", series_to_json(report.diag.loop)}}},
    };
}

json ifun_to_json(const PotentialReport& report)
{
    return json{{"spec", spec_to_json(report.spec)},
                {"order", report.order},
                {"I0", series_to_json(report.I0)},
                {"I1", series_to_json(report.I1)}};
}

json ck_to_json(const PotentialReport& report)
{
    json constants = json::array();
    for (const PowerSeries& ck : report.constants.C)
        constants.push_back(series_to_json(ck));
    return json{{"spec", spec_to_json(report.spec)},
                {"order", report.order},
                {"C", constants}};
}

json potential_to_json(const PotentialReport& report)
{
    return json{{"spec", spec_to_json(report.spec)},
                {"order", report.order},
                {"F_qm", series_to_json(report.F_qm)}};
}

std::string render_json(const json& document)
{
    return document.dump(2) + "\n";
}

namespace {

std::string scalar_text(const json& value)
{
    if (value.is_string())
        return value.get<std::string>();
    if (value.is_null())
        return "null";
    return value.dump();
}

struct TableRow {
    std::string name;
    std::vector<std::string> values;
};

void flatten(const json& node, const std::string& prefix, std::vector<TableRow>& rows)
{
    if (node.is_object()) {
        for (auto it = node.begin(); it != node.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
        return;
    }
    if (node.is_array()) {
        const bool nested = std::any_of(node.begin(), node.end(),
                                        [](const json& e) { return e.is_array() || e.is_object(); });
        if (nested) {
            int i = 0;
            for (const json& element : node)
                flatten(element, prefix + "[" + std::to_string(i++) + "]", rows);
            return;
        }
        TableRow row{prefix, {}};
        for (const json& element : node)
            row.values.push_back(scalar_text(element));
        rows.push_back(std::move(row));
        return;
    }
    rows.push_back(TableRow{prefix, {scalar_text(node)}});
}

} // namespace

std::string render_table(const json& document)
{
    std::vector<TableRow> rows;
    flatten(document, "", rows);

    std::size_t name_width = 0;
    std::vector<std::size_t> column_widths;
    for (const TableRow& row : rows) {
        name_width = std::max(name_width, row.name.size());
        if (row.values.size() > column_widths.size())
            column_widths.resize(row.values.size(), 0);
        for (std::size_t i = 0; i < row.values.size(); ++i)
            column_widths[i] = std::max(column_widths[i], row.values[i].size());
    }

    std::ostringstream out;
    for (const TableRow& row : rows) {
        out << row.name << std::string(name_width - row.name.size(), ' ');
        for (std::size_t i = 0; i < row.values.size(); ++i)
            out << "  " << std::string(column_widths[i] - row.values[i].size(), ' ')
                << row.values[i];
        out << "\n";
    }
    return out.str();
}

} // namespace qgw
