#include "json.hpp"

#include "signed_circular/verify.hpp"

namespace sc {

namespace {

std::string csv_field(const std::string& field)
{
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& row)
{
    for (std::size_t i = 0; i < row.size(); ++i) {
        out << (i == 0 ? "" : ",") << csv_field(row[i]);
    }
    out << '\n';
}

} // namespace

void write_csv(std::ostream& out, const std::vector<std::string>& columns,
               const std::vector<std::vector<std::string>>& rows)
{
    write_row(out, columns);
    for (const auto& row : rows) {
        write_row(out, row);
    }
}

void write_csv(std::ostream& out, const ClaimReport& report) { write_csv(out, report.columns, report.rows); }

void write_csv(std::ostream& out, const Table& table) { write_csv(out, table.columns, table.rows); }

std::string to_json(const ClaimReport& report)
{
    nlohmann::ordered_json j;
    j["claim_id"] = report.claim_id;
    j["status"] = to_string(report.status());
    j["instances_checked"] = report.instances_checked;
    j["seed"] = report.seed;
    j["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : report.failures) {
        j["failures"].push_back({{"instance", f.instance}, {"expected", f.expected}, {"observed", f.observed}});
    }
    j["findings"] = report.findings;
    return j.dump(2) + "\n";
}

} // namespace sc
