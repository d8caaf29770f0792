#include "muntz/report.hpp"

#include <algorithm>

namespace muntz {

void AnalysisReport::add(std::string name, std::vector<double> values,
                         std::string verdict, std::optional<double> tolerance) {
    records.push_back({std::move(name), std::move(values), std::move(verdict),
                       tolerance});
    std::sort(records.begin(), records.end(),
              [](const ReportRecord& a, const ReportRecord& b) {
                  return a.name < b.name;
              });
}

nlohmann::json AnalysisReport::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["inputs_digest"] = inputs_digest;
    j["schema_version"] = schema_version;
    j["records"] = nlohmann::json::array();
    for (const ReportRecord& r : records) {
        nlohmann::json jr;
        jr["name"] = r.name;
        jr["values"] = r.values;
        jr["verdict"] = r.verdict;
        if (r.tolerance)
            jr["tolerance"] = *r.tolerance;
        else
            jr["tolerance"] = nullptr;
        j["records"].push_back(std::move(jr));
    }
    return j;
}

AnalysisReport AnalysisReport::from_json(const nlohmann::json& j) {
    AnalysisReport rep;
    rep.command = j.at("command").get<std::string>();
    rep.inputs_digest = j.at("inputs_digest").get<std::string>();
    rep.schema_version = j.at("schema_version").get<int>();
    for (const auto& jr : j.at("records")) {
        ReportRecord r;
        r.name = jr.at("name").get<std::string>();
        r.values = jr.at("values").get<std::vector<double>>();
        r.verdict = jr.at("verdict").get<std::string>();
        if (!jr.at("tolerance").is_null())
            r.tolerance = jr.at("tolerance").get<double>();
        rep.records.push_back(std::move(r));
    }
    return rep;
}

void AnalysisReport::write_csv(std::ostream& os) const {
    os.precision(17);
    os << "record,index,value,verdict,tolerance\n";
    for (const ReportRecord& r : records) {
        if (r.values.empty()) {
            os << r.name << ",," << ',' << r.verdict << ',';
            if (r.tolerance) os << *r.tolerance;
            os << '\n';
            continue;
        }
        for (std::size_t i = 0; i < r.values.size(); ++i) {
            os << r.name << ',' << i + 1 << ',' << r.values[i] << ','
               << r.verdict << ',';
            if (r.tolerance) os << *r.tolerance;
            os << '\n';
        }
    }
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace muntz
