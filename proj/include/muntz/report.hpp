#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace muntz {

struct ReportRecord {
    std::string name;
    std::vector<double> values;
    std::string verdict;
    std::optional<double> tolerance;
};

// Structured result of one CLI command. Records stay sorted by name and the
// JSON form round-trips losslessly (doubles serialized shortest-exact).
struct AnalysisReport {
    std::string command;
    std::string inputs_digest;
    int schema_version = 1;
    std::vector<ReportRecord> records;

    void add(std::string name, std::vector<double> values, std::string verdict,
             std::optional<double> tolerance = std::nullopt);

    nlohmann::json to_json() const;
    static AnalysisReport from_json(const nlohmann::json& j);

    // Header row `record,index,value,verdict,tolerance`, '.' decimal separator.
    void write_csv(std::ostream& os) const;
};

std::uint64_t fnv1a64(std::string_view data);

}  // namespace muntz
