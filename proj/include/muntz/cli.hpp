#pragma once

// Command-line front end: sequence-spec ingestion, one subcommand per
// diagnostic family, JSON/CSV report emission.
//
// Exit codes: 0 success with passing verdicts, 1 failed invariant or
// inequality, 2 input error, 3 conditioning / numeric-contract error.

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "muntz/exponents.hpp"
#include "muntz/report.hpp"

namespace muntz::cli {

// {"kind":"explicit","points":[[re,im],...]} or
// {"kind":"geometric"|"affine"|"power"|"superlacunary","params":{...},"n":N}.
ExponentSequence parse_sequence_spec(const nlohmann::json& spec);

// Reads a file path, or inline JSON when the argument starts with '{'.
nlohmann::json load_spec_json(const std::string& path_or_inline);

// Full dispatcher; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace muntz::cli
