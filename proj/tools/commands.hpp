#pragma once

#include "exactlin/report.hpp"
#include "options.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace cli {

using Reports = std::vector<exactlin::VerificationReport>;

const std::vector<std::string>& command_names();

// Runs one subcommand; characters and other listings go to `out`.
Reports run_command(const std::string& cmd, const Options& o, std::ostream& out);

// stable order: by check name, production order within a check
void canonicalize(Reports& rs);

nlohmann::json to_json(const exactlin::VerificationReport& r);
nlohmann::json to_json(const Reports& rs);
void print_summary(const Reports& rs, std::ostream& out);

// 1 if any hard check failed, else 0; exploratory reports never count
int exit_code(const Reports& rs);

}  // namespace cli
