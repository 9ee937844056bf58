#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ringnc::cli {

/// Runs one command; `args` excludes the program name.  Exit status 0 on
/// success, 1 when a checked property fails (unsolvable network, failed
/// verification, table mismatch), 2 on usage, parse, and limit errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Recomputes rows 1..max_k of the maximal-partition table and compares
/// them with the golden file.  max_k <= 30.
int verify_table1(unsigned max_k, const std::string& golden_path, std::ostream& out);

/// Recomputes the maximal-ring lists in the golden file.
int verify_example513(const std::string& golden_path, std::ostream& out);

std::string default_data_path(const std::string& file);

}  // namespace ringnc::cli
