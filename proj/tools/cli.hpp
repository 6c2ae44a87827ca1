#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace hypcover::cli {

enum ExitCode : int {
  kOk = 0,
  kInadmissible = 2,
  kInfeasible = 3,
  kNumericalFailure = 4,
};

/// Runs one command; args exclude the program name. Output goes to `out`
/// unless --out names a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct TableRow {
  double u, v, w;
};

/// Orthoschemes of the three reference tables, in table order.
const std::array<TableRow, 10>& table_rows(const std::string& which);

}  // namespace hypcover::cli
