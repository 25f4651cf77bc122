#pragma once

#include <ostream>

#include "sq3/tables.hpp"

namespace sq3 {

enum class OutputFormat { text, json, csv, md };

// CLI command bodies; each returns the process exit code
// (0 success/match, 1 mismatch, 2 usage error).
int cmd_diameter(const GroupSpec& spec, Backend backend, OutputFormat fmt, std::ostream& os);
int cmd_orbit(const GroupSpec& spec, Backend backend, OutputFormat fmt, std::ostream& os);
int cmd_cell(const GroupSpec& spec, Backend backend, OutputFormat fmt, std::ostream& os);
int cmd_table(TableId id, Backend backend, OutputFormat fmt, std::ostream& os);
int cmd_hypercube(int n, OutputFormat fmt, std::ostream& os);
int cmd_validate(const GroupSpec& spec, Backend backend, OutputFormat fmt, std::ostream& os);

}  // namespace sq3
