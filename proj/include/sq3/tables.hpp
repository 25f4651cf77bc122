#pragma once

#include "sq3/orbit_cell.hpp"

namespace sq3 {

enum class Backend { auto_select, exact, floating };

Backend parse_backend(const std::string& name);
const char* backend_name(Backend b);

// flags > SQ3_BACKEND / SQ3_EPS environment > defaults
Backend backend_from_env(Backend fallback = Backend::auto_select);
double eps_from_env(double fallback = 1e-9);

// Closed-form target for a table row; exact data present when the value
// lives in Q(sqrt2, sqrt5).
struct ExpectedValue {
    std::string display;
    double radians = 0.0;
    bool has_exact = false;
    int cos_sign = 0;
    FieldElem cos2;
};

ExpectedValue ev_pi();
ExpectedValue ev_pi_over(int k);  // k in {2, 3, 4}
ExpectedValue ev_exact(std::string display, int cos_sign, FieldElem cos2);
ExpectedValue ev_float(std::string display, double radians);

// One computed diameter, with the exact record when the exact backend ran.
struct DiameterOutcome {
    std::string backend;  // "exact" | "float"
    long group_order = 0;
    long orbit_size = 0;
    long stabilizer_order = 0;
    CellKind kind = CellKind::polytope;
    int vertex_count = 0;
    double radians = 0.0;
    bool has_exact = false;
    int cos_sign = 0;
    FieldElem cos2;
    FaceCensus faces;
    std::vector<std::pair<double, int>> layers;  // distance, point count
};

DiameterOutcome compute_diameter(const GroupSpec& spec, Backend backend);

struct TableRow {
    std::string name;  // family id or row label
    FamilyParams params;
    ExpectedValue expected;
    double computed = 0.0;
    bool exact_checked = false;
    bool match = false;
    std::string status;  // "match" | "mismatch" | "skipped(...)"
    std::string detail;
};

enum class TableId { fib, nonfib_rational, nonfib_irrational, reflection, o3, inclusions };

TableId parse_table_id(const std::string& name);
const char* table_name(TableId id);

struct TableResult {
    TableId id{};
    std::vector<TableRow> rows;
    bool all_match = true;
};

TableResult run_table(TableId id, Backend backend);

// Registry rows: family id + expected closed form, in table order.
const std::vector<std::pair<std::string, ExpectedValue>>& nonfib_rational_rows();
const std::vector<std::pair<std::string, ExpectedValue>>& nonfib_irrational_rows();
const std::vector<std::pair<std::string, ExpectedValue>>& reflection_rows();

struct InclusionEntry {
    std::string sub, sup;
    long index = 0;
    bool normal = false;
    bool conjugate_sub = false;  // embed `sub` via conjugation by (i+j)/sqrt2 first
};
const std::vector<InclusionEntry>& inclusion_entries();

}  // namespace sq3
