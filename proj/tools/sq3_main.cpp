// sq3: finite isometry groups of S^3, pre-fundamental domains, and exact
// diameter lower bounds for the quotient orbifolds.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sq3/report.hpp"

namespace {

sq3::OutputFormat pick_format(bool as_json, bool as_csv, bool as_md) {
    if (as_json) return sq3::OutputFormat::json;
    if (as_csv) return sq3::OutputFormat::csv;
    if (as_md) return sq3::OutputFormat::md;
    return sq3::OutputFormat::text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"diameter bounds for quotients of the 3-sphere by finite isometry groups"};
    app.require_subcommand(1);

    std::string backend_flag;
    double eps_flag = -1.0;
    bool as_json = false, as_csv = false, as_md = false;
    app.add_option("--backend", backend_flag, "scalar backend: exact|float|auto");
    app.add_option("--eps", eps_flag, "float comparison tolerance (default 1e-9)");
    app.add_flag("--json", as_json, "JSON output");
    app.add_flag("--csv", as_csv, "CSV output (tables)");
    app.add_flag("--md", as_md, "Markdown output (tables)");

    std::string spec_text, table_name;
    int hyper_n = 0;
    auto* diameter = app.add_subcommand("diameter", "orbit, cell and diameter bound for a group");
    diameter->add_option("spec", spec_text, "group spec, e.g. duval:29 or duval:10(m=2,n=4)")
        ->required();
    auto* orbit = app.add_subcommand("orbit", "orbit of the quaternion 1");
    orbit->add_option("spec", spec_text)->required();
    auto* cellcmd = app.add_subcommand("cell", "pre-fundamental domain (use --json for full data)");
    cellcmd->add_option("spec", spec_text)->required();
    auto* table = app.add_subcommand("table", "reproduce a summary table and compare");
    table->add_option("which", table_name,
                      "fib|nonfib-rational|nonfib-irrational|reflection|o3|inclusions")
        ->required();
    auto* hyper = app.add_subcommand("hypercube", "cubic tessellation diameter of S^n");
    hyper->add_option("n", hyper_n, "sphere dimension (1..4)")->required();
    auto* validate = app.add_subcommand("validate", "re-check the Goursat datum of a family");
    validate->add_option("spec", spec_text)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        sq3::set_float_eps(eps_flag > 0 ? eps_flag : sq3::eps_from_env(1e-9));
        sq3::Backend backend = backend_flag.empty()
                                   ? sq3::backend_from_env(sq3::Backend::auto_select)
                                   : sq3::parse_backend(backend_flag);
        sq3::OutputFormat fmt = pick_format(as_json, as_csv, as_md);

        if (table->parsed())
            return sq3::cmd_table(sq3::parse_table_id(table_name), backend, fmt, std::cout);
        if (hyper->parsed()) return sq3::cmd_hypercube(hyper_n, fmt, std::cout);

        sq3::GroupSpec spec = sq3::parse_group_spec(spec_text);
        if (diameter->parsed()) return sq3::cmd_diameter(spec, backend, fmt, std::cout);
        if (orbit->parsed()) return sq3::cmd_orbit(spec, backend, fmt, std::cout);
        if (cellcmd->parsed()) return sq3::cmd_cell(spec, backend, fmt, std::cout);
        if (validate->parsed()) return sq3::cmd_validate(spec, backend, fmt, std::cout);
        return 2;
    } catch (const sq3::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const sq3::InvalidParameters& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const sq3::UnsupportedExact& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
