#include "sq3/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "sq3/hypercube.hpp"

namespace sq3 {

namespace {

using nlohmann::json;

json field_json(const FieldElem& x) {
    return json{{"basis",
                 {fraction_string(x.rat()), fraction_string(x.coeff_sqrt2()),
                  fraction_string(x.coeff_sqrt5()), fraction_string(x.coeff_sqrt10())}},
                {"float", x.to_double()}};
}

std::string field_text(const FieldElem& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

template <class S>
json scalar_json(const S& x) {
    if constexpr (ScalarOps<S>::exact) return field_json(x);
    else return json(x);
}

template <class S>
json quat_json(const Quat<S>& q) {
    return json{scalar_json(q.w), scalar_json(q.x), scalar_json(q.y), scalar_json(q.z)};
}

template <class S>
json vec_json(const Vec4<S>& v) {
    return json{scalar_json(v[0]), scalar_json(v[1]), scalar_json(v[2]), scalar_json(v[3])};
}

template <class S>
json bound_json(const DiameterBound<S>& b) {
    json j{{"cos_sign", b.cos_sign}, {"radians", b.radians}};
    if constexpr (ScalarOps<S>::exact) j["cos2"] = field_json(b.cos2);
    else j["cos2"] = b.cos2;
    return j;
}

json faces_json(const FaceCensus& fc) {
    json by_size = json::object();
    for (const auto& [size, count] : fc.by_size) by_size[std::to_string(size)] = count;
    json faces = json::array();
    for (const auto& [normal, cyc] : fc.faces) faces.push_back(json{{"normal", normal}, {"vertices", cyc}});
    return json{{"vertex_total", fc.vertex_total},
                {"face_total", fc.face_total},
                {"by_size", by_size},
                {"faces", faces}};
}

template <class S>
json cell_json(const GroupSpec& spec, const IsometryGroup<S>& g, const SphericalCell<S>& cell) {
    json j;
    j["spec"] = "duval:" + spec.family +
                (spec.params.describe().empty() ? "" : "(" + spec.params.describe() + ")");
    j["backend"] = ScalarOps<S>::exact ? "exact" : "float";
    j["group_order"] = g.size();
    j["kind"] = cell_kind_name(cell.kind);
    json orbit = json::array();
    for (const auto& p : cell.orbit.points) orbit.push_back(quat_json(p));
    j["orbit"] = json{{"size", cell.orbit.size()}, {"points", orbit}};
    json layers = json::array();
    for (const auto& layer : cell.orbit.layers) {
        double c = std::min(1.0, std::max(-1.0, ScalarOps<S>::to_double(layer.cos_dist)));
        layers.push_back(json{{"radians", std::acos(c)}, {"count", layer.point_idx.size()}});
    }
    j["layers"] = layers;
    json normals = json::array();
    for (const auto& n : cell.normals) normals.push_back(vec_json(n));
    j["halfspaces"] = normals;
    json verts = json::array();
    for (const auto& v : cell.vertices) {
        json vj{{"dir", vec_json(v.dir)}, {"active", v.active}};
        auto u = unit_double4(v.dir);
        vj["unit"] = json{u[0], u[1], u[2], u[3]};
        verts.push_back(vj);
    }
    j["vertices"] = verts;
    j["faces"] = faces_json(cell_statistics(cell));
    j["bound"] = bound_json(cell.bound);
    return j;
}

std::string radians_str(double x) {
    std::ostringstream os;
    os << std::setprecision(15) << x;
    return os.str();
}

struct CellRun {
    json j;
    DiameterOutcome summary;
    std::string exact_cos2_text;
};

template <class S>
CellRun run_cell(const GroupSpec& spec) {
    CellRun run;
    IsometryGroup<S> g = instantiate<S>(spec.family, spec.params);
    Orbit<S> orb = orbit_of_one(g);
    SphericalCell<S> cell = prefundamental_domain(orb);
    run.j = cell_json(spec, g, cell);
    run.summary.backend = ScalarOps<S>::exact ? "exact" : "float";
    run.summary.group_order = static_cast<long>(g.size());
    run.summary.orbit_size = static_cast<long>(orb.size());
    run.summary.stabilizer_order = static_cast<long>(stabilizer_of_one_order(g));
    run.summary.kind = cell.kind;
    run.summary.vertex_count = static_cast<int>(cell.vertices.size());
    run.summary.radians = cell.bound.radians;
    run.summary.faces = cell_statistics(cell);
    for (const auto& layer : orb.layers) {
        double c = std::min(1.0, std::max(-1.0, ScalarOps<S>::to_double(layer.cos_dist)));
        run.summary.layers.emplace_back(std::acos(c), static_cast<int>(layer.point_idx.size()));
    }
    if constexpr (ScalarOps<S>::exact) {
        run.summary.has_exact = true;
        run.summary.cos_sign = cell.bound.cos_sign;
        run.summary.cos2 = cell.bound.cos2;
        run.exact_cos2_text = field_text(cell.bound.cos2);
    }
    return run;
}

bool choose_exact(const GroupSpec& spec, Backend backend, std::ostream& os) {
    switch (backend) {
        case Backend::exact:
            if (!exact_supported_family(spec.family, spec.params))
                throw UnsupportedExact("family " + spec.family +
                                       " has no exact coordinates at these parameters");
            return true;
        case Backend::floating: return false;
        case Backend::auto_select:
            if (exact_supported_family(spec.family, spec.params)) return true;
            os << "note: falling back to the float backend for duval:" << spec.family << "\n";
            return false;
    }
    return false;
}

CellRun run_cell_any(const GroupSpec& spec, Backend backend, std::ostream& os) {
    if (choose_exact(spec, backend, os)) return run_cell<FieldElem>(spec);
    return run_cell<double>(spec);
}

void print_summary_text(const CellRun& run, std::ostream& os) {
    const auto& s = run.summary;
    os << "backend:        " << s.backend << "\n";
    os << "group order:    " << s.group_order << "\n";
    os << "orbit size:     " << s.orbit_size << " (stabilizer " << s.stabilizer_order << ")\n";
    os << "layers:         ";
    for (std::size_t i = 0; i < s.layers.size(); ++i) {
        if (i) os << ", ";
        os << s.layers[i].second << " @ " << radians_str(s.layers[i].first);
    }
    os << "\n";
    os << "cell kind:      " << cell_kind_name(s.kind) << "\n";
    os << "vertices:       " << s.vertex_count << "\n";
    if (!s.faces.by_size.empty()) {
        os << "faces:          ";
        bool first = true;
        for (const auto& [size, count] : s.faces.by_size) {
            if (!first) os << ", ";
            os << count << " x " << size << "-gon";
            first = false;
        }
        os << "\n";
    }
    os << "bound:          " << radians_str(s.radians) << " rad";
    if (s.has_exact)
        os << "  [cos^2 = " << run.exact_cos2_text << ", cos sign "
           << (s.cos_sign > 0 ? "+" : s.cos_sign < 0 ? "-" : "0") << "]";
    os << "\n";
}

void print_table_text(const TableResult& res, std::ostream& os) {
    os << "table " << table_name(res.id) << "\n";
    for (const auto& row : res.rows) {
        os << "  " << std::left << std::setw(22) << row.name << std::setw(44) << row.expected.display
           << " computed " << std::setw(18) << radians_str(row.computed) << " " << row.status;
        if (row.exact_checked) os << " (exact)";
        if (!row.detail.empty()) os << "  [" << row.detail << "]";
        os << "\n";
    }
    os << (res.all_match ? "all rows match" : "MISMATCH PRESENT") << "\n";
}

json table_json(const TableResult& res) {
    json rows = json::array();
    for (const auto& row : res.rows) {
        rows.push_back(json{{"name", row.name},
                            {"expected", row.expected.display},
                            {"expected_radians", row.expected.radians},
                            {"computed", row.computed},
                            {"exact_checked", row.exact_checked},
                            {"status", row.status},
                            {"detail", row.detail}});
    }
    return json{{"table", table_name(res.id)}, {"rows", rows}, {"all_match", res.all_match}};
}

void print_table_csv(const TableResult& res, std::ostream& os) {
    os << "name,expected,expected_radians,computed,exact_checked,status\n";
    for (const auto& row : res.rows) {
        std::string disp = row.expected.display;
        for (auto& ch : disp)
            if (ch == ',') ch = ';';
        os << row.name << "," << disp << "," << radians_str(row.expected.radians) << ","
           << radians_str(row.computed) << "," << (row.exact_checked ? "1" : "0") << "," << row.status
           << "\n";
    }
}

void print_table_md(const TableResult& res, std::ostream& os) {
    os << "| family | expected | computed | status |\n";
    os << "|---|---|---|---|\n";
    for (const auto& row : res.rows)
        os << "| " << row.name << " | " << row.expected.display << " | " << radians_str(row.computed)
           << " | " << row.status << (row.exact_checked ? " (exact)" : "") << " |\n";
}

}  // namespace

int cmd_diameter(const GroupSpec& spec, Backend backend, OutputFormat fmt, std::ostream& os) {
    CellRun run = run_cell_any(spec, backend, os);
    if (fmt == OutputFormat::json) {
        json j{{"spec", run.j["spec"]},       {"backend", run.j["backend"]},
               {"group_order", run.j["group_order"]}, {"orbit_size", run.summary.orbit_size},
               {"bound", run.j["bound"]},     {"kind", run.j["kind"]},
               {"faces", run.j["faces"]}};
        os << j.dump(2) << "\n";
    } else {
        os << "duval:" << spec.family;
        if (!spec.params.describe().empty()) os << "(" << spec.params.describe() << ")";
        os << "\n";
        print_summary_text(run, os);
    }
    return 0;
}

int cmd_orbit(const GroupSpec& spec, Backend backend, OutputFormat fmt, std::ostream& os) {
    CellRun run = run_cell_any(spec, backend, os);
    if (fmt == OutputFormat::json) {
        json j{{"spec", run.j["spec"]},
               {"backend", run.j["backend"]},
               {"orbit", run.j["orbit"]},
               {"layers", run.j["layers"]}};
        os << j.dump(2) << "\n";
    } else {
        os << "orbit of 1 under duval:" << spec.family << ": " << run.summary.orbit_size
           << " points\n";
        for (std::size_t i = 0; i < run.summary.layers.size(); ++i)
            os << "  layer " << i << ": " << run.summary.layers[i].second << " points at "
               << radians_str(run.summary.layers[i].first) << " rad\n";
    }
    return 0;
}

int cmd_cell(const GroupSpec& spec, Backend backend, OutputFormat fmt, std::ostream& os) {
    CellRun run = run_cell_any(spec, backend, os);
    if (fmt == OutputFormat::json) {
        os << run.j.dump(2) << "\n";
    } else {
        os << "pre-fundamental domain of duval:" << spec.family << "\n";
        print_summary_text(run, os);
    }
    return 0;
}

int cmd_table(TableId id, Backend backend, OutputFormat fmt, std::ostream& os) {
    TableResult res = run_table(id, backend);
    switch (fmt) {
        case OutputFormat::json: os << table_json(res).dump(2) << "\n"; break;
        case OutputFormat::csv: print_table_csv(res, os); break;
        case OutputFormat::md: print_table_md(res, os); break;
        case OutputFormat::text: print_table_text(res, os); break;
    }
    return res.all_match ? 0 : 1;
}

int cmd_hypercube(int n, OutputFormat fmt, std::ostream& os) {
    double formula = hypercube_formula(n);
    double computed;
    std::string method;
    if (n == 3) {
        GroupSpec spec{"47", {}};
        computed = compute_diameter(spec, Backend::exact).radians;
        method = "duval:47 cell";
    } else {
        computed = hypercube_diameter(n);
        method = "float Voronoi fallback";
    }
    bool match = std::fabs(computed - formula) <= 1e-9;
    if (fmt == OutputFormat::json) {
        json j{{"n", n},
               {"computed", computed},
               {"formula", formula},
               {"method", method},
               {"match", match}};
        os << j.dump(2) << "\n";
    } else {
        os << "S^" << n << " cubic tessellation: computed " << radians_str(computed) << " via "
           << method << ", arccos(1/sqrt(n+1)) = " << radians_str(formula) << " -> "
           << (match ? "match" : "MISMATCH") << "\n";
    }
    return match ? 0 : 1;
}

int cmd_validate(const GroupSpec& spec, Backend backend, OutputFormat fmt, std::ostream& os) {
    bool exact = choose_exact(spec, backend, os);
    ValidationReport rep = exact ? validate_family<FieldElem>(spec.family, spec.params)
                                 : validate_family<double>(spec.family, spec.params);
    if (fmt == OutputFormat::json) {
        json checks = json::array();
        for (const auto& c : rep.checks)
            checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        os << json{{"spec", "duval:" + spec.family}, {"checks", checks}, {"ok", rep.ok()}}.dump(2)
           << "\n";
    } else {
        for (const auto& c : rep.checks)
            os << (c.pass ? "  ok   " : "  FAIL ") << c.name
               << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
        os << (rep.ok() ? "valid" : "INVALID") << "\n";
    }
    return rep.ok() ? 0 : 1;
}

}  // namespace sq3
