#include "rx/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "rx/errors.hpp"
#include "rx/io.hpp"

namespace rx {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cmd_validate(const InputDocument& doc, std::ostream& out) {
    std::vector<std::string> violations, warnings;
    RxInput input = to_engine_input(doc);
    if (doc.mode == InputMode::Divisorial) {
        const auto& in = std::get<DivisorialInput>(input);
        ValidationReport rep = validate_fano(in.dp);
        violations = rep.violations;
        warnings = rep.warnings;
    } else {
        const auto& in = std::get<DegenerationsInput>(input);
        if (!in.box.origin_interior())
            violations.push_back("(a) the origin is not strictly interior to the box");
        std::optional<RatVec> bc_nu = in.dh_barycenter;
        for (const DeltaSpec& spec : in.deltas) {
            Polytope delta = convex_hull(spec.vertices);
            if (!delta.origin_interior()) {
                violations.push_back("degeneration '" + spec.label +
                                     "': the origin is not strictly interior");
                continue;
            }
            if (!(project_drop_last(delta) == in.box))
                violations.push_back("degeneration '" + spec.label + "' does not project onto the box");
            Moments m = moments_affine_density(delta, AffineFunc{zero_vec(delta.dim()), Rat(1)});
            RatVec bc = scale(Rat(1) / m.mass, m.first_moment);
            RatVec projected(bc.begin(), bc.end() - 1);
            if (!bc_nu)
                bc_nu = projected;
            else if (*bc_nu != projected)
                violations.push_back("degeneration '" + spec.label + "' projects its barycenter to " +
                                     vec_str(projected) + ", expected " + vec_str(*bc_nu));
        }
    }
    for (const std::string& v : violations) out << "violation: " << v << "\n";
    for (const std::string& w : warnings) out << "warning: " << w << "\n";
    if (violations.empty()) {
        out << "OK" << (warnings.empty() ? "" : " (with warnings)") << "\n";
        return 0;
    }
    return 2;
}

int cmd_degenerations(const InputDocument& doc, std::ostream& out) {
    RxInput input = to_engine_input(doc);
    if (doc.mode == InputMode::Divisorial) {
        const auto& in = std::get<DivisorialInput>(input);
        Subdivision sub = refinement(in.dp);
        std::vector<Label> admissible = admissible_labels(in.dp, sub);
        std::vector<Label> candidates;
        for (const auto& [marker, f] : in.dp.psi) candidates.push_back(Label::marker(marker));
        candidates.push_back(Label::generic());
        for (const Label& y : candidates) {
            bool ok = std::find(admissible.begin(), admissible.end(), y) != admissible.end();
            out << y.str() << ": " << (ok ? "admissible" : "not admissible");
            if (ok) out << ", " << build_delta(in.dp, sub, y).vertices().size() << " vertices";
            out << "\n";
        }
    } else {
        for (const DeltaDoc& dd : doc.degenerations)
            out << dd.label << ": " << convex_hull(dd.vertices).vertices().size() << " vertices\n";
    }
    return 0;
}

int cmd_compute_r(const InputDocument& doc, bool as_json, const std::string& svg_path, std::ostream& out) {
    RxReport rep = compute_rx(to_engine_input(doc));
    if (as_json) {
        out << serialize_report(doc.name, rep);
    } else {
        out << "R(X) = " << rep.r << "\n";
        out << "source = " << rep.source.str() << "\n";
    }
    if (!svg_path.empty()) {
        if (doc.dim != 2) throw UnsupportedDimensionError("--svg requires a 2-d box");
        Polytope box = convex_hull(doc.box_vertices);
        RatVec q = zero_vec(2);
        if (!is_zero(rep.bc_nu)) q = ray_boundary_hit(box, neg(rep.bc_nu)).point;
        std::ofstream svg(svg_path, std::ios::binary);
        if (!svg) throw InputError("cannot write '" + svg_path + "'");
        svg << emit_svg(box, rep.bc_nu, q);
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact R(X) computation for complexity-one Fano T-varieties"};
    app.require_subcommand(1);

    std::string file;
    bool as_json = false;
    std::string svg_path;

    CLI::App* validate = app.add_subcommand("validate", "check the Fano conditions of an input file");
    validate->add_option("file", file, "input JSON")->required();
    CLI::App* degenerations = app.add_subcommand("degenerations", "list degeneration labels");
    degenerations->add_option("file", file, "input JSON")->required();
    CLI::App* compute = app.add_subcommand("compute-r", "compute R(X)");
    compute->add_option("file", file, "input JSON")->required();
    compute->add_flag("--json", as_json, "emit the full report as JSON");
    compute->add_option("--svg", svg_path, "write a diagram of the box, bc and q (dim 2 only)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        InputDocument doc = parse_input(read_file(file));
        if (validate->parsed()) return cmd_validate(doc, out);
        if (degenerations->parsed()) return cmd_degenerations(doc, out);
        return cmd_compute_r(doc, as_json, svg_path, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const GeometryError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace rx
