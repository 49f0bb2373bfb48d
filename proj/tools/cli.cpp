#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "rigiscope/polytopes.hpp"
#include "rigiscope/reports.hpp"

namespace rigiscope::cli {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot read file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void emit(const std::string& text, const std::optional<std::string>& out_path,
          std::ostream& out) {
    if (!out_path) {
        out << text;
        return;
    }
    std::ofstream file(*out_path, std::ios::binary);
    if (!file) {
        throw ParseError("cannot write file '" + *out_path + "'");
    }
    file << text;
}

/// Reports for several inputs are combined into a JSON array with the file
/// path injected into each entry; a single input stays a bare object.
std::string combine_reports(const std::vector<std::string>& files,
                            const std::vector<std::string>& reports) {
    if (reports.size() == 1) return reports.front();
    json combined = json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
        json entry;
        entry["file"] = files[i];
        const json body = json::parse(reports[i]);
        for (const auto& item : body.items()) entry[item.key()] = item.value();
        combined.push_back(std::move(entry));
    }
    return combined.dump(2) + "\n";
}

struct Options {
    Tolerances tol;
    bool formal = false;
    std::optional<std::string> out_path;
    std::string format = "json";
    std::vector<std::string> files;
    std::string to_model;
    std::string example_name;
    std::string example_geometry = "euclidean";
    double example_scale = 1.0;
};

std::string analyze_one(const std::string& text, const Options& opt) {
    if (looks_like_angle_system(text)) {
        const AngleSystem sys = parse_angle_system(text, opt.tol, opt.formal);
        return stiffness_report_json(stiffness_verdict(sys, opt.tol));
    }
    const Framework fw = parse_framework(text);
    return verdict_report_json(rigidity_verdict(fw, opt.tol));
}

int dispatch(const std::string& command, const Options& opt, std::ostream& out) {
    if (command == "analyze") {
        std::vector<std::string> reports;
        reports.reserve(opt.files.size());
        for (const std::string& path : opt.files) {
            reports.push_back(analyze_one(read_file(path), opt));
        }
        emit(combine_reports(opt.files, reports), opt.out_path, out);
        return 0;
    }
    if (command == "matrix") {
        const Framework fw = parse_framework(read_file(opt.files.front()));
        const RigidityMatrix m = rigidity_matrix(fw, opt.tol);
        emit(opt.format == "csv" ? matrix_csv(m) : matrix_report_json(m),
             opt.out_path, out);
        return 0;
    }
    if (command == "motions") {
        const Framework fw = parse_framework(read_file(opt.files.front()));
        const RigidityMatrix m = rigidity_matrix(fw, opt.tol);
        emit(motion_report_json(m, classified_motion_space(fw, opt.tol)),
             opt.out_path, out);
        return 0;
    }
    if (command == "stresses") {
        const Framework fw = parse_framework(read_file(opt.files.front()));
        const RigidityMatrix m = rigidity_matrix(fw, opt.tol);
        emit(stress_report_json(m, stress_space(m, opt.tol), fw.member_kinds),
             opt.out_path, out);
        return 0;
    }
    if (command == "transfer") {
        const Framework fw = parse_framework(read_file(opt.files.front()));
        const Model target_model = model_from_name(opt.to_model);
        if (target_model == Model::AmbientForm) {
            throw ParseError(
                "transfer: target 'ambient_form' needs explicit coefficients and is "
                "not reachable from the command line");
        }
        GeometrySpec target = GeometrySpec::euclidean(fw.geometry.dimension());
        switch (target_model) {
            case Model::Euclidean: break;
            case Model::SphereAmbient:
                target = GeometrySpec::sphere(fw.geometry.dimension());
                break;
            case Model::ProjSphere:
                target = GeometrySpec::proj_sphere(fw.geometry.dimension());
                break;
            case Model::ProjHyperbolic:
                target = GeometrySpec::proj_hyperbolic(fw.geometry.dimension());
                break;
            case Model::ProjExteriorHyperbolic:
                target = GeometrySpec::proj_exterior_hyperbolic(fw.geometry.dimension());
                break;
            default: break;
        }
        emit(serialize_framework(transfer_framework(fw, target, opt.tol)),
             opt.out_path, out);
        return 0;
    }
    if (command == "verify-equivalence") {
        std::vector<std::string> reports;
        reports.reserve(opt.files.size());
        bool all_pass = true;
        for (const std::string& path : opt.files) {
            const Framework fw = parse_framework(read_file(path));
            const EquivalenceReport report = verify_equivalence(fw, opt.tol);
            all_pass = all_pass && report.pass;
            reports.push_back(equivalence_report_json(report));
        }
        emit(combine_reports(opt.files, reports), opt.out_path, out);
        return all_pass ? 0 : 1;
    }
    if (command == "cone") {
        const Framework fw = parse_framework(read_file(opt.files.front()));
        emit(serialize_framework(cone_framework(fw, opt.tol)), opt.out_path, out);
        return 0;
    }
    if (command == "polar") {
        const std::string text = read_file(opt.files.front());
        if (looks_like_angle_system(text)) {
            const AngleSystem sys = parse_angle_system(text, opt.tol, opt.formal);
            emit(serialize_framework(polar_framework(sys)), opt.out_path, out);
        } else {
            const Framework fw = parse_framework(text);
            emit(serialize_angle_system(polar_angle_system(fw, opt.tol, opt.formal)),
                 opt.out_path, out);
        }
        return 0;
    }
    if (command == "examples") {
        Framework fw;
        bool flexible = false;
        for (const ExampleDescriptor& d : example_catalog()) {
            if (d.name == opt.example_name) flexible = d.flexible;
        }
        if (flexible) {
            if (opt.example_geometry != "euclidean" || opt.example_scale != 1.0) {
                throw ParseError("examples: flexible controls are emitted as flat "
                                 "frameworks only; transfer them afterwards");
            }
            fw = flexible_example(opt.example_name);
        } else {
            const Model m = model_from_name(opt.example_geometry);
            GeometrySpec geometry = GeometrySpec::euclidean(3);
            const int n = opt.example_name.rfind("simplex(", 0) == 0
                              ? std::stoi(opt.example_name.substr(
                                    8, opt.example_name.size() - 9))
                              : 3;
            switch (m) {
                case Model::Euclidean: geometry = GeometrySpec::euclidean(n); break;
                case Model::SphereAmbient: geometry = GeometrySpec::sphere(n); break;
                case Model::ProjSphere: geometry = GeometrySpec::proj_sphere(n); break;
                case Model::ProjHyperbolic:
                    geometry = GeometrySpec::proj_hyperbolic(n);
                    break;
                case Model::ProjExteriorHyperbolic:
                    geometry = GeometrySpec::proj_exterior_hyperbolic(n);
                    break;
                case Model::AmbientForm:
                    throw ParseError("examples: geometry 'ambient_form' needs explicit "
                                     "coefficients; use the library API");
            }
            fw = canonical_polytope(opt.example_name, geometry, opt.example_scale,
                                    opt.tol);
        }
        emit(serialize_framework(fw), opt.out_path, out);
        return 0;
    }
    throw ParseError("unknown command '" + command + "'");
}

}  // namespace

int run(std::vector<std::string> argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"first-order rigidity analysis of bar-and-joint frameworks "
                 "across euclidean, spherical and hyperbolic geometry"};
    app.require_subcommand(1);

    Options opt;
    CLI::Option* tol_option =
        app.add_option("--tol", opt.tol.geometric,
                       "geometric tolerance (membership, tangency, domain clamps); "
                       "RIGISCOPE_TOL sets the default")
            ->check(CLI::PositiveNumber);
    app.add_option("--rank-eps", opt.tol.rank_eps,
                   "relative singular-value cutoff for rank decisions")
        ->check(CLI::PositiveNumber);
    app.add_flag("--formal", opt.formal,
                 "permit formal constraints (ultraparallel hyperplane pairs)");

    const auto add_out = [&](CLI::App* sub) {
        sub->add_option("--out", opt.out_path, "write the report to a file");
    };

    CLI::App* analyze = app.add_subcommand(
        "analyze", "first-order rigidity (or stiffness) verdicts");
    analyze->add_option("files", opt.files, "framework or angle-system files")
        ->required()
        ->expected(-1);
    add_out(analyze);

    CLI::App* matrix = app.add_subcommand("matrix", "export the rigidity matrix");
    matrix->add_option("file", opt.files, "framework file")->required()->expected(1);
    matrix->add_option("--format", opt.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    add_out(matrix);

    CLI::App* motions = app.add_subcommand("motions", "export a motion-space basis");
    motions->add_option("file", opt.files, "framework file")->required()->expected(1);
    add_out(motions);

    CLI::App* stresses =
        app.add_subcommand("stresses", "export a self-stress basis");
    stresses->add_option("file", opt.files, "framework file")->required()->expected(1);
    add_out(stresses);

    CLI::App* transfer =
        app.add_subcommand("transfer", "map a framework to another geometry");
    transfer->add_option("file", opt.files, "framework file")->required()->expected(1);
    transfer->add_option("--to", opt.to_model, "target model name")->required();
    add_out(transfer);

    CLI::App* verify = app.add_subcommand(
        "verify-equivalence",
        "factorization, rank and stress-subspace agreement across geometries");
    verify->add_option("files", opt.files, "model-convention framework files")
        ->required()
        ->expected(-1);
    add_out(verify);

    CLI::App* cone =
        app.add_subcommand("cone", "cone of an ambient spherical framework");
    cone->add_option("file", opt.files, "framework file")->required()->expected(1);
    add_out(cone);

    CLI::App* polar = app.add_subcommand(
        "polar", "convert between exterior point frameworks and angle systems");
    polar->add_option("file", opt.files, "framework or angle-system file")
        ->required()
        ->expected(1);
    add_out(polar);

    CLI::App* examples =
        app.add_subcommand("examples", "emit a canonical test framework");
    examples->add_option("name", opt.example_name, "example name")->required();
    examples->add_option("--geometry", opt.example_geometry, "target model name");
    examples->add_option("--scale", opt.example_scale, "scale factor")
        ->check(CLI::PositiveNumber);
    add_out(examples);

    std::vector<const char*> cargs;
    cargs.reserve(argv.size());
    for (const std::string& a : argv) cargs.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (tol_option->count() == 0) {
        if (const char* env = std::getenv("RIGISCOPE_TOL")) {
            char* end = nullptr;
            const double value = std::strtod(env, &end);
            if (end == env || *end != '\0' || !(value > 0.0)) {
                err << "error: RIGISCOPE_TOL must be a positive number, got '" << env
                    << "'\n";
                return 2;
            }
            opt.tol.geometric = value;
        }
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), opt, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc));
    for (int i = 0; i < argc; ++i) args.emplace_back(argv[i]);
    return run(std::move(args), out, err);
}

}  // namespace rigiscope::cli
