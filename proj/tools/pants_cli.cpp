#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "pants/pants.hpp"

namespace {

using pants::io::Json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << text;
}

// Accepts either a path file or a complex file.
pants::DrilledComplex load_complex(const std::string& file) {
    std::string text = read_file(file);
    bool is_complex = pants::io::parse_json(text, [](const Json& j) { return j.contains("regions"); });
    if (is_complex) return pants::io::parse_complex(text).complex;
    return pants::build_drilled_complex(pants::io::parse_path(text));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pants-path drilling, octahedral triangulation and carried-surface toolkit"};
    app.require_subcommand(1);
    int status = 0;

    auto* path_cmd = app.add_subcommand("path", "Generate or validate pants paths");
    path_cmd->require_subcommand(1);

    int gen_n = 5, gen_rounds = 0;
    std::string gen_out;
    auto* gen = path_cmd->add_subcommand("gen", "Emit the closed flip path as JSON");
    gen->add_option("-n", gen_n, "Number of punctures (>= 5)")->required();
    gen->add_option("--rounds", gen_rounds, "Index-shift rounds in 1..n (default n)");
    gen->add_option("-o,--output", gen_out, "Output file (default stdout)");
    gen->callback(
        [&] { emit(pants::io::emit_path(pants::build_agol_path(gen_n, gen_rounds ? gen_rounds : gen_n)), gen_out); });

    std::string val_file;
    auto* val = path_cmd->add_subcommand("validate", "Validate a path JSON file");
    val->add_option("file", val_file, "Path JSON")->required();
    val->callback([&] {
        pants::PantsPath p = pants::io::parse_path(read_file(val_file));
        pants::PathReport r = pants::validate_path(p);
        Json j = pants::io::to_json(r);
        j["length"] = p.length();
        j["monodromy"] = p.monodromy;
        if (r.ok) j["no_universal_curve"] = pants::check_no_universal_curve(p);
        std::cout << pants::io::dump(j);
        status = r.ok ? 0 : 1;
    });

    std::string drill_file, drill_out;
    int drill_twist = 0;
    auto* drill = app.add_subcommand("drill", "Build the drilled complex of a closed path");
    drill->add_option("file", drill_file, "Path JSON")->required();
    drill->add_option("--twist", drill_twist, "Filling coefficient denominator k for 1/k (default n)");
    drill->add_option("-o,--output", drill_out, "Output file (default stdout)");
    drill->callback([&] {
        pants::PantsPath p = pants::io::parse_path(read_file(drill_file));
        auto cx = pants::build_drilled_complex(p);
        emit(pants::io::emit_complex(cx, drill_twist ? drill_twist : cx.n), drill_out);
    });

    std::string tri_file, tri_out, tri_format = "tri-text";
    auto* tri = app.add_subcommand("triangulate", "Octahedral ideal triangulation of a path or complex");
    tri->add_option("file", tri_file, "Path JSON or complex JSON")->required();
    tri->add_option("--format", tri_format, "tri-text or json")->check(CLI::IsMember({"tri-text", "json"}));
    tri->add_option("-o,--output", tri_out, "Output file (default stdout)");
    tri->callback([&] {
        auto t = pants::subdivide(pants::assemble(load_complex(tri_file)));
        auto rep = pants::validate(t);
        emit(tri_format == "json" ? pants::io::emit_tri_json(t) : pants::io::emit_tri_text(t), tri_out);
        if (!rep.ok()) {
            std::cerr << "triangulation failed validation\n";
            status = 1;
        }
    });

    auto* surf = app.add_subcommand("surfaces", "Carried surfaces of the drilled complex");
    surf->require_subcommand(1);
    int surf_n = 5, surf_cap = 64;
    bool annuli_only = false;
    std::string surf_out;
    auto* en = surf->add_subcommand("enumerate", "Enumerate carried surfaces with swap-orbit data");
    en->add_option("-n", surf_n, "Number of punctures (>= 5)")->required();
    en->add_flag("--annuli-only", annuli_only, "Only once-punctured annulus cells");
    en->add_option("--cap", surf_cap, "Maximum cells per surface");
    en->add_option("-o,--output", surf_out, "Output file (default stdout)");
    en->callback([&] {
        auto cx = pants::build_drilled_complex(pants::build_agol_path(surf_n));
        auto surfaces = pants::enumerate_carried(cx, annuli_only, pants::EnumerationLimits{surf_cap});
        auto orbits = pants::classify_orbits(cx, surfaces);
        pants::io::SurfacesFile f{surf_n, annuli_only, surf_cap, {}, pants::compression_witness(cx)};
        for (std::size_t i = 0; i < surfaces.size(); ++i) f.surfaces.push_back({surfaces[i], orbits[i]});
        emit(pants::io::emit_surfaces(f), surf_out);
    });

    int stats_n = 5;
    auto* stats = app.add_subcommand("stats", "Counts for the closed path on n punctures");
    stats->add_option("-n", stats_n, "Number of punctures (>= 5)")->required();
    stats->callback([&] {
        auto p = pants::build_agol_path(stats_n);
        auto cx = pants::build_drilled_complex(p);
        auto t = pants::subdivide(pants::assemble(cx));
        auto rep = pants::validate(t);
        Json j;
        j["n"] = stats_n;
        j["surface"] = {{"euler", pants::SurfaceType::punctured_sphere(stats_n).euler()},
                        {"curves", stats_n - 3},
                        {"pants", stats_n - 2}};
        if (stats_n <= 12) j["decompositions"] = pants::enumerate_decompositions(stats_n).size();
        j["path_length"] = p.length();
        j["loops"] = cx.loops.size();
        j["cells"] = cx.cells.size();
        j["twice_punctured_loops"] = pants::twice_punctured_loops(cx).size();
        j["octahedra"] = 2 * cx.regions.size();
        j["tets"] = t.tets.size();
        j["cusps"] = rep.cusp_count;
        j["triangulation_ok"] = rep.ok();
        j["volume_bound"] = pants::volume_bound(p).bound;
        j["heegaard_lower_bound"] = pants::heegaard_lower_bound(stats_n);
        std::cout << pants::io::dump(j);
    });

    pants::PipelineConfig cfg;
    std::string pipe_format = "tri-text", pipe_out = "out";
    auto* pipe = app.add_subcommand("pipeline", "Path, drilling, triangulation, surfaces and summary");
    pipe->add_option("-n", cfg.n, "Number of punctures (>= 5)")->required();
    pipe->add_option("--rounds", cfg.rounds, "Index-shift rounds in 1..n (default n)");
    pipe->add_option("--cap", cfg.cap, "Maximum cells per carried surface");
    pipe->add_option("--out", pipe_out, "Output directory");
    pipe->add_option("--format", pipe_format, "tri-text, json or both")
        ->check(CLI::IsMember({"tri-text", "json", "both"}));
    pipe->add_option("--twist", cfg.twist, "Filling coefficient denominator k (default n)");
    pipe->callback([&] {
        cfg.out_dir = pipe_out;
        cfg.format = pants::tri_format_from(pipe_format);
        auto rep = pants::run_pipeline(cfg);
        std::cout << pants::io::dump(rep.summary);
        status = rep.ok ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return status;
}
