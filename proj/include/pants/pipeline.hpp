#pragma once

#include <filesystem>
#include <fstream>
#include <string>

#include "pants/io.hpp"

namespace pants {

enum class TriFormat { Json, TriText, Both };

inline TriFormat tri_format_from(const std::string& s) {
    if (s == "json") return TriFormat::Json;
    if (s == "tri-text") return TriFormat::TriText;
    if (s == "both") return TriFormat::Both;
    throw InputError("unknown triangulation format '" + s + "' (json, tri-text, both)");
}

struct PipelineConfig {
    int n = 5;
    int rounds = 0;  // 0 means n
    int cap = 64;
    std::filesystem::path out_dir = "out";
    TriFormat format = TriFormat::TriText;
    int twist = 0;  // 0 means n

    void resolve() {
        if (n < 5) throw InputError("pipeline: n must be >= 5, got " + std::to_string(n));
        if (rounds == 0) rounds = n;
        if (rounds < 1 || rounds > n) throw InputError("pipeline: rounds must lie in 1.." + std::to_string(n));
        if (cap < 1) throw InputError("pipeline: cap must be >= 1");
        if (twist == 0) twist = n;
        if (twist < 1) throw InputError("pipeline: twist denominator must be >= 1");
    }
};

struct PipelineReport {
    bool ok = false;
    std::string stopped_after;  // empty when every stage ran
    io::Json summary;
    std::vector<std::filesystem::path> written;
};

namespace detail {
inline void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << text;
}
}  // namespace detail

inline PipelineReport run_pipeline(PipelineConfig cfg) {
    cfg.resolve();
    PipelineReport rep;
    std::filesystem::create_directories(cfg.out_dir);
    auto write = [&](const std::string& name, const std::string& text) {
        auto p = cfg.out_dir / name;
        detail::write_file(p, text);
        rep.written.push_back(p);
    };
    io::Json& s = rep.summary;
    s["n"] = cfg.n;
    s["rounds"] = cfg.rounds;

    PantsPath path = build_agol_path(cfg.n, cfg.rounds);
    write("path.json", io::emit_path(path));
    PathReport pr = validate_path(path);
    s["path"] = io::to_json(pr);
    s["path"]["length"] = path.length();
    s["path"]["monodromy"] = path.monodromy;
    s["path"]["no_universal_curve"] = check_no_universal_curve(path);
    s["path"]["pants_kinds_ok"] = check_pants_kinds(path);
    VolumeBound vb = volume_bound(path);
    s["volume_bound"] = {{"a_moves", vb.a_moves}, {"s_moves", vb.s_moves}, {"bound", vb.bound}};
    s["heegaard_lower_bound"] = heegaard_lower_bound(cfg.n);
    if (!pr.ok) {
        rep.stopped_after = "path";
        s["stopped_after"] = rep.stopped_after;
        write("summary.json", io::dump(s));
        return rep;
    }
    if (path.monodromy != 0) {
        rep.ok = true;
        rep.stopped_after = "path";
        s["stopped_after"] = rep.stopped_after;
        s["reason"] =
            "monodromy rotates gaps by " + std::to_string(path.monodromy) + "; drilling requires a closed path";
        write("summary.json", io::dump(s));
        return rep;
    }

    DrilledComplex cx = build_drilled_complex(path);
    write("complex.json", io::emit_complex(cx, cfg.twist));
    s["complex"] = {{"m", cx.m},
                    {"loops", cx.loops.size()},
                    {"cells", cx.cells.size()},
                    {"regions", cx.regions.size()},
                    {"filling", "1/" + std::to_string(cfg.twist)}};

    IdealTriangulation tri = subdivide(assemble(cx));
    TriangulationReport tr = validate(tri);
    if (cfg.format != TriFormat::Json) write("triangulation.tri", io::emit_tri_text(tri));
    if (cfg.format != TriFormat::TriText) write("triangulation.json", io::emit_tri_json(tri));
    s["triangulation"] = {{"tets", tri.tets.size()},     {"cusps", tr.cusp_count},
                          {"complete", tr.complete},     {"involutive", tr.involutive},
                          {"orientable", tr.orientable}, {"links_tori", tr.all_links_tori()}};

    io::SurfacesFile sf;
    sf.n = cfg.n;
    sf.annuli_only = true;
    sf.cap = cfg.cap;
    auto surfaces = enumerate_carried(cx, true, EnumerationLimits{cfg.cap});
    auto orbits = classify_orbits(cx, surfaces);
    std::set<int> orbit_ids;
    bool all_torus = true;
    for (std::size_t i = 0; i < surfaces.size(); ++i) {
        sf.surfaces.push_back(io::SurfaceEntry{surfaces[i], orbits[i]});
        orbit_ids.insert(orbits[i].orbit);
        all_torus = all_torus && orbits[i].is_canonical_torus;
    }
    sf.witness = compression_witness(cx);
    write("surfaces.json", io::emit_surfaces(sf));
    CarriedSurface T = canonical_torus(cx);
    s["surfaces"] = {{"annuli_only_count", surfaces.size()},
                     {"orbits", orbit_ids.size()},
                     {"all_reduce_to_canonical_torus", all_torus}};
    s["canonical_torus"] = {{"cells", T.selection.cells.size()},
                            {"euler", T.euler},
                            {"genus", T.genus},
                            {"punctures", T.punctures},
                            {"orientable", T.orientable},
                            {"compression_witness", io::to_json(*sf.witness)}};

    rep.ok = pr.ok && tr.ok() && tr.cusp_count == cfg.n + cx.m && !surfaces.empty() && all_torus &&
             sf.witness->consecutive_in_torus;
    s["ok"] = rep.ok;
    write("summary.json", io::dump(s));
    return rep;
}

}  // namespace pants
