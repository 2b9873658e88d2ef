#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "pants/carried_surfaces.hpp"
#include "pants/triangulation.hpp"

namespace pants::io {

using Json = nlohmann::ordered_json;

inline std::string dump(const Json& j) {
    return j.dump(2) + "\n";
}

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

// Parses text and runs `build`; all failures surface as ParseError.
template <class F>
auto parse_json(std::string_view text, F&& build) {
    Json j;
    try {
        j = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t off = e.byte > 0 ? e.byte - 1 : 0;
        auto [line, col] = line_column(text, off);
        throw ParseError("malformed JSON", line, col);
    }
    try {
        return build(j);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("unexpected JSON structure: ") + e.what());
    } catch (const InputError& e) {
        throw ParseError(e.what());
    }
}

// ---- decompositions and paths ----

inline Json chord_json(const Chord& c) {
    return Json::array({c.a, c.b});
}

inline Chord chord_from(const Json& j, int n) {
    if (!j.is_array() || j.size() != 2) throw ParseError("chord must be a pair");
    return Chord::make(j.at(0).get<int>(), j.at(1).get<int>(), n);
}

inline Json chords_json(const PantsDecomposition& P) {
    Json a = Json::array();
    for (const Chord& c : P.chords()) a.push_back(chord_json(c));
    return a;
}

inline PantsDecomposition decomposition_from(const Json& chords, int n) {
    std::vector<Chord> cs;
    for (const Json& c : chords) cs.push_back(chord_from(c, n));
    return PantsDecomposition(n, std::move(cs));
}

inline Json to_json(const PantsDecomposition& P) {
    Json j;
    j["n"] = P.n();
    j["chords"] = chords_json(P);
    return j;
}

inline std::string emit_decomposition(const PantsDecomposition& P) {
    return dump(to_json(P));
}

inline PantsDecomposition parse_decomposition(std::string_view text) {
    return parse_json(text, [](const Json& j) {
        int n = j.at("n").get<int>();
        if (n < 4) throw ParseError("n must be >= 4");
        return decomposition_from(j.at("chords"), n);
    });
}

inline Json move_json(const MoveRecord& m) {
    Json s;
    if (m.kind == MoveKind::S) {
        s["kind"] = "S";
        return s;
    }
    s["removed"] = chord_json(m.removed);
    s["inserted"] = chord_json(m.inserted);
    return s;
}

inline Json to_json(const PantsPath& p) {
    Json j;
    j["n"] = p.n;
    j["monodromy"] = p.monodromy;
    j["start"] = chords_json(p.start);
    Json steps = Json::array();
    for (const PathStep& st : p.steps) steps.push_back(move_json(st.move));
    j["steps"] = steps;
    return j;
}

inline std::string emit_path(const PantsPath& p) {
    return dump(to_json(p));
}

// Decompositions are rebuilt by replaying the recorded moves; legality is left to validate_path.
inline PantsPath path_from(const Json& j) {
    PantsPath p;
    p.n = j.at("n").get<int>();
    if (p.n < 4) throw ParseError("n must be >= 4");
    p.monodromy = j.at("monodromy").get<int>();
    p.start = decomposition_from(j.at("start"), p.n);
    PantsDecomposition cur = p.start;
    std::size_t k = 0;
    for (const Json& st : j.at("steps")) {
        ++k;
        if (st.contains("kind") && st.at("kind").get<std::string>() == "S") {
            p.steps.push_back(PathStep{cur, MoveRecord{MoveKind::S, {}, {}, {}}});
            continue;
        }
        if (st.contains("kind") && st.at("kind").get<std::string>() != "A")
            throw ParseError("step " + std::to_string(k) + ": unknown move kind");
        Chord out = chord_from(st.at("removed"), p.n);
        Chord in = chord_from(st.at("inserted"), p.n);
        cur = cur.replaced(out, in);
        p.steps.push_back(PathStep{cur, a_move_record(out, in, p.n)});
    }
    return p;
}

inline PantsPath parse_path(std::string_view text) {
    return parse_json(text, path_from);
}

inline Json to_json(const PathReport& r) {
    Json j;
    j["ok"] = r.ok;
    j["closed"] = r.closed;
    j["a_moves"] = r.a_moves;
    j["s_moves"] = r.s_moves;
    Json d = Json::array();
    for (const auto& x : r.diagnostics) d.push_back(Json{{"step", x.step}, {"message", x.message}});
    j["diagnostics"] = d;
    return j;
}

// ---- drilled complex ----

inline Json edge_json(const Edge& e) {
    Json j;
    if (e.is_side())
        j["side"] = e.puncture();
    else
        j["chord"] = chord_json(e.chord());
    return j;
}

inline Edge edge_from(const Json& j, int n) {
    if (j.contains("side")) {
        int k = j.at("side").get<int>();
        if (k < 1 || k > n) throw ParseError("side label out of range");
        return Edge::side(k, n);
    }
    return Edge::of(chord_from(j.at("chord"), n));
}

inline Json pair_json(int a, int b) {
    return Json::array({a, b});
}

inline CuspLabel cusp_label_from(const std::string& s) {
    if (s.size() < 2 || (s[0] != 's' && s[0] != 'L')) throw ParseError("bad cusp label '" + s + "'");
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("bad cusp label '" + s + "'");
    return s[0] == 's' ? CuspLabel::strand(v) : CuspLabel::loop(v);
}

struct ComplexFile {
    DrilledComplex complex;
    int twist = 0;  // filling coefficient 1/twist on every loop; metadata only

    auto operator<=>(const ComplexFile&) const = default;
};

inline Json to_json(const ComplexFile& f) {
    const DrilledComplex& cx = f.complex;
    Json j;
    j["n"] = cx.n;
    j["m"] = cx.m;
    j["start"] = chords_json(cx.start);
    Json moves = Json::array();
    for (const MoveRecord& mv : cx.moves) moves.push_back(move_json(mv));
    j["moves"] = moves;

    Json loops = Json::array();
    for (const DrilledLoop& L : cx.loops) {
        Json l;
        l["id"] = L.id;
        l["chord"] = chord_json(L.chord);
        l["creation"] = L.creation_move;
        l["level"] = L.level.str();
        l["label"] = pair_json(L.label.center, L.label.far);
        l["lifetime"] = pair_json(L.lifetime.created, L.lifetime.destroyed);
        l["filling"] = "1/" + std::to_string(f.twist);
        loops.push_back(l);
    }
    j["loops"] = loops;

    Json cells = Json::array();
    for (const PantsCell& c : cx.cells) {
        Json o;
        o["id"] = c.id;
        o["triangle"] = Json::array({c.triangle.v[0], c.triangle.v[1], c.triangle.v[2]});
        Json edges = Json::array();
        for (const Edge& e : c.triangle.edges(cx.n)) edges.push_back(edge_json(e));
        o["edges"] = edges;
        o["lifetime"] = pair_json(c.lifetime.created, c.lifetime.destroyed);
        o["kind"] = to_string(c.kind);
        Json bd = Json::array();
        for (const CellBoundary& b : c.boundary) {
            Json x;
            x["chord"] = chord_json(b.edge.chord());
            x["loop"] = b.loop;
            x["side"] = to_string(b.side);
            bd.push_back(x);
        }
        o["boundary"] = bd;
        o["punctures"] = c.punctures;
        cells.push_back(o);
    }
    j["cells"] = cells;

    Json regions = Json::array();
    for (const ARegion& r : cx.regions) {
        Json o;
        o["move"] = r.move;
        Json q = Json::array();
        for (const Edge& e : r.quad) q.push_back(edge_json(e));
        o["quad"] = q;
        o["old_diagonal"] = chord_json(r.old_diagonal);
        o["new_diagonal"] = chord_json(r.new_diagonal);
        o["old_loop"] = r.old_loop;
        o["new_loop"] = r.new_loop;
        Json eq = Json::array();
        for (const CuspLabel& c : r.equator) eq.push_back(c.str());
        o["equator"] = eq;
        o["lower_cells"] = pair_json(r.lower_cells[0], r.lower_cells[1]);
        o["upper_cells"] = pair_json(r.upper_cells[0], r.upper_cells[1]);
        regions.push_back(o);
    }
    j["regions"] = regions;
    return j;
}

inline std::string emit_complex(const DrilledComplex& cx, int twist) {
    return dump(to_json(ComplexFile{cx, twist}));
}

inline std::pair<int, int> int_pair(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("expected a pair of integers");
    return {j.at(0).get<int>(), j.at(1).get<int>()};
}

inline ComplexFile complex_from(const Json& j) {
    ComplexFile f;
    DrilledComplex& cx = f.complex;
    cx.n = j.at("n").get<int>();
    cx.m = j.at("m").get<int>();
    if (cx.n < 4 || cx.m < 1) throw ParseError("complex needs n >= 4 and m >= 1");
    int n = cx.n, m = cx.m;
    cx.start = decomposition_from(j.at("start"), n);
    for (const Json& mv : j.at("moves")) {
        if (mv.contains("kind"))
            cx.moves.push_back(MoveRecord{MoveKind::S, {}, {}, {}});
        else
            cx.moves.push_back(a_move_record(chord_from(mv.at("removed"), n), chord_from(mv.at("inserted"), n), n));
    }
    f.twist = 0;
    for (const Json& l : j.at("loops")) {
        DrilledLoop L;
        L.id = l.at("id").get<int>();
        L.chord = chord_from(l.at("chord"), n);
        L.creation_move = l.at("creation").get<int>();
        std::string lev = l.at("level").get<std::string>();
        auto slash = lev.find('/');
        if (slash == std::string::npos) throw ParseError("level must be i/m");
        L.level = Level{std::stoi(lev.substr(0, slash)), std::stoi(lev.substr(slash + 1))};
        auto [c, fr] = int_pair(l.at("label"));
        L.label = OrderedLabel{c, fr};
        auto [a, b] = int_pair(l.at("lifetime"));
        L.lifetime = Lifetime{a, b, m};
        std::string fill = l.at("filling").get<std::string>();
        if (fill.rfind("1/", 0) != 0) throw ParseError("filling must be 1/k");
        f.twist = std::stoi(fill.substr(2));
        cx.loops.push_back(L);
    }
    for (const Json& o : j.at("cells")) {
        PantsCell c;
        c.id = o.at("id").get<int>();
        const Json& t = o.at("triangle");
        if (!t.is_array() || t.size() != 3) throw ParseError("triangle must have 3 vertices");
        c.triangle = Triangle::of(t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>());
        auto [a, b] = int_pair(o.at("lifetime"));
        c.lifetime = Lifetime{a, b, m};
        c.kind = pants_kind_from_string(o.at("kind").get<std::string>());
        for (const Json& x : o.at("boundary")) {
            std::string side = x.at("side").get<std::string>();
            if (side != "in" && side != "out") throw ParseError("side must be in/out");
            c.boundary.push_back(CellBoundary{Edge::of(chord_from(x.at("chord"), n)), x.at("loop").get<int>(),
                                              side == "in" ? Side::Inner : Side::Outer});
        }
        c.punctures = o.at("punctures").get<std::vector<int>>();
        cx.cells.push_back(std::move(c));
    }
    for (const Json& o : j.at("regions")) {
        ARegion r;
        r.move = o.at("move").get<int>();
        const Json& q = o.at("quad");
        if (!q.is_array() || q.size() != 4) throw ParseError("quad must have 4 edges");
        for (std::size_t i = 0; i < 4; ++i) r.quad[i] = edge_from(q.at(i), n);
        r.old_diagonal = chord_from(o.at("old_diagonal"), n);
        r.new_diagonal = chord_from(o.at("new_diagonal"), n);
        r.old_loop = o.at("old_loop").get<int>();
        r.new_loop = o.at("new_loop").get<int>();
        const Json& eq = o.at("equator");
        if (!eq.is_array() || eq.size() != 4) throw ParseError("equator must have 4 labels");
        for (std::size_t i = 0; i < 4; ++i) r.equator[i] = cusp_label_from(eq.at(i).get<std::string>());
        auto [l0, l1] = int_pair(o.at("lower_cells"));
        auto [u0, u1] = int_pair(o.at("upper_cells"));
        r.lower_cells = {l0, l1};
        r.upper_cells = {u0, u1};
        cx.regions.push_back(r);
    }
    return f;
}

inline ComplexFile parse_complex(std::string_view text) {
    return parse_json(text, complex_from);
}

// ---- triangulation: text and JSON ----

inline std::string emit_tri_text(const IdealTriangulation& tri) {
    std::string out = "tets " + std::to_string(tri.tets.size()) + "\n";
    for (std::size_t i = 0; i < tri.tets.size(); ++i) {
        const Tetrahedron& t = tri.tets[i];
        out += "t" + std::to_string(i) + ":";
        for (int x : t.neighbor) out += " " + std::to_string(x);
        out += " |";
        for (const Perm4& p : t.gluing) out += " " + p.str();
        out += " |";
        for (int c : t.cusp) out += " " + std::to_string(c);
        out += "\n";
    }
    return out;
}

namespace detail {

class LineCursor {
  public:
    LineCursor(std::string_view line, std::size_t lineno) : s_(line), line_(lineno) {}

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, pos_ + 1); }

    void expect(std::string_view lit) {
        if (s_.substr(pos_, lit.size()) != lit) fail("expected '" + std::string(lit) + "'");
        pos_ += lit.size();
    }

    int integer() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
        if (start == pos_) {
            pos_ = start;
            fail("expected a non-negative integer");
        }
        int v = 0;
        auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
        if (ec != std::errc()) {
            pos_ = start;
            fail("integer out of range");
        }
        (void)ptr;
        return v;
    }

    Perm4 perm() {
        std::size_t start = pos_;
        Perm4 p;
        for (std::size_t k = 0; k < 4; ++k) {
            if (pos_ >= s_.size() || s_[pos_] < '0' || s_[pos_] > '3') fail("expected a 4-digit permutation");
            p.p[k] = s_[pos_++] - '0';
        }
        if (!p.is_permutation()) {
            pos_ = start;
            fail("not a permutation of 0123");
        }
        return p;
    }

    void end() {
        if (pos_ != s_.size()) fail("trailing characters");
    }

  private:
    std::string_view s_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline IdealTriangulation parse_tri_text(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos)
            throw ParseError("missing final newline", lines.size() + 1, text.size() - pos + 1);
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    if (lines.empty()) throw ParseError("empty file", 1, 1);
    detail::LineCursor head(lines[0], 1);
    head.expect("tets ");
    int count = head.integer();
    head.end();
    if (lines.size() != static_cast<std::size_t>(count) + 1)
        throw ParseError(
            "expected " + std::to_string(count) + " tetrahedron lines, found " + std::to_string(lines.size() - 1),
            lines.size() + 1, 1);
    IdealTriangulation tri;
    tri.tets.resize(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        detail::LineCursor c(lines[static_cast<std::size_t>(i) + 1], static_cast<std::size_t>(i) + 2);
        Tetrahedron& t = tri.tets[static_cast<std::size_t>(i)];
        c.expect("t");
        if (c.integer() != i) c.fail("tetrahedron index out of sequence");
        c.expect(":");
        for (auto& x : t.neighbor) {
            c.expect(" ");
            x = c.integer();
            if (x >= count) c.fail("neighbor index out of range");
        }
        c.expect(" |");
        for (auto& p : t.gluing) {
            c.expect(" ");
            p = c.perm();
        }
        c.expect(" |");
        for (auto& x : t.cusp) {
            c.expect(" ");
            x = c.integer();
        }
        c.end();
    }
    return tri;
}

inline Json to_json(const IdealTriangulation& tri) {
    Json j;
    j["tets"] = tri.tets.size();
    j["cusps"] = tri.cusp_count();
    Json ts = Json::array();
    for (const Tetrahedron& t : tri.tets) {
        Json o;
        o["neighbors"] = t.neighbor;
        Json g = Json::array();
        for (const Perm4& p : t.gluing) g.push_back(p.str());
        o["gluings"] = g;
        o["cusps"] = t.cusp;
        ts.push_back(o);
    }
    j["tetrahedra"] = ts;
    return j;
}

inline std::string emit_tri_json(const IdealTriangulation& tri) {
    return dump(to_json(tri));
}

inline IdealTriangulation parse_tri_json(std::string_view text) {
    return parse_json(text, [](const Json& j) {
        IdealTriangulation tri;
        std::size_t count = j.at("tets").get<std::size_t>();
        const Json& ts = j.at("tetrahedra");
        if (ts.size() != count) throw ParseError("tetrahedron count mismatch");
        for (const Json& o : ts) {
            Tetrahedron t;
            t.neighbor = o.at("neighbors").get<std::array<int, 4>>();
            t.cusp = o.at("cusps").get<std::array<int, 4>>();
            const Json& g = o.at("gluings");
            if (g.size() != 4) throw ParseError("each tetrahedron needs 4 gluings");
            for (std::size_t k = 0; k < 4; ++k) {
                detail::LineCursor c(g.at(k).get_ref<const std::string&>(), 0);
                t.gluing[k] = c.perm();
                c.end();
            }
            tri.tets.push_back(t);
        }
        if (j.at("cusps").get<int>() != tri.cusp_count()) throw ParseError("cusp count mismatch");
        return tri;
    });
}

// ---- carried surfaces ----

struct SurfaceEntry {
    CarriedSurface surface;
    OrbitReport orbit;
};

struct SurfacesFile {
    int n = 0;
    bool annuli_only = true;
    int cap = 64;
    std::vector<SurfaceEntry> surfaces;
    std::optional<CompressionCertificate> witness;
};

inline Json circle_json(const Circle& c) {
    return Json::array({c.cell, c.loop});
}

inline Json to_json(const CompressionCertificate& w) {
    Json j;
    j["loops"] = w.loops;
    Json labels = Json::array();
    for (const auto& l : w.labels) labels.push_back(pair_json(l.center, l.far));
    j["labels"] = labels;
    j["annuli"] = w.annuli;
    j["shared_loop"] = w.shared_loop;
    j["consecutive_in_torus"] = w.consecutive_in_torus;
    return j;
}

inline Json to_json(const SurfacesFile& f) {
    Json j;
    j["n"] = f.n;
    j["annuli_only"] = f.annuli_only;
    j["cap"] = f.cap;
    Json arr = Json::array();
    for (const SurfaceEntry& e : f.surfaces) {
        const CarriedSurface& s = e.surface;
        Json o;
        o["cells"] = s.selection.cells;
        Json tubes = Json::array();
        for (const Tube& t : s.selection.tubes) tubes.push_back(Json::array({circle_json(t.a), circle_json(t.b)}));
        o["tubes"] = tubes;
        o["euler"] = s.euler;
        o["orientable"] = s.orientable;
        o["genus"] = s.genus;
        o["punctures"] = s.punctures;
        o["connected"] = s.connected;
        o["type"] = s.type_name();
        o["orbit"] = e.orbit.orbit;
        o["orbit_size"] = e.orbit.orbit_size;
        o["normal_form"] = to_string(e.orbit.status);
        o["normal_form_is_canonical_torus"] = e.orbit.is_canonical_torus;
        arr.push_back(o);
    }
    j["surfaces"] = arr;
    j["compression_witness"] = f.witness ? to_json(*f.witness) : Json(nullptr);
    return j;
}

inline std::string emit_surfaces(const SurfacesFile& f) {
    return dump(to_json(f));
}

inline NormalFormStatus status_from(const std::string& s) {
    if (s == "reduced") return NormalFormStatus::Reduced;
    if (s == "least") return NormalFormStatus::LeastRepresentative;
    if (s == "undecided") return NormalFormStatus::Undecided;
    throw ParseError("unknown normal form status '" + s + "'");
}

inline SurfacesFile parse_surfaces(std::string_view text) {
    return parse_json(text, [](const Json& j) {
        SurfacesFile f;
        f.n = j.at("n").get<int>();
        f.annuli_only = j.at("annuli_only").get<bool>();
        f.cap = j.at("cap").get<int>();
        for (const Json& o : j.at("surfaces")) {
            SurfaceEntry e;
            CarriedSurface& s = e.surface;
            s.selection.cells = o.at("cells").get<std::vector<int>>();
            for (const Json& t : o.at("tubes")) {
                auto [c1, l1] = int_pair(t.at(0));
                auto [c2, l2] = int_pair(t.at(1));
                s.selection.tubes.push_back(Tube{Circle{c1, l1}, Circle{c2, l2}});
            }
            s.euler = o.at("euler").get<int>();
            s.orientable = o.at("orientable").get<bool>();
            s.genus = o.at("genus").get<int>();
            s.punctures = o.at("punctures").get<int>();
            s.connected = o.at("connected").get<bool>();
            if (o.at("type").get<std::string>() != s.type_name())
                throw ParseError("surface type disagrees with invariants");
            e.orbit.orbit = o.at("orbit").get<int>();
            e.orbit.orbit_size = o.at("orbit_size").get<std::size_t>();
            e.orbit.status = status_from(o.at("normal_form").get<std::string>());
            e.orbit.is_canonical_torus = o.at("normal_form_is_canonical_torus").get<bool>();
            f.surfaces.push_back(std::move(e));
        }
        const Json& w = j.at("compression_witness");
        if (!w.is_null()) {
            CompressionCertificate c;
            c.loops = w.at("loops").get<std::array<int, 3>>();
            const Json& labels = w.at("labels");
            if (labels.size() != 3) throw ParseError("witness needs 3 labels");
            for (std::size_t i = 0; i < 3; ++i) {
                auto [a, b] = int_pair(labels.at(i));
                c.labels[i] = OrderedLabel{a, b};
            }
            c.annuli = w.at("annuli").get<std::array<int, 2>>();
            c.shared_loop = w.at("shared_loop").get<int>();
            c.consecutive_in_torus = w.at("consecutive_in_torus").get<bool>();
            f.witness = c;
        }
        return f;
    });
}

}  // namespace pants::io
