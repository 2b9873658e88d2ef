#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pants/agol_path.hpp"

namespace pants {

inline int cyclic_mod(int x, int m) {
    int r = x % m;
    return r < 0 ? r + m : r;
}

// Half-open cyclic interval of move indices [created, destroyed) mod m.
// The object exists in decomposition P_s exactly when move s-1 lies in the interval.
struct Lifetime {
    int created = 0;
    int destroyed = 0;
    int m = 1;

    int length() const {
        int len = cyclic_mod(destroyed - created, m);
        return len == 0 ? m : len;
    }
    bool contains_move(int s) const { return cyclic_mod(s - created, m) < length(); }
    bool present_in(int s) const { return contains_move(s - 1); }
    bool covers(const Lifetime& o) const { return cyclic_mod(o.created - created, m) + o.length() <= length(); }

    auto operator<=>(const Lifetime&) const = default;
};

struct OrderedLabel {
    int center = 0;
    int far = 0;

    // (center - far) mod n
    int gap_difference(int n) const { return cyclic_mod(center - far, n); }
    std::string str() const { return "(" + std::to_string(center) + "," + std::to_string(far) + ")"; }

    auto operator<=>(const OrderedLabel&) const = default;
};

struct Level {
    int num = 0;
    int den = 1;
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
    auto operator<=>(const Level&) const = default;
};

struct DrilledLoop {
    int id = 0;
    Chord chord{};
    int creation_move = 0;
    Level level{};
    OrderedLabel label{};
    Lifetime lifetime{};

    auto operator<=>(const DrilledLoop&) const = default;
};

enum class Side { Inner, Outer };

inline std::string to_string(Side s) {
    return s == Side::Inner ? "in" : "out";
}

struct CellBoundary {
    Edge edge{};  // always a chord edge
    int loop = 0;
    Side side = Side::Inner;  // Inner: the triangle's third gap lies strictly inside (a, b)

    auto operator<=>(const CellBoundary&) const = default;
};

struct PantsCell {
    int id = 0;
    Triangle triangle{};
    Lifetime lifetime{};
    PantsKind kind = PantsKind::PlainPants;
    std::vector<CellBoundary> boundary;
    std::vector<int> punctures;

    int created() const { return lifetime.created; }
    int destroyed() const { return lifetime.destroyed; }

    std::optional<std::size_t> slot_of(int loop) const {
        for (std::size_t i = 0; i < boundary.size(); ++i)
            if (boundary[i].loop == loop) return i;
        return std::nullopt;
    }

    auto operator<=>(const PantsCell&) const = default;
};

enum class CuspKind { Strand, Loop };

struct CuspLabel {
    CuspKind kind = CuspKind::Strand;
    int index = 0;  // puncture 1..n or loop id

    static CuspLabel strand(int k) { return {CuspKind::Strand, k}; }
    static CuspLabel loop(int id) { return {CuspKind::Loop, id}; }

    std::string str() const { return (kind == CuspKind::Strand ? "s" : "L") + std::to_string(index); }

    auto operator<=>(const CuspLabel&) const = default;
};

struct ARegion {
    int move = 0;
    std::array<Edge, 4> quad{};  // w, x, y, z
    Chord old_diagonal{};
    Chord new_diagonal{};
    int old_loop = 0;
    int new_loop = 0;
    std::array<CuspLabel, 4> equator{};
    std::array<int, 2> lower_cells{};  // (old, w, x), (old, y, z)
    std::array<int, 2> upper_cells{};  // (new, x, y), (new, z, w)

    auto operator<=>(const ARegion&) const = default;
};

struct DrilledComplex {
    int n = 0;
    int m = 0;
    PantsDecomposition start;
    std::vector<MoveRecord> moves;
    std::vector<DrilledLoop> loops;
    std::vector<PantsCell> cells;
    std::vector<ARegion> regions;

    const DrilledLoop& loop(int id) const { return loops.at(static_cast<std::size_t>(id)); }
    const PantsCell& cell(int id) const { return cells.at(static_cast<std::size_t>(id)); }

    auto operator<=>(const DrilledComplex&) const = default;
};

namespace detail {

inline std::array<Triangle, 2> lower_triangles(const MoveRecord& mv, int n) {
    auto q = quad_vertices(mv.removed, mv.inserted, n);
    return {Triangle::of(q[0], q[1], q[2]), Triangle::of(q[2], q[3], q[0])};
}

inline std::array<Triangle, 2> upper_triangles(const MoveRecord& mv, int n) {
    auto q = quad_vertices(mv.removed, mv.inserted, n);
    return {Triangle::of(q[1], q[2], q[3]), Triangle::of(q[3], q[0], q[1])};
}

inline OrderedLabel relabel_across(const OrderedLabel& old, const MoveRecord& mv, int n) {
    std::array<int, 4> q{mv.removed.a, mv.removed.b, mv.inserted.a, mv.inserted.b};
    std::sort(q.begin(), q.end(),
              [&](int u, int v) { return cyclic_mod(u - old.center, n) < cyclic_mod(v - old.center, n); });
    return {q[1], q[3]};
}

}  // namespace detail

inline DrilledComplex build_drilled_complex(const PantsPath& path) {
    for (const PathStep& st : path.steps)
        if (st.move.kind == MoveKind::S) throw ConstructionError("drilling: S-move annotation in a genus-0 path");
    PathReport rep = validate_path(path);
    if (!rep.ok) {
        const auto& d = rep.diagnostics.front();
        throw ConstructionError("drilling: path does not validate (step " + std::to_string(d.step) + ": " + d.message +
                                ")");
    }
    if (path.monodromy != 0)
        throw ConstructionError("drilling: open path, monodromy rotates gaps by " + std::to_string(path.monodromy) +
                                "; drilling requires identity");
    if (!check_no_universal_curve(path))
        throw ConstructionError("drilling: chord " + universal_chords(path).front().str() +
                                " lies in every decomposition");

    const int n = path.n, m = path.length();
    DrilledComplex cx;
    cx.n = n;
    cx.m = m;
    cx.start = path.start;
    for (const PathStep& st : path.steps) cx.moves.push_back(st.move);
    const auto& mv = cx.moves;

    // Loops: one per move, living until its chord is next removed.
    std::vector<int> destroyed_at(static_cast<std::size_t>(m), -1);
    for (int t = 0; t < m; ++t) {
        int d = -1;
        for (int s = 1; s <= m && d < 0; ++s)
            if (mv[static_cast<std::size_t>((t + s) % m)].removed == mv[static_cast<std::size_t>(t)].inserted)
                d = (t + s) % m;
        if (d < 0)
            throw ConstructionError("drilling: loop created at move " + std::to_string(t) + " is never destroyed");
        cx.loops.push_back(
            DrilledLoop{t, mv[static_cast<std::size_t>(t)].inserted, t, Level{t, m}, {}, Lifetime{t, d, m}});
        destroyed_at[static_cast<std::size_t>(d)] = t;
    }

    // Ordered labels: propagate across each flip; loops alive at P_0 are seeded as (min, max).
    std::vector<std::optional<OrderedLabel>> label(static_cast<std::size_t>(m));
    for (int pass = 0; pass < 4; ++pass) {
        bool changed = false;
        for (int t = 0; t < m; ++t) {
            const auto& old = label[static_cast<std::size_t>(destroyed_at[static_cast<std::size_t>(t)])];
            const MoveRecord& r = mv[static_cast<std::size_t>(t)];
            OrderedLabel seed = old ? *old : OrderedLabel{r.removed.a, r.removed.b};
            OrderedLabel next = detail::relabel_across(seed, r, n);
            auto& slot = label[static_cast<std::size_t>(t)];
            if (!slot || *slot != next) changed = true;
            slot = next;
        }
        if (!changed) break;
    }
    for (int t = 0; t < m; ++t) cx.loops[static_cast<std::size_t>(t)].label = *label[static_cast<std::size_t>(t)];

    std::map<Chord, std::vector<int>> loops_on;
    for (const DrilledLoop& L : cx.loops) loops_on[L.chord].push_back(L.id);

    // Cells: two created per move, destroyed when their triangle is next a lower triangle.
    std::map<std::pair<Triangle, int>, int> cell_destroyed_at;
    for (int t = 0; t < m; ++t) {
        auto ups = detail::upper_triangles(mv[static_cast<std::size_t>(t)], n);
        for (const Triangle& tri : ups) {
            int d = -1;
            for (int s = 1; s <= m && d < 0; ++s) {
                auto lows = detail::lower_triangles(mv[static_cast<std::size_t>((t + s) % m)], n);
                if (lows[0] == tri || lows[1] == tri) d = (t + s) % m;
            }
            if (d < 0) throw ConstructionError("drilling: cell " + tri.str() + " is never destroyed");
            PantsCell cell;
            cell.id = static_cast<int>(cx.cells.size());
            cell.triangle = tri;
            cell.lifetime = Lifetime{t, d, m};
            cell.kind = classify_pants(tri, n);
            for (const Edge& e : tri.edges(n)) {
                if (e.is_side()) {
                    cell.punctures.push_back(e.puncture());
                    continue;
                }
                int found = -1;
                for (int id : loops_on[e.chord()])
                    if (cx.loops[static_cast<std::size_t>(id)].lifetime.contains_move(t)) found = id;
                if (found < 0 || !cx.loops[static_cast<std::size_t>(found)].lifetime.covers(cell.lifetime))
                    throw ConstructionError("drilling: no loop over " + e.str() + " spans cell " + tri.str());
                int third = tri.opposite(e.chord());
                cell.boundary.push_back(
                    CellBoundary{e, found, strictly_between(e.a, e.b, third) ? Side::Inner : Side::Outer});
            }
            cell_destroyed_at[{tri, d}] = cell.id;
            cx.cells.push_back(std::move(cell));
        }
    }

    for (int t = 0; t < m; ++t) {
        const MoveRecord& r = mv[static_cast<std::size_t>(t)];
        ARegion reg;
        reg.move = t;
        reg.quad = r.quad;
        reg.old_diagonal = r.removed;
        reg.new_diagonal = r.inserted;
        reg.old_loop = destroyed_at[static_cast<std::size_t>(t)];
        reg.new_loop = t;
        for (std::size_t i = 0; i < 4; ++i) {
            const Edge& e = r.quad[i];
            if (e.is_side()) {
                reg.equator[i] = CuspLabel::strand(e.puncture());
                continue;
            }
            int found = -1;
            for (int id : loops_on[e.chord()])
                if (cx.loops[static_cast<std::size_t>(id)].lifetime.contains_move(t) &&
                    cx.loops[static_cast<std::size_t>(id)].lifetime.contains_move(t - 1 + m))
                    found = id;
            if (found < 0)
                throw ConstructionError("drilling: quad edge " + e.str() + " has no loop at move " + std::to_string(t));
            reg.equator[i] = CuspLabel::loop(found);
        }
        auto lows = detail::lower_triangles(r, n);
        for (std::size_t i = 0; i < 2; ++i) {
            auto it = cell_destroyed_at.find({lows[i], t});
            if (it == cell_destroyed_at.end())
                throw ConstructionError("drilling: lower cell " + lows[i].str() + " missing at move " +
                                        std::to_string(t));
            reg.lower_cells[i] = it->second;
            reg.upper_cells[i] = 2 * t + static_cast<int>(i);
        }
        cx.regions.push_back(reg);
    }
    return cx;
}

inline std::vector<DrilledLoop> loops_by_chord(const DrilledComplex& cx, const Chord& c) {
    if (!c.valid_for(cx.n))
        throw InputError("loops_by_chord: " + c.str() + " is not a chord for n=" + std::to_string(cx.n));
    std::vector<DrilledLoop> out;
    for (const DrilledLoop& L : cx.loops)
        if (L.chord == c) out.push_back(L);
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.level < r.level; });
    return out;
}

inline std::vector<DrilledLoop> twice_punctured_loops(const DrilledComplex& cx) {
    std::vector<DrilledLoop> out;
    for (const DrilledLoop& L : cx.loops) {
        int d = cyclic_mod(L.chord.b - L.chord.a, cx.n);
        if (d == 2 || d == cx.n - 2) out.push_back(L);
    }
    return out;
}

inline std::optional<int> find_loop(const DrilledComplex& cx, const OrderedLabel& label) {
    for (const DrilledLoop& L : cx.loops)
        if (L.label == label) return L.id;
    return std::nullopt;
}

}  // namespace pants
