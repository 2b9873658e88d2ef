#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pants/drilling.hpp"

namespace pants {

struct Circle {
    int cell = 0;
    int loop = 0;
    auto operator<=>(const Circle&) const = default;
};

struct Tube {
    Circle a{};
    Circle b{};

    static Tube of(Circle x, Circle y) { return x < y ? Tube{x, y} : Tube{y, x}; }
    int loop() const { return a.loop; }

    auto operator<=>(const Tube&) const = default;
};

struct TubingSelection {
    std::vector<int> cells;   // sorted
    std::vector<Tube> tubes;  // sorted

    void normalize() {
        std::sort(cells.begin(), cells.end());
        std::sort(tubes.begin(), tubes.end());
    }

    std::optional<Circle> partner(const Circle& c) const {
        for (const Tube& t : tubes) {
            if (t.a == c) return t.b;
            if (t.b == c) return t.a;
        }
        return std::nullopt;
    }

    bool has_cell(int c) const { return std::binary_search(cells.begin(), cells.end(), c); }

    std::vector<int> threaded_loops() const {
        std::set<int> s;
        for (const Tube& t : tubes) s.insert(t.loop());
        return {s.begin(), s.end()};
    }

    auto operator<=>(const TubingSelection&) const = default;
};

struct CarriedSurface {
    TubingSelection selection;
    int euler = 0;
    bool orientable = true;
    int genus = 0;  // crosscap count when non-orientable
    int punctures = 0;
    bool connected = true;

    std::string type_name() const {
        if (!orientable) return genus == 2 ? "klein bottle" : "non-orientable";
        if (genus == 0) return "sphere";
        if (genus == 1) return "torus";
        return "genus " + std::to_string(genus);
    }

    auto operator<=>(const CarriedSurface&) const = default;
};

inline Side circle_side(const DrilledComplex& cx, const Circle& c) {
    const PantsCell& cell = cx.cell(c.cell);
    auto slot = cell.slot_of(c.loop);
    if (!slot) throw InputError("cell " + std::to_string(c.cell) + " has no circle on loop " + std::to_string(c.loop));
    return cell.boundary[*slot].side;
}

// Carried tubes join circles of distinct cells on one loop, approaching it from the same side.
inline bool tube_allowed(const DrilledComplex& cx, const Circle& x, const Circle& y) {
    return x.loop == y.loop && x.cell != y.cell && circle_side(cx, x) == circle_side(cx, y);
}

// Structural checks only: every boundary circle of every selected cell is tubed exactly once.
inline std::optional<std::string> selection_error(const DrilledComplex& cx, const TubingSelection& sel) {
    if (sel.cells.empty()) return "empty selection";
    std::set<int> cells;
    for (int c : sel.cells) {
        if (c < 0 || c >= static_cast<int>(cx.cells.size())) return "cell id out of range";
        if (!cells.insert(c).second) return "cell selected twice";
    }
    std::map<Circle, int> seen;
    for (const Tube& t : sel.tubes) {
        for (const Circle& c : {t.a, t.b}) {
            if (!cells.contains(c.cell)) return "tube uses unselected cell " + std::to_string(c.cell);
            if (!cx.cell(c.cell).slot_of(c.loop))
                return "cell " + std::to_string(c.cell) + " does not meet loop " + std::to_string(c.loop);
            if (++seen[c] > 1) return "circle tubed twice";
        }
        if (t.a.loop != t.b.loop) return "tube joins different loops";
        if (t.a.cell == t.b.cell) return "tube joins a cell to itself";
    }
    for (int c : sel.cells)
        for (const CellBoundary& b : cx.cell(c).boundary)
            if (!seen.contains(Circle{c, b.loop}))
                return "circle of cell " + std::to_string(c) + " on loop " + std::to_string(b.loop) + " is untubed";
    return std::nullopt;
}

inline CarriedSurface evaluate_surface(const DrilledComplex& cx, TubingSelection sel) {
    sel.normalize();
    if (auto err = selection_error(cx, sel)) throw InputError("invalid tubing selection: " + *err);
    CarriedSurface s;
    s.euler = -static_cast<int>(sel.cells.size());
    for (int c : sel.cells) s.punctures += static_cast<int>(cx.cell(c).punctures.size());

    // A same-side tube reverses the transverse orientation of the cells it joins.
    std::map<int, std::vector<std::pair<int, int>>> adj;
    for (const Tube& t : sel.tubes) {
        int flip = circle_side(cx, t.a) == circle_side(cx, t.b) ? -1 : 1;
        adj[t.a.cell].push_back({t.b.cell, flip});
        adj[t.b.cell].push_back({t.a.cell, flip});
    }
    std::map<int, int> sign{{sel.cells.front(), 1}};
    std::vector<int> stack{sel.cells.front()};
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        for (auto [d, flip] : adj[c]) {
            int want = sign[c] * flip;
            auto it = sign.find(d);
            if (it == sign.end()) {
                sign[d] = want;
                stack.push_back(d);
            } else if (it->second != want) {
                s.orientable = false;
            }
        }
    }
    s.connected = sign.size() == sel.cells.size();
    int deficit = 2 - s.euler - s.punctures;
    s.genus = s.orientable ? deficit / 2 : deficit;
    s.selection = std::move(sel);
    return s;
}

struct EnumerationLimits {
    int max_cells = 64;
    std::size_t max_surfaces = 200000;
};

inline std::vector<CarriedSurface> enumerate_carried(const DrilledComplex& cx, bool annuli_only,
                                                     const EnumerationLimits& limits = {}) {
    if (limits.max_cells < 1) throw InputError("enumeration cap must be >= 1");
    auto selectable = [&](const PantsCell& c) {
        return !c.boundary.empty() && (!annuli_only || c.kind == PantsKind::OncePuncturedAnnulus);
    };
    std::map<int, std::vector<Circle>> fins;
    for (const PantsCell& c : cx.cells)
        if (selectable(c))
            for (const CellBoundary& b : c.boundary) fins[b.loop].push_back(Circle{c.id, b.loop});

    std::vector<TubingSelection> found;
    TubingSelection cur;
    std::set<Circle> open;
    int root = 0;

    auto circles_of = [&](int cell) {
        std::vector<Circle> out;
        for (const CellBoundary& b : cx.cell(cell).boundary) out.push_back(Circle{cell, b.loop});
        return out;
    };

    // Each (selection, tubing) is produced once: always extend the least open circle.
    auto rec = [&](auto&& self) -> void {
        if (open.empty()) {
            if (found.size() >= limits.max_surfaces)
                throw EnumerationCapExceeded("enumeration exceeded " + std::to_string(limits.max_surfaces) +
                                             " surfaces");
            TubingSelection s = cur;
            s.normalize();
            found.push_back(std::move(s));
            return;
        }
        Circle c = *open.begin();
        for (const Circle& d : fins[c.loop]) {
            if (!tube_allowed(cx, c, d)) continue;
            if (open.contains(d)) {
                open.erase(c);
                open.erase(d);
                cur.tubes.push_back(Tube::of(c, d));
                self(self);
                cur.tubes.pop_back();
                open.insert(c);
                open.insert(d);
            } else if (d.cell > root && std::find(cur.cells.begin(), cur.cells.end(), d.cell) == cur.cells.end()) {
                if (static_cast<int>(cur.cells.size()) + 1 > limits.max_cells)
                    throw EnumerationCapExceeded("carried surface exceeds the cap of " +
                                                 std::to_string(limits.max_cells) + " cells");
                auto added = circles_of(d.cell);
                cur.cells.push_back(d.cell);
                open.erase(c);
                for (const Circle& e : added)
                    if (e != d) open.insert(e);
                cur.tubes.push_back(Tube::of(c, d));
                self(self);
                cur.tubes.pop_back();
                for (const Circle& e : added) open.erase(e);
                open.insert(c);
                cur.cells.pop_back();
            }
        }
    };

    for (const PantsCell& c : cx.cells) {
        if (!selectable(c)) continue;
        root = c.id;
        cur = TubingSelection{{c.id}, {}};
        auto cs = circles_of(c.id);
        open = std::set<Circle>(cs.begin(), cs.end());
        rec(rec);
    }
    std::sort(found.begin(), found.end(), [](const auto& l, const auto& r) {
        if (l.cells.size() != r.cells.size()) return l.cells.size() < r.cells.size();
        return l < r;
    });
    std::vector<CarriedSurface> out;
    for (auto& s : found) out.push_back(evaluate_surface(cx, std::move(s)));
    return out;
}

// A lower and an upper annulus of one region tubed along a shared equator loop.
struct SwapChain {
    int lower = 0;
    int upper = 0;
    int middle_loop = 0;
    auto operator<=>(const SwapChain&) const = default;
};

struct SwapMove {
    int region = 0;
    SwapChain before{};
    SwapChain after{};

    SwapMove reversed() const { return {region, after, before}; }
    auto operator<=>(const SwapMove&) const = default;
};

inline std::vector<SwapChain> region_chains(const DrilledComplex& cx, const ARegion& r) {
    std::vector<SwapChain> chains;
    for (int l : r.lower_cells)
        for (int u : r.upper_cells)
            for (const CellBoundary& b : cx.cell(l).boundary)
                if (cx.cell(u).slot_of(b.loop)) chains.push_back(SwapChain{l, u, b.loop});
    return chains;
}

inline bool region_all_annuli(const DrilledComplex& cx, const ARegion& r) {
    for (int c : {r.lower_cells[0], r.lower_cells[1], r.upper_cells[0], r.upper_cells[1]})
        if (cx.cell(c).kind != PantsKind::OncePuncturedAnnulus) return false;
    return true;
}

inline std::vector<SwapMove> swap_moves(const DrilledComplex& cx) {
    std::vector<SwapMove> out;
    for (const ARegion& r : cx.regions) {
        if (!region_all_annuli(cx, r)) continue;
        auto ch = region_chains(cx, r);
        if (ch.size() != 2) continue;
        out.push_back(SwapMove{r.move, ch[0], ch[1]});
        out.push_back(SwapMove{r.move, ch[1], ch[0]});
    }
    return out;
}

inline bool swap_applicable(const CarriedSurface& s, const SwapMove& mv) {
    const auto& sel = s.selection;
    if (!sel.has_cell(mv.before.lower) || !sel.has_cell(mv.before.upper)) return false;
    if (sel.has_cell(mv.after.lower) || sel.has_cell(mv.after.upper)) return false;
    auto p = sel.partner(Circle{mv.before.lower, mv.before.middle_loop});
    return p && *p == Circle{mv.before.upper, mv.before.middle_loop};
}

namespace detail {
inline int other_loop(const PantsCell& c, int loop) {
    for (const CellBoundary& b : c.boundary)
        if (b.loop != loop) return b.loop;
    return -1;
}
}  // namespace detail

// Tubes are rerouted without regard to sides: the chain is isotoped across the region.
inline CarriedSurface apply_swap(const DrilledComplex& cx, const CarriedSurface& s, const SwapMove& mv) {
    if (!swap_applicable(s, mv)) throw SwapError("swap at region " + std::to_string(mv.region) + " is not applicable");
    const auto& sel = s.selection;
    int lo = detail::other_loop(cx.cell(mv.before.lower), mv.before.middle_loop);
    int up = detail::other_loop(cx.cell(mv.before.upper), mv.before.middle_loop);
    if (!cx.cell(mv.after.lower).slot_of(lo) || !cx.cell(mv.after.upper).slot_of(up))
        throw SwapError("swap at region " + std::to_string(mv.region) + " has mismatched chains");
    Circle p = *sel.partner(Circle{mv.before.lower, lo});
    Circle q = *sel.partner(Circle{mv.before.upper, up});

    TubingSelection next;
    for (int c : sel.cells)
        if (c != mv.before.lower && c != mv.before.upper) next.cells.push_back(c);
    next.cells.push_back(mv.after.lower);
    next.cells.push_back(mv.after.upper);
    for (const Tube& t : sel.tubes) {
        bool touches = false;
        for (const Circle& c : {t.a, t.b}) touches |= c.cell == mv.before.lower || c.cell == mv.before.upper;
        if (!touches) next.tubes.push_back(t);
    }
    next.tubes.push_back(Tube::of(Circle{mv.after.lower, lo}, p));
    next.tubes.push_back(Tube::of(Circle{mv.after.upper, up}, q));
    next.tubes.push_back(
        Tube::of(Circle{mv.after.lower, mv.after.middle_loop}, Circle{mv.after.upper, mv.after.middle_loop}));
    return evaluate_surface(cx, std::move(next));
}

inline std::vector<CarriedSurface> swap_neighbors(const DrilledComplex& cx, const CarriedSurface& s,
                                                  const std::vector<SwapMove>& moves) {
    std::vector<CarriedSurface> out;
    for (const SwapMove& mv : moves)
        if (swap_applicable(s, mv)) out.push_back(apply_swap(cx, s, mv));
    return out;
}

inline bool in_torus_band(const DrilledComplex& cx, const CarriedSurface& s) {
    for (int L : s.selection.threaded_loops()) {
        int d = cx.loop(L).label.gap_difference(cx.n);
        if (d != cx.n - 3 && d != cx.n - 2) return false;
    }
    return true;
}

enum class NormalFormStatus { Reduced, LeastRepresentative, Undecided };

inline std::string to_string(NormalFormStatus s) {
    switch (s) {
        case NormalFormStatus::Reduced:
            return "reduced";
        case NormalFormStatus::LeastRepresentative:
            return "least";
        case NormalFormStatus::Undecided:
            return "undecided";
    }
    return "?";
}

struct NormalForm {
    NormalFormStatus status = NormalFormStatus::Undecided;
    CarriedSurface surface;
    std::size_t orbit_size = 0;
};

inline constexpr std::size_t kDefaultOrbitCap = 200000;

namespace detail {

struct Orbit {
    bool complete = true;
    std::vector<CarriedSurface> members;
};

inline Orbit explore_orbit(const DrilledComplex& cx, const CarriedSurface& s, std::size_t cap) {
    auto moves = swap_moves(cx);
    Orbit orbit;
    std::set<TubingSelection> seen{s.selection};
    orbit.members.push_back(s);
    for (std::size_t i = 0; i < orbit.members.size(); ++i) {
        for (auto& nb : swap_neighbors(cx, orbit.members[i], moves)) {
            if (!seen.insert(nb.selection).second) continue;
            if (seen.size() > cap) {
                orbit.complete = false;
                return orbit;
            }
            orbit.members.push_back(std::move(nb));
        }
    }
    return orbit;
}

inline NormalForm normal_form_of(const DrilledComplex& cx, const CarriedSurface& s, const Orbit& orbit) {
    if (!orbit.complete) return NormalForm{NormalFormStatus::Undecided, s, orbit.members.size()};
    const CarriedSurface* band = nullptr;
    const CarriedSurface* any = nullptr;
    for (const CarriedSurface& c : orbit.members) {
        if (!any || c.selection < any->selection) any = &c;
        if (in_torus_band(cx, c) && (!band || c.selection < band->selection)) band = &c;
    }
    if (band) return NormalForm{NormalFormStatus::Reduced, *band, orbit.members.size()};
    return NormalForm{NormalFormStatus::LeastRepresentative, *any, orbit.members.size()};
}

}  // namespace detail

// Exhausts the swap orbit; prefers the least representative inside the torus band.
inline NormalForm normal_form(const DrilledComplex& cx, const CarriedSurface& s, std::size_t cap = kDefaultOrbitCap) {
    return detail::normal_form_of(cx, s, detail::explore_orbit(cx, s, cap));
}

inline bool is_agol_complex(const DrilledComplex& cx) {
    int n = cx.n;
    if (n < 5 || cx.m != n * (n - 3) || static_cast<int>(cx.moves.size()) != cx.m) return false;
    if (cx.start != step_decomposition(n, 0)) return false;
    for (int t = 0; t < cx.m; ++t)
        if (cx.moves[static_cast<std::size_t>(t)] != agol_move(n, t)) return false;
    return true;
}

// B_{j,j+2}, B_{j,j+3} for j = 1..n.
inline std::vector<OrderedLabel> torus_loop_sequence(int n) {
    std::vector<OrderedLabel> seq;
    for (int j = 1; j <= n; ++j) {
        seq.push_back({j, wrap(j + 2, n)});
        seq.push_back({j, wrap(j + 3, n)});
    }
    return seq;
}

inline int loop_with_label(const DrilledComplex& cx, const OrderedLabel& lab) {
    auto id = find_loop(cx, lab);
    if (!id) throw InputError("no drilled loop with ordered label " + lab.str());
    return *id;
}

inline int annulus_between(const DrilledComplex& cx, int l1, int l2) {
    int found = -1;
    for (const PantsCell& c : cx.cells)
        if (c.kind == PantsKind::OncePuncturedAnnulus && c.slot_of(l1) && c.slot_of(l2)) {
            if (found >= 0)
                throw InputError("several annuli span loops " + std::to_string(l1) + " and " + std::to_string(l2));
            found = c.id;
        }
    if (found < 0) throw InputError("no annulus spans loops " + std::to_string(l1) + " and " + std::to_string(l2));
    return found;
}

inline CarriedSurface canonical_torus(const DrilledComplex& cx) {
    if (!is_agol_complex(cx)) throw InputError("canonical_torus: complex does not come from the Agol path");
    std::vector<int> loops;
    for (const auto& lab : torus_loop_sequence(cx.n)) loops.push_back(loop_with_label(cx, lab));
    std::size_t k = loops.size();
    std::vector<int> cells;
    for (std::size_t i = 0; i < k; ++i) cells.push_back(annulus_between(cx, loops[i], loops[(i + 1) % k]));
    TubingSelection sel;
    sel.cells = cells;
    for (std::size_t i = 0; i < k; ++i) {
        int L = loops[(i + 1) % k];
        sel.tubes.push_back(Tube::of(Circle{cells[i], L}, Circle{cells[(i + 1) % k], L}));
    }
    return evaluate_surface(cx, std::move(sel));
}

struct CompressionCertificate {
    std::array<int, 3> loops{};
    std::array<OrderedLabel, 3> labels{};
    std::array<int, 2> annuli{};
    int shared_loop = 0;
    bool consecutive_in_torus = false;
};

inline CompressionCertificate compression_witness(const DrilledComplex& cx) {
    CarriedSurface T = canonical_torus(cx);
    CompressionCertificate cert;
    cert.labels = {OrderedLabel{1, 3}, OrderedLabel{1, 4}, OrderedLabel{2, 4}};
    for (std::size_t i = 0; i < 3; ++i) cert.loops[i] = loop_with_label(cx, cert.labels[i]);
    cert.shared_loop = cert.loops[1];
    cert.annuli = {annulus_between(cx, cert.loops[0], cert.loops[1]),
                   annulus_between(cx, cert.loops[1], cert.loops[2])};
    auto p = T.selection.partner(Circle{cert.annuli[0], cert.shared_loop});
    cert.consecutive_in_torus = T.selection.has_cell(cert.annuli[0]) && T.selection.has_cell(cert.annuli[1]) && p &&
                                *p == Circle{cert.annuli[1], cert.shared_loop};
    return cert;
}

inline int heegaard_lower_bound(int n) {
    if (n < 1) throw InputError("heegaard_lower_bound: n must be >= 1");
    return (n + 1) / 2;
}

struct OrbitReport {
    int orbit = 0;  // negative when undecided
    NormalFormStatus status = NormalFormStatus::Undecided;
    bool is_canonical_torus = false;
    std::size_t orbit_size = 0;
};

// Groups surfaces by swap orbit; ids follow first appearance. Orbit membership is memoized.
inline std::vector<OrbitReport> classify_orbits(const DrilledComplex& cx, const std::vector<CarriedSurface>& surfaces,
                                                std::size_t cap = kDefaultOrbitCap) {
    std::optional<TubingSelection> torus;
    if (is_agol_complex(cx)) torus = canonical_torus(cx).selection;
    std::map<TubingSelection, OrbitReport> known;
    std::vector<OrbitReport> out;
    int next = 0, undecided = 0;
    for (const CarriedSurface& s : surfaces) {
        if (auto it = known.find(s.selection); it != known.end()) {
            out.push_back(it->second);
            continue;
        }
        auto orbit = detail::explore_orbit(cx, s, cap);
        NormalForm nf = detail::normal_form_of(cx, s, orbit);
        OrbitReport r;
        r.status = nf.status;
        r.orbit_size = nf.orbit_size;
        if (nf.status == NormalFormStatus::Undecided) {
            r.orbit = -(++undecided);
            out.push_back(r);
            continue;
        }
        r.orbit = next++;
        r.is_canonical_torus = torus && nf.surface.selection == *torus;
        for (const CarriedSurface& m : orbit.members) known.emplace(m.selection, r);
        out.push_back(r);
    }
    return out;
}

}  // namespace pants
