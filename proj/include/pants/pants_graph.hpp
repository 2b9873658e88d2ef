#pragma once

#include <array>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pants/surface_model.hpp"

namespace pants {

enum class MoveKind { A, S };

struct MoveRecord {
    MoveKind kind = MoveKind::A;
    Chord removed{};
    Chord inserted{};
    std::array<Edge, 4> quad{};  // w, x, y, z

    auto operator<=>(const MoveRecord&) const = default;
};

// Quadrilateral spanned by two crossing diagonals, read cyclically from removed.a:
// v0 = removed.a, v2 = removed.b, and w=(v0,v1), x=(v1,v2), y=(v2,v3), z=(v3,v0).
inline std::array<int, 4> quad_vertices(const Chord& removed, const Chord& inserted, int n) {
    std::array<int, 4> q{removed.a, removed.b, inserted.a, inserted.b};
    auto key = [&](int v) { return wrap(v - removed.a + 1, n); };
    std::sort(q.begin(), q.end(), [&](int u, int v) { return key(u) < key(v); });
    return q;
}

inline std::array<Edge, 4> quad_edges(const Chord& removed, const Chord& inserted, int n) {
    auto q = quad_vertices(removed, inserted, n);
    return {Edge::between(q[0], q[1], n), Edge::between(q[1], q[2], n), Edge::between(q[2], q[3], n),
            Edge::between(q[3], q[0], n)};
}

inline MoveRecord a_move_record(const Chord& removed, const Chord& inserted, int n) {
    return MoveRecord{MoveKind::A, removed, inserted, quad_edges(removed, inserted, n)};
}

inline std::pair<PantsDecomposition, MoveRecord> apply_a_move(const PantsDecomposition& P, const Chord& removed) {
    if (!P.contains(removed)) throw InputError("apply_a_move: chord " + removed.str() + " not in " + P.str());
    int n = P.n();
    int inside = 0, outside = 0;
    for (int v = 1; v <= n; ++v) {
        if (removed.has_endpoint(v)) continue;
        if (!P.has_edge(removed.a, v) || !P.has_edge(v, removed.b)) continue;
        (strictly_between(removed.a, removed.b, v) ? inside : outside) = v;
    }
    if (!inside || !outside) throw InputError("apply_a_move: decomposition is not maximal " + P.str());
    Chord inserted{std::min(inside, outside), std::max(inside, outside)};
    return {P.replaced(removed, inserted), a_move_record(removed, inserted, n)};
}

inline std::vector<std::pair<PantsDecomposition, MoveRecord>> neighbors(const PantsDecomposition& P) {
    std::vector<std::pair<PantsDecomposition, MoveRecord>> out;
    for (const Chord& c : P.chords()) out.push_back(apply_a_move(P, c));
    return out;
}

namespace detail {
// All triangulations of the convex polygon on consecutive gaps lo..hi (as chord lists).
inline void triangulate_interval(int lo, int hi, int n, std::vector<std::vector<Chord>>& out) {
    if (hi - lo < 2) {
        out.push_back({});
        return;
    }
    for (int apex = lo + 1; apex < hi; ++apex) {
        std::vector<std::vector<Chord>> left, right;
        triangulate_interval(lo, apex, n, left);
        triangulate_interval(apex, hi, n, right);
        for (const auto& l : left)
            for (const auto& r : right) {
                std::vector<Chord> cs = l;
                cs.insert(cs.end(), r.begin(), r.end());
                if (apex - lo >= 2) cs.push_back(Chord{lo, apex});
                if (hi - apex >= 2) cs.push_back(Chord{apex, hi});
                out.push_back(std::move(cs));
            }
    }
}
}  // namespace detail

inline std::vector<PantsDecomposition> enumerate_decompositions(int n, int bound = 12) {
    if (n < 4 || n > bound)
        throw InputError("enumerate_decompositions: n=" + std::to_string(n) + " outside 4.." + std::to_string(bound));
    std::vector<std::vector<Chord>> raw;
    detail::triangulate_interval(1, n, n, raw);
    std::set<PantsDecomposition> uniq;
    for (auto& cs : raw) uniq.insert(PantsDecomposition(n, std::move(cs)));
    return {uniq.begin(), uniq.end()};
}

struct PathStep {
    PantsDecomposition decomposition;  // after the move
    MoveRecord move;

    auto operator<=>(const PathStep&) const = default;
};

struct PantsPath {
    int n = 0;
    PantsDecomposition start;
    std::vector<PathStep> steps;
    int monodromy = 0;  // psi: i -> i + monodromy

    int length() const { return static_cast<int>(steps.size()); }

    const PantsDecomposition& decomposition(int i) const {
        return i == 0 ? start : steps.at(static_cast<std::size_t>(i - 1)).decomposition;
    }
    const PantsDecomposition& final() const { return decomposition(length()); }

    auto operator<=>(const PantsPath&) const = default;
};

inline void check_same_n(const PantsDecomposition& P, const PantsDecomposition& Q) {
    if (P.n() != Q.n()) throw InputError("decompositions have different n");
    if (!is_valid_decomposition(P)) throw InputError("invalid decomposition " + P.str());
    if (!is_valid_decomposition(Q)) throw InputError("invalid decomposition " + Q.str());
}

// BFS with neighbours visited in lexicographic order of the resulting decomposition.
inline std::optional<PantsPath> shortest_flip_path(const PantsDecomposition& P, const PantsDecomposition& Q) {
    check_same_n(P, Q);
    std::map<PantsDecomposition, std::pair<PantsDecomposition, MoveRecord>> parent;
    std::set<PantsDecomposition> seen{P};
    std::deque<PantsDecomposition> frontier{P};
    while (!frontier.empty() && !seen.contains(Q)) {
        PantsDecomposition cur = frontier.front();
        frontier.pop_front();
        auto nbrs = neighbors(cur);
        std::sort(nbrs.begin(), nbrs.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
        for (auto& [next, move] : nbrs) {
            if (!seen.insert(next).second) continue;
            parent.emplace(next, std::make_pair(cur, move));
            frontier.push_back(next);
        }
    }
    if (!seen.contains(Q)) return std::nullopt;
    PantsPath path{P.n(), P, {}, 0};
    for (PantsDecomposition cur = Q; cur != P;) {
        const auto& [prev, move] = parent.at(cur);
        path.steps.push_back(PathStep{cur, move});
        cur = prev;
    }
    std::reverse(path.steps.begin(), path.steps.end());
    return path;
}

inline int pants_distance(const PantsDecomposition& P, const PantsDecomposition& Q) {
    auto path = shortest_flip_path(P, Q);
    if (!path) throw InputError("pants_distance: decompositions are not connected");
    return path->length();
}

struct StepDiagnostic {
    int step = 0;  // 1-based step index; 0 for start/closure issues
    std::string message;
};

struct PathReport {
    bool ok = false;
    bool closed = false;
    int a_moves = 0;
    int s_moves = 0;
    std::vector<StepDiagnostic> diagnostics;
};

// S records are annotations only: they must leave the decomposition unchanged.
inline PathReport validate_path(const PantsPath& path) {
    PathReport rep;
    auto fail = [&](int step, std::string msg) { rep.diagnostics.push_back({step, std::move(msg)}); };
    int n = path.n;
    if (path.start.n() != n) fail(0, "start decomposition has n=" + std::to_string(path.start.n()));
    if (!is_valid_decomposition(path.start)) fail(0, "start is not a valid decomposition");
    if (path.monodromy < 0 || path.monodromy >= std::max(n, 1))
        fail(0, "monodromy " + std::to_string(path.monodromy) + " outside 0..n-1");
    if (!rep.diagnostics.empty()) return rep;

    for (int i = 1; i <= path.length(); ++i) {
        const PantsDecomposition& prev = path.decomposition(i - 1);
        const PathStep& st = path.steps[static_cast<std::size_t>(i - 1)];
        if (st.move.kind == MoveKind::S) {
            ++rep.s_moves;
            if (st.decomposition != prev) fail(i, "S annotation changes the decomposition");
            continue;
        }
        ++rep.a_moves;
        if (st.decomposition.n() != n) {
            fail(i, "decomposition has wrong n");
            continue;
        }
        if (!prev.contains(st.move.removed)) {
            fail(i, "removed chord " + st.move.removed.str() + " not present");
            continue;
        }
        auto [expect, rec] = apply_a_move(prev, st.move.removed);
        if (expect != st.decomposition)
            fail(i, "decomposition " + st.decomposition.str() + " is not the flip of " + st.move.removed.str() +
                        " (expected " + expect.str() + ")");
        else if (rec != st.move)
            fail(i, "move record disagrees with the flip (inserted/quad)");
    }
    rep.closed = path.final() == path.start.rotated(path.monodromy);
    if (!rep.closed)
        fail(0, "final decomposition " + path.final().str() + " is not the start rotated by " +
                    std::to_string(path.monodromy));
    rep.ok = rep.diagnostics.empty();
    return rep;
}

inline PantsPath rotated(const PantsPath& p, int r) {
    int n = p.n;
    PantsPath out{n, p.start.rotated(r), {}, p.monodromy};
    for (const PathStep& st : p.steps) {
        MoveRecord m = st.move;
        if (m.kind == MoveKind::A) m = a_move_record(m.removed.rotated(r, n), m.inserted.rotated(r, n), n);
        out.steps.push_back(PathStep{st.decomposition.rotated(r), m});
    }
    return out;
}

// Requires first.final() == second.start.
inline PantsPath concatenate(const PantsPath& first, const PantsPath& second) {
    if (first.n != second.n) throw InputError("concatenate: paths have different n");
    if (first.final() != second.start) throw InputError("concatenate: first path does not end where the second starts");
    PantsPath out = first;
    out.steps.insert(out.steps.end(), second.steps.begin(), second.steps.end());
    out.monodromy = (first.monodromy + second.monodromy) % first.n;
    return out;
}

}  // namespace pants
