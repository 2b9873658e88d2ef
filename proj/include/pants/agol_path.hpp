#pragma once

#include <set>

#include "pants/pants_graph.hpp"

namespace pants {

struct AgolPathSpec {
    int n = 5;
    int rounds = 5;

    void check() const {
        if (n < 5) throw InputError("Agol path needs n >= 5, got " + std::to_string(n));
        if (rounds < 1 || rounds > n)
            throw InputError("rounds must lie in 1.." + std::to_string(n) + ", got " + std::to_string(rounds));
    }
};

// Fan at gap j+1: chords (j+1, j+t) for t = 3..n-1.
inline PantsDecomposition round_decomposition(int n, int j) {
    if (n < 5) throw InputError("round_decomposition: n must be >= 5");
    std::vector<Chord> cs;
    for (int t = 3; t <= n - 1; ++t) cs.push_back(Chord::cyclic(j + 1, j + t, n));
    return PantsDecomposition(n, std::move(cs));
}

// idx = j(n-3) + k: the first k chords of fan j+1 replaced by the first k of fan j+2.
inline PantsDecomposition step_decomposition(int n, int idx) {
    if (n < 5) throw InputError("step_decomposition: n must be >= 5");
    if (idx < 0) throw InputError("step_decomposition: negative index");
    int j = idx / (n - 3), k = idx % (n - 3);
    std::vector<Chord> cs;
    for (int t = 4; t <= k + 3; ++t) cs.push_back(Chord::cyclic(j + 2, j + t, n));
    for (int t = k + 3; t <= n - 1; ++t) cs.push_back(Chord::cyclic(j + 1, j + t, n));
    return PantsDecomposition(n, std::move(cs));
}

// Move idx -> idx+1 replaces (j+1, j+k+3) by (j+2, j+k+4).
inline MoveRecord agol_move(int n, int idx) {
    int j = idx / (n - 3), k = idx % (n - 3);
    return a_move_record(Chord::cyclic(j + 1, j + k + 3, n), Chord::cyclic(j + 2, j + k + 4, n), n);
}

inline PantsPath build_agol_path(const AgolPathSpec& spec) {
    spec.check();
    int n = spec.n, len = spec.rounds * (n - 3);
    PantsPath path{n, step_decomposition(n, 0), {}, spec.rounds % n};
    for (int idx = 0; idx < len; ++idx)
        path.steps.push_back(PathStep{step_decomposition(n, idx + 1), agol_move(n, idx)});
    return path;
}

inline PantsPath build_agol_path(int n, int rounds) {
    return build_agol_path(AgolPathSpec{n, rounds});
}
inline PantsPath build_agol_path(int n) {
    return build_agol_path(AgolPathSpec{n, n});
}

inline std::vector<Chord> universal_chords(const PantsPath& path) {
    std::set<Chord> common(path.start.chords().begin(), path.start.chords().end());
    for (int i = 1; i <= path.length(); ++i) {
        const auto& P = path.decomposition(i);
        std::erase_if(common, [&](const Chord& c) { return !P.contains(c); });
    }
    return {common.begin(), common.end()};
}

inline bool check_no_universal_curve(const PantsPath& path) {
    return universal_chords(path).empty();
}

inline bool check_pants_kinds(const PantsPath& path) {
    for (int i = 0; i <= path.length(); ++i)
        for (const Triangle& t : triangles_of(path.decomposition(i)))
            if (classify_pants(t, path.n) == PantsKind::PlainPants) return false;
    return true;
}

}  // namespace pants
