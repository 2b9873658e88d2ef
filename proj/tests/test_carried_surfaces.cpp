#include <gtest/gtest.h>

#include <map>
#include <set>

#include "pants/carried_surfaces.hpp"

using namespace pants;

namespace {

const DrilledComplex& drilled(int n) {
    static std::map<int, DrilledComplex> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_drilled_complex(build_agol_path(n))).first;
    return it->second;
}

// Counts connected (subset, tubing) pairs by brute force over cell subsets.
std::size_t brute_force_count(const DrilledComplex& cx, bool annuli_only) {
    std::vector<int> pool;
    for (const auto& c : cx.cells)
        if (!annuli_only || c.kind == PantsKind::OncePuncturedAnnulus) pool.push_back(c.id);
    std::size_t total = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << pool.size()); ++mask) {
        std::map<int, std::vector<Circle>> at;
        std::vector<int> cells;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (mask >> i & 1) {
                cells.push_back(pool[i]);
                for (const auto& b : cx.cell(pool[i]).boundary) at[b.loop].push_back(Circle{pool[i], b.loop});
            }
        bool even = true;
        for (const auto& [L, cs] : at) even = even && cs.size() % 2 == 0;
        if (!even) continue;
        std::vector<std::vector<std::vector<Tube>>> per_loop;
        for (const auto& [L, cs] : at) {
            std::vector<std::vector<Tube>> matchings;
            std::vector<Tube> cur;
            std::vector<bool> used(cs.size());
            auto rec = [&](auto&& self) -> void {
                std::size_t i = 0;
                while (i < cs.size() && used[i]) ++i;
                if (i == cs.size()) {
                    matchings.push_back(cur);
                    return;
                }
                used[i] = true;
                for (std::size_t j = i + 1; j < cs.size(); ++j)
                    if (!used[j] && tube_allowed(cx, cs[i], cs[j])) {
                        used[j] = true;
                        cur.push_back(Tube::of(cs[i], cs[j]));
                        self(self);
                        cur.pop_back();
                        used[j] = false;
                    }
                used[i] = false;
            };
            rec(rec);
            per_loop.push_back(matchings);
        }
        std::vector<Tube> tubes;
        auto combine = [&](auto&& self, std::size_t k) -> void {
            if (k == per_loop.size()) {
                TubingSelection sel{cells, tubes};
                if (evaluate_surface(cx, sel).connected) ++total;
                return;
            }
            for (const auto& m : per_loop[k]) {
                tubes.insert(tubes.end(), m.begin(), m.end());
                self(self, k + 1);
                tubes.resize(tubes.size() - m.size());
            }
        };
        combine(combine, 0);
    }
    return total;
}

std::vector<CarriedSurface> whole_orbit(const DrilledComplex& cx, const CarriedSurface& s) {
    auto moves = swap_moves(cx);
    std::set<TubingSelection> seen{s.selection};
    std::vector<CarriedSurface> out{s};
    for (std::size_t i = 0; i < out.size(); ++i)
        for (auto& nb : swap_neighbors(cx, out[i], moves))
            if (seen.insert(nb.selection).second) out.push_back(nb);
    return out;
}

}  // namespace

TEST(Enumerate, TorusIsTheOnlyAnnulusSurfaceAtFive) {
    const auto& cx = drilled(5);
    auto s = enumerate_carried(cx, true);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s[0].selection, canonical_torus(cx).selection);
    EXPECT_EQ(s[0].euler, -10);
    EXPECT_EQ(s[0].genus, 1);
    EXPECT_EQ(s[0].punctures, 10);
    EXPECT_TRUE(s[0].orientable);
}

TEST(Enumerate, AgreesWithBruteForceAtFive) {
    const auto& cx = drilled(5);
    EXPECT_EQ(enumerate_carried(cx, true).size(), brute_force_count(cx, true));
    EXPECT_EQ(enumerate_carried(cx, false).size(), brute_force_count(cx, false));
}

TEST(Enumerate, Counts) {
    for (int n : {6, 7, 8}) {
        auto s = enumerate_carried(drilled(n), true);
        EXPECT_EQ(s.size(), static_cast<std::size_t>(n - 4));
        for (const auto& x : s) EXPECT_EQ(x.selection.cells.size(), static_cast<std::size_t>(2 * n));
    }
}

TEST(Enumerate, SurfacesAreWellFormed) {
    for (int n : {5, 6, 7}) {
        const auto& cx = drilled(n);
        for (bool annuli : {true, false}) {
            auto all = enumerate_carried(cx, annuli);
            EXPECT_TRUE(std::is_sorted(all.begin(), all.end(), [](const auto& l, const auto& r) {
                return std::make_pair(l.selection.cells.size(), l.selection) <
                       std::make_pair(r.selection.cells.size(), r.selection);
            }));
            for (const auto& s : all) {
                EXPECT_FALSE(s.selection.cells.empty());
                EXPECT_FALSE(selection_error(cx, s.selection).has_value());
                EXPECT_TRUE(s.connected);
                for (const auto& t : s.selection.tubes) EXPECT_TRUE(tube_allowed(cx, t.a, t.b));
                EXPECT_EQ(s.euler, -static_cast<int>(s.selection.cells.size()));
                if (s.orientable) {
                    EXPECT_EQ(s.euler, 2 - 2 * s.genus - s.punctures);
                }
                bool annuli_only = true, disk = false;
                for (int c : s.selection.cells) {
                    annuli_only = annuli_only && cx.cell(c).kind == PantsKind::OncePuncturedAnnulus;
                    disk = disk || cx.cell(c).kind == PantsKind::TwoPuncturedDisk;
                }
                if (annuli_only && s.orientable) {
                    EXPECT_EQ(s.genus, 1);
                }
                if (annuli_only) {
                    EXPECT_EQ(s.punctures, static_cast<int>(s.selection.cells.size()));
                }
                if (disk && s.orientable) {
                    EXPECT_EQ(s.genus, 0);
                }
            }
        }
    }
}

TEST(Enumerate, CapGuard) {
    EXPECT_THROW(enumerate_carried(drilled(5), true, EnumerationLimits{5}), EnumerationCapExceeded);
    EXPECT_THROW(enumerate_carried(drilled(5), true, EnumerationLimits{0}), InputError);
    EXPECT_NO_THROW(enumerate_carried(drilled(5), true, EnumerationLimits{10}));
}

TEST(CanonicalTorus, Invariants) {
    for (int n = 5; n <= 9; ++n) {
        auto T = canonical_torus(drilled(n));
        EXPECT_EQ(T.selection.cells.size(), static_cast<std::size_t>(2 * n));
        EXPECT_EQ(T.selection.threaded_loops().size(), static_cast<std::size_t>(2 * n));
        EXPECT_EQ(T.euler, -2 * n);
        EXPECT_EQ(T.genus, 1);
        EXPECT_EQ(T.punctures, 2 * n);
        EXPECT_TRUE(T.orientable);
        EXPECT_TRUE(T.connected);
        EXPECT_TRUE(in_torus_band(drilled(n), T));
    }
}

TEST(CanonicalTorus, RejectsOtherPaths) {
    auto shifted = rotated(build_agol_path(5), 1);
    auto cx = build_drilled_complex(shifted);
    EXPECT_FALSE(is_agol_complex(cx));
    EXPECT_THROW(canonical_torus(cx), InputError);
}

TEST(Swap, NoSwapsAtFive) {
    EXPECT_TRUE(swap_moves(drilled(5)).empty());
}

TEST(Swap, PreservesInvariantsAndIsAnInvolution) {
    for (int n : {6, 7}) {
        const auto& cx = drilled(n);
        auto moves = swap_moves(cx);
        EXPECT_EQ(moves.size(), static_cast<std::size_t>(2 * n * (n - 5)));
        std::size_t checked = 0;
        for (const auto& s : enumerate_carried(cx, true))
            for (const auto& member : whole_orbit(cx, s))
                for (const auto& mv : moves) {
                    if (!swap_applicable(member, mv)) continue;
                    auto out = apply_swap(cx, member, mv);
                    EXPECT_EQ(out.euler, member.euler);
                    EXPECT_EQ(out.genus, member.genus);
                    EXPECT_EQ(out.punctures, member.punctures);
                    EXPECT_EQ(out.orientable, member.orientable);
                    EXPECT_TRUE(out.connected);
                    EXPECT_EQ(apply_swap(cx, out, mv.reversed()).selection, member.selection);
                    ++checked;
                }
        EXPECT_GT(checked, 0u);
    }
}

TEST(Swap, InapplicableMoveThrows) {
    const auto& cx = drilled(6);
    auto T = canonical_torus(cx);
    for (const auto& mv : swap_moves(cx))
        if (!swap_applicable(T, mv)) {
            EXPECT_THROW(apply_swap(cx, T, mv), SwapError);
            return;
        }
    FAIL() << "every swap applies to T";
}

TEST(Swap, RemovesDifferenceTwoThreading) {
    const auto& cx = drilled(6);
    auto moves = swap_moves(cx);
    auto diff2 = [&](const CarriedSurface& s) {
        std::set<int> out;
        for (int L : s.selection.threaded_loops())
            if (cx.loop(L).label.gap_difference(cx.n) == 2) out.insert(L);
        return out;
    };
    bool witnessed = false;
    for (const auto& s : whole_orbit(cx, canonical_torus(cx))) {
        auto before = diff2(s);
        if (before.empty()) continue;
        for (const auto& mv : moves)
            if (swap_applicable(s, mv)) {
                auto after = diff2(apply_swap(cx, s, mv));
                for (int L : before) witnessed = witnessed || !after.contains(L);
            }
    }
    EXPECT_TRUE(witnessed);
}

TEST(NormalForm, CollapsesToCanonicalTorus) {
    for (int n : {5, 6, 7}) {
        const auto& cx = drilled(n);
        auto T = canonical_torus(cx);
        for (const auto& s : enumerate_carried(cx, true)) {
            auto nf = normal_form(cx, s);
            EXPECT_EQ(nf.status, NormalFormStatus::Reduced);
            EXPECT_EQ(nf.surface.selection, T.selection);
        }
        auto self = normal_form(cx, T);
        EXPECT_EQ(self.surface.selection, T.selection);
        auto orbits = classify_orbits(cx, enumerate_carried(cx, true));
        for (const auto& o : orbits) {
            EXPECT_EQ(o.orbit, 0);
            EXPECT_TRUE(o.is_canonical_torus);
        }
    }
}

TEST(NormalForm, CapYieldsUndecided) {
    const auto& cx = drilled(7);
    auto T = canonical_torus(cx);
    auto nf = normal_form(cx, T, 5);
    EXPECT_EQ(nf.status, NormalFormStatus::Undecided);
    EXPECT_EQ(nf.surface.selection, T.selection);
    auto orbits = classify_orbits(cx, {T}, 5);
    EXPECT_LT(orbits[0].orbit, 0);
}

TEST(CompressionWitness, LabelsAndAdjacency) {
    for (int n : {5, 6, 7, 9}) {
        const auto& cx = drilled(n);
        auto w = compression_witness(cx);
        EXPECT_EQ(w.labels[0], (OrderedLabel{1, 3}));
        EXPECT_EQ(w.labels[1], (OrderedLabel{1, 4}));
        EXPECT_EQ(w.labels[2], (OrderedLabel{2, 4}));
        for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(cx.loop(w.loops[i]).label, w.labels[i]);
        EXPECT_TRUE(w.consecutive_in_torus);
        EXPECT_EQ(cx.cell(w.annuli[0]).kind, PantsKind::OncePuncturedAnnulus);
        EXPECT_TRUE(cx.cell(w.annuli[0]).slot_of(w.loops[0]));
        EXPECT_TRUE(cx.cell(w.annuli[1]).slot_of(w.loops[2]));
    }
}

TEST(Heegaard, CeilingOfHalf) {
    EXPECT_EQ(heegaard_lower_bound(5), 3);
    EXPECT_EQ(heegaard_lower_bound(2), 1);
    EXPECT_EQ(heegaard_lower_bound(100), 50);
    for (int n = 1; n <= 100; ++n) EXPECT_EQ(heegaard_lower_bound(n), n / 2 + n % 2);
    EXPECT_THROW(heegaard_lower_bound(0), InputError);
}

TEST(Evaluate, RejectsMalformedSelections) {
    const auto& cx = drilled(5);
    auto T = canonical_torus(cx);
    auto sel = T.selection;
    sel.tubes.pop_back();
    EXPECT_THROW(evaluate_surface(cx, sel), InputError);
    EXPECT_THROW(evaluate_surface(cx, TubingSelection{}), InputError);
}
