#include <gtest/gtest.h>

#include "pants/agol_path.hpp"

using namespace pants;

namespace {
PantsDecomposition dec(int n, std::vector<std::pair<int, int>> cs) {
    std::vector<Chord> out;
    for (auto [a, b] : cs) out.push_back(Chord::make(a, b, n));
    return PantsDecomposition(n, out);
}
}  // namespace

TEST(RoundDecomposition, Examples) {
    EXPECT_EQ(round_decomposition(5, 0), dec(5, {{1, 3}, {1, 4}}));
    EXPECT_EQ(round_decomposition(5, 1), dec(5, {{2, 4}, {2, 5}}));
    EXPECT_EQ(round_decomposition(7, 6), dec(7, {{7, 2}, {7, 3}, {7, 4}, {7, 5}}));
    EXPECT_THROW(round_decomposition(4, 0), InputError);
}

TEST(StepDecomposition, Examples) {
    EXPECT_EQ(step_decomposition(5, 1), dec(5, {{2, 4}, {1, 4}}));
    EXPECT_EQ(step_decomposition(5, 10), dec(5, {{1, 3}, {1, 4}}));
    EXPECT_EQ(step_decomposition(7, 2), dec(7, {{2, 4}, {2, 5}, {1, 5}, {1, 6}}));
}

TEST(StepDecomposition, RoundsAgreeWithFans) {
    for (int n = 5; n <= 12; ++n)
        for (int j = 0; j < n; ++j) EXPECT_EQ(step_decomposition(n, j * (n - 3)), round_decomposition(n, j));
}

TEST(StepDecomposition, AgreesWithFlipReplay) {
    for (int n = 5; n <= 10; ++n) {
        PantsDecomposition cur = step_decomposition(n, 0);
        for (int idx = 0; idx < n * (n - 3); ++idx) {
            ASSERT_TRUE(is_valid_decomposition(cur));
            MoveRecord mv = agol_move(n, idx);
            ASSERT_TRUE(cur.contains(mv.removed));
            cur = apply_a_move(cur, mv.removed).first;
            ASSERT_EQ(cur, step_decomposition(n, idx + 1)) << "n=" << n << " idx=" << idx;
        }
    }
}

TEST(StepDecomposition, RotationEquivariance) {
    for (int n = 5; n <= 10; ++n)
        for (int idx = 0; idx <= n * (n - 3); ++idx)
            EXPECT_EQ(step_decomposition(n, idx).rotated(1), step_decomposition(n, idx + (n - 3)));
}

TEST(BuildAgolPath, Examples) {
    auto p = build_agol_path(5, 5);
    EXPECT_EQ(p.length(), 10);
    EXPECT_EQ(p.monodromy, 0);
    EXPECT_TRUE(validate_path(p).ok);

    auto seg = build_agol_path(5, 1);
    EXPECT_EQ(seg.length(), 2);
    EXPECT_EQ(seg.monodromy, 1);
    EXPECT_EQ(seg.final(), seg.start.rotated(1));
    EXPECT_TRUE(validate_path(seg).ok);

    auto p8 = build_agol_path(8, 8);
    auto rep = validate_path(p8);
    EXPECT_TRUE(rep.ok);
    EXPECT_EQ(rep.a_moves, 40);
    EXPECT_EQ(rep.s_moves, 0);

    EXPECT_THROW(build_agol_path(4, 4), InputError);
    EXPECT_THROW(build_agol_path(6, 0), InputError);
    EXPECT_THROW(build_agol_path(6, 7), InputError);
}

TEST(BuildAgolPath, AllRoundCounts) {
    for (int n = 5; n <= 9; ++n)
        for (int r = 1; r <= n; ++r) {
            auto p = build_agol_path(n, r);
            EXPECT_EQ(p.length(), r * (n - 3));
            EXPECT_EQ(p.monodromy, r % n);
            EXPECT_TRUE(validate_path(p).ok) << n << " " << r;
        }
}

TEST(BuildAgolPath, FlipStructure) {
    for (int n = 5; n <= 12; ++n) {
        auto p = build_agol_path(n);
        for (int idx = 0; idx < p.length(); ++idx) {
            int j = idx / (n - 3), k = idx % (n - 3);
            const MoveRecord& mv = p.steps[static_cast<std::size_t>(idx)].move;
            EXPECT_EQ(mv.kind, MoveKind::A);
            EXPECT_EQ(mv.removed, Chord::cyclic(j + 1, j + k + 3, n));
            EXPECT_EQ(mv.inserted, Chord::cyclic(j + 2, j + k + 4, n));
        }
    }
}

TEST(UniversalCurve, Examples) {
    EXPECT_TRUE(check_no_universal_curve(build_agol_path(5)));
    EXPECT_TRUE(check_no_universal_curve(build_agol_path(9)));
    PantsPath constant{5, round_decomposition(5, 0), {}, 0};
    EXPECT_FALSE(check_no_universal_curve(constant));
    EXPECT_EQ(universal_chords(constant).size(), 2u);
}

TEST(PantsKinds, Sweep) {
    for (int n = 5; n <= 12; ++n) EXPECT_TRUE(check_pants_kinds(build_agol_path(n))) << n;
    auto star = dec(6, {{1, 3}, {3, 5}, {1, 5}});
    PantsPath through{6, star, {}, 0};
    EXPECT_FALSE(check_pants_kinds(through));
}
