#include <gtest/gtest.h>

#include <map>

#include "pants/pants_graph.hpp"

using namespace pants;

namespace {
PantsDecomposition dec(int n, std::vector<std::pair<int, int>> cs) {
    std::vector<Chord> out;
    for (auto [a, b] : cs) out.push_back(Chord::make(a, b, n));
    return PantsDecomposition(n, out);
}
}  // namespace

TEST(SurfaceType, CountsForPuncturedSpheres) {
    for (int n = 4; n <= 12; ++n) {
        auto s = SurfaceType::punctured_sphere(n);
        EXPECT_EQ(s.curve_count(), n - 3);
        EXPECT_EQ(s.pants_count(), n - 2);
        EXPECT_EQ(s.euler(), 2 - n);
    }
    EXPECT_EQ(SurfaceType(2, 0).curve_count(), 3);
    EXPECT_THROW(SurfaceType(0, 3), InputError);
    EXPECT_THROW(SurfaceType(-1, 5), InputError);
}

TEST(Chord, CanonicalStorageAndValidation) {
    EXPECT_EQ(Chord::make(4, 1, 6), (Chord{1, 4}));
    EXPECT_EQ(Chord::cyclic(7, 9, 7), (Chord{2, 7}));
    EXPECT_THROW(Chord::make(1, 2, 5), InputError);
    EXPECT_THROW(Chord::make(1, 5, 5), InputError);
    EXPECT_THROW(Chord::make(3, 3, 5), InputError);
    EXPECT_THROW(Chord::make(0, 3, 5), InputError);
    EXPECT_THROW(Chord::make(1, 6, 5), InputError);
}

TEST(ChordsCross, Examples) {
    EXPECT_TRUE(chords_cross(Chord{1, 3}, Chord{2, 4}, 5));
    EXPECT_FALSE(chords_cross(Chord{1, 3}, Chord{1, 4}, 5));
    EXPECT_FALSE(chords_cross(Chord{1, 3}, Chord{3, 5}, 6));
    EXPECT_THROW(chords_cross(Chord{1, 2}, Chord{3, 5}, 6), InputError);
}

TEST(ChordsCross, SymmetricAndIrreflexive) {
    for (int n = 4; n <= 10; ++n) {
        std::vector<Chord> all;
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                if (Chord{a, b}.valid_for(n)) all.push_back(Chord{a, b});
        for (const auto& c : all) {
            EXPECT_FALSE(chords_cross(c, c, n));
            for (const auto& d : all) EXPECT_EQ(chords_cross(c, d, n), chords_cross(d, c, n));
        }
    }
}

TEST(Decomposition, Validity) {
    EXPECT_TRUE(is_valid_decomposition(dec(5, {{1, 3}, {1, 4}})));
    EXPECT_FALSE(is_valid_decomposition(dec(5, {{1, 3}})));
    EXPECT_FALSE(is_valid_decomposition(dec(6, {{1, 3}, {2, 4}, {4, 6}})));
    EXPECT_FALSE(is_valid_decomposition(PantsDecomposition(5, {Chord{1, 2}, Chord{1, 4}})));
}

TEST(Triangles, PentagonFan) {
    auto tris = triangles_of(dec(5, {{1, 3}, {1, 4}}));
    ASSERT_EQ(tris.size(), 3u);
    EXPECT_EQ(tris[0], Triangle::of(1, 2, 3));
    EXPECT_EQ(tris[1], Triangle::of(1, 3, 4));
    EXPECT_EQ(tris[2], Triangle::of(1, 4, 5));
    auto e = tris[0].edges(5);
    EXPECT_TRUE(e[0].is_side() && e[0].puncture() == 1);
    EXPECT_TRUE(e[1].is_side() && e[1].puncture() == 2);
    EXPECT_EQ(e[2], Edge::of(Chord{1, 3}));
    EXPECT_EQ(Edge::side(5, 5).puncture(), 5);
    EXPECT_EQ(triangles_of(dec(4, {{1, 3}})).size(), 2u);
    EXPECT_THROW(triangles_of(dec(5, {{1, 3}})), InputError);
}

TEST(Triangles, EdgePartitionOnEveryDecomposition) {
    for (int n = 4; n <= 10; ++n) {
        for (const auto& P : enumerate_decompositions(n)) {
            auto tris = triangles_of(P);
            ASSERT_EQ(static_cast<int>(P.size()), SurfaceType::punctured_sphere(n).curve_count());
            ASSERT_EQ(static_cast<int>(tris.size()), SurfaceType::punctured_sphere(n).pants_count());
            std::map<Edge, int> uses;
            int chord_edges = 0, side_edges = 0, ears = 0;
            for (const auto& t : tris) {
                for (const auto& e : t.edges(n)) {
                    ++uses[e];
                    (e.is_side() ? side_edges : chord_edges)++;
                }
                ears += classify_pants(t, n) == PantsKind::TwoPuncturedDisk;
            }
            EXPECT_EQ(chord_edges, 2 * (n - 3));
            EXPECT_EQ(side_edges, n);
            for (const auto& [e, k] : uses) EXPECT_EQ(k, e.is_side() ? 1 : 2) << e.str();
            EXPECT_GE(ears, 2);
        }
    }
}

TEST(ClassifyPants, Kinds) {
    EXPECT_EQ(classify_pants(Triangle::of(1, 2, 3), 5), PantsKind::TwoPuncturedDisk);
    EXPECT_EQ(classify_pants(Triangle::of(1, 3, 4), 5), PantsKind::OncePuncturedAnnulus);
    EXPECT_EQ(classify_pants(Triangle::of(1, 3, 5), 6), PantsKind::PlainPants);
}

TEST(Decomposition, Rotation) {
    auto P = dec(5, {{1, 3}, {1, 4}});
    EXPECT_EQ(P.rotated(1), dec(5, {{2, 4}, {2, 5}}));
    EXPECT_EQ(P.rotated(5), P);
}
