#pragma once

#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "pants/drilling.hpp"

namespace pants {

// Octahedron vertices: two poles and the equator w, x, y, z.
enum OctaVertex : int { North = 0, South = 1, W = 2, X = 3, Y = 4, Z = 5 };

using Face = std::array<int, 3>;

inline constexpr std::array<Face, 8> kOctaFaces{{
    {North, W, X},
    {North, X, Y},
    {North, Y, Z},
    {North, Z, W},
    {South, W, X},
    {South, X, Y},
    {South, Y, Z},
    {South, Z, W},
}};

inline constexpr std::array<int, 4> kDarkFaces{0, 2, 5, 7};
inline constexpr int kUpperFaces[2] = {1, 3};  // (N,x,y), (N,z,w)
inline constexpr int kLowerFaces[2] = {4, 6};  // (S,w,x), (S,y,z)

inline constexpr bool is_dark(int face) {
    return face == 0 || face == 2 || face == 5 || face == 7;
}

// Four tetrahedra around the w-y axis.
inline constexpr std::array<std::array<int, 4>, 4> kOctaTets{{
    {W, Y, North, X},
    {W, Y, X, South},
    {W, Y, South, Z},
    {W, Y, Z, North},
}};

enum class Copy { Plus = 0, Minus = 1 };

struct Octahedron {
    int id = 0;
    int region = 0;
    Copy copy = Copy::Plus;
    std::array<CuspLabel, 6> labels{};  // indexed by OctaVertex

    auto operator<=>(const Octahedron&) const = default;
};

struct FacePairing {
    int oct_a = 0;
    int face_a = 0;
    int oct_b = 0;
    int face_b = 0;
    std::array<int, 6> vmap{-1, -1, -1, -1, -1, -1};  // vertex of a -> vertex of b on the glued face

    auto operator<=>(const FacePairing&) const = default;
};

struct BoundaryPants {
    int cell = -1;
    std::vector<std::pair<int, int>> triangles;  // (octahedron, face)
};

struct RegionBlock {
    std::vector<Octahedron> octahedra;
    std::vector<FacePairing> internal;
    std::vector<BoundaryPants> pants;
};

inline std::array<CuspLabel, 6> region_labels(const ARegion& r) {
    return {CuspLabel::loop(r.new_loop),
            CuspLabel::loop(r.old_loop),
            r.equator[0],
            r.equator[1],
            r.equator[2],
            r.equator[3]};
}

inline std::array<int, 6> identity_vmap(const Face& f) {
    std::array<int, 6> v{-1, -1, -1, -1, -1, -1};
    for (int x : f) v[static_cast<std::size_t>(x)] = x;
    return v;
}

// Octahedra get ids 2*region and 2*region+1.
inline RegionBlock a_region_octahedra(const ARegion& r) {
    RegionBlock b;
    auto labels = region_labels(r);
    for (Copy c : {Copy::Plus, Copy::Minus})
        b.octahedra.push_back(Octahedron{2 * r.move + static_cast<int>(c), r.move, c, labels});
    int plus = b.octahedra[0].id, minus = b.octahedra[1].id;
    for (int f : kDarkFaces)
        b.internal.push_back(FacePairing{plus, f, minus, f, identity_vmap(kOctaFaces[static_cast<std::size_t>(f)])});
    std::array<std::pair<int, int>, 4> faces{{{r.lower_cells[0], kLowerFaces[0]},
                                              {r.lower_cells[1], kLowerFaces[1]},
                                              {r.upper_cells[0], kUpperFaces[0]},
                                              {r.upper_cells[1], kUpperFaces[1]}}};
    for (auto [cell, f] : faces) b.pants.push_back(BoundaryPants{cell, {{plus, f}, {minus, f}}});
    return b;
}

struct SRegionLabels {
    CuspLabel north{};  // new curve
    CuspLabel south{};  // old curve
    CuspLabel wy{};     // class of w and y after folding
    CuspLabel xz{};     // class of x and z after folding
    int upper_cell = -1;
    int lower_cell = -1;
};

// Dark faces sharing a pole are folded onto each other about that pole: w<->y, x<->z.
inline RegionBlock s_region_octahedron(const SRegionLabels& s, int id = 0) {
    RegionBlock b;
    b.octahedra.push_back(Octahedron{id, id, Copy::Plus, {s.north, s.south, s.wy, s.xz, s.wy, s.xz}});
    auto fold = [&](int fa, int fb) {
        FacePairing p{id, fa, id, fb, {-1, -1, -1, -1, -1, -1}};
        std::array<int, 6> swap{North, South, Y, Z, W, X};
        for (int v : kOctaFaces[static_cast<std::size_t>(fa)])
            p.vmap[static_cast<std::size_t>(v)] = swap[static_cast<std::size_t>(v)];
        return p;
    };
    b.internal.push_back(fold(0, 2));
    b.internal.push_back(fold(5, 7));
    b.pants.push_back(BoundaryPants{s.upper_cell, {{id, kUpperFaces[0]}, {id, kUpperFaces[1]}}});
    b.pants.push_back(BoundaryPants{s.lower_cell, {{id, kLowerFaces[0]}, {id, kLowerFaces[1]}}});
    return b;
}

struct Perm4 {
    std::array<int, 4> p{0, 1, 2, 3};

    int operator[](int i) const { return p[static_cast<std::size_t>(i)]; }
    Perm4 inverse() const {
        Perm4 q;
        for (int i = 0; i < 4; ++i) q.p[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] = i;
        return q;
    }
    int sign() const {
        int s = 1;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) s = -s;
        return s;
    }
    bool is_permutation() const {
        std::array<bool, 4> seen{};
        for (int x : p) {
            if (x < 0 || x > 3 || seen[static_cast<std::size_t>(x)]) return false;
            seen[static_cast<std::size_t>(x)] = true;
        }
        return true;
    }
    std::string str() const {
        std::string s;
        for (int x : p) s += static_cast<char>('0' + x);
        return s;
    }

    auto operator<=>(const Perm4&) const = default;
};

namespace detail {

// (tetrahedron within the octahedron, local index of the vertex opposite the face)
inline std::pair<int, int> face_location(const Face& f) {
    for (int t = 0; t < 4; ++t) {
        const auto& T = kOctaTets[static_cast<std::size_t>(t)];
        int missing = -1, hits = 0;
        for (int k = 0; k < 4; ++k) {
            bool in = std::find(f.begin(), f.end(), T[static_cast<std::size_t>(k)]) != f.end();
            hits += in;
            if (!in) missing = k;
        }
        if (hits == 3) return {t, missing};
    }
    return {-1, -1};
}

inline std::pair<int, Perm4> tet_gluing(const FacePairing& fp) {
    auto [ta, fa] = face_location(kOctaFaces[static_cast<std::size_t>(fp.face_a)]);
    auto [tb, fb] = face_location(kOctaFaces[static_cast<std::size_t>(fp.face_b)]);
    const auto& A = kOctaTets[static_cast<std::size_t>(ta)];
    const auto& B = kOctaTets[static_cast<std::size_t>(tb)];
    Perm4 p;
    for (int k = 0; k < 4; ++k) {
        if (k == fa) {
            p.p[static_cast<std::size_t>(k)] = fb;
            continue;
        }
        int image = fp.vmap[static_cast<std::size_t>(A[static_cast<std::size_t>(k)])];
        p.p[static_cast<std::size_t>(k)] = static_cast<int>(std::find(B.begin(), B.end(), image) - B.begin());
    }
    (void)ta;
    return {tb, p};
}

}  // namespace detail

struct OctahedralComplex {
    int n = 0;
    std::vector<Octahedron> octahedra;
    std::vector<FacePairing> pairings;  // each unordered pair listed once
};

inline OctahedralComplex assemble(const DrilledComplex& cx) {
    OctahedralComplex oc;
    oc.n = cx.n;
    if (static_cast<int>(cx.regions.size()) != cx.m)
        throw AssemblyError("assemble: complex has " + std::to_string(cx.regions.size()) + " regions for " +
                            std::to_string(cx.m) + " moves");
    std::vector<RegionBlock> blocks;
    for (std::size_t i = 0; i < cx.regions.size(); ++i) {
        if (cx.regions[i].move != static_cast<int>(i)) throw AssemblyError("assemble: regions out of order");
        blocks.push_back(a_region_octahedra(cx.regions[i]));
        for (const auto& o : blocks.back().octahedra) oc.octahedra.push_back(o);
        for (const auto& p : blocks.back().internal) oc.pairings.push_back(p);
    }
    auto pants_face = [&](int region, int cell, bool upper) -> int {
        if (region < 0 || region >= static_cast<int>(blocks.size())) return -1;
        const ARegion& r = cx.regions[static_cast<std::size_t>(region)];
        const auto& ids = upper ? r.upper_cells : r.lower_cells;
        for (std::size_t i = 0; i < 2; ++i)
            if (ids[i] == cell) return upper ? kUpperFaces[i] : kLowerFaces[i];
        return -1;
    };
    for (const PantsCell& c : cx.cells) {
        int ru = c.created(), rd = c.destroyed();
        int F = pants_face(ru, c.id, true), G = pants_face(rd, c.id, false);
        if (F < 0 || G < 0)
            throw AssemblyError("assemble: dangling pants cell " + std::to_string(c.id) + " " + c.triangle.str());
        auto Lu = region_labels(cx.regions[static_cast<std::size_t>(ru)]);
        auto Ld = region_labels(cx.regions[static_cast<std::size_t>(rd)]);
        FacePairing base{0, F, 0, G, {-1, -1, -1, -1, -1, -1}};
        for (int v : kOctaFaces[static_cast<std::size_t>(F)]) {
            int match = -1;
            for (int g : kOctaFaces[static_cast<std::size_t>(G)])
                if (Ld[static_cast<std::size_t>(g)] == Lu[static_cast<std::size_t>(v)]) match = g;
            if (match < 0)
                throw AssemblyError("assemble: cusp label " + Lu[static_cast<std::size_t>(v)].str() + " of cell " +
                                    std::to_string(c.id) + " missing at its destroying region");
            base.vmap[static_cast<std::size_t>(v)] = match;
        }
        // Opposite copies when that reverses orientation, otherwise like copies.
        bool cross = detail::tet_gluing(base).second.sign() == 1;
        for (int cu : {0, 1}) {
            FacePairing p = base;
            p.oct_a = 2 * ru + cu;
            p.oct_b = 2 * rd + (cross ? 1 - cu : cu);
            oc.pairings.push_back(p);
        }
    }
    return oc;
}

struct Tetrahedron {
    std::array<int, 4> neighbor{};
    std::array<Perm4, 4> gluing{};
    std::array<int, 4> cusp{};

    auto operator<=>(const Tetrahedron&) const = default;
};

struct IdealTriangulation {
    std::vector<Tetrahedron> tets;

    int cusp_count() const {
        int k = 0;
        for (const auto& t : tets)
            for (int c : t.cusp) k = std::max(k, c + 1);
        return k;
    }

    auto operator<=>(const IdealTriangulation&) const = default;
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace detail

// Cusp classes numbered by first appearance in (tetrahedron, vertex) order.
inline void assign_cusps(IdealTriangulation& tri) {
    std::size_t T = tri.tets.size();
    detail::UnionFind uf(4 * T);
    for (std::size_t t = 0; t < T; ++t)
        for (int f = 0; f < 4; ++f) {
            const auto& tet = tri.tets[t];
            int b = tet.neighbor[static_cast<std::size_t>(f)];
            if (b < 0 || static_cast<std::size_t>(b) >= T) continue;
            const Perm4& p = tet.gluing[static_cast<std::size_t>(f)];
            for (int v = 0; v < 4; ++v)
                if (v != f && p[v] >= 0 && p[v] < 4) uf.unite(static_cast<int>(4 * t) + v, 4 * b + p[v]);
        }
    std::vector<int> id(4 * T, -1);
    int next = 0;
    for (std::size_t i = 0; i < 4 * T; ++i) {
        int r = uf.find(static_cast<int>(i));
        if (id[static_cast<std::size_t>(r)] < 0) id[static_cast<std::size_t>(r)] = next++;
        tri.tets[i / 4].cusp[i % 4] = id[static_cast<std::size_t>(r)];
    }
}

// Tetrahedron 4*o + i is the i-th piece of octahedron o.
inline IdealTriangulation subdivide(const OctahedralComplex& oc) {
    IdealTriangulation tri;
    tri.tets.resize(4 * oc.octahedra.size());
    auto set = [&](int a, int fa, int b, const Perm4& p) {
        auto& t = tri.tets[static_cast<std::size_t>(a)];
        t.neighbor[static_cast<std::size_t>(fa)] = b;
        t.gluing[static_cast<std::size_t>(fa)] = p;
    };
    auto glue = [&](int a, int fa, int b, const Perm4& p) {
        set(a, fa, b, p);
        set(b, p[fa], a, p.inverse());
    };
    for (std::size_t o = 0; o < oc.octahedra.size(); ++o) {
        int base = static_cast<int>(4 * o);
        for (int i = 0; i < 4; ++i) {
            const auto& A = kOctaTets[static_cast<std::size_t>(i)];
            const auto& B = kOctaTets[static_cast<std::size_t>((i + 1) % 4)];
            int fa = -1;
            Perm4 p;
            for (int k = 0; k < 4; ++k) {
                auto pos = std::find(B.begin(), B.end(), A[static_cast<std::size_t>(k)]);
                if (pos == B.end())
                    fa = k;
                else
                    p.p[static_cast<std::size_t>(k)] = static_cast<int>(pos - B.begin());
            }
            for (int k = 0; k < 4; ++k)
                if (std::find(A.begin(), A.end(), B[static_cast<std::size_t>(k)]) == A.end())
                    p.p[static_cast<std::size_t>(fa)] = k;
            glue(base + i, fa, base + (i + 1) % 4, p);
        }
    }
    for (const FacePairing& fp : oc.pairings) {
        auto [ta, fa] = detail::face_location(kOctaFaces[static_cast<std::size_t>(fp.face_a)]);
        auto [tb, p] = detail::tet_gluing(fp);
        glue(4 * fp.oct_a + ta, fa, 4 * fp.oct_b + tb, p);
    }
    assign_cusps(tri);
    return tri;
}

struct CuspLinkReport {
    int cusp = 0;
    int vertices = 0;
    int edges = 0;
    int triangles = 0;
    int euler = 0;
    bool connected = false;
    bool orientable = false;

    bool is_torus() const { return euler == 0 && connected && orientable; }
};

struct TriangulationReport {
    bool complete = false;    // every face glued to a face of a tetrahedron, never to itself
    bool involutive = false;  // gluings are mutually inverse
    bool orientable = false;
    bool cusps_consistent = false;  // stored cusp indices agree with the gluings
    int cusp_count = 0;
    std::vector<CuspLinkReport> links;

    bool all_links_tori() const {
        for (const auto& l : links)
            if (!l.is_torus()) return false;
        return !links.empty();
    }
    bool ok() const { return complete && involutive && orientable && cusps_consistent && all_links_tori(); }
};

inline TriangulationReport validate(const IdealTriangulation& tri) {
    TriangulationReport rep;
    const int T = static_cast<int>(tri.tets.size());
    auto at = [&](int t) -> const Tetrahedron& { return tri.tets[static_cast<std::size_t>(t)]; };

    rep.complete = T > 0;
    for (int t = 0; t < T && rep.complete; ++t)
        for (int f = 0; f < 4; ++f) {
            int b = at(t).neighbor[static_cast<std::size_t>(f)];
            const Perm4& p = at(t).gluing[static_cast<std::size_t>(f)];
            if (b < 0 || b >= T || !p.is_permutation() || (b == t && p[f] == f)) rep.complete = false;
        }
    if (!rep.complete) return rep;

    rep.involutive = true;
    for (int t = 0; t < T; ++t)
        for (int f = 0; f < 4; ++f) {
            int b = at(t).neighbor[static_cast<std::size_t>(f)];
            const Perm4& p = at(t).gluing[static_cast<std::size_t>(f)];
            int g = p[f];
            if (at(b).neighbor[static_cast<std::size_t>(g)] != t ||
                at(b).gluing[static_cast<std::size_t>(g)] != p.inverse())
                rep.involutive = false;
        }
    if (!rep.involutive) return rep;

    std::vector<int> eps(static_cast<std::size_t>(T), 0);
    rep.orientable = true;
    for (int root = 0; root < T; ++root) {
        if (eps[static_cast<std::size_t>(root)]) continue;
        eps[static_cast<std::size_t>(root)] = 1;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            for (int f = 0; f < 4; ++f) {
                int b = at(a).neighbor[static_cast<std::size_t>(f)];
                int want = -eps[static_cast<std::size_t>(a)] * at(a).gluing[static_cast<std::size_t>(f)].sign();
                if (!eps[static_cast<std::size_t>(b)]) {
                    eps[static_cast<std::size_t>(b)] = want;
                    stack.push_back(b);
                } else if (eps[static_cast<std::size_t>(b)] != want) {
                    rep.orientable = false;
                }
            }
        }
    }

    IdealTriangulation fresh = tri;
    assign_cusps(fresh);
    rep.cusps_consistent = fresh == tri;
    rep.cusp_count = fresh.cusp_count();

    // Vertex links: one triangle per (tet, vertex); corners keyed by (tet, vertex, other vertex).
    auto corner = [](int t, int v, int u) { return 16 * t + 4 * v + u; };
    detail::UnionFind corners(static_cast<std::size_t>(16 * T));
    detail::UnionFind pieces(static_cast<std::size_t>(4 * T));
    for (int t = 0; t < T; ++t)
        for (int f = 0; f < 4; ++f) {
            int b = at(t).neighbor[static_cast<std::size_t>(f)];
            const Perm4& p = at(t).gluing[static_cast<std::size_t>(f)];
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                pieces.unite(4 * t + v, 4 * b + p[v]);
                for (int u = 0; u < 4; ++u)
                    if (u != v && u != f) corners.unite(corner(t, v, u), corner(b, p[v], p[u]));
            }
        }
    rep.links.resize(static_cast<std::size_t>(rep.cusp_count));
    std::vector<std::vector<int>> members(static_cast<std::size_t>(rep.cusp_count));
    for (int t = 0; t < T; ++t)
        for (int v = 0; v < 4; ++v)
            members[static_cast<std::size_t>(fresh.tets[static_cast<std::size_t>(t)].cusp[static_cast<std::size_t>(v)])]
                .push_back(4 * t + v);
    for (int c = 0; c < rep.cusp_count; ++c) {
        auto& L = rep.links[static_cast<std::size_t>(c)];
        const auto& mem = members[static_cast<std::size_t>(c)];
        L.cusp = c;
        L.triangles = static_cast<int>(mem.size());
        L.edges = 3 * L.triangles / 2;
        std::vector<int> roots;
        for (int tv : mem)
            for (int u = 0; u < 4; ++u)
                if (u != tv % 4) roots.push_back(corners.find(corner(tv / 4, tv % 4, u)));
        std::sort(roots.begin(), roots.end());
        L.vertices = static_cast<int>(std::unique(roots.begin(), roots.end()) - roots.begin());
        L.euler = L.vertices - L.edges + L.triangles;
        int r0 = pieces.find(mem.front());
        L.connected = std::all_of(mem.begin(), mem.end(), [&](int tv) { return pieces.find(tv) == r0; });

        // Link orientation follows the same parity rule as the tetrahedra.
        std::map<int, int> sgn{{mem.front(), 1}};
        std::vector<int> stack{mem.front()};
        L.orientable = true;
        while (!stack.empty()) {
            int tv = stack.back();
            stack.pop_back();
            int t = tv / 4, v = tv % 4;
            for (int f = 0; f < 4; ++f) {
                if (f == v) continue;
                int b = at(t).neighbor[static_cast<std::size_t>(f)];
                const Perm4& p = at(t).gluing[static_cast<std::size_t>(f)];
                int other = 4 * b + p[v];
                int want = -sgn[tv] * p.sign();
                auto it = sgn.find(other);
                if (it == sgn.end()) {
                    sgn[other] = want;
                    stack.push_back(other);
                } else if (it->second != want) {
                    L.orientable = false;
                }
            }
        }
    }
    return rep;
}

// Regular ideal octahedron volume, 8 * Lobachevsky(pi/4).
inline constexpr double kOctahedronVolume = 3.66386237670887606021841405973;

struct VolumeBound {
    int a_moves = 0;
    int s_moves = 0;
    double bound = 0.0;
};

inline VolumeBound volume_bound(int a_moves, int s_moves) {
    if (a_moves < 0 || s_moves < 0) throw InputError("volume_bound: negative move count");
    return {a_moves, s_moves, kOctahedronVolume * (2.0 * a_moves + s_moves)};
}

inline VolumeBound volume_bound(const PantsPath& path) {
    PathReport rep = validate_path(path);
    if (!rep.ok) throw InputError("volume_bound: path does not validate");
    return volume_bound(rep.a_moves, rep.s_moves);
}

}  // namespace pants
