#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <string>
#include <vector>

#include "pants/error.hpp"

namespace pants {

// Map any integer onto the cyclic range 1..n.
inline int wrap(int x, int n) {
    int r = (x - 1) % n;
    if (r < 0) r += n;
    return r + 1;
}

inline bool adjacent_gaps(int a, int b, int n) {
    return wrap(a + 1, n) == b || wrap(b + 1, n) == a;
}

struct SurfaceType {
    int genus = 0;
    int boundary_count = 0;

    SurfaceType() = default;
    SurfaceType(int g, int b) : genus(g), boundary_count(b) {
        if (g < 0 || b < 0) throw InputError("surface type: negative genus or boundary count");
        if (3 * g - 3 + b < 1) throw InputError("surface type admits no pants decomposition");
    }

    static SurfaceType punctured_sphere(int n) { return SurfaceType(0, n); }

    int euler() const { return 2 - 2 * genus - boundary_count; }
    int curve_count() const { return 3 * genus - 3 + boundary_count; }
    int pants_count() const { return -euler(); }

    auto operator<=>(const SurfaceType&) const = default;
};

struct Chord {
    int a = 0;
    int b = 0;

    // Validates against n and stores as (min, max).
    static Chord make(int x, int y, int n) {
        if (n < 4) throw InputError("chord: polygon needs at least 4 gaps");
        if (x < 1 || x > n || y < 1 || y > n)
            throw InputError("chord (" + std::to_string(x) + "," + std::to_string(y) + "): gap label outside 1.." +
                             std::to_string(n));
        if (x == y || adjacent_gaps(x, y, n))
            throw InputError("chord (" + std::to_string(x) + "," + std::to_string(y) +
                             "): endpoints must be distinct non-adjacent gaps");
        return Chord{std::min(x, y), std::max(x, y)};
    }

    // Same as make() but reduces labels mod n first.
    static Chord cyclic(int x, int y, int n) { return make(wrap(x, n), wrap(y, n), n); }

    bool valid_for(int n) const { return n >= 4 && a >= 1 && b <= n && a < b && !adjacent_gaps(a, b, n); }

    bool has_endpoint(int v) const { return a == v || b == v; }

    Chord rotated(int r, int n) const { return cyclic(a + r, b + r, n); }

    std::string str() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

    auto operator<=>(const Chord&) const = default;
};

// v strictly inside the increasing arc a..b (labels in 1..n, a < b).
inline bool strictly_between(int a, int b, int v) {
    return a < v && v < b;
}

inline bool chords_cross(const Chord& c1, const Chord& c2, int n) {
    if (!c1.valid_for(n)) throw InputError("chords_cross: invalid chord " + c1.str());
    if (!c2.valid_for(n)) throw InputError("chords_cross: invalid chord " + c2.str());
    if (c1.has_endpoint(c2.a) || c1.has_endpoint(c2.b)) return false;
    return strictly_between(c1.a, c1.b, c2.a) != strictly_between(c1.a, c1.b, c2.b);
}

enum class EdgeKind { Side, Chord };

// A polygon side (puncture) or a chord; endpoints stored as (min, max).
struct Edge {
    EdgeKind kind = EdgeKind::Side;
    int a = 0;
    int b = 0;

    static Edge between(int x, int y, int n) {
        int lo = std::min(x, y), hi = std::max(x, y);
        bool side = adjacent_gaps(lo, hi, n);
        return Edge{side ? EdgeKind::Side : EdgeKind::Chord, lo, hi};
    }
    static Edge side(int k, int n) { return between(k, wrap(k + 1, n), n); }
    static Edge of(const Chord& c) { return Edge{EdgeKind::Chord, c.a, c.b}; }

    bool is_side() const { return kind == EdgeKind::Side; }
    bool is_chord() const { return kind == EdgeKind::Chord; }
    Chord chord() const { return Chord{a, b}; }

    // Side k joins gaps k and k+1; side n joins gaps n and 1.
    int puncture() const { return (b == a + 1) ? a : b; }

    std::string str() const {
        if (is_side()) return "side " + std::to_string(puncture());
        return "chord " + chord().str();
    }

    auto operator<=>(const Edge&) const = default;
};

struct Triangle {
    std::array<int, 3> v{};  // sorted gap labels

    static Triangle of(int x, int y, int z) {
        std::array<int, 3> t{x, y, z};
        std::sort(t.begin(), t.end());
        return Triangle{t};
    }

    std::array<Edge, 3> edges(int n) const {
        return {Edge::between(v[0], v[1], n), Edge::between(v[1], v[2], n), Edge::between(v[0], v[2], n)};
    }

    bool has_vertex(int x) const { return v[0] == x || v[1] == x || v[2] == x; }

    int opposite(const Chord& c) const {
        for (int x : v)
            if (!c.has_endpoint(x)) return x;
        return 0;
    }

    int side_count(int n) const {
        int k = 0;
        for (const Edge& e : edges(n)) k += e.is_side();
        return k;
    }

    std::string str() const {
        return "{" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) + "}";
    }

    auto operator<=>(const Triangle&) const = default;
};

enum class PantsKind { TwoPuncturedDisk, OncePuncturedAnnulus, PlainPants };

inline std::string to_string(PantsKind k) {
    switch (k) {
        case PantsKind::TwoPuncturedDisk:
            return "TwoPuncturedDisk";
        case PantsKind::OncePuncturedAnnulus:
            return "OncePuncturedAnnulus";
        case PantsKind::PlainPants:
            return "PlainPants";
    }
    return "?";
}

inline PantsKind pants_kind_from_string(const std::string& s) {
    if (s == "TwoPuncturedDisk") return PantsKind::TwoPuncturedDisk;
    if (s == "OncePuncturedAnnulus") return PantsKind::OncePuncturedAnnulus;
    if (s == "PlainPants") return PantsKind::PlainPants;
    throw InputError("unknown pants kind '" + s + "'");
}

inline PantsKind classify_pants(const Triangle& t, int n) {
    switch (t.side_count(n)) {
        case 2:
            return PantsKind::TwoPuncturedDisk;
        case 1:
            return PantsKind::OncePuncturedAnnulus;
        default:
            return PantsKind::PlainPants;
    }
}

class PantsDecomposition {
  public:
    PantsDecomposition() = default;
    PantsDecomposition(int n, std::vector<Chord> chords) : n_(n), chords_(std::move(chords)) {
        std::sort(chords_.begin(), chords_.end());
        chords_.erase(std::unique(chords_.begin(), chords_.end()), chords_.end());
    }

    int n() const { return n_; }
    const std::vector<Chord>& chords() const { return chords_; }
    std::size_t size() const { return chords_.size(); }

    bool contains(const Chord& c) const { return std::binary_search(chords_.begin(), chords_.end(), c); }

    // The edge set (sides and chords) as an adjacency test.
    bool has_edge(int x, int y) const {
        if (adjacent_gaps(x, y, n_)) return true;
        return contains(Chord{std::min(x, y), std::max(x, y)});
    }

    PantsDecomposition replaced(const Chord& out, const Chord& in) const {
        std::vector<Chord> cs;
        cs.reserve(chords_.size());
        for (const Chord& c : chords_)
            if (c != out) cs.push_back(c);
        cs.push_back(in);
        return PantsDecomposition(n_, std::move(cs));
    }

    PantsDecomposition rotated(int r) const {
        std::vector<Chord> cs;
        for (const Chord& c : chords_) cs.push_back(c.rotated(r, n_));
        return PantsDecomposition(n_, std::move(cs));
    }

    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < chords_.size(); ++i) s += (i ? "," : "") + chords_[i].str();
        return s + "}";
    }

    auto operator<=>(const PantsDecomposition&) const = default;

  private:
    int n_ = 0;
    std::vector<Chord> chords_;
};

inline bool is_valid_decomposition(const PantsDecomposition& P) {
    int n = P.n();
    if (n < 4 || static_cast<int>(P.size()) != n - 3) return false;
    for (const Chord& c : P.chords())
        if (!c.valid_for(n)) return false;
    const auto& cs = P.chords();
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            if (chords_cross(cs[i], cs[j], n)) return false;
    return true;
}

// In a maximal outerplanar graph every 3-cycle bounds a face.
inline std::vector<Triangle> triangles_of(const PantsDecomposition& P) {
    if (!is_valid_decomposition(P)) throw InputError("triangles_of: invalid decomposition " + P.str());
    int n = P.n();
    std::vector<Triangle> out;
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y) {
            if (!P.has_edge(x, y)) continue;
            for (int z = y + 1; z <= n; ++z)
                if (P.has_edge(y, z) && P.has_edge(x, z)) out.push_back(Triangle{{x, y, z}});
        }
    return out;
}

}  // namespace pants
