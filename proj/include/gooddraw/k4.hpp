#ifndef GOODDRAW_K4_HPP
#define GOODDRAW_K4_HPP

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "gooddraw/map.hpp"
#include "gooddraw/scheme.hpp"

namespace gooddraw {

/*
 * Pure rotation-scheme inference.  A rotation system on four vertices either
 * embeds K4 in the sphere (no crossing in any drawing realizing it) or it
 * forces exactly one pair of disjoint edges to cross, with a direction of
 * crossing that is also determined.  Everything here reduces to a 16-entry
 * table over the K4 rotation systems, built once by planarizing each
 * candidate and checking Euler's formula.
 */

// Four distinct labels, each with a cyclic order of the other three.
struct K4Rotation {
    std::array<VertexId, 4> labels{};                 // ascending
    std::array<std::array<VertexId, 3>, 4> orders{};  // cyclic, aligned with labels

    static K4Rotation from_scheme(const RotationScheme& s, std::array<VertexId, 4> q) {
        std::sort(q.begin(), q.end());
        K4Rotation r;
        r.labels = q;
        for (int i = 0; i < 4; ++i) {
            std::vector<VertexId> subset;
            for (int j = 0; j < 4; ++j)
                if (j != i) subset.push_back(q[j]);
            auto restricted = s.restrict_at(q[i], subset);
            require(restricted.size() == 3, "restriction must have 3 entries");
            for (int j = 0; j < 3; ++j) r.orders[i][j] = restricted[j];
        }
        return r;
    }

    // One bit per vertex: with the other three labels p < r < t, the cyclic
    // order is either (p,r,t) [bit 0] or (p,t,r) [bit 1].
    int bits() const {
        int out = 0;
        for (int i = 0; i < 4; ++i) {
            std::array<VertexId, 3> sorted = orders[i];
            std::sort(sorted.begin(), sorted.end());
            int at = 0;
            while (orders[i][at] != sorted[0]) ++at;
            VertexId after = orders[i][(at + 1) % 3];
            out |= (after == sorted[1] ? 0 : 1) << i;
        }
        return out;
    }

    K4Rotation mirrored() const {
        K4Rotation r = *this;
        for (auto& ord : r.orders) std::swap(ord[1], ord[2]);
        return r;
    }
};

namespace detail {

struct K4TableEntry {
    bool crossing = false;
    int pairing = -1;  // 0:{0,1}x{2,3}  1:{0,2}x{1,3}  2:{0,3}x{1,2}
    CrossingSign sign = CrossingSign::LeftToRight;  // for min->max directions
};

inline std::pair<EdgeId, EdgeId> pairing_edges(int pairing) {
    static const int tab[3][4] = {{1, 2, 3, 4}, {1, 3, 2, 4}, {1, 4, 2, 3}};
    return {EdgeId(tab[pairing][0], tab[pairing][1]), EdgeId(tab[pairing][2], tab[pairing][3])};
}

// Rotation rows on labels 1..4 encoded by the 4 bits.
inline std::vector<std::vector<VertexId>> k4_rows_from_bits(int bits) {
    std::vector<std::vector<VertexId>> rows;
    for (int i = 0; i < 4; ++i) {
        std::vector<VertexId> others;
        for (int j = 1; j <= 4; ++j)
            if (j != i + 1) others.push_back(j);
        if (bits >> i & 1) std::swap(others[1], others[2]);
        rows.push_back(others);
    }
    return rows;
}

inline const std::array<K4TableEntry, 16>& k4_table() {
    static const std::array<K4TableEntry, 16> table = [] {
        std::array<K4TableEntry, 16> out{};
        for (int bits = 0; bits < 16; ++bits) {
            auto rows = k4_rows_from_bits(bits);
            MapBuildInput in;
            for (int v = 1; v <= 4; ++v) {
                std::vector<EdgeId> rot;
                for (VertexId w : rows[v - 1]) rot.emplace_back(v, w);
                in.vertex_rotations.emplace_back(v, rot);
                for (VertexId w : rows[v - 1]) in.crossings_along[EdgeId(v, w)];
            }
            if (euler_characteristic(build_planarized_map(in)) == 2) {
                out[bits].crossing = false;
                continue;
            }
            int found = 0;
            for (int pairing = 0; pairing < 3; ++pairing) {
                auto [e, f] = pairing_edges(pairing);
                for (CrossingSign sign :
                     {CrossingSign::LeftToRight, CrossingSign::RightToLeft}) {
                    MapBuildInput cand = in;
                    cand.crossings_along[e] = {f};
                    cand.crossings_along[f] = {e};
                    cand.signs[EdgePair(e, f)] = sign;
                    if (euler_characteristic(build_planarized_map(cand)) == 2) {
                        out[bits] = {true, pairing, sign};
                        ++found;
                    }
                }
            }
            require(found == 1, "K4 system ", bits, " admits ", found,
                    " spherical planarizations, expected exactly 1");
        }
        return out;
    }();
    return table;
}

}  // namespace detail

// The unique pair of edges that cross in every drawing realizing r, or
// nothing when r embeds K4 in the sphere.
inline std::optional<EdgePair> k4_crossing(const K4Rotation& r) {
    const auto& entry = detail::k4_table()[r.bits()];
    if (!entry.crossing) return std::nullopt;
    auto [e, f] = detail::pairing_edges(entry.pairing);
    EdgeId re(r.labels[e.u - 1], r.labels[e.v - 1]);
    EdgeId rf(r.labels[f.u - 1], r.labels[f.v - 1]);
    return EdgePair(re, rf);
}

// All crossing pairs forced by the scheme (union over induced K4s).
inline std::set<EdgePair> crossing_set_of(const RotationScheme& s) {
    std::set<EdgePair> out;
    int n = s.n();
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d) {
                    auto cr = k4_crossing(K4Rotation::from_scheme(s, {a, b, c, d}));
                    if (cr) out.insert(*cr);
                }
    return out;
}

struct DirectedEdge {
    VertexId tail = 0;
    VertexId head = 0;
    EdgeId undirected() const { return EdgeId(tail, head); }
    bool canonical() const { return tail < head; }
};

// Sign of the crossing of f across directed e, as forced by the scheme.
inline CrossingSign crossing_sign(const RotationScheme& s, DirectedEdge e, DirectedEdge f) {
    EdgeId eu = e.undirected(), fu = f.undirected();
    require(!eu.adjacent(fu), "crossing_sign needs disjoint edges, got ", to_string(eu), " ",
            to_string(fu));
    K4Rotation r = K4Rotation::from_scheme(s, {eu.u, eu.v, fu.u, fu.v});
    const auto& entry = detail::k4_table()[r.bits()];
    require(entry.crossing, "edges ", to_string(eu), " ", to_string(fu),
            " do not cross under this scheme");
    auto [ce, cf] = detail::pairing_edges(entry.pairing);
    EdgeId te(r.labels[ce.u - 1], r.labels[ce.v - 1]);
    require(EdgePair(te, EdgeId(r.labels[cf.u - 1], r.labels[cf.v - 1])) == EdgePair(eu, fu),
            "edges ", to_string(eu), " ", to_string(fu), " do not form the crossing pair");
    // entry.sign is for min->max on both; table pair order is (ce, cf) with
    // ce containing the smallest label, so align roles first.
    CrossingSign sign = entry.sign;
    // stored sign is "cf crosses ce"; if the caller follows the other curve,
    // the roles swap and the sense flips (f crossing e left-to-right means e
    // crosses f right-to-left)
    if (te != eu) sign = flipped(sign);
    if (!e.canonical()) sign = flipped(sign);
    if (!f.canonical()) sign = flipped(sign);
    return sign;
}

enum class TriangleSide { Left, Right };  // relative to the directed cycle (u,v,w)

struct TriangleSideReport {
    TriangleSide side = TriangleSide::Left;
    std::optional<EdgeId> minority_edge;  // the one of xu, xv, xw departing the other way
    std::optional<EdgeId> crossed_edge;   // the triangle edge the minority edge crosses
};

/*
 * Side of the directed 3-cycle (u,v,w) containing x, by the majority rule:
 * at each corner the rotation tells whether the edge toward x departs into
 * the left side of the cycle; at least two of the three agree and the
 * majority wins.  A 2-1 split names the minority edge, which crosses the
 * opposite side of the triangle.
 */
inline TriangleSideReport triangle_side(const RotationScheme& s, VertexId u, VertexId v,
                                        VertexId w, VertexId x) {
    require(u != v && u != w && u != x && v != w && v != x && w != x,
            "triangle_side needs four distinct vertices");
    auto departs_left = [&](VertexId corner, VertexId succ, VertexId pred) {
        // true if x lies strictly between succ and pred in ccw order at corner
        const auto& row = s.at(corner);
        std::size_t start = 0;
        while (row[start] != succ) ++start;
        for (std::size_t k = 1; k < row.size(); ++k) {
            VertexId cur = row[(start + k) % row.size()];
            if (cur == pred) return false;
            if (cur == x) return true;
        }
        fail("rotation at ", corner, " missing ", pred);
    };
    bool bu = departs_left(u, v, w);
    bool bv = departs_left(v, w, u);
    bool bw = departs_left(w, u, v);
    int lefts = int(bu) + int(bv) + int(bw);
    TriangleSideReport rep;
    rep.side = lefts >= 2 ? TriangleSide::Left : TriangleSide::Right;
    if (lefts != 0 && lefts != 3) {
        bool majority_left = lefts >= 2;
        VertexId dissent = bu != majority_left ? u : (bv != majority_left ? v : w);
        rep.minority_edge = EdgeId(x, dissent);
        VertexId a = dissent == u ? v : u;
        VertexId b = dissent == w ? v : w;
        rep.crossed_edge = EdgeId(a, b);
    }
    return rep;
}

}  // namespace gooddraw

#endif  // GOODDRAW_K4_HPP
