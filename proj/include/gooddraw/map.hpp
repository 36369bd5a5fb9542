#ifndef GOODDRAW_MAP_HPP
#define GOODDRAW_MAP_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gooddraw/base.hpp"

namespace gooddraw {

/*
 * Planarized combinatorial map of a set of curves on the sphere.
 *
 * Every curve is a simple arc between two labeled vertices; where two curves
 * cross, a degree-4 crossing node is inserted.  The map is stored as darts:
 *
 *   origin  node the dart leaves from
 *   twin    same segment traversed the other way
 *   next    successor in the counterclockwise rotation at origin
 *   owner   the curve the segment belongs to
 *
 * With counterclockwise rotations, next[twin[d]] walks the face on the left
 * of d; its orbits are the faces.  V - E + F = 2 iff the map is spherical.
 */
struct PlanarMap {
    struct Dart {
        int origin = -1;
        int twin = -1;
        int next = -1;
        int prev = -1;
        EdgeId owner;
    };

    enum class NodeKind { Vertex, Crossing };

    struct Node {
        NodeKind kind = NodeKind::Vertex;
        VertexId label = 0;  // vertex label, if kind == Vertex
        EdgePair pair;       // crossing pair, if kind == Crossing
        int first_dart = -1; // crossings: 4 darts in role order (see below)
        int degree = 0;
    };

    std::vector<Dart> darts;
    std::vector<Node> nodes;
    std::map<VertexId, int> vertex_node;
    std::map<EdgePair, int> crossing_node;

    int dart_count() const { return static_cast<int>(darts.size()); }
    int node_count() const { return static_cast<int>(nodes.size()); }
    int segment_count() const { return dart_count() / 2; }

    bool has_crossing(const EdgePair& p) const { return crossing_node.count(p) != 0; }

    int node_of_vertex(VertexId v) const {
        auto it = vertex_node.find(v);
        require(it != vertex_node.end(), "no vertex ", v, " in map");
        return it->second;
    }
    int node_of_crossing(const EdgePair& p) const {
        auto it = crossing_node.find(p);
        require(it != crossing_node.end(), "no crossing ", to_string(p), " in map");
        return it->second;
    }

    // Crossing darts are stored in role order: owner a toward a.u, a toward
    // a.v, b toward b.u, b toward b.v (pair a < b).  "Toward" means the twin
    // chain from that dart eventually reaches the named endpoint.
    int crossing_dart(int node, const EdgeId& owner, VertexId toward) const {
        const Node& nd = nodes[node];
        require(nd.kind == NodeKind::Crossing, "node is not a crossing");
        int base = nd.first_dart;
        if (owner == nd.pair.a) return toward == owner.u ? base : base + 1;
        require(owner == nd.pair.b, "edge ", to_string(owner), " does not own crossing");
        return toward == owner.u ? base + 2 : base + 3;
    }

    int dart_at_vertex(VertexId v, const EdgeId& owner) const {
        int node = node_of_vertex(v);
        int d = nodes[node].first_dart;
        for (int i = 0; i < nodes[node].degree; ++i) {
            if (darts[d].owner == owner) return d;
            d = darts[d].next;
        }
        fail("vertex ", v, " has no dart owned by ", to_string(owner));
    }

    // Walks curve e from endpoint e.u to e.v; returns the forward darts of
    // its segments in order (one per segment).
    std::vector<int> walk_curve(const EdgeId& e) const {
        std::vector<int> out;
        int d = dart_at_vertex(e.u, e);
        while (true) {
            out.push_back(d);
            int t = darts[d].twin;
            int at = darts[t].origin;
            const Node& nd = nodes[at];
            if (nd.kind == NodeKind::Vertex) {
                require(nd.label == e.v, "curve ", to_string(e), " ended at wrong vertex ",
                        nd.label);
                break;
            }
            // continue through the degree-4 node on the same curve
            int cont = crossing_dart(at, e, e.v);
            require(cont != t, "curve ", to_string(e), " u-turn at crossing");
            d = cont;
        }
        return out;
    }

    // Crossing nodes along curve e in traversal order from e.u.
    std::vector<int> crossings_along(const EdgeId& e) const {
        std::vector<int> out;
        auto ds = walk_curve(e);
        for (std::size_t i = 0; i + 1 < ds.size(); ++i) out.push_back(darts[darts[ds[i]].twin].origin);
        return out;
    }
};

// Faces of a map: orbit partition of next[twin[d]] (face lies left of each
// of its darts).
struct Faces {
    std::vector<int> dart_face;            // dart -> face index
    std::vector<std::vector<int>> cycles;  // face -> darts in walk order

    int count() const { return static_cast<int>(cycles.size()); }
};

inline Faces trace_faces(const PlanarMap& m) {
    Faces f;
    f.dart_face.assign(m.dart_count(), -1);
    for (int d0 = 0; d0 < m.dart_count(); ++d0) {
        if (f.dart_face[d0] != -1) continue;
        int id = f.count();
        f.cycles.emplace_back();
        int d = d0;
        do {
            require(f.dart_face[d] == -1, "face tracing revisited dart ", d);
            f.dart_face[d] = id;
            f.cycles.back().push_back(d);
            d = m.darts[m.darts[d].twin].next;
        } while (d != d0);
    }
    return f;
}

inline int euler_characteristic(const PlanarMap& m) {
    return m.node_count() - m.segment_count() + trace_faces(m).count();
}

// Traversal sense of a crossing of two directed curves: following e in its
// given direction, does f pass across it left-to-right or right-to-left?
// Flipping the direction of exactly one curve flips the sign.
enum class CrossingSign { LeftToRight, RightToLeft };

inline CrossingSign flipped(CrossingSign s) {
    return s == CrossingSign::LeftToRight ? CrossingSign::RightToLeft
                                          : CrossingSign::LeftToRight;
}

/*
 * Input for the planarized-map builder.
 *
 *   vertex_rotations  per vertex, the ccw list of incident curves
 *   crossings_along   per curve, the other curves crossed in order from the
 *                     curve's smaller endpoint
 *   signs             per crossing pair, the sign for the canonical
 *                     directions (both curves traversed smaller -> larger)
 */
struct MapBuildInput {
    std::vector<std::pair<VertexId, std::vector<EdgeId>>> vertex_rotations;
    std::map<EdgeId, std::vector<EdgeId>> crossings_along;
    std::map<EdgePair, CrossingSign> signs;
};

inline PlanarMap build_planarized_map(const MapBuildInput& in) {
    PlanarMap m;

    std::map<EdgeId, int> curve_seen;  // how many endpoints listed the curve
    for (const auto& [v, rot] : in.vertex_rotations) {
        require(!m.vertex_node.count(v), "vertex ", v, " listed twice");
        PlanarMap::Node node;
        node.kind = PlanarMap::NodeKind::Vertex;
        node.label = v;
        node.degree = static_cast<int>(rot.size());
        node.first_dart = m.dart_count();
        int nid = m.node_count();
        m.vertex_node[v] = nid;

        int base = m.dart_count();
        for (int i = 0; i < node.degree; ++i) {
            const EdgeId& e = rot[i];
            require(e.has_endpoint(v), "curve ", to_string(e), " in rotation at ", v,
                    " is not incident");
            curve_seen[e] += 1;
            PlanarMap::Dart d;
            d.origin = nid;
            d.owner = e;
            d.next = base + (i + 1) % node.degree;
            d.prev = base + (i + node.degree - 1) % node.degree;
            m.darts.push_back(d);
        }
        m.nodes.push_back(node);
    }

    // symmetry and coherence of the crossing lists
    for (const auto& [e, list] : in.crossings_along) {
        require(curve_seen[e] == 2, "curve ", to_string(e),
                " must appear in both endpoint rotations");
        for (const EdgeId& f : list) {
            require(!e.adjacent(f), "adjacent edges listed as crossing: ", to_string(e), " ",
                    to_string(f));
            auto it = in.crossings_along.find(f);
            require(it != in.crossings_along.end(), "asymmetric crossing data: ", to_string(f),
                    " missing");
            int mentions = static_cast<int>(std::count(it->second.begin(), it->second.end(), e));
            require(mentions == 1, "asymmetric crossing data: ", to_string(e), " lists ",
                    to_string(f), " but is listed ", mentions, " times back");
            int forward = static_cast<int>(std::count(list.begin(), list.end(), f));
            require(forward == 1, "curve ", to_string(e), " lists ", to_string(f), " ", forward,
                    " times");
        }
    }
    for (const auto& [e, cnt] : curve_seen) {
        require(cnt == 2, "curve ", to_string(e), " appears in ", cnt,
                " rotations, expected 2");
        require(in.crossings_along.count(e), "curve ", to_string(e),
                " has no crossing list entry");
    }

    // crossing nodes, 4 darts each in role order, rotation wired by sign
    for (const auto& [e, list] : in.crossings_along) {
        for (const EdgeId& f : list) {
            EdgePair key(e, f);
            if (m.crossing_node.count(key)) continue;
            auto sit = in.signs.find(key);
            require(sit != in.signs.end(), "no crossing sign for ", to_string(key));
            CrossingSign sign = sit->second;

            PlanarMap::Node node;
            node.kind = PlanarMap::NodeKind::Crossing;
            node.pair = key;
            node.degree = 4;
            node.first_dart = m.dart_count();
            int nid = m.node_count();
            m.crossing_node[key] = nid;

            int base = m.dart_count();
            for (int i = 0; i < 4; ++i) {
                PlanarMap::Dart d;
                d.origin = nid;
                d.owner = i < 2 ? key.a : key.b;
                m.darts.push_back(d);
            }
            // roles: base+0 = a toward a.u, +1 = a toward a.v,
            //        +2 = b toward b.u, +3 = b toward b.v.
            // ccw rotation: LeftToRight  (a.v, b.u, a.u, b.v)
            //               RightToLeft  (a.v, b.v, a.u, b.u)
            int cycle[4];
            if (sign == CrossingSign::LeftToRight) {
                cycle[0] = base + 1; cycle[1] = base + 2; cycle[2] = base + 0; cycle[3] = base + 3;
            } else {
                cycle[0] = base + 1; cycle[1] = base + 3; cycle[2] = base + 0; cycle[3] = base + 2;
            }
            for (int i = 0; i < 4; ++i) {
                m.darts[cycle[i]].next = cycle[(i + 1) % 4];
                m.darts[cycle[(i + 1) % 4]].prev = cycle[i];
            }
            m.nodes.push_back(node);
        }
    }

    // twins: stitch each curve's chain of segments from u to v
    for (const auto& [e, list] : in.crossings_along) {
        std::vector<std::pair<int, int>> chain;  // (toward-u dart, toward-v dart) per node
        chain.emplace_back(-1, m.dart_at_vertex(e.u, e));
        for (const EdgeId& f : list) {
            int x = m.node_of_crossing(EdgePair(e, f));
            chain.emplace_back(m.crossing_dart(x, e, e.u), m.crossing_dart(x, e, e.v));
        }
        chain.emplace_back(m.dart_at_vertex(e.v, e), -1);
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            int d = chain[i].second;
            int t = chain[i + 1].first;
            m.darts[d].twin = t;
            m.darts[t].twin = d;
        }
    }

    for (int d = 0; d < m.dart_count(); ++d)
        require(m.darts[d].twin != -1 && m.darts[d].next != -1, "dart ", d, " left unwired");
    return m;
}

}  // namespace gooddraw

#endif  // GOODDRAW_MAP_HPP
