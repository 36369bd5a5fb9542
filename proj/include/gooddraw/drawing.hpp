#ifndef GOODDRAW_DRAWING_HPP
#define GOODDRAW_DRAWING_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "gooddraw/k4.hpp"
#include "gooddraw/map.hpp"
#include "gooddraw/scheme.hpp"

namespace gooddraw {

/*
 * A good drawing of K_n on the sphere, held as its planarized map: the n
 * real vertices plus a degree-4 node at every crossing point.
 */
struct GoodDrawing {
    int n = 0;
    PlanarMap map;

    std::vector<EdgeId> edges() const {
        std::vector<EdgeId> out;
        for (VertexId i = 1; i <= n; ++i)
            for (VertexId j = i + 1; j <= n; ++j) out.emplace_back(i, j);
        return out;
    }

    std::set<EdgePair> crossing_pairs() const {
        std::set<EdgePair> out;
        for (const auto& [pair, node] : map.crossing_node) out.insert(pair);
        return out;
    }

    int crossing_count() const { return static_cast<int>(map.crossing_node.size()); }
};

/*
 * The canonical, equivalence-complete description of a good drawing: the
 * rotation scheme plus, per edge, the ordered list of edges crossed while
 * traversing from the smaller endpoint.  Two drawings have the same
 * CrossingData exactly when an orientation-preserving homeomorphism of the
 * sphere maps one onto the other, label for label.
 */
struct CrossingData {
    int n = 0;
    RotationScheme scheme;
    std::map<EdgeId, std::vector<EdgeId>> lists;

    const std::vector<EdgeId>& list_of(const EdgeId& e) const {
        auto it = lists.find(e);
        require(it != lists.end(), "no crossing list for edge ", to_string(e));
        return it->second;
    }

    friend bool operator==(const CrossingData&, const CrossingData&) = default;
};

struct Violation {
    std::string code;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    bool has(const std::string& code) const {
        for (const auto& v : violations)
            if (v.code == code) return true;
        return false;
    }
    std::string summary() const {
        std::string out;
        for (const auto& v : violations) out += v.code + ": " + v.message + "\n";
        return out;
    }
};

// Checks every good-drawing invariant; all violations are reported, none
// aborts the scan.
inline ValidationReport validate(const GoodDrawing& d) {
    ValidationReport rep;
    auto add = [&](const std::string& code, const std::string& msg) {
        rep.violations.push_back({code, msg});
    };
    const PlanarMap& m = d.map;

    if (d.n < 1) add("bad-n", "vertex count must be positive");

    // dart-level wiring
    bool wiring_ok = true;
    for (int i = 0; i < m.dart_count(); ++i) {
        const auto& dart = m.darts[i];
        if (dart.twin < 0 || dart.twin >= m.dart_count() || m.darts[dart.twin].twin != i ||
            dart.twin == i) {
            add("twin", "dart " + std::to_string(i) + " has broken reversal partner");
            wiring_ok = false;
            continue;
        }
        if (m.darts[dart.twin].owner != dart.owner) {
            add("twin-owner", "segment of dart " + std::to_string(i) + " changes owner");
            wiring_ok = false;
        }
        if (dart.next < 0 || dart.next >= m.dart_count() ||
            m.darts[dart.next].origin != dart.origin || m.darts[dart.next].prev != i) {
            add("rotation", "dart " + std::to_string(i) + " has broken rotation link");
            wiring_ok = false;
        }
    }
    if (!wiring_ok) return rep;  // deeper checks need sane wiring

    // node degrees and rotation closure
    std::vector<int> seen_degree(m.node_count(), 0);
    for (int i = 0; i < m.dart_count(); ++i) seen_degree[m.darts[i].origin]++;
    for (int v = 0; v < m.node_count(); ++v) {
        const auto& node = m.nodes[v];
        if (seen_degree[v] != node.degree)
            add("degree", "node " + std::to_string(v) + " lists degree " +
                              std::to_string(node.degree) + " but has " +
                              std::to_string(seen_degree[v]) + " darts");
        int d = node.first_dart;
        int steps = 0;
        do {
            if (m.darts[d].origin != v) {
                add("rotation", "rotation at node " + std::to_string(v) + " leaves the node");
                break;
            }
            d = m.darts[d].next;
            if (++steps > node.degree) {
                add("rotation", "rotation at node " + std::to_string(v) + " does not close");
                break;
            }
        } while (d != node.first_dart);
    }

    // vertices: one dart per incident edge
    if (static_cast<int>(m.vertex_node.size()) != d.n)
        add("vertices", "expected " + std::to_string(d.n) + " vertices, found " +
                            std::to_string(m.vertex_node.size()));
    for (const auto& [label, nid] : m.vertex_node) {
        if (label < 1 || label > d.n) {
            add("vertex-label", "vertex label " + std::to_string(label) + " out of range");
            continue;
        }
        const auto& node = m.nodes[nid];
        if (node.degree != d.n - 1)
            add("vertex-degree", "vertex " + std::to_string(label) + " has degree " +
                                     std::to_string(node.degree));
        std::set<VertexId> others;
        int dart = node.first_dart;
        for (int i = 0; i < node.degree; ++i, dart = m.darts[dart].next) {
            const EdgeId& e = m.darts[dart].owner;
            if (!e.has_endpoint(label))
                add("vertex-owner", "vertex " + std::to_string(label) + " carries foreign edge " +
                                        to_string(e));
            else
                others.insert(e.other(label));
        }
        if (static_cast<int>(others.size()) != node.degree)
            add("vertex-owner", "vertex " + std::to_string(label) + " repeats an incident edge");
    }

    // crossings: degree 4, two distinct disjoint owners, alternation
    for (const auto& [pair, nid] : m.crossing_node) {
        const auto& node = m.nodes[nid];
        if (node.degree != 4) {
            add("crossing-degree", "crossing " + to_string(pair) + " has degree " +
                                       std::to_string(node.degree));
            continue;
        }
        if (pair.a.adjacent(pair.b))
            add("adjacent-cross", "adjacent edges cross: " + to_string(pair));
        int dart = node.first_dart;
        for (int i = 0; i < 4; ++i, dart = m.darts[dart].next) {
            const EdgeId& own = m.darts[dart].owner;
            const EdgeId& alt = m.darts[m.darts[dart].next].owner;
            if (own != pair.a && own != pair.b)
                add("crossing-owner", "crossing " + to_string(pair) + " carries foreign edge " +
                                          to_string(own));
            if (own == alt)
                add("crossing-alternation",
                    "owners do not alternate at crossing " + to_string(pair));
        }
    }

    // each edge runs as a single chain from u to v through its crossings
    std::set<EdgePair> walked_pairs;
    for (const EdgeId& e : d.edges()) {
        try {
            auto chain = d.map.walk_curve(e);
            for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
                int node = m.darts[m.darts[chain[i]].twin].origin;
                walked_pairs.insert(m.nodes[node].pair);
            }
        } catch (const Error& err) {
            add("edge-chain", std::string("edge ") + to_string(e) + ": " + err.what());
        }
    }
    if (rep.ok() && walked_pairs != d.crossing_pairs())
        add("edge-chain", "crossing nodes unreachable from edge walks");

    // goodness: each unordered pair of edges crosses at most once (the map
    // can only store one node per pair; a second meeting would break the
    // edge chains above, so reaching here with clean chains implies <= 1)

    // sphere: V - E + F = 2
    if (rep.ok()) {
        int euler = euler_characteristic(m);
        if (euler != 2)
            add("euler", "V - E + F = " + std::to_string(euler) + ", expected 2");
    }
    return rep;
}

inline RotationScheme rotation_scheme_of(const GoodDrawing& d) {
    std::vector<std::vector<VertexId>> rows(d.n);
    for (VertexId k = 1; k <= d.n; ++k) {
        int nid = d.map.node_of_vertex(k);
        const auto& node = d.map.nodes[nid];
        int dart = node.first_dart;
        for (int i = 0; i < node.degree; ++i, dart = d.map.darts[dart].next)
            rows[k - 1].push_back(d.map.darts[dart].owner.other(k));
    }
    return RotationScheme(std::move(rows));
}

inline CrossingData crossing_data_of(const GoodDrawing& d) {
    CrossingData out;
    out.n = d.n;
    out.scheme = rotation_scheme_of(d);
    for (const EdgeId& e : d.edges()) {
        auto& list = out.lists[e];
        for (int node : d.map.crossings_along(e))
            list.push_back(d.map.nodes[node].pair.a == e ? d.map.nodes[node].pair.b
                                                         : d.map.nodes[node].pair.a);
    }
    return out;
}

/*
 * Rebuilds the unique drawing described by consistent crossing data.  The
 * crossing signs are not part of the data: they are forced by the scheme and
 * recomputed here.  Fails when the lists are asymmetric, disagree with the
 * scheme-inferred crossing set, or describe a non-spherical map.
 */
inline GoodDrawing from_crossing_data(const CrossingData& c) {
    require(c.n >= 1, "vertex count must be positive");
    require(c.scheme.n() == c.n, "scheme size ", c.scheme.n(), " != n = ", c.n);

    std::set<EdgePair> listed;
    for (const auto& [e, list] : c.lists) {
        for (const EdgeId& f : list) {
            require(!e.adjacent(f), "adjacent edges listed as crossing: ", to_string(e), " ",
                    to_string(f));
            listed.insert(EdgePair(e, f));
        }
    }
    std::set<EdgePair> inferred = crossing_set_of(c.scheme);
    if (listed != inferred) {
        std::string diff;
        for (const auto& p : inferred)
            if (!listed.count(p)) diff += " missing " + to_string(p);
        for (const auto& p : listed)
            if (!inferred.count(p)) diff += " extra " + to_string(p);
        fail("crossing lists incompatible with scheme-inferred crossing set:", diff);
    }

    MapBuildInput in;
    for (VertexId k = 1; k <= c.n; ++k) {
        std::vector<EdgeId> rot;
        for (VertexId w : c.scheme.at(k)) rot.emplace_back(k, w);
        in.vertex_rotations.emplace_back(k, rot);
    }
    for (VertexId i = 1; i <= c.n; ++i)
        for (VertexId j = i + 1; j <= c.n; ++j) {
            EdgeId e(i, j);
            in.crossings_along[e] = c.list_of(e);
        }
    for (const EdgePair& p : inferred)
        in.signs[p] = crossing_sign(c.scheme, {p.a.u, p.a.v}, {p.b.u, p.b.v});

    GoodDrawing d;
    d.n = c.n;
    d.map = build_planarized_map(in);
    int euler = euler_characteristic(d.map);
    require(euler == 2, "crossing data does not describe a spherical drawing (V-E+F = ", euler,
            ")");
    return d;
}

// Lemma-3 equivalence test: same rotation scheme and same per-edge crossing
// orders.  Orientation-reversing matches are deliberately not equivalent.
inline bool drawings_equivalent(const GoodDrawing& d1, const GoodDrawing& d2) {
    if (d1.n != d2.n) return false;
    return crossing_data_of(d1) == crossing_data_of(d2);
}

}  // namespace gooddraw

#endif  // GOODDRAW_DRAWING_HPP
