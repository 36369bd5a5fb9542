#ifndef GOODDRAW_BASE_HPP
#define GOODDRAW_BASE_HPP

#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace gooddraw {

// Vertices are labeled 1..n.
using VertexId = int;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
inline void format_into(std::ostringstream&) {}
template <typename T, typename... Rest>
void format_into(std::ostringstream& oss, T&& head, Rest&&... rest) {
    oss << head;
    format_into(oss, std::forward<Rest>(rest)...);
}
}  // namespace detail

template <typename... Args>
[[noreturn]] void fail(Args&&... args) {
    std::ostringstream oss;
    detail::format_into(oss, std::forward<Args>(args)...);
    throw Error(oss.str());
}

template <typename... Args>
void require(bool cond, Args&&... args) {
    if (!cond) fail(std::forward<Args>(args)...);
}

// Unordered pair of distinct vertices, stored with u < v.
struct EdgeId {
    VertexId u = 0;
    VertexId v = 0;

    EdgeId() = default;
    EdgeId(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {
        require(a != b, "EdgeId endpoints must be distinct, got {", a, ",", b, "}");
    }

    VertexId other(VertexId w) const {
        require(w == u || w == v, "vertex ", w, " not an endpoint of ", u, "-", v);
        return w == u ? v : u;
    }
    bool has_endpoint(VertexId w) const { return w == u || w == v; }
    bool adjacent(const EdgeId& o) const {
        return o.has_endpoint(u) || o.has_endpoint(v);
    }

    friend bool operator==(const EdgeId&, const EdgeId&) = default;
    friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

inline std::string to_string(const EdgeId& e) {
    return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

// Canonical key for an unordered pair of disjoint edges (a crossing).
struct EdgePair {
    EdgeId a, b;  // a < b
    EdgePair() = default;
    EdgePair(EdgeId x, EdgeId y) : a(x < y ? x : y), b(x < y ? y : x) {}
    friend bool operator==(const EdgePair&, const EdgePair&) = default;
    friend auto operator<=>(const EdgePair&, const EdgePair&) = default;
};

inline std::string to_string(const EdgePair& p) {
    return to_string(p.a) + "x" + to_string(p.b);
}

// Exact comparison of fractions n1/d1 vs n2/d2 (d != 0), int64 inputs small
// enough that cross products fit.
inline int compare_fractions(std::int64_t n1, std::int64_t d1, std::int64_t n2, std::int64_t d2) {
    if (d1 < 0) { n1 = -n1; d1 = -d1; }
    if (d2 < 0) { n2 = -n2; d2 = -d2; }
    std::int64_t lhs = n1 * d2;
    std::int64_t rhs = n2 * d1;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

}  // namespace gooddraw

template <>
struct std::hash<gooddraw::EdgeId> {
    std::size_t operator()(const gooddraw::EdgeId& e) const noexcept {
        return std::hash<long long>()((static_cast<long long>(e.u) << 20) ^ e.v);
    }
};

#endif  // GOODDRAW_BASE_HPP
