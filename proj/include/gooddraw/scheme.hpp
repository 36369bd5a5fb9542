#ifndef GOODDRAW_SCHEME_HPP
#define GOODDRAW_SCHEME_HPP

#include <algorithm>
#include <vector>

#include "gooddraw/base.hpp"

namespace gooddraw {

/*
 * A rotation scheme assigns to each vertex k of K_n the counterclockwise
 * cyclic order of the other n-1 vertices around it.  Sequences compare as
 * cyclic words: equal up to rotation, never up to reflection (the reflection
 * is the mirror drawing).
 */
class RotationScheme {
public:
    RotationScheme() = default;

    explicit RotationScheme(std::vector<std::vector<VertexId>> rows) : rows_(std::move(rows)) {
        int n = static_cast<int>(rows_.size());
        for (int k = 1; k <= n; ++k) {
            auto& row = rows_[k - 1];
            require(static_cast<int>(row.size()) == n - 1,
                    "rotation at vertex ", k, " must list ", n - 1, " vertices");
            std::vector<bool> seen(n + 1, false);
            for (VertexId w : row) {
                require(w >= 1 && w <= n && w != k, "rotation at vertex ", k,
                        " contains invalid entry ", w);
                require(!seen[w], "rotation at vertex ", k, " repeats ", w);
                seen[w] = true;
            }
            canonicalize(row);
        }
    }

    int n() const { return static_cast<int>(rows_.size()); }

    // Counterclockwise order at vertex k, rotated so the smallest label leads.
    const std::vector<VertexId>& at(VertexId k) const {
        require(k >= 1 && k <= n(), "vertex ", k, " out of range 1..", n());
        return rows_[k - 1];
    }

    // Entry following w in the cyclic order at k.
    VertexId successor(VertexId k, VertexId w) const {
        const auto& row = at(k);
        for (std::size_t i = 0; i < row.size(); ++i)
            if (row[i] == w) return row[(i + 1) % row.size()];
        fail("vertex ", w, " does not appear in rotation at ", k);
    }

    // Cyclic order at k restricted to a subset, preserving order.
    std::vector<VertexId> restrict_at(VertexId k, const std::vector<VertexId>& subset) const {
        const auto& row = at(k);
        std::vector<VertexId> out;
        for (VertexId w : row)
            if (std::find(subset.begin(), subset.end(), w) != subset.end()) out.push_back(w);
        return out;
    }

    // Scheme induced on vertices 1..m (requires m <= n).
    RotationScheme prefix(int m) const {
        require(m >= 1 && m <= n(), "prefix size out of range");
        std::vector<std::vector<VertexId>> rows;
        rows.reserve(m);
        for (VertexId k = 1; k <= m; ++k) {
            std::vector<VertexId> row;
            for (VertexId w : at(k))
                if (w <= m) row.push_back(w);
            rows.push_back(std::move(row));
        }
        return RotationScheme(std::move(rows));
    }

    // Swaps the cyclically adjacent entries at positions pos and pos+1 (mod
    // n-1) of the rotation at k.  Used by the hill-climbing search.
    void swap_adjacent(VertexId k, int pos) {
        auto& row = rows_[k - 1];
        int len = static_cast<int>(row.size());
        require(len >= 2, "rotation too short to swap");
        require(pos >= 0 && pos < len, "swap position out of range");
        std::swap(row[pos], row[(pos + 1) % len]);
        canonicalize(row);
    }

    friend bool operator==(const RotationScheme&, const RotationScheme&) = default;

private:
    static void canonicalize(std::vector<VertexId>& row) {
        if (row.empty()) return;
        auto it = std::min_element(row.begin(), row.end());
        std::rotate(row.begin(), it, row.end());
    }

    std::vector<std::vector<VertexId>> rows_;
};

// Scheme of the straight-line drawing with vertices 1..n in convex position,
// labeled counterclockwise: rho(k) = (k+1, k+2, ..., k-1).
inline RotationScheme convex_scheme(int n) {
    require(n >= 3, "convex scheme needs n >= 3, got ", n);
    std::vector<std::vector<VertexId>> rows(n);
    for (VertexId k = 1; k <= n; ++k) {
        for (int step = 1; step < n; ++step) {
            VertexId w = (k - 1 + step) % n + 1;
            rows[k - 1].push_back(w);
        }
    }
    return RotationScheme(std::move(rows));
}

}  // namespace gooddraw

#endif  // GOODDRAW_SCHEME_HPP
