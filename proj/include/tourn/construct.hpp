#pragma once

// Named tournaments and the elementary transformations between the core types.

#include <string>
#include <utility>
#include <vector>

#include "digraph.hpp"
#include "rng.hpp"

namespace tourn {

/// T_n: arc(i, j) iff i < j.
inline Tournament make_transitive(int n) {
    if (n < 1) throw DomainError("transitive tournament needs n >= 1");
    return Tournament::from_predicate(n, [](int, int) { return true; });
}

/// C_n for odd n: arc(i, j) iff (j - i) mod n lies in {1, ..., (n-1)/2}.
inline Tournament make_circulant(int n) {
    if (n < 3 || n % 2 == 0) throw DomainError("circulant tournament needs odd n >= 3");
    const int half = (n - 1) / 2;
    return Tournament::from_predicate(n, [&](int i, int j) {
        int d = ((j - i) % n + n) % n;
        return d >= 1 && d <= half;
    });
}

/// T_5 with the arcs 2->5 and 1->4 reversed (1-based labels).
inline Tournament make_u5() {
    return Tournament::from_predicate(5, [](int i, int j) {
        return !((i == 1 && j == 4) || (i == 0 && j == 3));
    });
}

/// Delta_k: k directed triangles (a_i, b_i, c_i) = (3i, 3i+1, 3i+2), every arc
/// pointing from triangle i to triangle j when i < j.
inline Tournament make_delta(int k) {
    if (k < 1) throw DomainError("Delta_k needs k >= 1");
    return Tournament::from_predicate(3 * k, [](int i, int j) {
        if (i / 3 != j / 3) return i / 3 < j / 3;
        // inside a triangle: a->b, b->c, c->a
        return !(i % 3 == 0 && j % 3 == 2);
    });
}

/// X_h on positions x_1..x_h (0-based 0..h-1): x_{h-1} is joined to x_1..x_{h-2}
/// and x_{h-2} is joined to x_h.
inline UndirectedOrderedGraph make_xh_tree(int h) {
    if (h < 3) throw DomainError("X_h needs h >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i <= h - 3; ++i) e.emplace_back(i, h - 2);
    e.emplace_back(h - 3, h - 1);
    return {h, std::move(e)};
}

/// Positions p < q are joined iff H has the arc ord(q) -> ord(p).
inline UndirectedOrderedGraph back_edge_graph(const Tournament& h, const VertexOrdering& ord) {
    if (ord.size() != h.size()) throw DomainError("ordering size differs from tournament size");
    std::vector<std::pair<int, int>> e;
    for (int p = 0; p < h.size(); ++p)
        for (int q = p + 1; q < h.size(); ++q)
            if (h.arc(ord.at(q), ord.at(p))) e.emplace_back(p, q);
    return {h.size(), std::move(e)};
}

/// Adds the arc (j, i) for every pair (j, i) in `pairs`; each must reverse an
/// existing arc i -> j of `base`, which makes {i, j} bidirectional.
inline SemiCompleteDigraph add_back_arcs(const Tournament& base, const std::vector<std::pair<int, int>>& pairs) {
    ArcMatrix m = base.arcs();
    const int n = base.size();
    for (auto [from, to] : pairs) {
        if (from < 0 || to < 0 || from >= n || to >= n || from == to)
            throw DomainError("added arc has an invalid endpoint");
        if (m.arc(from, to))
            throw DomainError("arc (" + std::to_string(from + 1) + "," + std::to_string(to + 1) +
                              ") is already present");
        m.set(from, to);
    }
    return SemiCompleteDigraph(std::move(m));
}

/// Uniform labelled tournament: one stream bit per pair i < j in lexicographic
/// order, bit set means i -> j.
inline Tournament random_tournament(int n, std::uint64_t seed) {
    CounterRng rng(seed);
    return Tournament::from_predicate(n, [&](int, int) { return rng.bit(); });
}

/// Uniform ordered graph with exactly m edges (partial Fisher-Yates over the pairs).
inline UndirectedOrderedGraph random_ordered_graph(int n, int m, std::uint64_t seed) {
    std::vector<std::pair<int, int>> all;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
    if (m < 0 || m > static_cast<int>(all.size())) throw DomainError("edge count out of range");
    CounterRng rng(seed);
    for (int k = 0; k < m; ++k) {
        auto r = k + static_cast<int>(rng.below(all.size() - k));
        std::swap(all[k], all[r]);
    }
    all.resize(static_cast<std::size_t>(m));
    return {n, std::move(all)};
}

/// Each cell is 1 with probability `density`.
inline BinaryMatrix random_matrix(int rows, int cols, double density, std::uint64_t seed) {
    CounterRng rng(seed);
    BinaryMatrix a(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) a.set(r, c, rng.uniform() < density);
    return a;
}

/// T_n plus one bidirectional pair per edge of `g` (g's positions are T_n's vertices).
inline SemiCompleteDigraph transitive_plus(const UndirectedOrderedGraph& g) {
    ArcMatrix m = make_transitive(g.size()).arcs();
    for (auto [u, v] : g.edges()) m.set(v, u);
    return SemiCompleteDigraph(std::move(m));
}

}  // namespace tourn
