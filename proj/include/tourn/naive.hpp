#pragma once

// Definitional brute-force references. Each function enumerates the objects in
// the definition directly and shares no search code with the main library. They
// are exponential and meant for n <= 8 or so.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "digraph.hpp"

namespace tourn::naive {

namespace detail {

/// Calls f(subset) for every increasing k-subset of {0..n-1}; stops when f returns true.
template <class F>
bool for_each_subset(int n, int k, F&& f) {
    if (k > n || k < 0) return false;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        if (f(idx)) return true;
        int t = k - 1;
        while (t >= 0 && idx[t] == n - k + t) --t;
        if (t < 0) return false;
        ++idx[t];
        for (int u = t + 1; u < k; ++u) idx[u] = idx[u - 1] + 1;
    }
}

/// Calls f(order) for every permutation of {0..n-1}; stops when f returns true.
template <class F>
bool for_each_permutation(int n, F&& f) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        if (f(p)) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

inline bool acyclic(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x];
        return x;
    };
    for (auto [a, b] : edges) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
    }
    return true;
}

inline bool transitive_on(const ArcMatrix& g, const std::vector<int>& s) {
    for (int a : s)
        for (int b : s)
            for (int c : s)
                if (a != b && b != c && a != c && g.arc(a, b) && g.arc(b, c) && g.arc(c, a)) return false;
    return true;
}

inline std::vector<std::pair<int, int>> back_edges(const ArcMatrix& g, const std::vector<int>& order) {
    std::vector<std::pair<int, int>> out;
    const int n = static_cast<int>(order.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (g.arc(order[b], order[a])) out.emplace_back(order[a], order[b]);
    return out;
}

}  // namespace detail

/// Some increasing rows and columns of A cover every 1 of M.
inline bool contains_pattern(const BinaryMatrix& a, const BinaryMatrix& m) {
    return detail::for_each_subset(a.rows(), m.rows(), [&](const std::vector<int>& rows) {
        return detail::for_each_subset(a.cols(), m.cols(), [&](const std::vector<int>& cols) {
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j)
                    if (m.at(i, j) && !a.at(rows[i], cols[j])) return false;
            return true;
        });
    });
}

/// Some injective map sends every arc of H to an arc of G.
inline bool contains_subdigraph(const ArcMatrix& g, const Tournament& h) {
    const int k = h.size();
    return detail::for_each_subset(g.size(), k, [&](const std::vector<int>& s) {
        return detail::for_each_permutation(k, [&](const std::vector<int>& p) {
            for (int u = 0; u < k; ++u)
                for (int v = 0; v < k; ++v)
                    if (u != v && h.arc(u, v) && !g.arc(s[p[u]], s[p[v]])) return false;
            return true;
        });
    });
}

/// Copies of H in G counted as injective maps.
inline long long count_embeddings(const ArcMatrix& g, const Tournament& h) {
    const int k = h.size();
    long long count = 0;
    detail::for_each_subset(g.size(), k, [&](const std::vector<int>& s) {
        detail::for_each_permutation(k, [&](const std::vector<int>& p) {
            for (int u = 0; u < k; ++u)
                for (int v = 0; v < k; ++v)
                    if (u != v && h.arc(u, v) && !g.arc(s[p[u]], s[p[v]])) return false;
            ++count;
            return false;
        });
        return false;
    });
    return count;
}

inline bool is_transitive(const Tournament& h) {
    std::vector<int> all(static_cast<std::size_t>(h.size()));
    std::iota(all.begin(), all.end(), 0);
    return detail::transitive_on(h.arcs(), all);
}

/// Fewest back edges over all n! orderings.
inline int beta(const Tournament& h) {
    int best = std::numeric_limits<int>::max();
    detail::for_each_permutation(h.size(), [&](const std::vector<int>& p) {
        best = std::min(best, static_cast<int>(detail::back_edges(h.arcs(), p).size()));
        return false;
    });
    return best;
}

/// Fewest parts in a partition into transitive sets, over all k^n labelings.
inline int chromatic(const Tournament& h) {
    const int n = h.size();
    if (n == 0) return 0;
    for (int k = 1;; ++k) {
        std::vector<int> lab(static_cast<std::size_t>(n), 0);
        for (;;) {
            bool ok = true;
            for (int c = 0; c < k && ok; ++c) {
                std::vector<int> cls;
                for (int v = 0; v < n; ++v)
                    if (lab[v] == c) cls.push_back(v);
                ok = detail::transitive_on(h.arcs(), cls);
            }
            if (ok) return k;
            int t = 0;
            while (t < n && ++lab[t] == k) lab[t++] = 0;
            if (t == n) break;
        }
    }
}

/// Least class size over bipartitions into two transitive sets; empty if none.
inline std::optional<int> min_class(const Tournament& h) {
    const int n = h.size();
    std::optional<int> best;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        std::vector<int> a, b;
        for (int v = 0; v < n; ++v) ((m >> v) & 1U ? a : b).push_back(v);
        if (!detail::transitive_on(h.arcs(), a) || !detail::transitive_on(h.arcs(), b)) continue;
        int s = static_cast<int>(std::min(a.size(), b.size()));
        if (!best || s < *best) best = s;
    }
    return best;
}

/// Bipartition into transitive L and R with the R -> L arcs acyclic.
inline bool is_forest(const Tournament& h) {
    const int n = h.size();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        std::vector<int> l, r;
        for (int v = 0; v < n; ++v) ((m >> v) & 1U ? l : r).push_back(v);
        if (!detail::transitive_on(h.arcs(), l) || !detail::transitive_on(h.arcs(), r)) continue;
        std::vector<std::pair<int, int>> e;
        for (int x : r)
            for (int y : l)
                if (h.arc(x, y)) e.emplace_back(x, y);
        if (detail::acyclic(n, e)) return true;
    }
    return false;
}

/// Some ordering has an acyclic back-edge graph.
inline bool is_weak_forest(const Tournament& h) {
    return detail::for_each_permutation(h.size(), [&](const std::vector<int>& p) {
        return detail::acyclic(h.size(), detail::back_edges(h.arcs(), p));
    });
}

/// Not transitive, and some ordering has a back-edge graph whose edges share one
/// vertex.
inline bool is_star(const Tournament& h) {
    if (naive::is_transitive(h)) return false;
    return detail::for_each_permutation(h.size(), [&](const std::vector<int>& p) {
        auto e = detail::back_edges(h.arcs(), p);
        if (e.empty()) return false;
        for (int c : {e[0].first, e[0].second}) {
            bool all = true;
            for (auto [a, b] : e) all = all && (a == c || b == c);
            if (all) return true;
        }
        return false;
    });
}

/// Every subset S with 1 < |S| < n has an outside vertex seeing it non-uniformly.
inline bool is_prime(const Tournament& h) {
    const int n = h.size();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        const int k = std::popcount(m);
        if (k < 2 || k >= n) continue;
        bool homogeneous = true;
        for (int x = 0; x < n && homogeneous; ++x) {
            if ((m >> x) & 1U) continue;
            bool out = false, in = false;
            for (int v = 0; v < n; ++v)
                if ((m >> v) & 1U) (h.arc(x, v) ? out : in) = true;
            homogeneous = !(out && in);
        }
        if (homogeneous) return false;
    }
    return true;
}

/// Isomorphic to C_n (n odd, i beats i+1..i+(n-1)/2) or split into three parts
/// with transitive pairwise unions.
inline bool q5_member(const Tournament& h) {
    const int n = h.size();
    if (n % 2 == 1 && n >= 3) {
        const bool iso = detail::for_each_permutation(n, [&](const std::vector<int>& p) {
            for (int i = 0; i < n; ++i)
                for (int d = 1; d <= (n - 1) / 2; ++d)
                    if (!h.arc(p[i], p[(i + d) % n])) return false;
            return true;
        });
        if (iso) return true;
    }
    std::vector<int> lab(static_cast<std::size_t>(n), 0);
    for (;;) {
        bool ok = true;
        for (int a = 0; a < 3 && ok; ++a)
            for (int b = a + 1; b < 3 && ok; ++b) {
                std::vector<int> u;
                for (int v = 0; v < n; ++v)
                    if (lab[v] == a || lab[v] == b) u.push_back(v);
                ok = detail::transitive_on(h.arcs(), u);
            }
        if (ok) return true;
        int t = 0;
        while (t < n && ++lab[t] == 3) lab[t++] = 0;
        if (t == n) return false;
    }
}

/// 1 + most 1s in an n x n matrix avoiding M, over all 2^(n^2) matrices.
inline long long ex(int n, const BinaryMatrix& m) {
    const int cells = n * n;
    long long best = -1;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << cells); ++code) {
        const int ones = std::popcount(code);
        if (ones <= best) continue;
        BinaryMatrix a(n, n);
        for (int c = 0; c < cells; ++c) a.set(c / n, c % n, (code >> c) & 1U);
        if (!naive::contains_pattern(a, m)) best = ones;
    }
    return best + 1;
}

namespace detail {

/// Most bidirectional pairs over H-free augmentations of `base`; -1 if base contains H.
inline int best_augmentation(const Tournament& base, const Tournament& h) {
    const int n = base.size();
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const int np = static_cast<int>(pairs.size());
    int best = -1;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << np); ++m) {
        const int k = std::popcount(m);
        if (k <= best) continue;
        ArcMatrix g = base.arcs();
        for (int t = 0; t < np; ++t)
            if ((m >> t) & 1U) {
                g.set(pairs[t].first, pairs[t].second);
                g.set(pairs[t].second, pairs[t].first);
            }
        if (!naive::contains_subdigraph(g, h)) best = k;
    }
    return best;
}

}  // namespace detail

/// t(T_n, H) by enumerating every set of added back arcs.
inline long long t_transitive(int n, const Tournament& h) {
    Tournament tn = Tournament::from_predicate(n, [](int, int) { return true; });
    return detail::best_augmentation(tn, h) + 1;
}

/// t(n, H) by enumerating every labelled base tournament and every augmentation.
inline long long t_general(int n, const Tournament& h) {
    int best = -1;
    const int np = n * (n - 1) / 2;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << np); ++code)
        best = std::max(best, detail::best_augmentation(Tournament::from_code(n, code), h));
    return best + 1;
}

/// min over 1 <= |S| <= n/2 of e(S, V - S) / |S|.
inline double expansion(const UndirectedOrderedGraph& g) {
    const int n = g.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        const int k = std::popcount(m);
        if (2 * k > n) continue;
        long long cut = 0;
        for (auto [a, b] : g.edges()) cut += ((m >> a) & 1U) != ((m >> b) & 1U);
        best = std::min(best, static_cast<double>(cut) / k);
    }
    return best;
}

}  // namespace tourn::naive
