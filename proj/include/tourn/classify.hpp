#pragma once

// Structural classification of tournaments: colourings into transitive parts,
// feedback edge sets, the forest hierarchy, homogeneous sets and membership in
// the U_5-useful family Q_5.
//
// All searches are exact. Inputs above the configured cap raise CapExceeded.
// Witnesses are the first found in a search that scans vertices and colours in
// increasing index order, so outputs are deterministic.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "construct.hpp"
#include "digraph.hpp"

namespace tourn {

namespace detail {

template <class F>
inline void for_each_bit(Mask m, F&& f) {
    for (; m; m &= m - 1) f(lowest_bit(m));
}

inline std::vector<int> bits_of(Mask m) {
    std::vector<int> v;
    for_each_bit(m, [&](int i) { v.push_back(i); });
    return v;
}

inline Mask mask_of(const std::vector<int>& v) {
    Mask m = 0;
    for (int i : v) m |= bit(i);
    return m;
}

}  // namespace detail

/// Whether `s` induces a transitive tournament: no bidirectional pair inside and
/// pairwise distinct inner out-degrees. Requires n <= 64.
inline bool is_transitive_set(const ArcMatrix& g, Mask s) {
    Mask seen = 0;
    for (Mask m = s; m; m &= m - 1) {
        int v = lowest_bit(m);
        Mask out = g.out_mask(v) & s;
        if (out & g.in_mask(v)) return false;
        int d = popcount(out);
        if (seen & bit(d)) return false;
        seen |= bit(d);
    }
    return true;
}

inline bool is_transitive(const Tournament& t) {
    if (t.size() > 64) {
        std::vector<char> seen(static_cast<std::size_t>(t.size()), 0);
        for (int v = 0; v < t.size(); ++v) {
            int d = t.out_degree(v);
            if (seen[d]) return false;
            seen[d] = 1;
        }
        return true;
    }
    return is_transitive_set(t.arcs(), low_mask(t.size()));
}

/// Vertices of a transitive set `s`, source first.
inline std::vector<int> transitive_order(const ArcMatrix& g, Mask s) {
    auto v = detail::bits_of(s);
    std::stable_sort(v.begin(), v.end(), [&](int a, int b) {
        return popcount(g.out_mask(a) & s) > popcount(g.out_mask(b) & s);
    });
    return v;
}

struct Coloring {
    int colors = 0;
    std::vector<int> color;  // color[v] in [0, colors)

    std::vector<std::vector<int>> classes() const {
        std::vector<std::vector<int>> out(static_cast<std::size_t>(colors));
        for (std::size_t v = 0; v < color.size(); ++v) out[color[v]].push_back(static_cast<int>(v));
        return out;
    }
};

namespace detail {

inline bool color_dfs(const ArcMatrix& g, int v, int k, int used, std::vector<Mask>& cls, std::vector<int>& color) {
    const int n = g.size();
    if (v == n) return true;
    const int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
        Mask next = cls[c] | bit(v);
        if (!is_transitive_set(g, next)) continue;
        cls[c] = next;
        color[v] = c;
        if (color_dfs(g, v + 1, k, std::max(used, c + 1), cls, color)) return true;
        cls[c] &= ~bit(v);
    }
    return false;
}

}  // namespace detail

/// Chromatic number: fewest parts in a partition into transitive sets (for a
/// semi-complete digraph a part may not contain a bidirectional pair), with the
/// lexicographically least witness colouring.
inline Coloring chromatic_number(const SemiCompleteDigraph& g, const Caps& caps = {}) {
    const int n = g.size();
    if (n < 1) throw DomainError("chromatic number needs n >= 1");
    check_cap("chromatic", caps.chromatic, n);
    for (int k = 1; k <= n; ++k) {
        std::vector<Mask> cls(static_cast<std::size_t>(k), 0);
        std::vector<int> color(static_cast<std::size_t>(n), 0);
        if (detail::color_dfs(g.arcs(), 0, k, 0, cls, color)) return {k, std::move(color)};
    }
    throw Error("unreachable: singletons always colour");
}

struct TwoColoring {
    int s = 0;
    std::vector<int> small;  // the class of size s
    std::vector<int> large;
};

/// s(H): least size of a colour class over all 2-colourings. The empty class is
/// allowed, so s = 0 exactly when H is transitive.
inline TwoColoring min_color_class(const Tournament& h, const Caps& caps = {}) {
    const int n = h.size();
    check_cap("chromatic", caps.chromatic, n);
    const Mask all = low_mask(n);
    const auto& g = h.arcs();
    std::vector<int> idx;
    for (int s = 0; s <= n / 2; ++s) {
        // lexicographic s-subsets
        idx.resize(static_cast<std::size_t>(s));
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            Mask a = detail::mask_of(idx);
            if (is_transitive_set(g, a) && is_transitive_set(g, all & ~a))
                return {s, detail::bits_of(a), detail::bits_of(all & ~a)};
            int i = s - 1;
            while (i >= 0 && idx[i] == n - s + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    throw DomainError("tournament is not 2-chromatic");
}

struct FeedbackResult {
    int beta = 0;
    VertexOrdering order;  // an ordering with exactly beta back edges
};

/// beta(H) by dynamic programming over placed prefixes: placing v right after the
/// prefix S creates |out(v) & S| back edges. The returned ordering is the
/// lexicographically least optimal one.
inline FeedbackResult min_feedback_edges(const Tournament& h, const Caps& caps = {}) {
    const int n = h.size();
    check_cap("feedback", caps.feedback, n);
    if (n == 0) return {0, VertexOrdering{}};
    const Mask all = low_mask(n);
    // rest[S] = least number of back edges created by the vertices outside S when
    // they are placed after the prefix S.
    std::vector<std::uint16_t> rest(std::size_t{1} << n, 0);
    for (Mask s = all; s-- > 0;) {
        int best = 1 << 15;
        for (Mask free = all & ~s; free; free &= free - 1) {
            int v = lowest_bit(free);
            int c = popcount(h.out_mask(v) & s) + rest[s | bit(v)];
            best = std::min(best, c);
        }
        rest[s] = static_cast<std::uint16_t>(best);
    }
    std::vector<int> perm;
    Mask s = 0;
    while (s != all) {
        for (Mask free = all & ~s; free; free &= free - 1) {
            int v = lowest_bit(free);
            if (popcount(h.out_mask(v) & s) + rest[s | bit(v)] == rest[s]) {
                perm.push_back(v);
                s |= bit(v);
                break;
            }
        }
    }
    return {rest[0], VertexOrdering(std::move(perm))};
}

struct ForestResult {
    bool forest = false;
    std::vector<int> left;   // L: arcs from R to L form a forest
    std::vector<int> right;
};

/// Tournament forest: a bipartition (L, R) into transitive sets such that the
/// bipartite graph of arcs pointing from R to L is acyclic. Bipartitions are
/// scanned by increasing characteristic mask of L.
inline ForestResult is_forest_tournament(const Tournament& h, const Caps& caps = {}) {
    const int n = h.size();
    check_cap("forest", caps.forest, n);
    const Mask all = low_mask(n);
    const auto& g = h.arcs();
    std::vector<int> parent(static_cast<std::size_t>(n));
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (Mask l = 0; l <= all; ++l) {
        Mask r = all & ~l;
        if (!is_transitive_set(g, l) || !is_transitive_set(g, r)) continue;
        int edges = 0;
        detail::for_each_bit(r, [&](int v) { edges += popcount(g.out_mask(v) & l); });
        if (edges >= std::max(n, 1)) continue;
        std::iota(parent.begin(), parent.end(), 0);
        bool acyclic = true;
        for (Mask m = r; m && acyclic; m &= m - 1) {
            int v = lowest_bit(m);
            for (Mask t = g.out_mask(v) & l; t; t &= t - 1) {
                int a = find(v), b = find(lowest_bit(t));
                if (a == b) {
                    acyclic = false;
                    break;
                }
                parent[a] = b;
            }
        }
        if (acyclic) return {true, detail::bits_of(l), detail::bits_of(r)};
        if (l == all) break;
    }
    return {false, {}, {}};
}

struct WeakForestResult {
    bool weak_forest = false;
    VertexOrdering order;  // an ordering with an acyclic back-edge graph
};

namespace detail {

struct WeakForestSearch {
    const ArcMatrix& g;
    int n;
    std::unordered_set<std::uint64_t> dead;
    std::vector<int> perm;

    // comp[v] is a component label for placed vertices.
    std::uint64_t key(Mask s, const std::vector<int>& comp) const {
        // canonical relabelling of components in vertex order, 4 bits per vertex
        int map[16];
        std::fill(std::begin(map), std::end(map), -1);
        int next = 0;
        std::uint64_t k = s;
        int shift = 12;
        for (int v = 0; v < n; ++v) {
            if (!(s & bit(v))) continue;
            int c = comp[v];
            if (map[c] < 0) map[c] = next++;
            k |= static_cast<std::uint64_t>(map[c]) << shift;
            shift += 4;
        }
        return k;
    }

    bool dfs(Mask s, std::vector<int>& comp) {
        if (popcount(s) == n) return true;
        auto k = key(s, comp);
        if (dead.count(k)) return false;
        for (int v = 0; v < n; ++v) {
            if (s & bit(v)) continue;
            Mask back = g.out_mask(v) & s;
            // the new back edges join v to each vertex of `back`; they stay
            // acyclic iff those vertices lie in distinct components
            Mask seen_comp = 0;
            bool ok = true;
            for_each_bit(back, [&](int u) {
                Mask c = bit(comp[u]);
                if (seen_comp & c) ok = false;
                seen_comp |= c;
            });
            if (!ok) continue;
            std::vector<int> next = comp;
            next[v] = v;
            for (int u = 0; u < n; ++u)
                if ((s & bit(u)) && (seen_comp & bit(comp[u]))) next[u] = v;
            perm.push_back(v);
            if (dfs(s | bit(v), next)) return true;
            perm.pop_back();
        }
        dead.insert(k);
        return false;
    }
};

}  // namespace detail

/// Weak forest: some ordering has an acyclic back-edge graph. Ordering search with
/// pruning on the first cycle and memoisation of dead (prefix set, component
/// partition) states.
inline WeakForestResult is_weak_forest(const Tournament& h, const Caps& caps = {}) {
    const int n = h.size();
    check_cap("weak_forest", std::min(caps.weak_forest, 12), n);  // state key packs 12 vertices
    detail::WeakForestSearch search{h.arcs(), n, {}, {}};
    std::vector<int> comp(static_cast<std::size_t>(n), 0);
    if (search.dfs(0, comp)) return {true, VertexOrdering(search.perm)};
    return {false, {}};
}

struct StarResult {
    bool star = false;
    int center = -1;
    VertexOrdering order;  // back-edge graph is a star centred at `center`
};

/// Star tournament: some ordering has a back-edge graph made of a star with at
/// least one edge plus isolated vertices. Equivalently H is not transitive and
/// H - v is transitive for some v; placing v first then gives the star.
inline StarResult is_star_tournament(const Tournament& h, const Caps& caps = {}) {
    const int n = h.size();
    check_cap("star", caps.star, n);
    const auto& g = h.arcs();
    const Mask all = low_mask(n);
    if (is_transitive_set(g, all)) return {};
    for (int v = 0; v < n; ++v) {
        Mask rest = all & ~bit(v);
        if (!is_transitive_set(g, rest)) continue;
        std::vector<int> perm{v};
        for (int u : transitive_order(g, rest)) perm.push_back(u);
        return {true, v, VertexOrdering(std::move(perm))};
    }
    return {};
}

/// Smallest homogeneous set containing `x`: repeatedly absorb every outside vertex
/// that has both an out-neighbour and an in-neighbour in the set.
inline Mask homogeneous_closure(const ArcMatrix& g, Mask x) {
    const Mask all = low_mask(g.size());
    for (;;) {
        Mask add = 0;
        for (Mask m = all & ~x; m; m &= m - 1) {
            int v = lowest_bit(m);
            if ((g.out_mask(v) & x) && (g.in_mask(v) & x)) add |= bit(v);
        }
        if (!add) return x;
        x |= add;
    }
}

/// Distinct nontrivial closures of vertex pairs, sorted by size then by vertex
/// list. Every nontrivial homogeneous set contains one of them; the tournament is
/// prime iff the list is empty.
inline std::vector<std::vector<int>> homogeneous_sets(const Tournament& g, const Caps& caps = {}) {
    const int n = g.size();
    check_cap("homogeneous", std::min(caps.homogeneous, 64), n);
    const Mask all = low_mask(n);
    std::vector<Mask> found;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            Mask c = homogeneous_closure(g.arcs(), bit(u) | bit(v));
            if (c != all && std::find(found.begin(), found.end(), c) == found.end()) found.push_back(c);
        }
    std::vector<std::vector<int>> out;
    for (Mask m : found) out.push_back(detail::bits_of(m));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

inline bool is_prime(const Tournament& g, const Caps& caps = {}) {
    const int n = g.size();
    check_cap("homogeneous", std::min(caps.homogeneous, 64), n);
    const Mask all = low_mask(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (homogeneous_closure(g.arcs(), bit(u) | bit(v)) != all) return false;
    return true;
}

inline bool is_regular(const Tournament& g) {
    const int n = g.size();
    if (n % 2 == 0) return n == 0;
    for (int v = 0; v < n; ++v)
        if (g.out_degree(v) != (n - 1) / 2) return false;
    return true;
}

/// Isomorphism from C_n onto g (iso[i] is the image of circulant vertex i), if any.
/// Rejects non-regular inputs outright, then tries every image of the arc 0 -> 1
/// and extends vertex by vertex.
inline std::optional<std::vector<int>> circulant_isomorphism(const Tournament& g) {
    const int n = g.size();
    if (n < 3 || n % 2 == 0 || !is_regular(g)) return std::nullopt;
    const Tournament c = make_circulant(n);
    std::vector<int> iso(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::function<bool(int)> extend = [&](int i) {
        if (i == n) return true;
        for (int x = 0; x < n; ++x) {
            if (used[x]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) ok = c.arc(j, i) == g.arc(iso[j], x);
            if (!ok) continue;
            iso[i] = x;
            used[x] = 1;
            if (extend(i + 1)) return true;
            used[x] = 0;
        }
        return false;
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !g.arc(a, b)) continue;
            iso[0] = a;
            iso[1] = b;
            used[a] = used[b] = 1;
            if (extend(2)) return iso;
            used[a] = used[b] = 0;
        }
    return std::nullopt;
}

/// Partition into three (possibly empty) parts whose pairwise unions are
/// transitive; part[v] in {0,1,2}. The condition holds iff every directed
/// triangle meets all three parts.
inline std::optional<std::vector<int>> three_part_transitive_partition(const Tournament& g, const Caps& caps = {}) {
    const int n = g.size();
    check_cap("q5_partition", caps.q5_partition, n);
    // triangles closed by v with two earlier vertices
    std::vector<std::vector<std::pair<int, int>>> tri(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < v; ++u)
            for (int w = u + 1; w < v; ++w) {
                bool cyc = (g.arc(u, w) && g.arc(w, v) && g.arc(v, u)) || (g.arc(w, u) && g.arc(u, v) && g.arc(v, w));
                if (cyc) tri[v].emplace_back(u, w);
            }
    std::vector<int> part(static_cast<std::size_t>(n), -1);
    std::function<bool(int, int)> dfs = [&](int v, int used) {
        if (v == n) return true;
        for (int p = 0; p < std::min(3, used + 1); ++p) {
            bool ok = true;
            for (auto [u, w] : tri[v])
                if (part[u] == p || part[w] == p || part[u] == part[w]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            part[v] = p;
            if (dfs(v + 1, std::max(used, p + 1))) return true;
        }
        part[v] = -1;
        return false;
    };
    if (dfs(0, 0)) return part;
    return std::nullopt;
}

struct Q5Result {
    bool member = false;
    int condition = 0;             // 1: isomorphic to C_n, 2: three-part partition
    std::vector<int> isomorphism;  // condition 1
    std::vector<int> parts;        // condition 2
};

/// Membership in Q_5: isomorphic to some C_n (odd n), or partitionable into three
/// parts with transitive pairwise unions. Condition 1 is tried first.
inline Q5Result q5_member(const Tournament& g, const Caps& caps = {}) {
    if (auto iso = circulant_isomorphism(g)) return {true, 1, std::move(*iso), {}};
    if (auto parts = three_part_transitive_partition(g, caps)) return {true, 2, {}, std::move(*parts)};
    return {};
}

struct ClassProfile {
    int n = 0;
    std::optional<int> chi;
    std::optional<int> s;  // only when chi <= 2
    std::optional<int> beta;
    std::optional<bool> is_forest;
    std::optional<bool> is_weak_forest;
    std::optional<bool> is_star;
    std::optional<bool> is_prime;
};

/// Runs every classifier that fits its cap; fields whose search exceeds its cap
/// stay empty.
inline ClassProfile classify(const Tournament& h, const Caps& caps = {}) {
    ClassProfile p;
    p.n = h.size();
    auto attempt = [](auto&& f) {
        try {
            f();
        } catch (const CapExceeded&) {
        }
    };
    attempt([&] { p.chi = chromatic_number(h, caps).colors; });
    if (p.chi && *p.chi <= 2) attempt([&] { p.s = min_color_class(h, caps).s; });
    attempt([&] { p.beta = min_feedback_edges(h, caps).beta; });
    if (p.chi && *p.chi > 2) {
        p.is_forest = p.is_weak_forest = p.is_star = false;
    } else {
        attempt([&] { p.is_forest = is_forest_tournament(h, caps).forest; });
        attempt([&] { p.is_weak_forest = is_weak_forest(h, caps).weak_forest; });
        attempt([&] { p.is_star = is_star_tournament(h, caps).star; });
    }
    attempt([&] { p.is_prime = is_prime(h, caps); });
    return p;
}

struct BoundStatement {
    std::string quantity;  // "t(n,H)" or "t(T_n,H)"
    std::string relation;  // e.g. "O(n)", "Omega(n^1.133)"
    std::string regime;    // which structural hypothesis produced it
    bool conjecture = false;
};

struct BoundProfile {
    ClassProfile profile;
    std::optional<bool> is_hero;
    std::vector<BoundStatement> statements;
    std::optional<double> quadratic_constant;  // chi >= 3
    std::optional<int> epsilon;                // chi = 2, non-forest
    std::optional<double> lower_exponent;      // chi = 2, non-forest
    std::optional<double> upper_exponent;      // chi = 2
    std::optional<double> hero_exponent;       // chi = 2 with hero flag
};

/// Epsilon of the non-forest lower bound, by h mod 4.
inline int nonforest_epsilon(int h) {
    static constexpr int eps[4] = {4, 7, 6, 9};
    return eps[h % 4];
}

inline std::string exponent_text(double e) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", e);
    return buf;
}

/// Which asymptotic regime applies to H and the bounds it yields. Hero status is
/// taken from the caller; it is never computed.
inline BoundProfile bound_profile(const Tournament& h, std::optional<bool> is_hero = std::nullopt,
                                  const Caps& caps = {}) {
    BoundProfile b;
    b.profile = classify(h, caps);
    b.is_hero = is_hero;
    const auto& p = b.profile;
    const int hs = h.size();
    if (!p.chi) {
        b.statements.push_back({"t(n,H)", "unknown", "chromatic number beyond cap", false});
        return b;
    }
    const int r = *p.chi;
    if (r == 1) {
        b.statements.push_back({"t(T_n,H)", "= 0 for n >= " + std::to_string(hs), "transitive H", false});
        b.statements.push_back({"t(n,H)", "= 0 for n >= 2^(h-1) = " + std::to_string(1LL << (hs - 1)),
                                "transitive H", false});
        return b;
    }
    b.statements.push_back({"t(n,H)", ">= n/2", "non-transitive H (bidirectional matching in T_n)", false});
    if (r >= 3) {
        double c = 1.0 - 1.0 / (r - 1);
        b.quadratic_constant = c;
        std::string rel = "(" + exponent_text(c) + " + o(1)) * C(n,2)";
        b.statements.push_back({"t(T_n,H)", ">= " + exponent_text(c) + " * C(n,2)", "chi >= 3", false});
        b.statements.push_back({"t(n,H)", "= " + rel, "chi >= 3", false});
        return b;
    }
    // chi == 2
    if (p.s) {
        double e = 2.0 - 1.0 / std::pow(2.0, *p.s - 1);
        b.upper_exponent = e;
        b.statements.push_back({"t(n,H)", "O(n^" + exponent_text(e) + ")", "chi = 2, s = " + std::to_string(*p.s), false});
        if (is_hero.value_or(false)) {
            double he = 2.0 - 1.0 / *p.s;
            b.hero_exponent = he;
            b.statements.push_back({"t(n,H)", "O(n^" + exponent_text(he) + ")", "hero with s = " + std::to_string(*p.s), false});
        }
    } else {
        b.statements.push_back({"t(n,H)", "unknown", "s(H) beyond cap", false});
    }
    if (p.is_forest.has_value() && !*p.is_forest) {
        int eps = nonforest_epsilon(hs);
        double e = 1.0 + 4.0 / (3.0 * hs - eps);
        b.epsilon = eps;
        b.lower_exponent = e;
        b.statements.push_back({"t(T_n,H)", "Omega(n^" + exponent_text(e) + ")",
                                "not a forest, h = " + std::to_string(hs) + ", epsilon = " + std::to_string(eps), false});
    }
    if (p.beta && *p.beta <= 2)
        b.statements.push_back({"t(T_n,H)", "O(n)", "beta <= 2", false});
    if (p.is_forest.value_or(false))
        b.statements.push_back({"t(T_n,H)", "n * (log n)^O(1)", "forest", true});
    return b;
}

}  // namespace tourn
