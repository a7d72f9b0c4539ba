#pragma once

// Constructive embeddings: tournaments with two back edges into T_n plus
// bidirectional pairs, the transitive blow-up embedding, and generators for the
// extremal host graphs.

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <limits>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "classify.hpp"
#include "construct.hpp"
#include "digraph.hpp"
#include "problab.hpp"
#include "rng.hpp"
#include "search.hpp"

namespace tourn {

// ---------------------------------------------------------------------------
// Two back edges

enum class BackEdgeKind { disjoint, intersecting, containment };

inline const char* kind_name(BackEdgeKind k) {
    switch (k) {
        case BackEdgeKind::disjoint: return "disjoint";
        case BackEdgeKind::intersecting: return "intersecting";
        case BackEdgeKind::containment: return "containment";
    }
    return "?";
}

/// Positions p < q < r < s (0-based, in the ordering) of the four endpoints. The
/// back edges are (q,p),(s,r) for disjoint, (r,p),(s,q) for intersecting and
/// (s,p),(r,q) for containment.
struct BackEdgeConfig {
    BackEdgeKind kind = BackEdgeKind::disjoint;
    int p = 0, q = 0, r = 0, s = 0;

    /// The two back edges as (earlier, later) position pairs.
    std::pair<std::pair<int, int>, std::pair<int, int>> edges() const {
        switch (kind) {
            case BackEdgeKind::disjoint: return {{p, q}, {r, s}};
            case BackEdgeKind::intersecting: return {{p, r}, {q, s}};
            case BackEdgeKind::containment: return {{p, s}, {q, r}};
        }
        return {};
    }
};

inline BackEdgeConfig classify_two_back_edges(const Tournament& h, const VertexOrdering& ord) {
    const UndirectedOrderedGraph g = back_edge_graph(h, ord);
    if (g.edge_count() != 2)
        throw DomainError("expected exactly 2 back edges, found " + std::to_string(g.edge_count()));
    auto e1 = g.edges()[0], e2 = g.edges()[1];  // sorted: e1.first <= e2.first
    if (e1.first == e2.first || e1.first == e2.second || e1.second == e2.first || e1.second == e2.second)
        throw DomainError("the 2 back edges share an endpoint (star shape)");
    BackEdgeConfig c;
    const int b = e1.first, a = e1.second, d = e2.first, cc = e2.second;  // b < d
    if (a < d)
        c.kind = BackEdgeKind::disjoint;  // b < a < d < c
    else if (a < cc)
        c.kind = BackEdgeKind::intersecting;  // b < d < a < c
    else
        c.kind = BackEdgeKind::containment;  // b < d < c < a
    std::vector<int> pos{a, b, cc, d};
    std::sort(pos.begin(), pos.end());
    c.p = pos[0];
    c.q = pos[1];
    c.r = pos[2];
    c.s = pos[3];
    return c;
}

/// Positions i < j < k < l of an ordered graph; which pairs are edges depends on the
/// configuration (see BackEdgeConfig::edges).
struct EdgePair {
    int i = 0, j = 0, k = 0, l = 0;
    friend bool operator==(const EdgePair&, const EdgePair&) = default;
};

/// Ordered copy of X_h: x[0] < ... < x[h-1] with x[h-2] joined to x[0..h-3], and
/// x[h-3] joined to x[h-1].
struct XhCopy {
    std::vector<int> x;
};

inline bool is_ordered_xh(const UndirectedOrderedGraph& g, const XhCopy& c) {
    const int h = static_cast<int>(c.x.size());
    if (h < 3) return false;
    for (int t = 1; t < h; ++t)
        if (c.x[t] <= c.x[t - 1]) return false;
    const UndirectedOrderedGraph tree = make_xh_tree(h);
    for (auto [a, b] : tree.edges())
        if (!g.has_edge(c.x[a], c.x[b])) return false;
    return true;
}

/// The last h' vertices of an ordered X_h form an ordered X_{h'} (3 <= h' <= h).
inline XhCopy xh_suffix(const XhCopy& c, int hp) {
    return {std::vector<int>(c.x.end() - hp, c.x.end())};
}

inline bool is_edge_pair(const UndirectedOrderedGraph& g, BackEdgeKind kind, const EdgePair& e) {
    if (!(e.i < e.j && e.j < e.k && e.k < e.l)) return false;
    switch (kind) {
        case BackEdgeKind::disjoint: return g.has_edge(e.i, e.j) && g.has_edge(e.k, e.l);
        case BackEdgeKind::intersecting: return g.has_edge(e.i, e.k) && g.has_edge(e.j, e.l);
        case BackEdgeKind::containment: return g.has_edge(e.i, e.l) && g.has_edge(e.j, e.k);
    }
    return false;
}

/// Lexicographically least pair of the given kind by direct enumeration.
inline std::optional<EdgePair> find_edge_pair_exhaustive(const UndirectedOrderedGraph& g, BackEdgeKind kind) {
    const auto& es = g.edges();
    std::optional<EdgePair> best;
    auto consider = [&](EdgePair e) {
        if (is_edge_pair(g, kind, e) && (!best || std::tie(e.i, e.j, e.k, e.l) < std::tie(best->i, best->j, best->k, best->l)))
            best = e;
    };
    for (auto [a, b] : es)
        for (auto [c, d] : es) {
            if (a >= c) continue;  // first edge starts earlier
            switch (kind) {
                case BackEdgeKind::disjoint: consider({a, b, c, d}); break;
                case BackEdgeKind::intersecting: consider({a, c, b, d}); break;
                case BackEdgeKind::containment: consider({a, c, d, b}); break;
            }
        }
    return best;
}

/// Lexicographically least ordered X_h by direct search over (x[h-3], x[h-2], x[h-1]).
inline std::optional<XhCopy> find_ordered_xh(const UndirectedOrderedGraph& g, int h) {
    if (h < 3) throw DomainError("X_h needs h >= 3");
    std::optional<XhCopy> best;
    for (auto [u, v] : g.edges())
        for (int w : g.neighbors(u)) {
            if (w <= v) continue;
            std::vector<int> below;
            for (int z : g.neighbors(v))
                if (z < u) below.push_back(z);
            if (static_cast<int>(below.size()) < h - 3) continue;
            XhCopy c;
            c.x.assign(below.begin(), below.begin() + (h - 3));
            c.x.insert(c.x.end(), {u, v, w});
            if (!best || c.x < best->x) best = c;
        }
    return best;
}

struct DisjointOrXh {
    std::optional<EdgePair> pair;  // edges (i,j), (k,l)
    std::optional<XhCopy> xh;
};

/// Halving recursion: a left edge and a right edge give a disjoint pair; otherwise
/// recurse into a half holding at least 2h * |half| edges; otherwise take the
/// (h-1)-core of the crossing edges, its shortest edge (u, v), h-3 further
/// neighbours of v below u and a neighbour of u beyond v.
inline std::optional<DisjointOrXh> find_disjoint_pair_or_xh(const UndirectedOrderedGraph& g, int h) {
    if (h < 3) throw DomainError("X_h needs h >= 3");
    std::function<std::optional<DisjointOrXh>(int, int)> go = [&](int lo, int len) -> std::optional<DisjointOrXh> {
        if (len < 2) return std::nullopt;
        const int mid = lo + len / 2, hi = lo + len;
        std::vector<std::pair<int, int>> left, right, cross;
        for (auto [a, b] : g.edges()) {
            if (a < lo || b >= hi) continue;
            if (b < mid)
                left.push_back({a, b});
            else if (a >= mid)
                right.push_back({a, b});
            else
                cross.push_back({a, b});
        }
        if (!left.empty() && !right.empty())
            return DisjointOrXh{EdgePair{left[0].first, left[0].second, right[0].first, right[0].second}, {}};
        const long long need_l = 2LL * h * (len / 2), need_r = 2LL * h * (len - len / 2);
        if (static_cast<long long>(left.size()) >= need_l)
            if (auto r = go(lo, len / 2)) return r;
        if (static_cast<long long>(right.size()) >= need_r)
            if (auto r = go(mid, len - len / 2)) return r;
        // (h-1)-core of the crossing edges
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(len));
        for (auto [a, b] : cross) {
            adj[a - lo].push_back(b);
            adj[b - lo].push_back(a);
        }
        std::vector<int> deg(static_cast<std::size_t>(len));
        std::vector<char> alive(static_cast<std::size_t>(len), 1);
        std::deque<int> queue;
        for (int v = 0; v < len; ++v) {
            deg[v] = static_cast<int>(adj[v].size());
            if (deg[v] < h - 1) {
                alive[v] = 0;
                queue.push_back(v);
            }
        }
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : adj[v]) {
                int wi = w - lo;
                if (alive[wi] && --deg[wi] < h - 1) {
                    alive[wi] = 0;
                    queue.push_back(wi);
                }
            }
        }
        std::optional<std::pair<int, int>> shortest;
        for (auto [a, b] : cross)
            if (alive[a - lo] && alive[b - lo] && (!shortest || b - a < shortest->second - shortest->first))
                shortest = std::make_pair(a, b);
        if (!shortest) return std::nullopt;
        const auto [u, v] = *shortest;
        XhCopy c;
        for (int z : adj[v - lo])
            if (alive[z - lo] && z < u && static_cast<int>(c.x.size()) < h - 3) c.x.push_back(z);
        std::sort(c.x.begin(), c.x.end());
        int w = -1;
        for (int z : adj[u - lo])
            if (alive[z - lo] && z > v) {
                w = z;
                break;
            }
        if (static_cast<int>(c.x.size()) < h - 3 || w < 0) return std::nullopt;
        c.x.insert(c.x.end(), {u, v, w});
        return DisjointOrXh{{}, c};
    };
    auto r = go(0, g.size());
    if (r && r->pair && !is_edge_pair(g, BackEdgeKind::disjoint, *r->pair)) return std::nullopt;
    if (r && r->xh && !is_ordered_xh(g, *r->xh)) return std::nullopt;
    return r;
}

/// Forward-degree scan: the least u (among vertices with forward edges) with
/// r(u) <= r(pred(u)) + f(u) - 2, where r is the rightmost neighbour and pred the
/// previous such vertex; then pred(u) < u < w < r(pred(u)) with w the first forward
/// neighbour of u. Returned as containment positions (edges (i,l), (j,k)).
inline std::optional<EdgePair> find_nested_pair(const UndirectedOrderedGraph& g) {
    int pred = -1, r_pred = -1;
    for (int u = 0; u < g.size(); ++u) {
        std::vector<int> fwd;
        for (int w : g.neighbors(u))
            if (w > u) fwd.push_back(w);
        const int f = static_cast<int>(fwd.size());
        if (f == 0) continue;
        const int r_u = fwd.back();
        if (pred >= 0 && r_u <= r_pred + f - 2) {
            EdgePair e{pred, u, fwd.front(), r_pred};
            if (is_edge_pair(g, BackEdgeKind::containment, e)) return e;
            return std::nullopt;
        }
        pred = u;
        r_pred = r_u;
    }
    return std::nullopt;
}

/// Lexicographically least crossing pair (edges (i,k), (j,l)).
inline std::optional<EdgePair> find_crossing_pair(const UndirectedOrderedGraph& g) {
    return find_edge_pair_exhaustive(g, BackEdgeKind::intersecting);
}

namespace detail {

/// Places seq[t] (H vertices in embedding order) at increasing host positions:
/// anchored entries are fixed; the others are packed right after the previous
/// anchor (or right before the first one).
inline std::optional<std::vector<int>> pack_around_anchors(int n, const std::vector<int>& seq,
                                                           const std::vector<std::pair<int, int>>& anchors) {
    const int h = static_cast<int>(seq.size());
    std::vector<int> pos(static_cast<std::size_t>(h), -1);
    for (auto [t, x] : anchors) pos[t] = x;
    int first = -1;
    for (int t = 0; t < h; ++t)
        if (pos[t] >= 0) {
            first = t;
            break;
        }
    if (first < 0) {
        if (h > n) return std::nullopt;
        for (int t = 0; t < h; ++t) pos[t] = t;
    } else {
        for (int t = first - 1; t >= 0; --t) pos[t] = pos[t + 1] - 1;
        for (int t = first + 1; t < h; ++t)
            if (pos[t] < 0) pos[t] = pos[t - 1] + 1;
    }
    for (int t = 0; t < h; ++t) {
        if (pos[t] < 0 || pos[t] >= n) return std::nullopt;
        if (t > 0 && pos[t] <= pos[t - 1]) return std::nullopt;
    }
    std::vector<int> map(static_cast<std::size_t>(h), -1);
    for (int t = 0; t < h; ++t) map[seq[t]] = pos[t];
    return map;
}

}  // namespace detail

struct TwoBackEdgeEmbedding {
    EmbeddingWitness witness;
    BackEdgeConfig config;
    std::string branch;            // "pair", "xh" or the fallback used
    int attempt = 0;               // index of the t-gap sample that succeeded
    std::vector<int> anchors;      // host positions taken from the gap sample
    std::vector<int> gap_vertices; // the successful gap sample
};

struct EmbedOptions {
    int retries = 100000;       // t-gap samples tried before giving up
    bool fallbacks = true;      // direct searches on the gap sample when the configured finder fails
};

/// Samples an h-gap subgraph of the bidirectional graph, runs the finder for the
/// configuration, and assigns H along the ordering with the found edges as
/// anchors. In the disjoint case an X_{r-p+1} copy is used with the reordering
/// that moves y_p after y_r.
inline std::optional<TwoBackEdgeEmbedding> embed_two_back_edge_tournament(const Tournament& h, const VertexOrdering& ord,
                                                                           const SemiCompleteDigraph& g, std::uint64_t seed,
                                                                           const EmbedOptions& opt = {}) {
    const BackEdgeConfig cfg = classify_two_back_edges(h, ord);
    if (!g.contains_transitive_order()) throw DomainError("host is not built over T_n in its vertex order");
    const int hs = h.size(), n = g.size();
    const UndirectedOrderedGraph bidi = bidirectional_graph(g);
    std::vector<int> seq(ord.perm());  // H vertices in ordering order
    for (int attempt = 0; attempt < opt.retries; ++attempt) {
        TGapSample gap = sample_tgap(bidi, hs, derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        const UndirectedOrderedGraph& c = gap.induced;
        if (c.edge_count() < 2) continue;
        auto lift = [&](int v) { return gap.vertices[v]; };
        auto finish = [&](const std::vector<int>& order, const std::vector<std::pair<int, int>>& anchors,
                          const std::string& branch) -> std::optional<TwoBackEdgeEmbedding> {
            auto map = detail::pack_around_anchors(n, order, anchors);
            if (!map) return std::nullopt;
            EmbeddingWitness w{*map};
            if (!verify_embedding(g, h, w)) return std::nullopt;
            TwoBackEdgeEmbedding out;
            out.witness = std::move(w);
            out.config = cfg;
            out.branch = branch;
            out.attempt = attempt;
            for (auto [t, x] : anchors) out.anchors.push_back(x);
            out.gap_vertices = gap.vertices;
            return out;
        };
        auto by_pair = [&](const EdgePair& e, const std::string& branch) {
            return finish(seq, {{cfg.p, lift(e.i)}, {cfg.q, lift(e.j)}, {cfg.r, lift(e.k)}, {cfg.s, lift(e.l)}}, branch);
        };
        std::optional<TwoBackEdgeEmbedding> got;
        switch (cfg.kind) {
            case BackEdgeKind::disjoint: {
                const int hp = cfg.r - cfg.p + 1;
                auto by_xh = [&](const XhCopy& full, const std::string& branch) {
                    XhCopy x = xh_suffix(full, hp);
                    // order: y_1..y_{p-1}, y_{p+1}..y_r, y_p, y_{r+1}..y_h
                    std::vector<int> order;
                    for (int t = 0; t < hs; ++t) {
                        if (t == cfg.p) continue;
                        order.push_back(seq[t]);
                        if (t == cfg.r) order.push_back(seq[cfg.p]);
                    }
                    // anchors in the new order: y_{p+1..q-1} -> x_1.., y_{q+1..r} -> .., y_p -> x_{hp-1}, y_s -> x_{hp}
                    std::vector<std::pair<int, int>> anchors;
                    int xi = 0;
                    for (int t = cfg.p + 1; t <= cfg.r; ++t) {
                        if (t == cfg.q) continue;
                        anchors.push_back({t - 1, lift(x.x[xi++])});
                    }
                    anchors.push_back({cfg.r, lift(x.x[xi++])});  // y_p sits right after y_r
                    anchors.push_back({cfg.s, lift(x.x[xi++])});
                    return finish(order, anchors, branch);
                };
                if (auto r = find_disjoint_pair_or_xh(c, hs)) {
                    got = r->pair ? by_pair(*r->pair, "pair") : by_xh(*r->xh, "xh");
                }
                if (!got && opt.fallbacks) {
                    if (auto e = find_edge_pair_exhaustive(c, BackEdgeKind::disjoint))
                        got = by_pair(*e, "pair-direct");
                    else if (auto x = find_ordered_xh(c, hp))
                        got = by_xh(*x, "xh-direct");
                }
                break;
            }
            case BackEdgeKind::containment:
                if (auto e = find_nested_pair(c)) got = by_pair(*e, "pair");
                if (!got && opt.fallbacks)
                    if (auto e = find_edge_pair_exhaustive(c, BackEdgeKind::containment)) got = by_pair(*e, "pair-direct");
                break;
            case BackEdgeKind::intersecting:
                if (auto e = find_crossing_pair(c)) got = by_pair(*e, "pair");
                break;
        }
        if (got) return got;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Transitive blow-up

/// Maps the colour classes of H (from a minimum colouring, largest class to
/// largest part) onto transitive subtournaments of the parts; pairs across parts
/// must be bidirectional. Bidirectional pairs inside a part are read as
/// lower index -> higher index when searching for the transitive subtournament.
inline EmbeddingWitness embed_via_transitive_blowup(const SemiCompleteDigraph& g, const Tournament& h,
                                                    const std::vector<std::vector<int>>& parts,
                                                    const Caps& caps = {}) {
    const Coloring col = chromatic_number(h, caps);
    auto classes = col.classes();
    if (parts.size() < classes.size())
        throw DomainError("H needs " + std::to_string(classes.size()) + " parts, got " + std::to_string(parts.size()));
    std::vector<int> by_class(classes.size()), by_part(parts.size());
    std::iota(by_class.begin(), by_class.end(), 0);
    std::iota(by_part.begin(), by_part.end(), 0);
    std::stable_sort(by_class.begin(), by_class.end(), [&](int a, int b) { return classes[a].size() > classes[b].size(); });
    std::stable_sort(by_part.begin(), by_part.end(), [&](int a, int b) { return parts[a].size() > parts[b].size(); });
    std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
    for (std::size_t a = 0; a < parts.size(); ++a)
        for (int v : parts[a]) {
            if (v < 0 || v >= g.size()) throw DomainError("part " + std::to_string(a + 1) + " has an out-of-range vertex");
            if (seen[v]) throw DomainError("vertex " + std::to_string(v + 1) + " lies in two parts");
            seen[v] = 1;
        }
    for (std::size_t a = 0; a < parts.size(); ++a)
        for (std::size_t b = a + 1; b < parts.size(); ++b)
            for (int x : parts[a])
                for (int y : parts[b])
                    if (!g.bidirectional(x, y))
                        throw DomainError("pair {" + std::to_string(x + 1) + "," + std::to_string(y + 1) + "} between parts " +
                                          std::to_string(a + 1) + " and " + std::to_string(b + 1) + " is not bidirectional");
    std::vector<int> map(static_cast<std::size_t>(h.size()), -1);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        const auto& cls = classes[by_class[c]];
        const auto& part = parts[by_part[c]];
        const int hc = static_cast<int>(cls.size());
        if (hc >= 31 || static_cast<long long>(part.size()) < (1LL << (hc - 1)))
            throw DomainError("part " + std::to_string(by_part[c] + 1) + " has " + std::to_string(part.size()) +
                              " vertices, needs 2^" + std::to_string(hc - 1));
        const Tournament pt = Tournament::from_predicate(static_cast<int>(part.size()), [&](int a, int b) {
            return g.arc(part[a], part[b]);  // lower index wins on bidirectional pairs
        });
        auto chain = find_transitive_subtournament(pt, hc);
        if (!chain) throw DomainError("part " + std::to_string(by_part[c] + 1) + " has no transitive subtournament of size " + std::to_string(hc));
        Mask cm = 0;
        for (int v : cls) cm |= bit(v);
        const std::vector<int> order = transitive_order(h.arcs(), cm);  // source first
        for (int t = 0; t < hc; ++t) map[order[t]] = part[(*chain)[t]];
    }
    EmbeddingWitness w{map};
    if (!verify_embedding(g, h, w)) throw Error("transitive blow-up embedding failed verification");
    return w;
}

/// T_n plus the complete (r-1)-partite graph on balanced consecutive classes.
inline SemiCompleteDigraph turan_blowup(int n, int r) {
    if (r < 2) throw DomainError("turan_blowup needs r >= 2");
    if (n < r - 1) throw DomainError("turan_blowup needs n >= r - 1");
    const int parts = r - 1;
    std::vector<int> cls(static_cast<std::size_t>(n));
    int v = 0;
    for (int c = 0; c < parts; ++c) {
        const int size = n / parts + (c < n % parts ? 1 : 0);
        for (int t = 0; t < size; ++t) cls[v++] = c;
    }
    ArcMatrix m = make_transitive(n).arcs();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (cls[a] != cls[b]) m.set(b, a);
    return SemiCompleteDigraph(std::move(m));
}

// ---------------------------------------------------------------------------
// Bipartite host generators

/// Length of a shortest cycle, or 0 if the graph is a forest.
inline int girth(const UndirectedOrderedGraph& g) {
    const int n = g.size();
    int best = 0;
    std::vector<int> dist(static_cast<std::size_t>(n)), par(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> q{s};
        dist[s] = 0;
        par[s] = -1;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    par[w] = v;
                    q.push_back(w);
                } else if (w != par[v]) {
                    int len = dist[v] + dist[w] + 1;
                    if (best == 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

struct BipartiteHost {
    UndirectedOrderedGraph graph;  // sides [0, n/2) and [n/2, n)
    bool certified = false;
    int girth = 0;                 // high_girth_bipartite: 0 means acyclic
};

namespace detail {

inline int bfs_distance(const std::vector<std::vector<int>>& adj, int s, int t, int limit) {
    if (s == t) return 0;
    std::vector<int> dist(adj.size(), -1);
    std::deque<int> q{s};
    dist[s] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        if (dist[v] >= limit) break;
        for (int w : adj[v]) {
            if (dist[w] >= 0) continue;
            dist[w] = dist[v] + 1;
            if (w == t) return dist[w];
            q.push_back(w);
        }
    }
    return std::numeric_limits<int>::max();
}

inline std::vector<std::pair<int, int>> shuffled_cross_pairs(int n, std::uint64_t seed) {
    std::vector<std::pair<int, int>> all;
    for (int a = 0; a < n / 2; ++a)
        for (int b = n / 2; b < n; ++b) all.emplace_back(a, b);
    CounterRng rng(seed);
    for (std::size_t k = all.size(); k > 1; --k) std::swap(all[k - 1], all[rng.below(k)]);
    return all;
}

}  // namespace detail

/// Balanced bipartite graph with no cycle of length <= girth_bound: cross pairs in
/// random order, each inserted when its endpoints are at distance >= girth_bound.
inline BipartiteHost high_girth_bipartite(int n, int girth_bound, std::uint64_t seed) {
    if (n < 0 || n % 2) throw DomainError("n must be even");
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : detail::shuffled_cross_pairs(n, seed)) {
        if (detail::bfs_distance(adj, a, b, girth_bound) < girth_bound) continue;
        adj[a].push_back(b);
        adj[b].push_back(a);
        edges.emplace_back(a, b);
    }
    BipartiteHost out;
    out.graph = UndirectedOrderedGraph(n, std::move(edges));
    out.girth = girth(out.graph);
    out.certified = out.girth == 0 || out.girth > girth_bound;
    if (!out.certified) throw Error("high-girth generator produced a short cycle");
    return out;
}

/// K_{t,t} with t vertices on each side, lexicographically least by left set.
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> find_ktt(const UndirectedOrderedGraph& g, int t) {
    const int n = g.size(), half = n / 2;
    if (half > 64) throw DomainError("K_{t,t} search supports sides of at most 64 vertices");
    std::vector<Mask> nb(static_cast<std::size_t>(half), 0);
    for (auto [a, b] : g.edges())
        if (a < half && b >= half) nb[a] |= bit(b - half);
    std::vector<int> left;
    std::optional<std::pair<std::vector<int>, std::vector<int>>> out;
    std::function<bool(int, Mask)> dfs = [&](int from, Mask common) {
        if (popcount(common) < t) return false;
        if (static_cast<int>(left.size()) == t) {
            std::vector<int> right;
            for (Mask m = common; m && static_cast<int>(right.size()) < t; m &= m - 1) right.push_back(half + lowest_bit(m));
            out = std::make_pair(left, right);
            return true;
        }
        for (int a = from; a < half; ++a) {
            left.push_back(a);
            if (dfs(a + 1, common & nb[a])) return true;
            left.pop_back();
        }
        return false;
    };
    if (t >= 1) dfs(0, low_mask(n - half));
    return out;
}

/// Balanced bipartite graph with no K_{t,t}: each cross pair kept with probability
/// 1/2, then one edge deleted from each K_{t,t} found until none is left.
inline BipartiteHost ktt_free_bipartite(int n, int t, std::uint64_t seed) {
    if (n < 0 || n % 2) throw DomainError("n must be even");
    if (t < 1) throw DomainError("t must be positive");
    CounterRng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n / 2; ++a)
        for (int b = n / 2; b < n; ++b)
            if (rng.bit()) edges.emplace_back(a, b);
    UndirectedOrderedGraph g(n, edges);
    while (auto k = find_ktt(g, t)) {
        const std::pair<int, int> drop{k->first[0], k->second[0]};
        edges.erase(std::find(edges.begin(), edges.end(), drop));
        g = UndirectedOrderedGraph(n, edges);
    }
    BipartiteHost out;
    out.graph = std::move(g);
    out.certified = !find_ktt(out.graph, t).has_value();
    return out;
}

}  // namespace tourn
