#pragma once

// Core value types: tournaments, semi-complete digraphs, 0/1 matrices, vertex
// orderings and undirected ordered graphs. Vertices are 0-based everywhere in
// the library; the text formats and the CLI are 1-based.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "config.hpp"

namespace tourn {

using Mask = std::uint64_t;

inline int popcount(Mask m) noexcept { return std::popcount(m); }
inline int lowest_bit(Mask m) noexcept { return std::countr_zero(m); }
inline Mask bit(int i) noexcept { return Mask{1} << i; }
inline Mask low_mask(int n) noexcept { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Dense n x n bit matrix of arcs; row i of `out` holds the out-neighbourhood of
/// i, row j of `in` holds the in-neighbourhood of j. Both views are kept in sync.
class ArcMatrix {
public:
    ArcMatrix() = default;
    explicit ArcMatrix(int n)
        : n_(n), words_((n + 63) / 64), out_(static_cast<std::size_t>(n) * words_),
          in_(static_cast<std::size_t>(n) * words_) {
        if (n < 0) throw DomainError("negative vertex count");
    }

    int size() const noexcept { return n_; }
    int words() const noexcept { return words_; }

    bool arc(int i, int j) const noexcept {
        return (out_[index(i, j)] >> (j & 63)) & 1U;
    }

    void set(int i, int j, bool value = true) noexcept {
        Mask b = bit(j & 63);
        Mask c = bit(i & 63);
        if (value) {
            out_[index(i, j)] |= b;
            in_[index(j, i)] |= c;
        } else {
            out_[index(i, j)] &= ~b;
            in_[index(j, i)] &= ~c;
        }
    }

    const Mask* out_row(int i) const noexcept { return out_.data() + static_cast<std::size_t>(i) * words_; }
    const Mask* in_row(int i) const noexcept { return in_.data() + static_cast<std::size_t>(i) * words_; }

    /// Single-word views, valid when n <= 64.
    Mask out_mask(int i) const noexcept { return out_[static_cast<std::size_t>(i) * words_]; }
    Mask in_mask(int i) const noexcept { return in_[static_cast<std::size_t>(i) * words_]; }

    int out_degree(int i) const noexcept {
        int d = 0;
        for (int w = 0; w < words_; ++w) d += popcount(out_row(i)[w]);
        return d;
    }
    int in_degree(int i) const noexcept {
        int d = 0;
        for (int w = 0; w < words_; ++w) d += popcount(in_row(i)[w]);
        return d;
    }

    long long arc_count() const noexcept {
        long long c = 0;
        for (Mask m : out_) c += popcount(m);
        return c;
    }

    friend bool operator==(const ArcMatrix& a, const ArcMatrix& b) {
        return a.n_ == b.n_ && a.out_ == b.out_;
    }

private:
    std::size_t index(int i, int j) const noexcept {
        return static_cast<std::size_t>(i) * words_ + static_cast<std::size_t>(j >> 6);
    }

    int n_ = 0;
    int words_ = 0;
    std::vector<Mask> out_;
    std::vector<Mask> in_;
};

/// Complete oriented graph: exactly one of arc(i,j), arc(j,i) for i != j.
class Tournament {
public:
    Tournament() = default;

    /// Validates the tournament invariant.
    explicit Tournament(ArcMatrix arcs) : arcs_(std::move(arcs)) {
        const int n = arcs_.size();
        for (int i = 0; i < n; ++i) {
            if (arcs_.arc(i, i)) throw DomainError("loop at vertex " + std::to_string(i + 1));
            for (int j = i + 1; j < n; ++j) {
                if (arcs_.arc(i, j) == arcs_.arc(j, i))
                    throw DomainError("pair {" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                      "} must carry exactly one arc");
            }
        }
    }

    /// `beats(i, j)` is queried once per pair i < j.
    template <class Pred>
    static Tournament from_predicate(int n, Pred beats) {
        ArcMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (beats(i, j))
                    m.set(i, j);
                else
                    m.set(j, i);
            }
        return Tournament(std::move(m), Unchecked{});
    }

    /// Labelled tournament number `code`: pairs i < j in lexicographic order, bit k
    /// set means i -> j. Enumerating code over [0, 2^C(n,2)) lists every labelled
    /// tournament once.
    static Tournament from_code(int n, std::uint64_t code) {
        int k = 0;
        return from_predicate(n, [&](int, int) { return (code >> k++) & 1U; });
    }

    int size() const noexcept { return arcs_.size(); }
    bool arc(int i, int j) const noexcept { return arcs_.arc(i, j); }
    const ArcMatrix& arcs() const noexcept { return arcs_; }
    Mask out_mask(int i) const noexcept { return arcs_.out_mask(i); }
    Mask in_mask(int i) const noexcept { return arcs_.in_mask(i); }
    int out_degree(int i) const noexcept { return arcs_.out_degree(i); }

    /// Inverse of from_code; requires C(n,2) <= 64.
    std::uint64_t code() const {
        const int n = size();
        if (n * (n - 1) / 2 > 64) throw DomainError("tournament too large for a 64-bit code");
        std::uint64_t c = 0;
        int k = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++k)
                if (arc(i, j)) c |= std::uint64_t{1} << k;
        return c;
    }

    /// Sub-tournament induced on `vertices` (new vertex t is vertices[t]).
    Tournament induced(const std::vector<int>& vertices) const {
        return from_predicate(static_cast<int>(vertices.size()),
                              [&](int a, int b) { return arc(vertices[a], vertices[b]); });
    }

    friend bool operator==(const Tournament& a, const Tournament& b) { return a.arcs_ == b.arcs_; }

private:
    struct Unchecked {};
    Tournament(ArcMatrix arcs, Unchecked) : arcs_(std::move(arcs)) {}

    ArcMatrix arcs_;
};

/// At least one arc between every pair; pairs carrying both arcs are bidirectional.
class SemiCompleteDigraph {
public:
    SemiCompleteDigraph() = default;

    explicit SemiCompleteDigraph(ArcMatrix arcs) : arcs_(std::move(arcs)) {
        const int n = arcs_.size();
        for (int i = 0; i < n; ++i) {
            if (arcs_.arc(i, i)) throw DomainError("loop at vertex " + std::to_string(i + 1));
            for (int j = i + 1; j < n; ++j) {
                bool f = arcs_.arc(i, j), b = arcs_.arc(j, i);
                if (!f && !b)
                    throw DomainError("pair {" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                      "} carries no arc");
                if (f && b) ++bidi_;
            }
        }
    }

    // Implicit: every tournament is a semi-complete digraph with no bidirectional pair.
    SemiCompleteDigraph(const Tournament& t) : arcs_(t.arcs()) {}  // NOLINT

    /// Complete digraph: every pair bidirectional.
    static SemiCompleteDigraph complete(int n) {
        ArcMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) m.set(i, j);
        return SemiCompleteDigraph(std::move(m));
    }

    int size() const noexcept { return arcs_.size(); }
    bool arc(int i, int j) const noexcept { return arcs_.arc(i, j); }
    bool bidirectional(int i, int j) const noexcept { return arcs_.arc(i, j) && arcs_.arc(j, i); }
    const ArcMatrix& arcs() const noexcept { return arcs_; }
    long long bidi_count() const noexcept { return bidi_; }
    long long edge_count() const noexcept { return arcs_.arc_count(); }

    /// Bidirectional pairs {i, j} with i < j, lexicographic.
    std::vector<std::pair<int, int>> bidi_pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < size(); ++i)
            for (int j = i + 1; j < size(); ++j)
                if (bidirectional(i, j)) out.emplace_back(i, j);
        return out;
    }

    bool is_tournament() const noexcept { return bidi_ == 0; }

    /// Valid only when is_tournament().
    Tournament as_tournament() const { return Tournament(arcs_); }

    /// Whether every arc i -> j with i < j is present (G is built over T_n).
    bool contains_transitive_order() const noexcept {
        for (int i = 0; i < size(); ++i)
            for (int j = i + 1; j < size(); ++j)
                if (!arc(i, j)) return false;
        return true;
    }

    SemiCompleteDigraph induced(const std::vector<int>& vertices) const {
        const int k = static_cast<int>(vertices.size());
        ArcMatrix m(k);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                if (a != b && arc(vertices[a], vertices[b])) m.set(a, b);
        return SemiCompleteDigraph(std::move(m));
    }

    friend bool operator==(const SemiCompleteDigraph& a, const SemiCompleteDigraph& b) {
        return a.arcs_ == b.arcs_;
    }

private:
    ArcMatrix arcs_;
    long long bidi_ = 0;
};

/// R x C matrix over {0,1}.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(int rows, int cols) : rows_(rows), cols_(cols), cells_(static_cast<std::size_t>(rows) * cols, 0) {
        if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
    }

    /// Rows given as strings over {'0','1'}.
    static BinaryMatrix from_rows(const std::vector<std::string>& rows) {
        const int r = static_cast<int>(rows.size());
        const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
        BinaryMatrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[i].size()) != c) throw DomainError("ragged matrix rows");
            for (int j = 0; j < c; ++j) {
                if (rows[i][j] != '0' && rows[i][j] != '1') throw DomainError("matrix entries must be 0 or 1");
                m.set(i, j, rows[i][j] == '1');
            }
        }
        return m;
    }

    static BinaryMatrix identity(int n) {
        BinaryMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    bool at(int r, int c) const noexcept { return cells_[static_cast<std::size_t>(r) * cols_ + c] != 0; }
    void set(int r, int c, bool v) noexcept { cells_[static_cast<std::size_t>(r) * cols_ + c] = v ? 1 : 0; }

    int ones() const noexcept {
        return static_cast<int>(std::count(cells_.begin(), cells_.end(), std::uint8_t{1}));
    }

    bool row_is_zero(int r) const noexcept {
        for (int c = 0; c < cols_; ++c)
            if (at(r, c)) return false;
        return true;
    }
    bool col_is_zero(int c) const noexcept {
        for (int r = 0; r < rows_; ++r)
            if (at(r, c)) return false;
        return true;
    }

    /// Copy with all-zero rows and columns removed.
    BinaryMatrix without_zero_lines() const {
        std::vector<int> rs, cs;
        for (int r = 0; r < rows_; ++r)
            if (!row_is_zero(r)) rs.push_back(r);
        for (int c = 0; c < cols_; ++c)
            if (!col_is_zero(c)) cs.push_back(c);
        BinaryMatrix m(static_cast<int>(rs.size()), static_cast<int>(cs.size()));
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j) m.set(static_cast<int>(i), static_cast<int>(j), at(rs[i], cs[j]));
        return m;
    }

    /// Acyclicity of the bipartite graph row_i -- col_j for each 1-entry.
    bool is_forest() const {
        std::vector<int> parent(static_cast<std::size_t>(rows_ + cols_));
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                if (at(r, c)) {
                    int a = find(r), b = find(rows_ + c);
                    if (a == b) return false;
                    parent[a] = b;
                }
        return true;
    }

    friend bool operator==(const BinaryMatrix& a, const BinaryMatrix& b) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::uint8_t> cells_;
};

/// perm[p] is the vertex at position p.
class VertexOrdering {
public:
    VertexOrdering() = default;
    explicit VertexOrdering(std::vector<int> perm) : perm_(std::move(perm)), pos_(perm_.size(), -1) {
        const int n = size();
        for (int p = 0; p < n; ++p) {
            int v = perm_[p];
            if (v < 0 || v >= n || pos_[v] != -1) throw DomainError("ordering is not a permutation");
            pos_[v] = p;
        }
    }

    static VertexOrdering identity(int n) {
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        return VertexOrdering(std::move(p));
    }

    int size() const noexcept { return static_cast<int>(perm_.size()); }
    int at(int position) const noexcept { return perm_[position]; }
    int position_of(int vertex) const noexcept { return pos_[vertex]; }
    const std::vector<int>& perm() const noexcept { return perm_; }

    friend bool operator==(const VertexOrdering& a, const VertexOrdering& b) { return a.perm_ == b.perm_; }

private:
    std::vector<int> perm_;
    std::vector<int> pos_;
};

/// Undirected graph whose vertices are the positions 0..n-1 in their natural order.
class UndirectedOrderedGraph {
public:
    UndirectedOrderedGraph() = default;

    /// Duplicate edges collapse; loops and out-of-range endpoints are rejected.
    UndirectedOrderedGraph(int n, std::vector<std::pair<int, int>> edges) : n_(n), adj_(static_cast<std::size_t>(n)) {
        if (n < 0) throw DomainError("negative vertex count");
        for (auto& [u, v] : edges) {
            if (u == v) throw DomainError("loop at position " + std::to_string(u + 1));
            if (u < 0 || v < 0 || u >= n || v >= n) throw DomainError("edge endpoint out of range");
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        edges_ = std::move(edges);
        for (auto [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }

    int size() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    /// Edges (u, v) with u < v, lexicographic.
    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
    const std::vector<int>& neighbors(int v) const noexcept { return adj_[v]; }
    int degree(int v) const noexcept { return static_cast<int>(adj_[v].size()); }

    bool has_edge(int u, int v) const noexcept {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
        const auto& a = adj_[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    /// Induced subgraph keeping the original positions (other vertices become isolated).
    UndirectedOrderedGraph restricted_to(const std::vector<int>& keep) const {
        std::vector<char> in(static_cast<std::size_t>(n_), 0);
        for (int v : keep) in[v] = 1;
        std::vector<std::pair<int, int>> e;
        for (auto [u, v] : edges_)
            if (in[u] && in[v]) e.emplace_back(u, v);
        return {n_, std::move(e)};
    }

    /// Induced subgraph on `keep` (sorted ascending), relabelled to 0..|keep|-1
    /// preserving order.
    UndirectedOrderedGraph compressed(const std::vector<int>& keep) const {
        std::vector<int> idx(static_cast<std::size_t>(n_), -1);
        for (std::size_t t = 0; t < keep.size(); ++t) idx[keep[t]] = static_cast<int>(t);
        std::vector<std::pair<int, int>> e;
        for (auto [u, v] : edges_)
            if (idx[u] >= 0 && idx[v] >= 0) e.emplace_back(idx[u], idx[v]);
        return {static_cast<int>(keep.size()), std::move(e)};
    }

    bool is_acyclic() const {
        std::vector<int> parent(static_cast<std::size_t>(n_));
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
        for (auto [u, v] : edges_) {
            int a = find(u), b = find(v);
            if (a == b) return false;
            parent[a] = b;
        }
        return true;
    }

    friend bool operator==(const UndirectedOrderedGraph& a, const UndirectedOrderedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Undirected graph of the bidirectional pairs of G, on G's vertex order.
inline UndirectedOrderedGraph bidirectional_graph(const SemiCompleteDigraph& g) {
    return {g.size(), g.bidi_pairs()};
}

/// Injective vertex map certifying that H is a subgraph of G: map[u] is the image of u.
struct EmbeddingWitness {
    std::vector<int> map;
    friend bool operator==(const EmbeddingWitness&, const EmbeddingWitness&) = default;
};

/// Strictly increasing row and column selections certifying pattern containment.
struct PatternWitness {
    std::vector<int> rows;
    std::vector<int> cols;
    friend bool operator==(const PatternWitness&, const PatternWitness&) = default;
};

/// Naive re-verification: injective, and every arc of H lands on an arc of G.
inline bool verify_embedding(const SemiCompleteDigraph& g, const Tournament& h, const EmbeddingWitness& w) {
    const int k = h.size();
    if (static_cast<int>(w.map.size()) != k) return false;
    std::vector<char> used(static_cast<std::size_t>(g.size()), 0);
    for (int x : w.map) {
        if (x < 0 || x >= g.size() || used[x]) return false;
        used[x] = 1;
    }
    for (int u = 0; u < k; ++u)
        for (int v = 0; v < k; ++v)
            if (u != v && h.arc(u, v) && !g.arc(w.map[u], w.map[v])) return false;
    return true;
}

inline bool verify_pattern(const BinaryMatrix& a, const BinaryMatrix& m, const PatternWitness& w) {
    if (static_cast<int>(w.rows.size()) != m.rows() || static_cast<int>(w.cols.size()) != m.cols()) return false;
    for (std::size_t i = 0; i < w.rows.size(); ++i) {
        if (w.rows[i] < 0 || w.rows[i] >= a.rows()) return false;
        if (i > 0 && w.rows[i] <= w.rows[i - 1]) return false;
    }
    for (std::size_t j = 0; j < w.cols.size(); ++j) {
        if (w.cols[j] < 0 || w.cols[j] >= a.cols()) return false;
        if (j > 0 && w.cols[j] <= w.cols[j - 1]) return false;
    }
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) && !a.at(w.rows[i], w.cols[j])) return false;
    return true;
}

}  // namespace tourn
