#pragma once

// Containment tests and exact extremal numbers.
//
//   contains_pattern      ordered 0/1 pattern containment in a matrix
//   contains_subdigraph   copy of a tournament H inside a semi-complete digraph
//   ex_exact              ex(n, M)
//   t_transitive_exact    t(T_n, H)
//   t_general_exact       t(n, H)
//
// The extremal searches are branch-and-bound over candidate 1-entries (or
// reversal arcs) in lexicographic order, trying "present" before "absent", and
// pruning when the current count plus everything still undecided cannot beat the
// best configuration found so far.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "classify.hpp"
#include "construct.hpp"
#include "digraph.hpp"

namespace tourn {

// ---------------------------------------------------------------------------
// Pattern containment

namespace detail {

/// Column-major bit view of a matrix: colbits[c] holds the rows with a 1 in column c.
struct ColumnBits {
    int rows = 0, cols = 0, words = 0;
    std::vector<Mask> bits;

    explicit ColumnBits(const BinaryMatrix& a) : rows(a.rows()), cols(a.cols()), words((a.rows() + 63) / 64) {
        bits.assign(static_cast<std::size_t>(cols) * words, 0);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (a.at(r, c)) set(r, c, true);
    }
    void set(int r, int c, bool v) {
        Mask& w = bits[static_cast<std::size_t>(c) * words + (r >> 6)];
        if (v)
            w |= bit(r & 63);
        else
            w &= ~bit(r & 63);
    }
    const Mask* col(int c) const { return bits.data() + static_cast<std::size_t>(c) * words; }
};

struct PatternShape {
    int rows = 0, cols = 0;
    std::vector<std::vector<int>> row_ones;  // columns j with M(i, j) = 1

    explicit PatternShape(const BinaryMatrix& m) : rows(m.rows()), cols(m.cols()), row_ones(static_cast<std::size_t>(m.rows())) {
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (m.at(i, j)) row_ones[i].push_back(j);
    }
};

/// Pattern search. Columns are chosen by backtracking in increasing order; for a
/// fixed column choice the rows are chosen greedily (the earliest feasible row is
/// always at least as good as any later one). Optionally pins pattern cell
/// (pin_i, pin_j) onto host cell (pin_r, pin_c).
class PatternMatcher {
public:
    PatternMatcher(const ColumnBits& a, const PatternShape& m) : a_(a), m_(m), cols_(static_cast<std::size_t>(m.cols)), rows_(static_cast<std::size_t>(m.rows)) {}

    std::optional<PatternWitness> find(int pin_i = -1, int pin_j = -1, int pin_r = -1, int pin_c = -1) {
        pin_i_ = pin_i;
        pin_j_ = pin_j;
        pin_r_ = pin_r;
        pin_c_ = pin_c;
        if (m_.rows > a_.rows || m_.cols > a_.cols) return std::nullopt;
        if (choose_col(0, 0)) return PatternWitness{rows_, cols_};
        return std::nullopt;
    }

private:
    bool choose_col(int j, int lo) {
        if (j == m_.cols) return greedy_rows();
        if (j == pin_j_) {
            if (pin_c_ < lo || a_.cols - pin_c_ < m_.cols - j) return false;
            cols_[j] = pin_c_;
            return choose_col(j + 1, pin_c_ + 1);
        }
        int hi = a_.cols - (m_.cols - j);
        if (pin_j_ > j) hi = std::min(hi, pin_c_ - (pin_j_ - j));
        for (int c = lo; c <= hi; ++c) {
            cols_[j] = c;
            if (choose_col(j + 1, c + 1)) return true;
        }
        return false;
    }

    bool row_fits(int r, int i) const {
        for (int j : m_.row_ones[i])
            if (!((a_.col(cols_[j])[r >> 6] >> (r & 63)) & 1U)) return false;
        return true;
    }

    // Lowest row >= lo whose entries cover pattern row i, or -1.
    int lowest_fit(int i, int lo) const {
        const auto& need = m_.row_ones[i];
        for (int w = lo >> 6; w < a_.words; ++w) {
            Mask acc = ~Mask{0};
            for (int j : need) acc &= a_.col(cols_[j])[w];
            if (w == (lo >> 6)) acc &= ~Mask{0} << (lo & 63);
            if (w == a_.words - 1) acc &= low_mask(a_.rows - 64 * w);
            if (acc) return 64 * w + lowest_bit(acc);
        }
        return -1;
    }

    bool greedy_rows() {
        int lo = 0;
        for (int i = 0; i < m_.rows; ++i) {
            int r;
            if (i == pin_i_) {
                if (pin_r_ < lo || !row_fits(pin_r_, i)) return false;
                r = pin_r_;
            } else {
                r = lowest_fit(i, lo);
                if (r < 0) return false;
                if (pin_i_ > i && r > pin_r_ - (pin_i_ - i)) return false;
            }
            if (a_.rows - r < m_.rows - i) return false;
            rows_[i] = r;
            lo = r + 1;
        }
        return true;
    }

    const ColumnBits& a_;
    const PatternShape& m_;
    std::vector<int> cols_, rows_;
    int pin_i_ = -1, pin_j_ = -1, pin_r_ = -1, pin_c_ = -1;
};

}  // namespace detail

/// Strictly increasing rows r_1 < ... and columns c_1 < ... of A with
/// A(r_i, c_j) = 1 whenever M(i, j) = 1; the lexicographically least by columns
/// then rows.
inline std::optional<PatternWitness> contains_pattern(const BinaryMatrix& a, const BinaryMatrix& m) {
    detail::ColumnBits cb(a);
    detail::PatternShape ps(m);
    return detail::PatternMatcher(cb, ps).find();
}

// ---------------------------------------------------------------------------
// Subdigraph containment

namespace detail {

/// Backtracking over injective maps from H (vertices taken in index order) into G
/// with forward checking: after each assignment the domain of every unassigned H
/// vertex is intersected with the matching in/out row of the new image.
class SubdigraphMatcher {
public:
    SubdigraphMatcher(const ArcMatrix& g, const Tournament& h)
        : g_(g), h_(h), n_(g.size()), k_(h.size()), words_((g.size() + 63) / 64),
          dom_(static_cast<std::size_t>(k_ + 1) * k_ * words_), map_(static_cast<std::size_t>(k_), -1) {
        std::vector<int> hout(static_cast<std::size_t>(k_)), gout(static_cast<std::size_t>(n_)), gin(static_cast<std::size_t>(n_));
        for (int u = 0; u < k_; ++u) hout[u] = h.out_degree(u);
        for (int x = 0; x < n_; ++x) {
            gout[x] = g.out_degree(x);
            gin[x] = g.in_degree(x);
        }
        base_.assign(static_cast<std::size_t>(k_) * words_, 0);
        for (int u = 0; u < k_; ++u)
            for (int x = 0; x < n_; ++x)
                if (gout[x] >= hout[u] && gin[x] >= k_ - 1 - hout[u]) base_[u * words_ + (x >> 6)] |= bit(x & 63);
    }

    /// Visits embeddings in lexicographic order of (map[0], map[1], ...); the
    /// visitor returns true to stop. `pins` fixes images of some H vertices.
    template <class Visit>
    bool run(Visit&& visit, const std::vector<std::pair<int, int>>& pins = {}) {
        if (k_ > n_) return false;
        if (k_ == 0) return visit(std::vector<int>{});
        std::copy(base_.begin(), base_.end(), dom_.begin());
        for (auto [u, x] : pins) {
            Mask* d = level(0, u);
            bool ok = (d[x >> 6] >> (x & 63)) & 1U;
            std::fill(d, d + words_, 0);
            if (!ok) return false;
            d[x >> 6] = bit(x & 63);
        }
        return dfs(0, visit);
    }

private:
    Mask* level(int depth, int u) { return dom_.data() + (static_cast<std::size_t>(depth) * k_ + u) * words_; }

    template <class Visit>
    bool dfs(int depth, Visit& visit) {
        if (depth == k_) return visit(map_);
        const Mask* d = level(depth, depth);
        for (int w = 0; w < words_; ++w) {
            for (Mask m = d[w]; m; m &= m - 1) {
                int x = 64 * w + lowest_bit(m);
                if (!propagate(depth, x)) continue;
                map_[depth] = x;
                if (dfs(depth + 1, visit)) return true;
            }
        }
        map_[depth] = -1;
        return false;
    }

    // Fills level depth+1 for the vertices after `depth`; false on a wipe-out.
    bool propagate(int depth, int x) {
        const Mask* out = g_.out_row(x);
        const Mask* in = g_.in_row(x);
        for (int u = depth + 1; u < k_; ++u) {
            const Mask* src = level(depth, u);
            Mask* dst = level(depth + 1, u);
            const Mask* rel = h_.arc(depth, u) ? out : in;
            Mask any = 0;
            for (int w = 0; w < words_; ++w) {
                dst[w] = src[w] & rel[w];
                any |= dst[w];
            }
            dst[x >> 6] &= ~bit(x & 63);
            if (!any || !std::any_of(dst, dst + words_, [](Mask v) { return v != 0; })) return false;
        }
        return true;
    }

    const ArcMatrix& g_;
    const Tournament& h_;
    int n_, k_, words_;
    std::vector<Mask> base_;
    std::vector<Mask> dom_;
    std::vector<int> map_;
};

inline std::optional<EmbeddingWitness> find_embedding(const ArcMatrix& g, const Tournament& h,
                                                      const std::vector<std::pair<int, int>>& pins = {}) {
    std::optional<EmbeddingWitness> out;
    SubdigraphMatcher(g, h).run(
        [&](const std::vector<int>& m) {
            out = EmbeddingWitness{m};
            return true;
        },
        pins);
    return out;
}

/// Copy of H in g that uses the arc x -> y.
inline std::optional<EmbeddingWitness> find_embedding_through(const ArcMatrix& g, const Tournament& h, int x, int y) {
    SubdigraphMatcher matcher(g, h);
    std::optional<EmbeddingWitness> out;
    for (int u = 0; u < h.size() && !out; ++u)
        for (int v = 0; v < h.size() && !out; ++v) {
            if (u == v || !h.arc(u, v)) continue;
            matcher.run(
                [&](const std::vector<int>& m) {
                    out = EmbeddingWitness{m};
                    return true;
                },
                {{u, x}, {v, y}});
        }
    return out;
}

}  // namespace detail

/// Injective f with arc(f(u), f(v)) in G for every arc (u, v) of H; the
/// lexicographically least such map.
inline std::optional<EmbeddingWitness> contains_subdigraph(const SemiCompleteDigraph& g, const Tournament& h) {
    return detail::find_embedding(g.arcs(), h);
}

/// Calls visit(map) for every copy of H in G, in lexicographic order; stops early
/// when visit returns true. Returns the number of copies visited.
template <class Visit>
long long for_each_embedding(const SemiCompleteDigraph& g, const Tournament& h, Visit&& visit) {
    long long count = 0;
    detail::SubdigraphMatcher(g.arcs(), h).run([&](const std::vector<int>& m) {
        ++count;
        return static_cast<bool>(visit(EmbeddingWitness{m}));
    });
    return count;
}

// ---------------------------------------------------------------------------
// Extremal numbers

struct ExtremalResult {
    long long value = 0;      // lower end of the bracket when incomplete
    long long upper = 0;      // equals value when complete
    bool complete = true;
    std::uint64_t nodes_explored = 0;
    std::optional<BinaryMatrix> matrix;              // ex: a maximum M-free matrix
    std::optional<SemiCompleteDigraph> digraph;      // t: a maximum H-free augmentation
    std::vector<std::pair<int, int>> added_arcs;     // t: arcs (j, i) added, 0-based
};

/// Appends zero rows or columns to make M square.
inline BinaryMatrix pad_to_square(const BinaryMatrix& m) {
    const int k = std::max(m.rows(), m.cols());
    BinaryMatrix out(k, k);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.set(i, j, m.at(i, j));
    return out;
}

/// ex(n, M) = 1 + (largest number of 1s in an n x n matrix avoiding M). Non-square
/// patterns are padded with zero lines. If M cannot fit in an n x n matrix at all
/// the value is n^2 + 1.
inline ExtremalResult ex_exact(int n, const BinaryMatrix& pattern, const Caps& caps = {}, const SearchLimits& limits = {}) {
    if (n < 1) throw DomainError("ex(n, M) needs n >= 1");
    check_cap("ex_n", caps.ex_n, n);
    const BinaryMatrix m = pad_to_square(pattern);
    const long long cells = static_cast<long long>(n) * n;
    ExtremalResult res;
    if (m.rows() > n) {
        BinaryMatrix full(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) full.set(r, c, true);
        res.value = res.upper = cells + 1;
        res.matrix = full;
        return res;
    }
    std::vector<std::pair<int, int>> pattern_ones;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j)) pattern_ones.emplace_back(i, j);
    if (pattern_ones.empty()) {
        res.value = res.upper = 0;  // the all-zero matrix already contains M
        return res;
    }

    BinaryMatrix a(n, n);
    detail::ColumnBits cb(a);
    detail::PatternShape ps(m);
    detail::PatternMatcher matcher(cb, ps);
    detail::Budget budget(limits);
    long long best = -1, open_bound = -1;
    BinaryMatrix best_a(n, n);

    auto creates_pattern = [&](int r, int c) {
        for (auto [i, j] : pattern_ones)
            if (matcher.find(i, j, r, c)) return true;
        return false;
    };

    std::function<void(long long, long long)> dfs = [&](long long cell, long long ones) {
        if (ones + (cells - cell) <= best) return;
        if (!budget.tick()) {
            open_bound = std::max(open_bound, ones + (cells - cell));
            return;
        }
        if (cell == cells) {
            best = ones;
            best_a = a;
            return;
        }
        int r = static_cast<int>(cell / n), c = static_cast<int>(cell % n);
        cb.set(r, c, true);
        a.set(r, c, true);
        if (!creates_pattern(r, c)) dfs(cell + 1, ones + 1);
        cb.set(r, c, false);
        a.set(r, c, false);
        dfs(cell + 1, ones);
    };
    dfs(0, 0);

    res.nodes_explored = budget.nodes();
    res.complete = !budget.exhausted();
    res.value = best + 1;
    res.upper = std::max(best, open_bound) + 1;
    res.matrix = best_a;
    return res;
}

namespace detail {

/// Largest set of reversal arcs (j -> i for i < j) that can be added to `base`
/// without creating H. `best` carries across calls so that a series of bases can
/// share one incumbent.
struct AugmentSearch {
    const Tournament& h;
    Budget& budget;
    long long best = -1;
    long long open_bound = -1;
    std::vector<std::pair<int, int>> best_arcs{};
    std::optional<SemiCompleteDigraph> best_graph{};

    void run(const Tournament& base) {
        ArcMatrix g = base.arcs();
        std::vector<std::pair<int, int>> cand;  // (from, to) arcs not yet present
        for (int i = 0; i < base.size(); ++i)
            for (int j = i + 1; j < base.size(); ++j) {
                if (base.arc(i, j))
                    cand.emplace_back(j, i);
                else
                    cand.emplace_back(i, j);
            }
        std::vector<std::pair<int, int>> chosen;
        const long long total = static_cast<long long>(cand.size());
        std::function<void(long long)> dfs = [&](long long idx) {
            long long have = static_cast<long long>(chosen.size());
            if (have + (total - idx) <= best) return;
            if (!budget.tick()) {
                open_bound = std::max(open_bound, have + (total - idx));
                return;
            }
            if (idx == total) {
                best = have;
                best_arcs = chosen;
                best_graph = SemiCompleteDigraph(g);
                return;
            }
            auto [x, y] = cand[idx];
            g.set(x, y);
            if (!find_embedding_through(g, h, x, y)) {
                chosen.emplace_back(x, y);
                dfs(idx + 1);
                chosen.pop_back();
            }
            g.set(x, y, false);
            dfs(idx + 1);
        };
        dfs(0);
    }
};

}  // namespace detail

/// t(T_n, H) = 1 + (largest number of bidirectional pairs in an H-free
/// augmentation of T_n); 0 when T_n already contains H.
inline ExtremalResult t_transitive_exact(int n, const Tournament& h, const Caps& caps = {}, const SearchLimits& limits = {}) {
    if (n < h.size()) throw DomainError("t(T_n, H) needs n >= |H|");
    check_cap("t_transitive_n", caps.t_transitive_n, n);
    const Tournament tn = make_transitive(n);
    ExtremalResult res;
    if (contains_subdigraph(tn, h)) return res;
    detail::Budget budget(limits);
    detail::AugmentSearch search{h, budget};
    search.run(tn);
    res.nodes_explored = budget.nodes();
    res.complete = !budget.exhausted();
    res.value = search.best + 1;
    res.upper = std::max(search.best, search.open_bound) + 1;
    res.digraph = search.best_graph;
    res.added_arcs = search.best_arcs;
    return res;
}

/// Relabelling-canonical code: least from_code index over all n! relabellings.
inline std::uint64_t canonical_code(const Tournament& t) {
    const int n = t.size();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t c = 0;
        int k = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++k)
                if (t.arc(perm[i], perm[j])) c |= std::uint64_t{1} << k;
        best = std::min(best, c);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// Canonical representatives of the n-vertex tournaments up to isomorphism.
inline std::vector<Tournament> tournaments_up_to_isomorphism(int n) {
    std::vector<Tournament> out;
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
        Tournament t = Tournament::from_code(n, code);
        if (canonical_code(t) == code) out.push_back(std::move(t));
    }
    return out;
}

/// t(n, H) = 1 + max over n-vertex H-free semi-complete digraphs of the number of
/// bidirectional pairs; base tournaments are enumerated up to isomorphism and
/// share one branch-and-bound incumbent. 0 when every base already contains H.
inline ExtremalResult t_general_exact(int n, const Tournament& h, const Caps& caps = {}, const SearchLimits& limits = {}) {
    if (n < h.size()) throw DomainError("t(n, H) needs n >= |H|");
    check_cap("t_general_n", caps.t_general_n, n);
    detail::Budget budget(limits);
    detail::AugmentSearch search{h, budget};
    for (const Tournament& base : tournaments_up_to_isomorphism(n)) {
        if (contains_subdigraph(base, h)) continue;
        search.run(base);
    }
    ExtremalResult res;
    res.nodes_explored = budget.nodes();
    res.complete = !budget.exhausted();
    res.value = search.best + 1;
    res.upper = std::max(search.best, search.open_bound) + 1;
    res.digraph = search.best_graph;
    res.added_arcs = search.best_arcs;
    return res;
}

// ---------------------------------------------------------------------------
// Constructive finders

/// h vertices inducing a transitive subtournament, source first: repeatedly take
/// a vertex of largest out-degree in the candidate set (smallest index on ties)
/// and continue inside its out-neighbourhood. Always succeeds when n >= 2^(h-1).
inline std::optional<std::vector<int>> find_transitive_subtournament(const Tournament& g, int h) {
    if (h < 0) throw DomainError("h must be nonnegative");
    std::vector<int> chain;
    std::vector<int> cand(static_cast<std::size_t>(g.size()));
    std::iota(cand.begin(), cand.end(), 0);
    while (static_cast<int>(chain.size()) < h && !cand.empty()) {
        int pick = cand[0], best = -1;
        for (int v : cand) {
            int d = 0;
            for (int u : cand) d += g.arc(v, u);
            if (d > best) {
                best = d;
                pick = v;
            }
        }
        chain.push_back(pick);
        std::vector<int> next;
        for (int u : cand)
            if (g.arc(pick, u)) next.push_back(u);
        cand = std::move(next);
    }
    if (static_cast<int>(chain.size()) < h) return std::nullopt;
    return chain;
}

struct Biclique {
    std::vector<int> a, b;
};

/// Disjoint A (|A| = a) and B (|B| = b) with every pair across bidirectional,
/// optionally with A drawn from `within->first` and B from `within->second`.
inline std::optional<Biclique> find_bidirectional_biclique(
    const SemiCompleteDigraph& g, int a, int b,
    const std::optional<std::pair<std::vector<int>, std::vector<int>>>& within = std::nullopt) {
    const int n = g.size();
    if (a < 0 || b < 0) throw DomainError("biclique sides must be nonnegative");
    std::vector<int> left, right;
    if (within) {
        left = within->first;
        right = within->second;
        std::sort(left.begin(), left.end());
        std::sort(right.begin(), right.end());
    } else {
        left.resize(static_cast<std::size_t>(n));
        std::iota(left.begin(), left.end(), 0);
        right = left;
    }
    std::vector<int> chosen;
    std::optional<Biclique> out;
    auto common = [&](const std::vector<int>& as) {
        std::vector<int> c;
        for (int y : right) {
            if (std::find(as.begin(), as.end(), y) != as.end()) continue;
            bool ok = true;
            for (int x : as)
                if (!g.bidirectional(x, y)) {
                    ok = false;
                    break;
                }
            if (ok) c.push_back(y);
        }
        return c;
    };
    std::function<bool(std::size_t)> dfs = [&](std::size_t from) {
        auto c = common(chosen);
        if (static_cast<int>(c.size()) < b) return false;
        if (static_cast<int>(chosen.size()) == a) {
            c.resize(static_cast<std::size_t>(b));
            out = Biclique{chosen, c};
            return true;
        }
        for (std::size_t i = from; i < left.size(); ++i) {
            chosen.push_back(left[i]);
            if (dfs(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    dfs(0);
    return out;
}

}  // namespace tourn
