#pragma once

// Matrices and tournaments: the M* encoding, its p-fold blow-up, the interval
// digraph of a host matrix, and the dense interval pair recursion.

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "classify.hpp"
#include "construct.hpp"
#include "digraph.hpp"

namespace tourn {

/// M* on 2k vertices: l_i = i, r_j = k + j (0-based).
struct MStarTournament {
    Tournament tournament;
    std::vector<int> left, right;
    BinaryMatrix source;
    bool every_left_hit = false;    // every l_i has some r_j pointing to it
    bool every_right_hits = false;  // every r_j points to some l_i

    int l(int i) const { return left[i]; }
    int r(int j) const { return right[j]; }
};

namespace detail {

inline void require_mstar_input(const BinaryMatrix& m) {
    if (m.rows() != m.cols()) throw DomainError("M* needs a square matrix");
    if (m.rows() < 1) throw DomainError("M* needs k >= 1");
    for (int i = 0; i < m.rows(); ++i)
        if (m.row_is_zero(i))
            throw DomainError("row " + std::to_string(i + 1) + " is all zero; add a 1 to every zero line first");
    for (int j = 0; j < m.cols(); ++j)
        if (m.col_is_zero(j))
            throw DomainError("column " + std::to_string(j + 1) + " is all zero; add a 1 to every zero line first");
}

// arc(u, v) for u < v inside one M* block laid out as l_0..l_{k-1}, r_0..r_{k-1}.
inline bool mstar_arc(const BinaryMatrix& m, int u, int v) {
    const int k = m.rows();
    if (v < k || u >= k) return true;  // l_u -> l_v, r -> r in index order
    return !m.at(u, v - k);            // l_i -> r_j iff M(i, j) = 0
}

}  // namespace detail

/// r_j -> l_i iff M(i, j) = 1, l_i -> r_j otherwise; l_i -> l_j and r_i -> r_j for i < j.
inline MStarTournament matrix_to_mstar(const BinaryMatrix& m) {
    detail::require_mstar_input(m);
    const int k = m.rows();
    MStarTournament out;
    out.tournament = Tournament::from_predicate(2 * k, [&](int u, int v) { return detail::mstar_arc(m, u, v); });
    for (int i = 0; i < k; ++i) {
        out.left.push_back(i);
        out.right.push_back(k + i);
    }
    out.source = m;
    out.every_left_hit = out.every_right_hits = true;
    for (int i = 0; i < k; ++i) {
        bool hit = false, hits = false;
        for (int j = 0; j < k; ++j) {
            hit = hit || out.tournament.arc(k + j, i);
            hits = hits || out.tournament.arc(k + i, j);
        }
        out.every_left_hit = out.every_left_hit && hit;
        out.every_right_hits = out.every_right_hits && hits;
    }
    return out;
}

/// M*_p on 2kp vertices. Block s occupies [2ks, 2k(s+1)) with the M* layout. For
/// s < t: L_s -> L_t, R_s -> R_t, L_s -> R_t, and also L_t -> R_s, so every arc
/// from the R side to the L side lies inside a block.
inline Tournament mstar_blowup(const BinaryMatrix& m, int p) {
    detail::require_mstar_input(m);
    if (p < 1) throw DomainError("blow-up needs p >= 1");
    const int k = m.rows(), w = 2 * k;
    return Tournament::from_predicate(w * p, [&](int u, int v) {
        const int su = u / w, sv = v / w, iu = u % w, iv = v % w;
        if (su == sv) return detail::mstar_arc(m, iu, iv);
        const bool lu = iu < k, lv = iv < k;
        if (lu == lv) return true;  // same side: earlier block first
        return lu;                  // across sides: L -> R
    });
}

/// Vertex index of l_{s,i} and r_{s,j} in mstar_blowup(M, p).
inline int blowup_left(int k, int s, int i) { return 2 * k * s + i; }
inline int blowup_right(int k, int s, int j) { return 2 * k * s + k + j; }

/// Least even p with (p/2)^2 - p + 1 > k (p/2)^(2 - 1/k). With q = p/2 the
/// condition reads (q - 1)^2 / q^(2 - 1/k) > k; the left side increases for q > 1,
/// so q is found by doubling then bisection, evaluated in long double.
inline long long minimal_p(int k) {
    if (k < 1) throw DomainError("minimal_p needs k >= 1");
    const long double e = 2.0L - 1.0L / k;
    auto holds = [&](long double q) {
        long double lhs = (q - 1) * (q - 1);
        long double rhs = k * std::pow(q, e);
        return lhs > rhs;
    };
    long double hi = 2;
    while (!holds(hi)) {
        hi *= 2;
        if (hi > 4.0e18L) throw DomainError("minimal_p overflows 64-bit for k = " + std::to_string(k));
    }
    long long lo_q = static_cast<long long>(hi / 2), hi_q = static_cast<long long>(hi);  // holds(hi_q)
    while (hi_q - lo_q > 1) {
        long long mid = lo_q + (hi_q - lo_q) / 2;
        if (holds(static_cast<long double>(mid)))
            hi_q = mid;
        else
            lo_q = mid;
    }
    if (lo_q >= 1 && holds(static_cast<long double>(lo_q))) hi_q = lo_q;
    return 2 * hi_q;
}

/// T_2n with {i, n + j} bidirectional exactly when A(i, j) = 1.
inline SemiCompleteDigraph matrix_to_interval_digraph(const BinaryMatrix& a) {
    if (a.rows() != a.cols()) throw DomainError("interval digraph needs a square matrix");
    const int n = a.rows();
    ArcMatrix g(2 * n);
    for (int u = 0; u < 2 * n; ++u)
        for (int v = u + 1; v < 2 * n; ++v) g.set(u, v);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a.at(i, j)) g.set(n + j, i);
    return SemiCompleteDigraph(std::move(g));
}

/// Image of M* in matrix_to_interval_digraph(A) given a pattern copy of M in A:
/// l_i -> rows[i], r_j -> n + cols[j].
inline EmbeddingWitness mstar_copy_from_pattern(int n, const PatternWitness& w) {
    EmbeddingWitness e;
    for (int r : w.rows) e.map.push_back(r);
    for (int c : w.cols) e.map.push_back(n + c);
    return e;
}

/// Pattern copy of M in A read off a copy of M* (k = |M|) in the interval digraph
/// on 2n vertices, when every L-image precedes every R-image.
inline std::optional<PatternWitness> pattern_from_mstar_copy(int n, int k, const EmbeddingWitness& e) {
    if (static_cast<int>(e.map.size()) != 2 * k) throw DomainError("copy size differs from 2k");
    int max_l = -1, min_r = std::numeric_limits<int>::max();
    for (int i = 0; i < k; ++i) {
        max_l = std::max(max_l, e.map[i]);
        min_r = std::min(min_r, e.map[k + i]);
    }
    if (max_l >= min_r) return std::nullopt;
    PatternWitness w;
    for (int i = 0; i < k; ++i) {
        if (e.map[i] >= n || e.map[k + i] < n) return std::nullopt;
        w.rows.push_back(e.map[i]);
        w.cols.push_back(e.map[k + i] - n);
    }
    return w;
}

struct IntervalPair {
    int x_begin = 0, y_begin = 0, length = 0;  // X = [x_begin, x_begin + length), Y likewise
    long long count = 0;                       // bidirectional pairs between X and Y
    double threshold = 0;

    std::vector<int> x() const { return range(x_begin); }
    std::vector<int> y() const { return range(y_begin); }

private:
    std::vector<int> range(int b) const {
        std::vector<int> v;
        for (int i = 0; i < length; ++i) v.push_back(b + i);
        return v;
    }
};

/// log2 clamped below at 1.
inline double clamped_log2(double m) { return m <= 2 ? 1.0 : std::log2(m); }

/// Halving recursion over intervals of the T_n order: the interval I splits into
/// X (its first floor(|I|/2) vertices) and Y (the next floor(|I|/2)); the pair is
/// returned when X and Y share at least m (log2 m)^p bidirectional pairs, with
/// m = |X|. Otherwise both halves are searched, left first.
inline std::optional<IntervalPair> find_dense_interval_pair(const SemiCompleteDigraph& g, int p) {
    if (p < 0) throw DomainError("p must be nonnegative");
    if (!g.contains_transitive_order()) throw DomainError("digraph is not built over T_n in its vertex order");
    std::optional<IntervalPair> out;
    std::function<bool(int, int)> visit = [&](int lo, int len) {
        if (len < 2) return false;
        const int m = len / 2;
        IntervalPair cand{lo, lo + m, m, 0, static_cast<double>(m) * std::pow(clamped_log2(m), p)};
        for (int x = lo; x < lo + m; ++x)
            for (int y = lo + m; y < lo + 2 * m; ++y) cand.count += g.bidirectional(x, y);
        if (static_cast<double>(cand.count) >= cand.threshold) {
            out = cand;
            return true;
        }
        return visit(lo, m) || visit(lo + m, len - m);
    };
    visit(0, g.size());
    return out;
}

/// The two matrices of the n log n and n log n log log n lower bounds.
inline std::pair<BinaryMatrix, BinaryMatrix> figure1_matrices() {
    BinaryMatrix m1 = BinaryMatrix::from_rows({"110", "100", "001"});
    BinaryMatrix m2 = BinaryMatrix::from_rows({"01011", "00101", "01000", "10001", "00001"});
    return {m1, m2};
}

}  // namespace tourn
