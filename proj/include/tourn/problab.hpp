#pragma once

// Random orientations, edge expansion, expander extraction, t-gap sampling and
// Monte Carlo estimates over D_F.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "classify.hpp"
#include "construct.hpp"
#include "digraph.hpp"
#include "reduce.hpp"
#include "rng.hpp"
#include "search.hpp"

namespace tourn {

/// Resolves each bidirectional pair {i, j} (i < j, lexicographic order) by one
/// stream bit: set keeps i -> j, clear keeps j -> i.
inline Tournament sample_orientation(const SemiCompleteDigraph& f, std::uint64_t seed) {
    CounterRng rng(seed);
    return Tournament::from_predicate(f.size(), [&](int i, int j) {
        if (f.bidirectional(i, j)) return rng.bit();
        return f.arc(i, j);
    });
}

// ---------------------------------------------------------------------------
// Edge expansion

struct ExpansionReport {
    double value = std::numeric_limits<double>::infinity();  // min e(S, V-S)/|S| over 1 <= |S| <= n/2
    std::vector<int> argmin_set;
    long long cut_edges = 0;  // e(argmin_set, complement)
    bool exact = true;
    /// Certified lower bound: max(0, min degree - floor(n/2) + 1). Equals value
    /// for complete graphs.
    double lower_bound = 0;
};

namespace detail {

inline long long cut_size(const UndirectedOrderedGraph& u, const std::vector<int>& s) {
    std::vector<char> in(static_cast<std::size_t>(u.size()), 0);
    for (int v : s) in[v] = 1;
    long long c = 0;
    for (auto [a, b] : u.edges()) c += in[a] != in[b];
    return c;
}

inline double degree_lower_bound(const UndirectedOrderedGraph& u) {
    const int n = u.size();
    if (n < 2) return std::numeric_limits<double>::infinity();
    int dmin = n;
    for (int v = 0; v < n; ++v) dmin = std::min(dmin, u.degree(v));
    return std::max(0, dmin - n / 2 + 1);
}

}  // namespace detail

/// Edge expansion of an undirected graph. Exhaustive (Gray-code walk over all
/// subsets) when n <= caps.expansion; closed form ceil(n/2) for complete graphs.
/// Larger graphs get the minimum over `samples` random cuts, which bounds the
/// expansion from above, and are marked exact = false. Ties prefer the smaller
/// set, then the smaller bitmask.
inline ExpansionReport expansion_exact(const UndirectedOrderedGraph& u, const Caps& caps = {},
                                       int samples = 4096, std::uint64_t seed = 0) {
    const int n = u.size();
    ExpansionReport rep;
    rep.lower_bound = detail::degree_lower_bound(u);
    if (n < 2) return rep;
    const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    if (u.edge_count() == pairs) {
        const int half = n / 2;
        for (int v = 0; v < half; ++v) rep.argmin_set.push_back(v);
        rep.cut_edges = static_cast<long long>(half) * (n - half);
        rep.value = n - half;
        return rep;
    }
    if (n <= std::min(caps.expansion, 62)) {
        std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
        for (auto [a, b] : u.edges()) {
            adj[a] |= bit(b);
            adj[b] |= bit(a);
        }
        // Gray-code walk: step k flips vertex ctz(k).
        Mask s = 0, best_set = 0;
        long long cut = 0, best_cut = 0;
        int size = 0, best_size = 0;
        const std::uint64_t steps = (std::uint64_t{1} << n);
        for (std::uint64_t k = 1; k < steps; ++k) {
            const int v = lowest_bit(k);
            const Mask b = bit(v);
            const long long deg = popcount(adj[v]);
            const long long inside = popcount(adj[v] & s);
            if (s & b) {
                s &= ~b;
                --size;
                cut += 2 * inside - deg;
            } else {
                cut += deg - 2 * inside;
                s |= b;
                ++size;
            }
            if (size < 1 || 2 * size > n) continue;
            bool better;
            if (best_size == 0) {
                better = true;
            } else {
                const long long lhs = cut * best_size, rhs = best_cut * size;
                better = lhs < rhs || (lhs == rhs && (size < best_size || (size == best_size && s < best_set)));
            }
            if (better) {
                best_set = s;
                best_cut = cut;
                best_size = size;
            }
        }
        rep.argmin_set = detail::bits_of(best_set);
        rep.cut_edges = best_cut;
        rep.value = static_cast<double>(best_cut) / best_size;
        return rep;
    }
    // Sampled cuts: sizes cycle through 1..n/2, members by partial shuffle.
    rep.exact = false;
    CounterRng rng(seed);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < samples; ++i) {
        std::iota(perm.begin(), perm.end(), 0);
        const int size = 1 + i % (n / 2);
        for (int t = 0; t < size; ++t) std::swap(perm[t], perm[t + rng.below(static_cast<std::uint64_t>(n - t))]);
        std::vector<int> s(perm.begin(), perm.begin() + size);
        std::sort(s.begin(), s.end());
        long long c = detail::cut_size(u, s);
        double val = static_cast<double>(c) / size;
        if (val < rep.value) {
            rep.value = val;
            rep.argmin_set = s;
            rep.cut_edges = c;
        }
    }
    return rep;
}

/// Expansion of the undirected graph of bidirectional pairs.
inline ExpansionReport expansion_exact(const SemiCompleteDigraph& g, const Caps& caps = {}) {
    return expansion_exact(bidirectional_graph(g), caps);
}

// ---------------------------------------------------------------------------
// Expander extraction

enum class ExtractionMode {
    strict,   // stop when neither side of a violating cut keeps the density bound
    relaxed,  // descend into the denser side anyway and record that the bound failed
};

struct ExtractionStep {
    int size = 0;             // m_i
    long long edges = 0;
    double threshold = 0;     // b (log2 m_i)^b
    double expansion = 0;
    std::vector<int> cut;     // violating set (original labels), empty at the last step
    bool density_held = true; // the chosen side met b x (log2 x)^(b+1)
};

struct ExtractionResult {
    bool found = false;
    std::vector<int> vertices;        // original labels, ascending
    UndirectedOrderedGraph subgraph;  // induced and relabelled in order
    double threshold = 0;             // b (log2 m)^b for the final m
    ExpansionReport certificate;      // expansion of the final subgraph
    bool certified = false;           // certificate is exact and meets the threshold
    bool input_in_regime = false;     // |E| >= b n (log2 n)^(b+1)
    bool regime_held = true;          // every step met the density bound
    std::vector<ExtractionStep> steps;
    std::string failure;
};

inline double expander_threshold(double b, int m) { return b * std::pow(clamped_log2(m), b); }
inline double density_bound(double b, int m) { return m < 1 ? 0.0 : b * m * std::pow(clamped_log2(m), b + 1); }

/// Repeatedly: stop if the current graph is a b (log2 m)^b expander; otherwise take
/// a least-expanding set X (|X| <= m/2) and continue inside X if it spans at least
/// b x (log2 x)^(b+1) edges, else inside the complement if that spans
/// b (m-x) (log2 (m-x))^(b+1) edges.
inline ExtractionResult extract_expander(const UndirectedOrderedGraph& u, double b,
                                         ExtractionMode mode = ExtractionMode::strict, const Caps& caps = {}) {
    if (!(b > 0)) throw DomainError("b must be positive");
    ExtractionResult res;
    const int n = u.size();
    res.input_in_regime = u.edge_count() >= density_bound(b, n);
    std::vector<int> cur(static_cast<std::size_t>(n));
    std::iota(cur.begin(), cur.end(), 0);
    for (;;) {
        UndirectedOrderedGraph sub = u.compressed(cur);
        const int m = static_cast<int>(cur.size());
        ExtractionStep step;
        step.size = m;
        step.edges = sub.edge_count();
        step.threshold = expander_threshold(b, m);
        ExpansionReport rep = expansion_exact(sub, caps);
        step.expansion = rep.value;
        if (rep.value >= step.threshold || m < 2) {
            res.steps.push_back(step);
            res.found = true;
            res.vertices = cur;
            res.subgraph = sub;
            res.threshold = step.threshold;
            res.certificate = rep;
            res.certified = rep.exact && rep.value >= step.threshold;
            return res;
        }
        std::vector<int> x, rest;
        std::vector<char> in(static_cast<std::size_t>(m), 0);
        for (int v : rep.argmin_set) in[v] = 1;
        for (int v = 0; v < m; ++v) (in[v] ? x : rest).push_back(v);
        for (int v : x) step.cut.push_back(cur[v]);
        const long long ex = sub.compressed(x).edge_count();
        const long long er = sub.compressed(rest).edge_count();
        const bool x_ok = ex >= density_bound(b, static_cast<int>(x.size()));
        const bool r_ok = er >= density_bound(b, static_cast<int>(rest.size()));
        const std::vector<int>* next = nullptr;
        if (x_ok) {
            next = &x;
        } else if (r_ok) {
            next = &rest;
        } else {
            step.density_held = false;
            res.regime_held = false;
            if (mode == ExtractionMode::strict) {
                res.steps.push_back(step);
                res.failure = "neither side of the cut keeps the density bound at m = " + std::to_string(m);
                return res;
            }
            const double dx = static_cast<double>(ex) / static_cast<double>(x.size());
            const double dr = static_cast<double>(er) / static_cast<double>(rest.size());
            next = dx > dr ? &x : &rest;
        }
        res.steps.push_back(step);
        std::vector<int> nxt;
        for (int v : *next) nxt.push_back(cur[v]);
        cur = std::move(nxt);
    }
}

// ---------------------------------------------------------------------------
// t-gap sampling

struct TGapSample {
    std::vector<int> vertices;      // selected positions, ascending
    UndirectedOrderedGraph induced; // on the selected positions, relabelled in order
    std::vector<std::pair<int, int>> edges;  // induced edges in original positions
};

/// Positions t..n-t+1 (1-based) are scanned in order; a position is skipped if one
/// of the previous t-1 positions was selected, otherwise selected with probability
/// 1/t.
inline TGapSample sample_tgap(const UndirectedOrderedGraph& g, int t, std::uint64_t seed) {
    if (t < 1) throw DomainError("t must be positive");
    const int n = g.size();
    CounterRng rng(seed);
    TGapSample out;
    int last = std::numeric_limits<int>::min() / 2;
    for (int i = t - 1; i <= n - t; ++i) {
        if (i - last < t) continue;
        if (rng.below(static_cast<std::uint64_t>(t)) == 0) {
            out.vertices.push_back(i);
            last = i;
        }
    }
    out.induced = g.compressed(out.vertices);
    for (auto [a, b] : out.induced.edges()) out.edges.emplace_back(out.vertices[a], out.vertices[b]);
    return out;
}

// ---------------------------------------------------------------------------
// Monte Carlo

enum class Event { not_prime, q5_member, transitive, regular, iso_circulant };

inline const char* event_name(Event e) {
    switch (e) {
        case Event::not_prime: return "not_prime";
        case Event::q5_member: return "q5_member";
        case Event::transitive: return "transitive";
        case Event::regular: return "regular";
        case Event::iso_circulant: return "iso_circulant";
    }
    return "?";
}

inline Event parse_event(const std::string& s) {
    for (Event e : {Event::not_prime, Event::q5_member, Event::transitive, Event::regular, Event::iso_circulant})
        if (s == event_name(e)) return e;
    throw DomainError("unknown event '" + s + "'");
}

inline bool event_holds(Event e, const Tournament& t, const Caps& caps) {
    switch (e) {
        case Event::not_prime: return !is_prime(t, caps);
        case Event::q5_member: return q5_member(t, caps).member;
        case Event::transitive: return is_transitive(t);
        case Event::regular: return is_regular(t);
        case Event::iso_circulant: return circulant_isomorphism(t).has_value();
    }
    return false;
}

inline constexpr double kZ99 = 2.5758293035489;  // two-sided 99% normal quantile

struct EstimateReport {
    std::string event;
    long long trials = 0;     // trials actually completed
    long long successes = 0;
    double estimate = 0;
    double half_width = 0;    // kZ99 * sqrt(estimate (1 - estimate) / trials)
    std::uint64_t seed = 0;
    bool aborted = false;     // a predicate exceeded its cap
    std::string error;
};

inline double half_width_99(long long successes, long long trials) {
    if (trials <= 0) return 0;
    const double p = static_cast<double>(successes) / static_cast<double>(trials);
    return kZ99 * std::sqrt(p * (1 - p) / static_cast<double>(trials));
}

/// Trial i draws sample_orientation(F, derive_seed(seed, i)). With threads > 1 the
/// trials are split into contiguous chunks; counts do not depend on the split. If a
/// predicate exceeds its cap the report covers the trials before the first failure.
template <class Pred>
EstimateReport estimate_with(const SemiCompleteDigraph& f, const std::string& name, Pred pred, long long trials,
                             std::uint64_t seed, int threads = 1) {
    if (trials < 0) throw DomainError("trials must be nonnegative");
    // 0 = false, 1 = true, 2 = cap exceeded
    std::vector<std::uint8_t> outcome(static_cast<std::size_t>(trials), 0);
    std::vector<std::string> errors(static_cast<std::size_t>(std::max(1, threads)));
    auto work = [&](int w, long long lo, long long hi) {
        for (long long i = lo; i < hi; ++i) {
            try {
                outcome[i] = pred(sample_orientation(f, derive_seed(seed, static_cast<std::uint64_t>(i)))) ? 1 : 0;
            } catch (const CapExceeded& e) {
                outcome[i] = 2;
                if (errors[w].empty()) errors[w] = e.what();
                return;
            }
        }
    };
    threads = std::max(1, threads);
    if (threads == 1 || trials < 2) {
        work(0, 0, trials);
    } else {
        std::vector<std::thread> pool;
        const long long chunk = (trials + threads - 1) / threads;
        for (int w = 0; w < threads; ++w) {
            long long lo = w * chunk, hi = std::min(trials, lo + chunk);
            if (lo < hi) pool.emplace_back(work, w, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    EstimateReport rep;
    rep.event = name;
    rep.seed = seed;
    for (long long i = 0; i < trials; ++i) {
        if (outcome[i] == 2) {
            rep.aborted = true;
            for (auto& e : errors)
                if (!e.empty()) {
                    rep.error = e;
                    break;
                }
            break;
        }
        ++rep.trials;
        rep.successes += outcome[i];
    }
    if (rep.trials > 0) rep.estimate = static_cast<double>(rep.successes) / static_cast<double>(rep.trials);
    rep.half_width = half_width_99(rep.successes, rep.trials);
    return rep;
}

inline EstimateReport estimate_probability(const SemiCompleteDigraph& f, Event event, long long trials,
                                           std::uint64_t seed, const Caps& caps = {}, int threads = 1) {
    return estimate_with(f, event_name(event), [&](const Tournament& t) { return event_holds(event, t, caps); },
                         trials, seed, threads);
}

// ---------------------------------------------------------------------------
// Sparse-family certificate search

enum class Family { q5 };

inline bool family_member(Family fam, const Tournament& t, const Caps& caps) {
    switch (fam) {
        case Family::q5: return q5_member(t, caps).member;
    }
    return false;
}

struct CertificateReport {
    bool extraction_ok = false;
    ExtractionResult extraction;
    std::vector<int> vertices;  // V' in G
    long long trials_run = 0;
    long long prime_count = 0;
    long long member_count = 0;
    std::optional<Tournament> certificate;  // prime, outside the family
    std::uint64_t certificate_seed = 0;
    bool certificate_contains_h = false;    // consistency: a certificate must contain H when the family is H-useful
    std::string note;
};

/// Extract an expander from the bidirectional graph of G, restrict G to it, then
/// sample orientations until one is prime and outside the family. The first such
/// sample is the certificate; whether it contains H is reported.
inline CertificateReport sparse_certificate_search(const SemiCompleteDigraph& g, const Tournament& h, Family fam,
                                                   double b, long long trials, std::uint64_t seed,
                                                   ExtractionMode mode = ExtractionMode::strict,
                                                   const Caps& caps = {}) {
    CertificateReport rep;
    rep.extraction = extract_expander(bidirectional_graph(g), b, mode, caps);
    if (!rep.extraction.found) {
        rep.note = "extraction failed: " + rep.extraction.failure;
        return rep;
    }
    if (rep.extraction.vertices.size() < 2 || rep.extraction.subgraph.edge_count() == 0) {
        rep.note = "extraction failed: extracted subgraph has no bidirectional pairs";
        return rep;
    }
    rep.extraction_ok = true;
    rep.vertices = rep.extraction.vertices;
    const SemiCompleteDigraph sub = g.induced(rep.vertices);
    for (long long i = 0; i < trials; ++i) {
        const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(i));
        Tournament t = sample_orientation(sub, s);
        ++rep.trials_run;
        const bool prime = is_prime(t, caps);
        const bool member = family_member(fam, t, caps);
        rep.prime_count += prime;
        rep.member_count += member;
        if (prime && !member) {
            rep.certificate_contains_h = contains_subdigraph(t, h).has_value();
            rep.certificate = std::move(t);
            rep.certificate_seed = s;
            rep.note = rep.certificate_contains_h ? "certificate contains H (consistent with usefulness)"
                                                  : "certificate is H-free, prime and outside the family";
            return rep;
        }
    }
    rep.note = "no prime non-member among the samples";
    return rep;
}

}  // namespace tourn
