#include <gtest/gtest.h>

#include "tourn/construct.hpp"
#include "tourn/naive.hpp"
#include "tourn/problab.hpp"

using namespace tourn;

namespace {

UndirectedOrderedGraph complete_graph(int n, int offset = 0, int total = -1) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(offset + i, offset + j);
    return UndirectedOrderedGraph(total < 0 ? n : total, e);
}

UndirectedOrderedGraph two_cliques(int k) {
    std::vector<std::pair<int, int>> e;
    for (int c = 0; c < 2; ++c)
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) e.emplace_back(c * k + i, c * k + j);
    return UndirectedOrderedGraph(2 * k, e);
}

}  // namespace

TEST(Orientation, Reproducible) {
    auto f = SemiCompleteDigraph::complete(12);
    EXPECT_EQ(sample_orientation(f, 5), sample_orientation(f, 5));
    EXPECT_NE(sample_orientation(f, 5), sample_orientation(f, 6));
}

TEST(Orientation, KeepsOneWayArcs) {
    auto f = transitive_plus(random_ordered_graph(10, 12, 3));
    Tournament t = sample_orientation(f, 9);
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j)
            if (i != j && t.arc(i, j)) { EXPECT_TRUE(f.arc(i, j)); }
}

TEST(Orientation, NoBidiIsIdentity) {
    Tournament base = random_tournament(9, 4);
    for (std::uint64_t s = 0; s < 20; ++s) EXPECT_EQ(sample_orientation(base, s), base);
}

TEST(Orientation, BitOrderIsLexicographic) {
    // with every pair bidirectional, bit k of the stream decides the k-th pair
    auto f = SemiCompleteDigraph::complete(5);
    CounterRng rng(77);
    Tournament t = sample_orientation(f, 77);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) EXPECT_EQ(t.arc(i, j), rng.bit());
}

TEST(Expansion, Examples) {
    EXPECT_DOUBLE_EQ(expansion_exact(complete_graph(4)).value, 2);
    EXPECT_DOUBLE_EQ(expansion_exact(UndirectedOrderedGraph(3, {{0, 1}, {1, 2}})).value, 1);
    EXPECT_DOUBLE_EQ(expansion_exact(UndirectedOrderedGraph(4, {})).value, 0);
}

TEST(Expansion, CompleteClosedForm) {
    for (int n = 2; n <= 40; ++n) EXPECT_DOUBLE_EQ(expansion_exact(complete_graph(n)).value, n - n / 2);
}

TEST(Expansion, MatchesNaive) {
    for (std::uint64_t s = 0; s < 150; ++s) {
        const int n = 2 + static_cast<int>(s % 11);
        auto g = random_ordered_graph(n, static_cast<int>(s % (n * (n - 1) / 2 + 1)), s);
        auto rep = expansion_exact(g);
        EXPECT_TRUE(rep.exact);
        EXPECT_NEAR(rep.value, naive::expansion(g), 1e-12);
        EXPECT_EQ(detail::cut_size(g, rep.argmin_set), rep.cut_edges);
        EXPECT_LE(rep.lower_bound, rep.value + 1e-12);
    }
}

TEST(Expansion, SampledAboveCapIsUpperBound) {
    Caps caps;
    caps.expansion = 8;
    auto g = random_ordered_graph(12, 30, 8);
    auto sampled = expansion_exact(g, caps);
    EXPECT_FALSE(sampled.exact);
    EXPECT_GE(sampled.value + 1e-12, expansion_exact(g).value);
}

TEST(Extract, ExpanderReturnedAtOnce) {
    auto r = extract_expander(complete_graph(12), 1);
    ASSERT_TRUE(r.found);
    EXPECT_EQ(r.steps.size(), 1U);
    EXPECT_EQ(r.vertices.size(), 12U);
    EXPECT_TRUE(r.certified);
}

TEST(Extract, TwoCliquesEndsInOne) {
    auto r = extract_expander(two_cliques(8), 1, ExtractionMode::relaxed);
    ASSERT_TRUE(r.found);
    EXPECT_EQ(r.vertices.size(), 8U);
    const bool first = r.vertices.front() == 0 && r.vertices.back() == 7;
    const bool second = r.vertices.front() == 8 && r.vertices.back() == 15;
    EXPECT_TRUE(first || second);
    EXPECT_TRUE(r.certified);
    EXPECT_DOUBLE_EQ(r.steps.front().expansion, 0);
}

TEST(Extract, StrictStopsOutsideRegime) {
    auto r = extract_expander(two_cliques(8), 1, ExtractionMode::strict);
    EXPECT_FALSE(r.input_in_regime);
    EXPECT_FALSE(r.found);
    EXPECT_FALSE(r.failure.empty());
}

TEST(Extract, CertificateReverifies) {
    for (std::uint64_t s = 0; s < 40; ++s) {
        const int n = 6 + static_cast<int>(s % 10);
        auto g = random_ordered_graph(n, n * (n - 1) * 3 / 8, s);
        auto r = extract_expander(g, 1, ExtractionMode::relaxed);
        ASSERT_TRUE(r.found);
        if (r.vertices.size() >= 2) { EXPECT_GE(naive::expansion(r.subgraph) + 1e-12, r.threshold); }
    }
}

TEST(TGap, OneSelectsAll) {
    auto g = random_ordered_graph(15, 30, 2);
    auto s = sample_tgap(g, 1, 11);
    EXPECT_EQ(s.vertices.size(), 15U);
    EXPECT_EQ(s.induced.edges(), g.edges());
}

TEST(TGap, NIsEmpty) {
    auto g = random_ordered_graph(15, 30, 2);
    EXPECT_TRUE(sample_tgap(g, 15, 11).vertices.empty());
}

TEST(TGap, GapsAndRange) {
    auto g = random_ordered_graph(200, 800, 5);
    for (int t = 2; t <= 8; ++t) {
        auto s = sample_tgap(g, t, static_cast<std::uint64_t>(t));
        for (std::size_t i = 0; i < s.vertices.size(); ++i) {
            EXPECT_GE(s.vertices[i], t - 1);
            EXPECT_LE(s.vertices[i], 200 - t);
            if (i) { EXPECT_GE(s.vertices[i] - s.vertices[i - 1], t); }
        }
        for (auto [a, b] : s.edges) EXPECT_TRUE(g.has_edge(a, b));
    }
}

TEST(Estimate, TriangleTransitive) {
    auto rep = estimate_probability(SemiCompleteDigraph::complete(3), Event::transitive, 20000, 1);
    EXPECT_EQ(rep.trials, 20000);
    EXPECT_NEAR(rep.estimate, 0.75, 0.02);
    EXPECT_NEAR(0.75, rep.estimate, 1.5 * rep.half_width + 1e-3);
}

TEST(Estimate, PointMass) {
    Tournament base = make_circulant(7);
    for (Event e : {Event::not_prime, Event::q5_member, Event::transitive, Event::regular, Event::iso_circulant}) {
        auto rep = estimate_probability(base, e, 200, 3);
        EXPECT_TRUE(rep.estimate == 0 || rep.estimate == 1);
        EXPECT_DOUBLE_EQ(rep.half_width, 0);
    }
}

TEST(Estimate, ThreadSplitInvariant) {
    auto f = SemiCompleteDigraph::complete(7);
    auto a = estimate_probability(f, Event::not_prime, 500, 9, {}, 1);
    auto b = estimate_probability(f, Event::not_prime, 500, 9, {}, 3);
    EXPECT_EQ(a.successes, b.successes);
}

TEST(Estimate, CirculantImpliesRegular) {
    auto f = SemiCompleteDigraph::complete(7);
    for (std::uint64_t s = 0; s < 3000; ++s) {
        Tournament t = sample_orientation(f, s);
        if (circulant_isomorphism(t)) { EXPECT_TRUE(is_regular(t)); }
    }
}

TEST(Estimate, CapAborts) {
    Caps caps;
    caps.q5_partition = 3;
    auto rep = estimate_probability(SemiCompleteDigraph::complete(6), Event::q5_member, 50, 1, caps);
    EXPECT_TRUE(rep.aborted);
    EXPECT_FALSE(rep.error.empty());
}

TEST(Certificate, NoBidiFails) {
    auto rep = sparse_certificate_search(make_transitive(10), make_u5(), Family::q5, 1, 100, 1);
    EXPECT_FALSE(rep.extraction_ok);
    EXPECT_FALSE(rep.certificate);
    EXPECT_NE(rep.note.find("extraction failed"), std::string::npos);
}

TEST(Certificate, CompleteTwelveReverifies) {
    auto rep = sparse_certificate_search(SemiCompleteDigraph::complete(12), make_u5(), Family::q5, 1, 500, 7);
    ASSERT_TRUE(rep.extraction_ok);
    ASSERT_TRUE(rep.certificate);
    EXPECT_TRUE(naive::is_prime(*rep.certificate));
    EXPECT_FALSE(naive::q5_member(*rep.certificate));
    EXPECT_EQ(rep.certificate_contains_h, contains_subdigraph(*rep.certificate, make_u5()).has_value());
    EXPECT_EQ(sample_orientation(SemiCompleteDigraph::complete(12), rep.certificate_seed), *rep.certificate);
}
