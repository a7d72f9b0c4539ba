#include <gtest/gtest.h>

#include "tourn/construct.hpp"
#include "tourn/io.hpp"
#include "tourn/naive.hpp"
#include "tourn/reduce.hpp"
#include "tourn/search.hpp"

using namespace tourn;

namespace {

BinaryMatrix identity(int k) {
    BinaryMatrix m(k, k);
    for (int i = 0; i < k; ++i) m.set(i, i, true);
    return m;
}

BinaryMatrix m1() { return figure1_matrices().first; }

std::vector<Tournament> small_patterns() {
    return {make_transitive(3), make_circulant(3), make_transitive(4), Tournament::from_code(4, 0b011010),
            make_circulant(5), make_u5()};
}

}  // namespace

TEST(ContainsPattern, IdentityInIdentity) {
    auto w = contains_pattern(identity(3), identity(2));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->rows, (std::vector<int>{0, 1}));
    EXPECT_EQ(w->cols, (std::vector<int>{0, 1}));
}

TEST(ContainsPattern, ZeroHost) { EXPECT_FALSE(contains_pattern(BinaryMatrix(4, 4), identity(1))); }

TEST(ContainsPattern, AntiDiagonalAvoidsM1) {
    BinaryMatrix a(4, 4);
    for (int i = 0; i < 4; ++i) a.set(i, 3 - i, true);
    EXPECT_FALSE(contains_pattern(a, m1()));
    EXPECT_FALSE(naive::contains_pattern(a, m1()));
}

TEST(ContainsPattern, AgreesWithNaive) {
    const std::vector<BinaryMatrix> pats{m1(), identity(2), BinaryMatrix::from_rows({"01", "10"}),
                                         BinaryMatrix::from_rows({"11", "01"}), BinaryMatrix::from_rows({"101"})};
    for (std::uint64_t s = 0; s < 400; ++s) {
        const int r = 2 + static_cast<int>(s % 4), c = 2 + static_cast<int>((s / 4) % 4);
        BinaryMatrix a = random_matrix(r, c, 0.2 + 0.1 * static_cast<double>(s % 6), s);
        for (const auto& m : pats) {
            auto w = contains_pattern(a, m);
            ASSERT_EQ(w.has_value(), naive::contains_pattern(a, m)) << to_text(a) << to_text(m);
            if (w) { EXPECT_TRUE(verify_pattern(a, m, *w)); }
        }
    }
}

TEST(ContainsSubdigraph, CompleteGivesIdentity) {
    for (const auto& h : small_patterns()) {
        auto w = contains_subdigraph(SemiCompleteDigraph::complete(h.size()), h);
        ASSERT_TRUE(w);
        std::vector<int> id(static_cast<std::size_t>(h.size()));
        std::iota(id.begin(), id.end(), 0);
        EXPECT_EQ(w->map, id);
    }
}

TEST(ContainsSubdigraph, TransitiveHostAvoidsTriangle) {
    for (int n = 3; n <= 12; ++n) EXPECT_FALSE(contains_subdigraph(make_transitive(n), make_circulant(3)));
}

TEST(ContainsSubdigraph, TriangleThroughBackArc) {
    SemiCompleteDigraph g = add_back_arcs(make_transitive(3), {{2, 0}});
    auto w = contains_subdigraph(g, make_circulant(3));
    ASSERT_TRUE(w);
    EXPECT_TRUE(verify_embedding(g, make_circulant(3), *w));
    EXPECT_EQ(naive::count_embeddings(g.arcs(), make_circulant(3)), 3);
}

TEST(ContainsSubdigraph, AgreesWithNaive) {
    for (std::uint64_t s = 0; s < 300; ++s) {
        const int n = 3 + static_cast<int>(s % 5);
        auto g = transitive_plus(random_ordered_graph(n, static_cast<int>(s % (n * (n - 1) / 2 + 1)), s));
        for (const auto& h : small_patterns()) {
            if (h.size() > n) continue;
            auto w = contains_subdigraph(g, h);
            ASSERT_EQ(w.has_value(), naive::contains_subdigraph(g.arcs(), h));
            if (w) { EXPECT_TRUE(verify_embedding(g, h, *w)); }
            long long count = for_each_embedding(g, h, [&](const EmbeddingWitness& e) {
                EXPECT_TRUE(verify_embedding(g, h, e));
                return false;
            });
            EXPECT_EQ(count, naive::count_embeddings(g.arcs(), h));
        }
    }
}

TEST(Ex, SingleOne) {
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(ex_exact(n, identity(1)).value, 1);
}

TEST(Ex, PatternTooLarge) { EXPECT_EQ(ex_exact(2, m1()).value, 5); }

TEST(Ex, M1AtThreeMatchesNaive) {
    auto r = ex_exact(3, m1());
    EXPECT_TRUE(r.complete);
    EXPECT_EQ(r.value, naive::ex(3, m1()));
}

TEST(Ex, SmallPatternsMatchNaive) {
    const std::vector<BinaryMatrix> pats{identity(2), BinaryMatrix::from_rows({"01", "10"}),
                                         BinaryMatrix::from_rows({"11", "10"}), BinaryMatrix::from_rows({"11"}),
                                         BinaryMatrix::from_rows({"1", "1"})};
    for (const auto& m : pats)
        for (int n = 1; n <= 4; ++n)
            EXPECT_EQ(ex_exact(n, m).value, naive::ex(n, pad_to_square(m))) << to_text(m) << "n=" << n;
}

TEST(Ex, WitnessIsSaturatedMaximum) {
    for (const auto& m : {m1(), identity(2), identity(3)}) {
        for (int n = 2; n <= 5; ++n) {
            auto r = ex_exact(n, m);
            ASSERT_TRUE(r.complete && r.matrix);
            const BinaryMatrix& a = *r.matrix;
            if (m.rows() > n) continue;
            EXPECT_EQ(a.ones() + 1, r.value);
            EXPECT_FALSE(contains_pattern(a, m));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (a.at(i, j)) continue;
                    BinaryMatrix b = a;
                    b.set(i, j, true);
                    EXPECT_TRUE(contains_pattern(b, m));
                }
        }
    }
}

TEST(Ex, MonotoneInN) {
    long long prev = 0;
    for (int n = 1; n <= 6; ++n) {
        long long v = ex_exact(n, m1()).value;
        EXPECT_GE(v, prev);
        prev = v;
    }
}

TEST(Ex, ZeroLineRemovalNeverIncreases) {
    BinaryMatrix m = BinaryMatrix::from_rows({"10", "00"});
    for (int n = 1; n <= 4; ++n) EXPECT_LE(ex_exact(n, m.without_zero_lines()).value, ex_exact(n, m).value);
}

TEST(Ex, NodeBudgetGivesBracket) {
    SearchLimits lim;
    lim.max_nodes = 5;
    auto r = ex_exact(6, m1(), {}, lim);
    EXPECT_FALSE(r.complete);
    EXPECT_LE(r.value, r.upper);
    auto full = ex_exact(6, m1());
    EXPECT_LE(r.value, full.value);
    EXPECT_GE(r.upper, full.value);
}

TEST(Ex, CapEnforced) { EXPECT_THROW(ex_exact(8, m1()), CapExceeded); }

TEST(TTransitive, ContainedGivesZero) {
    for (int h = 1; h <= 4; ++h)
        for (int n = h; n <= 6; ++n) EXPECT_EQ(t_transitive_exact(n, make_transitive(h)).value, 0);
}

TEST(TTransitive, TriangleAtThree) { EXPECT_EQ(t_transitive_exact(3, make_circulant(3)).value, 2); }

TEST(TTransitive, TriangleAtLeastHalfN) {
    for (int n = 3; n <= 7; ++n) EXPECT_GE(2 * t_transitive_exact(n, make_circulant(3)).value, n);
}

TEST(TTransitive, MatchesNaive) {
    for (const auto& h : small_patterns())
        for (int n = h.size(); n <= std::min(h.size() + 1, 5); ++n)
            EXPECT_EQ(t_transitive_exact(n, h).value, naive::t_transitive(n, h)) << to_text(h) << "n=" << n;
}

TEST(TTransitive, WitnessIsFreeAndSaturated) {
    for (const auto& h : {make_circulant(3), make_u5()}) {
        for (int n = h.size(); n <= 6; ++n) {
            auto r = t_transitive_exact(n, h);
            ASSERT_TRUE(r.complete && r.digraph);
            const SemiCompleteDigraph& g = *r.digraph;
            EXPECT_EQ(g.bidi_count() + 1, r.value);
            EXPECT_EQ(static_cast<long long>(r.added_arcs.size()), g.bidi_count());
            EXPECT_TRUE(g.contains_transitive_order());
            EXPECT_FALSE(contains_subdigraph(g, h));
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    if (g.bidirectional(i, j)) continue;
                    ArcMatrix m = g.arcs();
                    m.set(j, i);
                    EXPECT_TRUE(contains_subdigraph(SemiCompleteDigraph(m), h));
                }
        }
    }
}

TEST(TGeneral, TransitiveAtPowerOfTwo) {
    EXPECT_EQ(t_general_exact(2, make_transitive(2)).value, 0);
    EXPECT_EQ(t_general_exact(4, make_transitive(3)).value, 0);
}

TEST(TGeneral, TriangleAtFourMatchesNaive) {
    EXPECT_EQ(t_general_exact(4, make_circulant(3)).value, naive::t_general(4, make_circulant(3)));
}

TEST(TGeneral, SmallMatchesNaive) {
    for (const auto& h : {make_circulant(3), make_transitive(3), Tournament::from_code(4, 0b011010)})
        for (int n = h.size(); n <= 5; ++n)
            EXPECT_EQ(t_general_exact(n, h).value, naive::t_general(n, h)) << to_text(h) << "n=" << n;
}

TEST(TGeneral, DominatesTransitiveBase) {
    for (const auto& h : small_patterns())
        for (int n = h.size(); n <= std::min(h.size() + 1, 6); ++n)
            EXPECT_LE(t_transitive_exact(n, h).value, t_general_exact(n, h).value) << to_text(h) << "n=" << n;
}

TEST(TGeneral, RejectsSmallN) { EXPECT_THROW(t_general_exact(2, make_circulant(3)), DomainError); }

TEST(TransitiveSub, AllFourVertexTournaments) {
    for (std::uint64_t c = 0; c < 64; ++c) {
        Tournament t = Tournament::from_code(4, c);
        auto s = find_transitive_subtournament(t, 3);
        ASSERT_TRUE(s);
        EXPECT_TRUE(naive::detail::transitive_on(t.arcs(), *s));
    }
}

TEST(TransitiveSub, WholeTransitive) {
    auto s = find_transitive_subtournament(make_transitive(6), 6);
    ASSERT_TRUE(s);
    EXPECT_EQ(*s, (std::vector<int>{0, 1, 2, 3, 4, 5}));
}

TEST(TransitiveSub, TriangleAbsent) { EXPECT_FALSE(find_transitive_subtournament(make_circulant(3), 3)); }

TEST(Biclique, CompleteAnySplit) {
    auto b = find_bidirectional_biclique(SemiCompleteDigraph::complete(5), 2, 3);
    ASSERT_TRUE(b);
    EXPECT_EQ(b->a.size() + b->b.size(), 5U);
}

TEST(Biclique, EmptyBidiAbsent) { EXPECT_FALSE(find_bidirectional_biclique(make_transitive(8), 1, 1)); }

TEST(Biclique, PlantedK22) {
    SemiCompleteDigraph g = add_back_arcs(make_transitive(6), {{3, 0}, {4, 0}, {3, 1}, {4, 1}});
    auto b = find_bidirectional_biclique(g, 2, 2);
    ASSERT_TRUE(b);
    EXPECT_EQ(b->a, (std::vector<int>{0, 1}));
    EXPECT_EQ(b->b, (std::vector<int>{3, 4}));
}
