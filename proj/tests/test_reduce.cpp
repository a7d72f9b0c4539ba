#include <gtest/gtest.h>

#include "tourn/classify.hpp"
#include "tourn/construct.hpp"
#include "tourn/io.hpp"
#include "tourn/naive.hpp"
#include "tourn/reduce.hpp"
#include "tourn/search.hpp"

using namespace tourn;

namespace {

BinaryMatrix m1() { return figure1_matrices().first; }

// r_j -> l_i iff M(i, j) = 1, checked straight from the definition
void expect_mstar(const MStarTournament& s, const BinaryMatrix& m) {
    const int k = m.rows();
    ASSERT_EQ(s.tournament.size(), 2 * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            EXPECT_EQ(s.tournament.arc(s.r(j), s.l(i)), m.at(i, j));
            if (i < j) {
                EXPECT_TRUE(s.tournament.arc(s.l(i), s.l(j)));
                EXPECT_TRUE(s.tournament.arc(s.r(i), s.r(j)));
            }
        }
}

std::vector<BinaryMatrix> acyclic_full_3x3() {
    std::vector<BinaryMatrix> out;
    for (int code = 0; code < 512; ++code) {
        BinaryMatrix m(3, 3);
        for (int c = 0; c < 9; ++c) m.set(c / 3, c % 3, (code >> c) & 1);
        bool zero = false;
        for (int i = 0; i < 3; ++i) zero = zero || m.row_is_zero(i) || m.col_is_zero(i);
        if (!zero && m.is_forest()) out.push_back(m);
    }
    return out;
}

}  // namespace

TEST(MStar, SingleOne) {
    auto s = matrix_to_mstar(BinaryMatrix::from_rows({"1"}));
    ASSERT_EQ(s.tournament.size(), 2);
    EXPECT_TRUE(s.tournament.arc(1, 0));
    EXPECT_TRUE(s.every_left_hit);
    EXPECT_TRUE(s.every_right_hits);
}

TEST(MStar, M1Arcs) {
    auto s = matrix_to_mstar(m1());
    expect_mstar(s, m1());
    EXPECT_TRUE(s.tournament.arc(s.r(0), s.l(0)));
    EXPECT_TRUE(s.tournament.arc(s.r(1), s.l(0)));
    EXPECT_TRUE(s.tournament.arc(s.r(0), s.l(1)));
    EXPECT_TRUE(s.tournament.arc(s.r(2), s.l(2)));
    EXPECT_TRUE(s.tournament.arc(s.l(1), s.r(1)));
}

TEST(MStar, RejectsZeroLines) {
    EXPECT_THROW(matrix_to_mstar(BinaryMatrix::from_rows({"10", "00"})), DomainError);
    EXPECT_THROW(matrix_to_mstar(BinaryMatrix::from_rows({"10", "10"})), DomainError);
    EXPECT_THROW(matrix_to_mstar(BinaryMatrix::from_rows({"11"})), DomainError);
}

TEST(MStar, AcyclicGivesForest) {
    auto all = acyclic_full_3x3();
    EXPECT_FALSE(all.empty());
    for (const auto& m : all) {
        auto s = matrix_to_mstar(m);
        expect_mstar(s, m);
        auto f = is_forest_tournament(s.tournament);
        EXPECT_TRUE(f.forest) << to_text(m);
        EXPECT_TRUE(naive::is_forest(s.tournament));
    }
}

TEST(Blowup, OneCopyIsMStar) {
    for (const auto& m : acyclic_full_3x3()) EXPECT_EQ(mstar_blowup(m, 1), matrix_to_mstar(m).tournament);
}

TEST(Blowup, ShapeAndCrossBlockArcs) {
    const BinaryMatrix m = m1();
    const int k = 3, p = 3;
    Tournament t = mstar_blowup(m, p);
    ASSERT_EQ(t.size(), 2 * k * p);
    for (int s = 0; s < p; ++s) {
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                EXPECT_EQ(t.arc(blowup_right(k, s, j), blowup_left(k, s, i)), m.at(i, j));
        for (int u = s + 1; u < p; ++u)
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) {
                    EXPECT_TRUE(t.arc(blowup_left(k, s, i), blowup_left(k, u, j)));
                    EXPECT_TRUE(t.arc(blowup_right(k, s, i), blowup_right(k, u, j)));
                    EXPECT_TRUE(t.arc(blowup_left(k, s, i), blowup_right(k, u, j)));
                }
    }
}

TEST(Blowup, M1TwiceIsForest) {
    Tournament t = mstar_blowup(m1(), 2);
    auto f = is_forest_tournament(t);
    ASSERT_TRUE(f.forest);
    EXPECT_TRUE(naive::is_forest(t));
}

TEST(MinimalP, KOne) { EXPECT_EQ(minimal_p(1), 6); }

TEST(MinimalP, LeastEvenSolution) {
    for (int k = 1; k <= 10; ++k) {
        const long long p = minimal_p(k);
        EXPECT_EQ(p % 2, 0);
        auto holds = [&](long long pp) {
            const double q = static_cast<double>(pp) / 2;
            return q * q - static_cast<double>(pp) + 1 > k * std::pow(q, 2.0 - 1.0 / k);
        };
        EXPECT_TRUE(holds(p)) << "k=" << k;
        if (p > 2) { EXPECT_FALSE(holds(p - 2)) << "k=" << k; }
        if (k <= 4)
            for (long long s = 2; s < p; s += 2) ASSERT_FALSE(holds(s)) << "k=" << k << " p=" << s;
    }
}

TEST(MinimalP, Nondecreasing) {
    for (int k = 1; k < 10; ++k) EXPECT_LE(minimal_p(k), minimal_p(k + 1));
}

TEST(MinimalP, KThreeExceedsForty) { EXPECT_GT(minimal_p(3), 40); }

TEST(Interval, ZeroMatrixIsTransitive) {
    auto g = matrix_to_interval_digraph(BinaryMatrix(4, 4));
    EXPECT_EQ(g.bidi_count(), 0);
    EXPECT_EQ(g.arcs(), make_transitive(8).arcs());
}

TEST(Interval, IdentityPairs) {
    auto g = matrix_to_interval_digraph(BinaryMatrix::identity(2));
    EXPECT_EQ(g.bidi_pairs(), (std::vector<std::pair<int, int>>{{0, 2}, {1, 3}}));
}

TEST(Interval, BidiCountIsOnes) {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const int n = 1 + static_cast<int>(s % 10);
        BinaryMatrix a = random_matrix(n, n, 0.3, s);
        auto g = matrix_to_interval_digraph(a);
        EXPECT_EQ(g.bidi_count(), a.ones());
        for (auto [u, v] : g.bidi_pairs()) EXPECT_TRUE(u < n && v >= n);
    }
}

TEST(DensePair, TransitiveAbsent) { EXPECT_FALSE(find_dense_interval_pair(make_transitive(16), 0)); }

TEST(DensePair, TopLevelSplit) {
    auto g = add_back_arcs(make_transitive(4), {{2, 0}, {3, 0}, {2, 1}, {3, 1}});
    auto pr = find_dense_interval_pair(g, 0);
    ASSERT_TRUE(pr);
    EXPECT_EQ(pr->x(), (std::vector<int>{0, 1}));
    EXPECT_EQ(pr->y(), (std::vector<int>{2, 3}));
    EXPECT_EQ(pr->count, 4);
}

TEST(DensePair, CountMeetsThreshold) {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const int n = 4 + static_cast<int>(s % 29);
        auto g = matrix_to_interval_digraph(random_matrix(n, n, 0.7, s));
        for (int p = 0; p <= 2; ++p) {
            auto pr = find_dense_interval_pair(g, p);
            if (!pr) continue;
            long long c = 0;
            for (int x : pr->x())
                for (int y : pr->y()) c += g.bidirectional(x, y);
            EXPECT_EQ(c, pr->count);
            EXPECT_GE(static_cast<double>(c), static_cast<double>(pr->length) * std::pow(clamped_log2(pr->length), p));
            EXPECT_LT(pr->x().back(), pr->y().front());
        }
    }
}

TEST(DensePair, RejectsNonTransitiveOrder) {
    EXPECT_THROW(find_dense_interval_pair(make_circulant(3), 0), DomainError);
}

TEST(Figure1, Counts) {
    auto [a, b] = figure1_matrices();
    EXPECT_EQ(a.ones(), 4);
    EXPECT_EQ(b.ones(), 9);
    EXPECT_TRUE(a.is_forest());
    EXPECT_TRUE(b.is_forest());
    EXPECT_TRUE(b.at(0, 1) && b.at(0, 3) && b.at(0, 4) && b.at(1, 2) && b.at(1, 4) && b.at(2, 1) && b.at(3, 0) &&
                b.at(3, 4) && b.at(4, 4));
}

TEST(Correspondence, PatternGivesMStarCopy) {
    const std::vector<BinaryMatrix> pats{m1(), BinaryMatrix::identity(2)};
    int found = 0;
    for (std::uint64_t s = 0; s < 200; ++s) {
        const BinaryMatrix& m = pats[s % 2];
        const int n = 3 + static_cast<int>(s % 6);
        BinaryMatrix a = random_matrix(n, n, 0.45, s);
        auto g = matrix_to_interval_digraph(a);
        const Tournament ms = matrix_to_mstar(m).tournament;
        auto w = contains_pattern(a, m);
        if (!w) continue;
        ++found;
        EmbeddingWitness e = mstar_copy_from_pattern(n, *w);
        ASSERT_TRUE(verify_embedding(g, ms, e));
        for (int i = 0; i < m.rows(); ++i) {
            EXPECT_LT(e.map[i], n);
            EXPECT_GE(e.map[m.rows() + i], n);
        }
        auto back = pattern_from_mstar_copy(n, m.rows(), e);
        ASSERT_TRUE(back);
        EXPECT_EQ(*back, *w);
    }
    EXPECT_GT(found, 50);
}

TEST(Correspondence, SplitCopiesGivePatterns) {
    const std::vector<BinaryMatrix> pats{m1(), BinaryMatrix::identity(2)};
    for (std::uint64_t s = 0; s < 200; ++s) {
        const BinaryMatrix& m = pats[s % 2];
        const int n = 2 + static_cast<int>(s % 4);
        BinaryMatrix a = random_matrix(n, n, 0.5, s + 7);
        auto g = matrix_to_interval_digraph(a);
        const int k = m.rows();
        bool any_split = false;
        for_each_embedding(g, matrix_to_mstar(m).tournament, [&](const EmbeddingWitness& e) {
            auto w = pattern_from_mstar_copy(n, k, e);
            if (w) {
                any_split = true;
                EXPECT_TRUE(verify_pattern(a, m, *w));
            }
            return false;
        });
        EXPECT_EQ(any_split, contains_pattern(a, m).has_value()) << to_text(a);
    }
}
