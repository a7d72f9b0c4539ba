#include <gtest/gtest.h>

#include "tourn/classify.hpp"
#include "tourn/construct.hpp"
#include "tourn/naive.hpp"

using namespace tourn;

namespace {

bool classes_transitive(const Tournament& t, const Coloring& c) {
    for (const auto& cls : c.classes())
        if (!naive::is_transitive(t.induced(cls))) return false;
    return true;
}

// quadratic residue tournament on 7 vertices: largest transitive set has 3 vertices
Tournament paley7() {
    return Tournament::from_predicate(7, [](int i, int j) {
        const int d = (j - i + 7) % 7;
        return d == 1 || d == 2 || d == 4;
    });
}

}  // namespace

TEST(Chromatic, Examples) {
    EXPECT_EQ(chromatic_number(make_transitive(5)).colors, 1);
    EXPECT_EQ(chromatic_number(make_delta(3)).colors, 2);
    EXPECT_EQ(chromatic_number(make_circulant(3)).colors, 2);
    EXPECT_EQ(chromatic_number(make_circulant(7)).colors, 2);
    EXPECT_EQ(chromatic_number(paley7()).colors, 3);
}

TEST(Chromatic, DeltaIsTwoChromaticForAllK) {
    for (int k = 1; k <= 6; ++k) EXPECT_EQ(chromatic_number(make_delta(k)).colors, 2) << k;
}

TEST(Chromatic, WitnessPartsAreTransitive) {
    for (std::uint64_t s = 0; s < 200; ++s) {
        Tournament t = random_tournament(3 + static_cast<int>(s % 10), s);
        Coloring c = chromatic_number(t);
        ASSERT_TRUE(classes_transitive(t, c));
    }
}

TEST(Chromatic, MatchesOracle) {
    for (std::uint64_t s = 0; s < 150; ++s) {
        Tournament t = random_tournament(2 + static_cast<int>(s % 6), s);
        ASSERT_EQ(chromatic_number(t).colors, naive::chromatic(t));
    }
}

TEST(Chromatic, CapExceeded) {
    Caps caps;
    caps.chromatic = 5;
    EXPECT_THROW(chromatic_number(make_transitive(6), caps), CapExceeded);
}

TEST(MinColorClass, Examples) {
    EXPECT_EQ(min_color_class(make_transitive(6)).s, 0);
    EXPECT_EQ(min_color_class(make_circulant(3)).s, 1);
    EXPECT_GE(min_color_class(make_u5()).s, 2);
    EXPECT_EQ(min_color_class(make_u5()).s, *naive::min_class(make_u5()));
}

TEST(MinColorClass, RejectsThreeChromatic) {
    Tournament t = paley7();
    ASSERT_GE(chromatic_number(t).colors, 3);
    EXPECT_THROW(min_color_class(t), DomainError);
}

TEST(Feedback, Examples) {
    EXPECT_EQ(min_feedback_edges(make_transitive(7)).beta, 0);
    EXPECT_EQ(min_feedback_edges(make_circulant(3)).beta, 1);
    EXPECT_EQ(min_feedback_edges(make_delta(3)).beta, 3);
}

TEST(Feedback, MatchesPermutationOracle) {
    for (std::uint64_t s = 0; s < 300; ++s) {
        Tournament t = random_tournament(2 + static_cast<int>(s % 6), s + 17);
        FeedbackResult f = min_feedback_edges(t);
        ASSERT_EQ(f.beta, naive::beta(t));
        ASSERT_EQ(back_edge_graph(t, f.order).edge_count(), f.beta);
    }
}

TEST(Feedback, ZeroIffTransitiveIffOneColour) {
    for (std::uint64_t c = 0; c < 1024; ++c) {
        Tournament t = Tournament::from_code(5, c);
        const bool b0 = min_feedback_edges(t).beta == 0;
        const bool chi1 = chromatic_number(t).colors == 1;
        ASSERT_EQ(b0, chi1);
        ASSERT_EQ(b0, naive::is_transitive(t));
    }
}

TEST(Forest, Examples) {
    EXPECT_FALSE(is_forest_tournament(make_delta(3)).forest);
    EXPECT_TRUE(is_forest_tournament(make_delta(2)).forest);
    EXPECT_TRUE(naive::is_forest(make_delta(2)));
}

TEST(Forest, WitnessIsValid) {
    ForestResult f = is_forest_tournament(make_delta(2));
    ASSERT_TRUE(f.forest);
    Tournament d = make_delta(2);
    EXPECT_TRUE(naive::is_transitive(d.induced(f.left)));
    EXPECT_TRUE(naive::is_transitive(d.induced(f.right)));
    std::vector<std::pair<int, int>> e;
    for (int r : f.right)
        for (int l : f.left)
            if (d.arc(r, l)) e.emplace_back(l, r);
    EXPECT_TRUE(UndirectedOrderedGraph(d.size(), e).is_acyclic());
}

TEST(Forest, StarsAreForests) {
    for (int n = 3; n <= 6; ++n)
        for (std::uint64_t c = 0; c < (std::uint64_t{1} << (n * (n - 1) / 2)); ++c) {
            Tournament t = Tournament::from_code(n, c);
            if (is_star_tournament(t).star) { ASSERT_TRUE(is_forest_tournament(t).forest); }
        }
}

TEST(WeakForest, Examples) {
    EXPECT_TRUE(is_weak_forest(make_delta(3)).weak_forest);
    EXPECT_TRUE(is_weak_forest(make_transitive(8)).weak_forest);
}

TEST(WeakForest, WitnessOrderIsAcyclic) {
    for (std::uint64_t s = 0; s < 100; ++s) {
        Tournament t = random_tournament(3 + static_cast<int>(s % 6), s);
        WeakForestResult w = is_weak_forest(t);
        ASSERT_EQ(w.weak_forest, naive::is_weak_forest(t));
        if (w.weak_forest) { ASSERT_TRUE(back_edge_graph(t, w.order).is_acyclic()); }
    }
}

TEST(Ladder, ExhaustiveUpToSix) {
    for (int n = 1; n <= 6; ++n)
        for (std::uint64_t c = 0; c < (std::uint64_t{1} << (n * (n - 1) / 2)); ++c) {
            Tournament t = Tournament::from_code(n, c);
            ClassProfile p = classify(t);
            ASSERT_TRUE(p.chi && p.is_star && p.is_forest && p.is_weak_forest);
            if (*p.is_star) { ASSERT_TRUE(*p.is_forest); }
            if (*p.is_forest) { ASSERT_TRUE(*p.is_weak_forest); }
            if (*p.is_weak_forest) { ASSERT_LE(*p.chi, 2); }
            ASSERT_EQ(*p.is_star, p.s.has_value() && *p.s == 1);
        }
}

TEST(Star, AgreesWithMinClassAtSeven) {
    for (std::uint64_t s = 0; s < 3000; ++s) {
        Tournament t = random_tournament(7, s);
        if (chromatic_number(t).colors > 2) {
            ASSERT_FALSE(is_star_tournament(t).star);
            continue;
        }
        ASSERT_EQ(is_star_tournament(t).star, min_color_class(t).s == 1);
    }
}

TEST(Star, WitnessIsStar) {
    Tournament t = make_u5();
    EXPECT_FALSE(is_star_tournament(t).star);
    StarResult s = is_star_tournament(make_circulant(3));
    ASSERT_TRUE(s.star);
    auto g = back_edge_graph(make_circulant(3), s.order);
    for (auto [a, b] : g.edges()) {
        const int ca = s.order.at(a), cb = s.order.at(b);
        EXPECT_TRUE(ca == s.center || cb == s.center);
    }
}

TEST(Homogeneous, Examples) {
    auto d = homogeneous_sets(make_delta(2));
    ASSERT_FALSE(d.empty());
    EXPECT_NE(std::find(d.begin(), d.end(), std::vector<int>{0, 1, 2}), d.end());
    auto t = homogeneous_sets(make_transitive(3));
    EXPECT_NE(std::find(t.begin(), t.end(), std::vector<int>{1, 2}), t.end());
    EXPECT_TRUE(is_prime(make_circulant(3)));
    EXPECT_FALSE(is_prime(make_delta(2)));
}

TEST(Homogeneous, PrimeMatchesSubsetOracleExhaustive) {
    for (int n = 1; n <= 5; ++n)
        for (std::uint64_t c = 0; c < (std::uint64_t{1} << (n * (n - 1) / 2)); ++c) {
            Tournament t = Tournament::from_code(n, c);
            ASSERT_EQ(is_prime(t), naive::is_prime(t)) << n << " " << c;
        }
}

TEST(Homogeneous, PrimeMatchesSubsetOracleSampledAtSix) {
    for (std::uint64_t s = 0; s < 100000; ++s) {
        Tournament t = random_tournament(6, s);
        ASSERT_EQ(is_prime(t), naive::is_prime(t)) << s;
    }
}

TEST(Homogeneous, ReportedSetsAreHomogeneous) {
    for (std::uint64_t s = 0; s < 200; ++s) {
        Tournament t = random_tournament(4 + static_cast<int>(s % 7), s);
        for (const auto& set : homogeneous_sets(t)) {
            ASSERT_GE(set.size(), 2U);
            ASSERT_LT(static_cast<int>(set.size()), t.size());
            for (int x = 0; x < t.size(); ++x) {
                if (std::find(set.begin(), set.end(), x) != set.end()) continue;
                bool out = false, in = false;
                for (int v : set) (t.arc(x, v) ? out : in) = true;
                ASSERT_FALSE(out && in);
            }
        }
    }
}

TEST(Regular, Circulants) {
    EXPECT_TRUE(is_regular(make_circulant(9)));
    EXPECT_FALSE(is_regular(make_transitive(5)));
}

TEST(Q5, Examples) {
    Q5Result c7 = q5_member(make_circulant(7));
    EXPECT_TRUE(c7.member);
    EXPECT_EQ(c7.condition, 1);
    Q5Result t6 = q5_member(make_transitive(6));
    EXPECT_TRUE(t6.member);
    EXPECT_EQ(t6.condition, 2);
    Tournament r = random_tournament(10, 1);
    EXPECT_EQ(q5_member(r).member, naive::q5_member(r));
}

TEST(Q5, MatchesOracleExhaustive) {
    for (int n = 1; n <= 6; ++n)
        for (std::uint64_t c = 0; c < (std::uint64_t{1} << (n * (n - 1) / 2)); ++c) {
            Tournament t = Tournament::from_code(n, c);
            ASSERT_EQ(q5_member(t).member, naive::q5_member(t)) << n << " " << c;
        }
}

TEST(Q5, CirculantIsomorphismIsValid) {
    for (std::uint64_t s = 0; s < 50; ++s) {
        const int n = 5 + 2 * static_cast<int>(s % 4);
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        CounterRng rng(s);
        std::shuffle(p.begin(), p.end(), rng);
        Tournament c = make_circulant(n);
        Tournament g = Tournament::from_predicate(n, [&](int i, int j) {
            // g(p[a], p[b]) = c(a, b)
            int a = static_cast<int>(std::find(p.begin(), p.end(), i) - p.begin());
            int b = static_cast<int>(std::find(p.begin(), p.end(), j) - p.begin());
            return c.arc(a, b);
        });
        auto iso = circulant_isomorphism(g);
        ASSERT_TRUE(iso);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (a != b) { ASSERT_EQ(c.arc(a, b), g.arc((*iso)[a], (*iso)[b])); }
    }
}

TEST(Q5, PartitionWitnessIsValid) {
    for (std::uint64_t s = 0; s < 300; ++s) {
        Tournament t = random_tournament(4 + static_cast<int>(s % 5), s);
        auto parts = three_part_transitive_partition(t);
        if (!parts) continue;
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) {
                std::vector<int> u;
                for (int v = 0; v < t.size(); ++v)
                    if ((*parts)[v] == a || (*parts)[v] == b) u.push_back(v);
                ASSERT_TRUE(naive::is_transitive(t.induced(u)));
            }
    }
}

TEST(BoundProfile, TriangleHasLinearBranch) {
    BoundProfile b = bound_profile(make_circulant(3));
    bool linear = false;
    for (const auto& s : b.statements) linear = linear || (s.quantity == "t(T_n,H)" && s.relation == "O(n)");
    EXPECT_TRUE(linear);
}

TEST(BoundProfile, Delta3NonForestEpsilon) {
    BoundProfile b = bound_profile(make_delta(3));
    ASSERT_TRUE(b.epsilon);
    EXPECT_EQ(*b.epsilon, 7);
    ASSERT_TRUE(b.lower_exponent);
    EXPECT_NEAR(*b.lower_exponent, 1.0 + 4.0 / (27.0 - 7.0), 1e-12);
}

TEST(BoundProfile, ThreeChromaticQuadratic) {
    Tournament t = paley7();
    ASSERT_EQ(chromatic_number(t).colors, 3);
    BoundProfile b = bound_profile(t);
    ASSERT_TRUE(b.quadratic_constant);
    EXPECT_DOUBLE_EQ(*b.quadratic_constant, 0.5);
}

TEST(BoundProfile, EpsilonByResidue) {
    EXPECT_EQ(nonforest_epsilon(8), 4);
    EXPECT_EQ(nonforest_epsilon(9), 7);
    EXPECT_EQ(nonforest_epsilon(10), 6);
    EXPECT_EQ(nonforest_epsilon(11), 9);
}

TEST(BoundProfile, HeroFlagIsInputOnly) {
    BoundProfile a = bound_profile(make_circulant(3));
    BoundProfile b = bound_profile(make_circulant(3), true);
    EXPECT_FALSE(a.hero_exponent);
    ASSERT_TRUE(b.hero_exponent);
    EXPECT_DOUBLE_EQ(*b.hero_exponent, 1.0);
}
