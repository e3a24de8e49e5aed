#include <gtest/gtest.h>
#include <triflag/decorated.hpp>

#include <set>

using namespace triflag;

namespace {

DecoratedMatrix perm(std::vector<int> w, std::vector<int> cols) { return from_permutation(w, cols); }

// Staircases by filtering all subsets of the support.
std::set<Decoration> brute_decorations(const TransportMatrix& m) {
    const auto sup = support(m);
    std::set<Decoration> out;
    for (unsigned mask = 1; mask < (1u << sup.size()); ++mask) {
        Decoration d;
        for (std::size_t k = 0; k < sup.size(); ++k)
            if (mask >> k & 1) d.push_back(sup[k]);
        std::sort(d.begin(), d.end());
        if (!validate(m, d)) out.insert(d);
    }
    return out;
}

std::vector<std::pair<Composition, Composition>> shapes_upto(int nmax) {
    std::vector<std::pair<Composition, Composition>> out;
    for (int n = 1; n <= nmax; ++n)
        for (const auto& b : compositions(n))
            for (const auto& c : compositions(n)) out.emplace_back(b, c);
    return out;
}

}  // namespace

TEST(DeltaTable, Examples) {
    const auto x = perm({3, 1, 2}, {1, 3});
    ASSERT_EQ(x.delta, (Decoration{{2, 3}, {3, 1}}));
    const auto d = delta_table(x);
    EXPECT_EQ(d(2, 0), 0);
    EXPECT_EQ(d(3, 0), 1);
    EXPECT_EQ(d(1, 3), 1);
    EXPECT_EQ(d(1, 1), 0);
    EXPECT_EQ(d(3, 3), 1);

    const auto mn = delta_table(perm({1, 2}, {1}));
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j) EXPECT_EQ(mn(i, j), (i == 0 && j == 0) ? 0 : 1);
}

TEST(DeltaTable, InvariantsForAllOrbitsUpTo4) {
    for (const auto& [b, c] : shapes_upto(4))
        for (const auto& x : enumerate_orbits(b, c)) {
            const auto d = delta_table(x);
            EXPECT_EQ(d(x.q(), x.r()), 1);
            for (int i = 0; i <= x.q(); ++i)
                for (int j = 0; j <= x.r(); ++j) {
                    EXPECT_TRUE(d(i, j) == 0 || d(i, j) == 1);
                    if (i > 0) {
                        EXPECT_LE(d(i - 1, j), d(i, j));
                    }
                    if (j > 0) {
                        EXPECT_LE(d(i, j - 1), d(i, j));
                    }
                }
        }
}

TEST(RbarTable, Examples) {
    EXPECT_EQ(rbar_table(perm({1, 2}, {1})).values(1, 1), 2);
    EXPECT_EQ(rbar_table(perm({1, 2, 3}, {3})).values(2, 0), 0);
}

// Circles at (2,2) and (3,1): the line lies in C_2 but not in B_2, so the
// border entry that distinguishes it from (123,{3}) is (0,2).
TEST(RbarTable, LongestWithTwoCirclesBorder) {
    const auto z = perm({3, 2, 1}, {1, 2});
    ASSERT_EQ(z.delta, (Decoration{{2, 2}, {3, 1}}));
    const auto t = rbar_table(z);
    EXPECT_EQ(t.values(0, 2), 1);
    EXPECT_EQ(t.values(2, 0), 0);
}

TEST(RkLeqDec, Examples) {
    const auto e = perm({1, 2, 3}, {3}), z = perm({3, 2, 1}, {1, 2});
    EXPECT_TRUE(rk_leq_dec(e, e));
    EXPECT_FALSE(rk_leq_dec(e, z));
    EXPECT_FALSE(rk_leq_dec(z, e));
    EXPECT_TRUE(rk_leq_dec(perm({1, 2, 3}, {1}), perm({3, 2, 1}, {1, 2, 3})));
    EXPECT_THROW(rk_leq_dec(e, perm({1, 2}, {1})), Error);
}

TEST(Compare, IncomparableWitness) {
    const auto e = perm({1, 2, 3}, {3}), z = perm({3, 2, 1}, {1, 2});
    const auto cmp = compare(e, z);
    EXPECT_EQ(cmp.verdict, Verdict::Incomparable);
    ASSERT_TRUE(cmp.forward);
    EXPECT_EQ(cmp.forward->table, "rbar");
    EXPECT_EQ(cmp.forward->i, 0);
    EXPECT_EQ(cmp.forward->j, 2);
    EXPECT_EQ(cmp.forward->lhs, 0);
    EXPECT_EQ(cmp.forward->rhs, 1);
    EXPECT_EQ(compare(perm({1, 2, 3}, {1}), perm({3, 2, 1}, {1, 2, 3})).verdict, Verdict::Less);
    EXPECT_EQ(compare(z, z).verdict, Verdict::Equal);
}

TEST(EnumerateOrbits, FullFlagCounts) {
    EXPECT_EQ(enumerate_orbits({1, 1}, {1, 1}).size(), 5u);
    const auto els = enumerate_orbits(ones(3), ones(3));
    EXPECT_EQ(els.size(), 28u);
    const std::vector<std::vector<int>> order{{1, 2, 3}, {2, 1, 3}, {1, 3, 2}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
    std::vector<int> counts;
    for (const auto& w : order) {
        const auto m = from_permutation(w, {1}).matrix;
        counts.push_back(static_cast<int>(std::count_if(els.begin(), els.end(), [&](const auto& x) { return x.matrix == m; })));
    }
    EXPECT_EQ(counts, (std::vector<int>{3, 4, 4, 5, 5, 7}));
}

TEST(EnumerateOrbits, MatchesSubsetOracle) {
    for (const auto& [b, c] : shapes_upto(4)) {
        const auto els = enumerate_orbits(b, c);
        EXPECT_TRUE(std::is_sorted(els.begin(), els.end()));
        EXPECT_EQ(std::set<DecoratedMatrix>(els.begin(), els.end()).size(), els.size());
        std::size_t expect = 0;
        for (const auto& m : enumerate_matrices(b, c)) expect += brute_decorations(m).size();
        EXPECT_EQ(els.size(), expect);
    }
}

TEST(Dimension, Examples) {
    EXPECT_EQ(dimension_full_flags({1, 2, 3}, {1}), 3);
    EXPECT_EQ(dimension_full_flags({3, 2, 1}, {1, 2, 3}), 8);
    EXPECT_EQ(dimension_full_flags({3, 1, 2}, {1, 2}), 6);
    DecoratedMatrix partial{{{2}, {1, 1}, {{1, 1}}}, {{1, 2}}};
    try {
        dimension_full_flags(partial);
        FAIL() << "expected NotFullFlag";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotFullFlag);
    }
}

TEST(Tables, DetermineTheElement) {
    for (const auto& [b, c] : shapes_upto(4))
        for (const auto& x : enumerate_orbits(b, c)) {
            auto back = decode_tables(rank_table(x.matrix), rbar_table(x).values);
            ASSERT_TRUE(back);
            EXPECT_EQ(*back, x);
        }
}

TEST(RkLeqDec, PartialOrderAndForgetfulMonotone) {
    for (const auto& [b, c] : shapes_upto(3)) {
        const auto els = enumerate_orbits(b, c);
        for (const auto& x : els)
            for (const auto& y : els) {
                const bool xy = rk_leq_dec(x, y);
                if (xy) {
                    EXPECT_TRUE(rk_leq(x.matrix, y.matrix));
                }
                if (xy && rk_leq_dec(y, x)) {
                    EXPECT_EQ(x, y);
                }
                if (!xy) continue;
                for (const auto& z : els)
                    if (rk_leq_dec(y, z)) {
                        EXPECT_TRUE(rk_leq_dec(x, z));
                    }
            }
    }
}
