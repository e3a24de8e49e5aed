#include <gtest/gtest.h>
#include <triflag/decorated.hpp>
#include <triflag/twoflags.hpp>

#include <algorithm>
#include <numeric>
#include <set>

using namespace triflag;

namespace {

TransportMatrix perm_matrix(const std::vector<int>& w) { return from_permutation(w, {1}).matrix; }

// #([i] cap w[j]) counted directly from the one-line notation.
int tableau_count(const std::vector<int>& w, int i, int j) {
    int k = 0;
    for (int a = 0; a < j; ++a)
        if (w[a] <= i) ++k;
    return k;
}

// Every q x r matrix with entries up to min(b_i, c_j), filtered by margins.
std::set<TransportMatrix> brute_matrices(const Composition& b, const Composition& c) {
    const int q = static_cast<int>(b.size()), r = static_cast<int>(c.size());
    std::set<TransportMatrix> out;
    TransportMatrix cur = zero_matrix(b, c);
    auto rec = [&](auto&& self, int cell) -> void {
        if (cell == q * r) {
            if (!validate(cur)) out.insert(cur);
            return;
        }
        const int i = cell / r, j = cell % r;
        for (int v = 0; v <= std::min(b[i], c[j]); ++v) {
            cur.m[i][j] = v;
            self(self, cell + 1);
        }
        cur.m[i][j] = 0;
    };
    rec(rec, 0);
    return out;
}

}  // namespace

TEST(RankTable, IdentityAndLongest) {
    const auto id = rank_table(perm_matrix({1, 2, 3}));
    const auto w0 = rank_table(perm_matrix({3, 2, 1}));
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j) {
            EXPECT_EQ(id(i, j), std::min(i, j));
            EXPECT_EQ(w0(i, j), std::max(0, i + j - 3));
        }
}

TEST(RankTable, Permutation312MatchesTableauCount) {
    const std::vector<int> w{3, 1, 2};
    const auto t = rank_table(perm_matrix(w));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) EXPECT_EQ(t(i, j), tableau_count(w, i, j));
    // Frozen from the count above.
    const std::vector<int> expect{0, 1, 1, 0, 1, 2, 1, 2, 3};
    std::vector<int> got;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) got.push_back(t(i, j));
    EXPECT_EQ(got, expect);
}

TEST(RankTable, InvariantsAndRoundTrip) {
    for (const auto& b : compositions(4))
        for (const auto& c : compositions(4))
            for (const auto& m : enumerate_matrices(b, c)) {
                const auto t = rank_table(m);
                EXPECT_EQ(t(t.q, t.r), 4);
                for (int i = 1; i <= t.q; ++i)
                    for (int j = 1; j <= t.r; ++j) {
                        EXPECT_LE(t(i - 1, j), t(i, j));
                        EXPECT_LE(t(i, j - 1), t(i, j));
                        EXPECT_GE(t(i, j) + t(i - 1, j - 1), t(i - 1, j) + t(i, j - 1));
                    }
                EXPECT_EQ(matrix_from_ranks(t), m);
            }
}

TEST(RkLeq, Examples) {
    const auto id = perm_matrix({1, 2, 3}), w0 = perm_matrix({3, 2, 1});
    EXPECT_TRUE(rk_leq(id, id));
    EXPECT_TRUE(rk_leq(id, w0));
    EXPECT_FALSE(rk_leq(w0, id));
    EXPECT_THROW(rk_leq(id, perm_matrix({1, 2})), Error);
}

TEST(SimpleMoves, Examples) {
    auto mv = simple_moves(perm_matrix({1, 2}));
    ASSERT_EQ(mv.size(), 1u);
    EXPECT_EQ(mv[0].rect, (Rectangle{1, 2, 1, 2}));
    EXPECT_EQ(mv[0].result, perm_matrix({2, 1}));

    EXPECT_TRUE(simple_moves(perm_matrix({2, 1})).empty());
    EXPECT_TRUE(simple_moves(TransportMatrix{{2, 1}, {2, 1}, {{1, 1}, {1, 0}}}).empty());
}

TEST(SimpleMoves, LowerRanksByOneOnTheRectangle) {
    for (const auto& b : compositions(4))
        for (const auto& c : compositions(4))
            for (const auto& m : enumerate_matrices(b, c))
                for (const auto& mv : simple_moves(m)) {
                    const auto r = rank_table(m), r2 = rank_table(mv.result);
                    for (int i = 0; i <= r.q; ++i)
                        for (int j = 0; j <= r.r; ++j) {
                            const bool inside = i >= mv.rect.i0 && i < mv.rect.i1 && j >= mv.rect.j0 && j < mv.rect.j1;
                            EXPECT_EQ(r(i, j) - r2(i, j), inside ? 1 : 0);
                        }
                }
}

TEST(ProgressMove, Examples) {
    auto p = progress_move(perm_matrix({1, 2}), perm_matrix({2, 1}));
    EXPECT_EQ(p.rect, (Rectangle{1, 2, 1, 2}));
    EXPECT_EQ(p.result, perm_matrix({2, 1}));

    auto id = perm_matrix({1, 2, 3}), w0 = perm_matrix({3, 2, 1});
    int steps = 0;
    for (auto cur = id; !(cur == w0); ++steps) {
        auto q = progress_move(cur, w0);
        EXPECT_TRUE(rk_leq(q.result, w0));
        cur = q.result;
    }
    EXPECT_EQ(steps, 3);

    EXPECT_THROW(progress_move(id, id), Error);
    EXPECT_THROW(progress_move(w0, id), Error);
}

TEST(ProgressMove, ReachesEveryTargetForAllShapesUpTo4) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& b : compositions(n))
            for (const auto& c : compositions(n)) {
                const auto mats = enumerate_matrices(b, c);
                for (const auto& x : mats)
                    for (const auto& y : mats) {
                        if (x == y || !rk_leq(x, y)) continue;
                        auto cur = x;
                        int guard = 0;
                        while (!(cur == y) && guard++ < 100) {
                            auto q = progress_move(cur, y);
                            ASSERT_TRUE(rectangle_move_applies(cur, q.rect));
                            ASSERT_TRUE(rk_leq(q.result, y));
                            cur = q.result;
                        }
                        EXPECT_EQ(cur, y);
                    }
            }
}

TEST(Enumeration, MatchesBruteForce) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& b : compositions(n))
            for (const auto& c : compositions(n)) {
                const auto mats = enumerate_matrices(b, c);
                const auto brute = brute_matrices(b, c);
                EXPECT_EQ(std::set<TransportMatrix>(mats.begin(), mats.end()), brute);
                EXPECT_EQ(mats.size(), brute.size());
                EXPECT_TRUE(std::is_sorted(mats.begin(), mats.end()));
            }
}

TEST(TwoFlagOrder, Examples) {
    auto r2 = verify_two_flag_theorem({1, 1}, {1, 1});
    EXPECT_TRUE(r2.ok());
    EXPECT_EQ(r2.elements, 2);
    EXPECT_EQ(r2.covers, 1);

    auto r3 = verify_two_flag_theorem({1, 1, 1}, {1, 1, 1});
    EXPECT_TRUE(r3.ok());
    EXPECT_EQ(r3.elements, 6);
    EXPECT_EQ(r3.covers, 8);

    auto rp = verify_two_flag_theorem({2, 1}, {1, 1, 1});
    EXPECT_TRUE(rp.ok());
    EXPECT_EQ(rp.elements, static_cast<int>(brute_matrices({2, 1}, {1, 1, 1}).size()));
}
