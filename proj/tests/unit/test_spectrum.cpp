#include <gtest/gtest.h>

#include <functional>
#include <map>

#include "convcode/generators.hpp"
#include "convcode/spectrum.hpp"
#include "helpers.hpp"

using namespace convcode;
using testutil::pm2;

namespace {

// Polynomial in W from (weight, count) pairs.
WeightEnum W(std::initializer_list<std::pair<unsigned, int>> terms) {
    WeightEnum w;
    for (const auto& [a, c] : terms) w.add_term(a, c);
    return w;
}

AdjMatrix lambda_of(const PolyMatrix& G) { return adjacency(build_state_diagram(controller_form(G))); }

// Closed walks 0 -> ... -> 0 of length l by explicit DFS over the edge list.
std::vector<std::map<unsigned, long long>> closed_walks(const StateDiagram& sd, std::size_t T) {
    std::vector<std::map<unsigned, long long>> out(T + 1);
    std::function<void(std::size_t, std::size_t, unsigned)> walk = [&](std::size_t v, std::size_t len, unsigned w) {
        if (len > 0 && v == 0) ++out[len][w];
        if (len == T) return;
        for (const Edge& e : sd.out_edges(v)) walk(e.to, len + 1, w + e.weight);
    };
    walk(0, 0, 0);
    return out;
}

}  // namespace

TEST(WeightEnum, ArithmeticAndPrinting) {
    const auto a = W({{1, 1}, {3, 1}});
    EXPECT_EQ(to_string(a), "W + W^3");
    EXPECT_EQ(to_string(W({{0, 1}, {2, 1}})), "1 + W^2");
    EXPECT_EQ(to_string(W({{1, 2}})), "2W");
    EXPECT_EQ(to_string(WeightEnum{}), "0");
    EXPECT_EQ(a * a, W({{2, 1}, {4, 2}, {6, 1}}));
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a.total_count(), 2);
    EXPECT_EQ(*a.min_weight(), 1u);
    EXPECT_EQ(to_string(-a), "-W - W^3");
}

TEST(LSeries, InverseRequiresUnitConstantTerm) {
    LSeries s(3);
    s[0] = W({{0, 2}});
    EXPECT_THROW(inverse(s), InputError);
    LSeries one = LSeries::one(5);
    one[1] = W({{2, 1}});
    const auto inv = inverse(one);
    EXPECT_EQ(one * inv, LSeries::one(5));
    EXPECT_EQ(inv[3], W({{6, -1}}));
}

TEST(Adjacency, TwoInputExample) {
    const auto L = lambda_of(testutil::elambda1());
    EXPECT_EQ(L(0, 0), W({{2, 1}}));
    EXPECT_EQ(L(0, 1), W({{1, 2}}));
    EXPECT_EQ(L(1, 0), W({{2, 2}}));
    EXPECT_EQ(L(1, 1), W({{1, 1}, {3, 1}}));
}

TEST(Adjacency, BinaryRateHalfExampleUnderDocumentedOrdering) {
    const auto L = lambda_of(testutil::e213());
    const WeightEnum O, one = W({{0, 1}}), w1 = W({{1, 1}}), w2 = W({{2, 1}});
    const std::vector<std::vector<WeightEnum>> expect = {
        {O, O, O, O, w2, O, O, O},  {w2, O, O, O, one, O, O, O}, {O, w2, O, O, O, one, O, O},
        {O, one, O, O, O, w2, O, O}, {O, O, w1, O, O, O, w1, O},  {O, O, w1, O, O, O, w1, O},
        {O, O, O, w1, O, O, O, w1}, {O, O, O, w1, O, O, O, w1}};
    ASSERT_EQ(L.size(), 8u);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) EXPECT_EQ(L(i, j), expect[i][j]) << i << "," << j;
}

TEST(Adjacency, SecondCodeOfTheG1G2Pair) {
    const auto L = lambda_of(testutil::g2());
    EXPECT_EQ(L(0, 0), WeightEnum{});
    EXPECT_EQ(L(0, 1), W({{1, 1}}));
    EXPECT_EQ(L(1, 0), W({{3, 1}}));
    EXPECT_EQ(L(1, 1), W({{2, 1}}));
}

TEST(Adjacency, PowersCountPaths) {
    const auto L = lambda_of(testutil::g1());
    EXPECT_EQ(adj_power(L, 1), L);
    EXPECT_EQ(adj_power(L, 2)(0, 0), W({{4, 1}}));
    const auto G2 = adj_power(extend(L), 2);
    EXPECT_EQ(G2.row_support(0), 2u);
    EXPECT_THROW(adj_power(L, 0), InputError);
    EXPECT_EQ(restrict_to_lambda(extend(L)), L);
}

TEST(Series, FirstCodeOfThePair) {
    const auto L = lambda_of(testutil::g1());
    const auto phi = phi_series(L, 6);
    EXPECT_EQ(phi[1], WeightEnum{});
    EXPECT_EQ(phi[2], W({{4, 1}}));
    EXPECT_EQ(phi[3], W({{6, 1}}));
    EXPECT_EQ(phi[4], W({{8, 2}}));  // the atomic word plus two tightly joined length-2 words
    const auto omega = omega_series(phi);
    for (std::size_t l = 0; l <= 6; ++l)
        EXPECT_EQ(omega[l], l >= 2 ? W({{static_cast<unsigned>(2 * l), 1}}) : WeightEnum{}) << l;
}

TEST(Series, WeightDistributionThroughW9) {
    const auto omega = omega_series(phi_series(lambda_of(testutil::e213()), 12));
    std::map<std::pair<std::size_t, unsigned>, int> expect = {
        {{5, 6}, 1}, {{4, 7}, 1}, {{6, 7}, 1},  {{7, 7}, 1},  {{6, 8}, 1}, {{7, 8}, 1},
        {{8, 8}, 1}, {{9, 8}, 2}, {{8, 9}, 4}, {{9, 9}, 1}, {{10, 9}, 3}, {{11, 9}, 3}};
    for (std::size_t l = 0; l <= 12; ++l)
        for (unsigned a = 0; a <= 9; ++a) {
            const auto it = expect.find({l, a});
            EXPECT_EQ(omega[l].coeff(a), it == expect.end() ? 0 : it->second) << "L^" << l << " W^" << a;
        }
}

TEST(Series, MolecularSeriesOfTheRateHalfExample) {
    const auto phi = phi_series(lambda_of(testutil::e213()), 12);
    EXPECT_TRUE(phi[1].is_zero());
    EXPECT_EQ(phi[5].coeff(6), 1);
    EXPECT_EQ(omega_series(LSeries::one(4)), LSeries(4));
}

TEST(Distances, FreeDistance) {
    const auto G = testutil::e213();
    const auto gap = atomic_gap_bound(G);
    const auto L = lambda_of(G);
    const auto wide = free_distance(omega_series(phi_series(L, 40)), gap);
    ASSERT_TRUE(wide.value);
    EXPECT_EQ(*wide.value, 6u);
    EXPECT_TRUE(wide.certified);
    const auto at = free_distance(omega_series(phi_series(L, wide.required_truncation)), gap);
    EXPECT_TRUE(at.certified);
    EXPECT_EQ(*at.value, 6u);
    const auto below = free_distance(omega_series(phi_series(L, wide.required_truncation - 1)), gap);
    EXPECT_FALSE(below.certified);
    EXPECT_FALSE(free_distance(omega_series(phi_series(L, 1)), gap).value);

    const auto g1 = free_distance(omega_series(phi_series(lambda_of(testutil::g1()), 8)), atomic_gap_bound(testutil::g1()));
    EXPECT_EQ(*g1.value, 4u);
    EXPECT_TRUE(g1.certified);
}

TEST(Distances, RowAndBurstProfiles) {
    const auto d = extended_row_distances(omega_series(phi_series(lambda_of(testutil::e213()), 12)));
    ASSERT_EQ(d.size(), 12u);
    EXPECT_EQ(d[3], 7u);
    EXPECT_EQ(d[4], 6u);
    EXPECT_FALSE(d[0]);

    const auto phi1 = phi_series(lambda_of(testutil::g1()), 9);
    const auto r1 = extended_row_distances(omega_series(phi1));
    const auto b1 = active_burst_distances(phi1);
    EXPECT_FALSE(r1[0]);
    EXPECT_FALSE(b1[0]);
    for (std::size_t l = 1; l < 9; ++l) {
        EXPECT_EQ(r1[l], 4 + 2 * (l - 1));
        EXPECT_EQ(b1[l], 4 + 2 * (l - 1));
    }

    const auto b = active_burst_distances(phi_series(lambda_of(testutil::e213()), 16));
    unsigned best = 1000;
    for (const auto& x : b)
        if (x) best = std::min(best, *x);
    EXPECT_EQ(best, 6u);
    EXPECT_TRUE(extended_row_distances(LSeries(0)).empty());
}

TEST(BlockCodes, EnumeratorTimesL) {
    const auto rep = code_adjacency(pm2({{{1}, {1}, {1}}}));
    EXPECT_EQ(rep.size(), 1u);
    EXPECT_EQ(rep(0, 0), W({{3, 1}}));
    const auto om = omega_series(phi_series(rep, 5));
    EXPECT_EQ(om[1], W({{3, 1}}));
    for (std::size_t l = 2; l <= 5; ++l) EXPECT_TRUE(om[l].is_zero());

    const auto even = code_adjacency(pm2({{{1}, {}, {1}}, {{}, {1}, {1}}}));
    EXPECT_EQ(even(0, 0), W({{2, 3}}));
    EXPECT_EQ(omega_series(phi_series(even, 4))[1], W({{2, 3}}));
}

TEST(Properties, SeriesIdentitiesOnRandomCodes) {
    Rng rng(31337);
    for (int it = 0; it < 40; ++it) {
        const Field F = it % 4 == 3 ? Field::make(3, 1) : Field::make(2, 1);
        const std::size_t k = 1 + it % 2, n = k + 1 + it % 2;
        const auto G = random_minimal_code(F, k, n, 3, rng);
        const auto sd = build_state_diagram(controller_form(G));
        const auto L = adjacency(sd);
        const std::size_t T = 7;
        const auto phi = phi_series(L, T);
        const auto omega = omega_series(phi);

        EXPECT_EQ(phi * (LSeries::one(T) - omega), LSeries::one(T));
        for (std::size_t l = 0; l <= T; ++l) {
            EXPECT_TRUE(omega[l].nonnegative());
            EXPECT_LE(omega[l].max_weight(), static_cast<int>(n * l));
            EXPECT_EQ(phi[l].coeff(0), l == 0 ? 1 : 0);
        }
        BigInt qk = 1;
        for (std::size_t i = 0; i < k; ++i) qk *= F.q();
        for (std::size_t i = 0; i < L.size(); ++i) {
            BigInt sum = 0;
            for (std::size_t j = 0; j < L.size(); ++j) sum += L(i, j).total_count();
            EXPECT_EQ(sum, i == 0 ? qk - 1 : qk);
        }
        const auto walks = closed_walks(sd, 5);
        for (std::size_t l = 1; l <= 5; ++l) {
            WeightEnum w;
            for (const auto& [a, c] : walks[l]) w.add_term(a, c);
            EXPECT_EQ(phi[l], w) << "l=" << l;
            EXPECT_EQ(adj_power(L, l)(0, 0), w);
        }
    }
}
