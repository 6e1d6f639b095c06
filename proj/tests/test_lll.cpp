#include "latrans/constructions.hpp"
#include "latrans/lll.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace latrans;

namespace
{

/// Order-16 array: cyclic symbol 0 on one broken diagonal, 11 further
/// cells of cyclic symbol 1, every other cell fresh.
GridArray sparse_sixteen()
{
    const int n = 16;
    std::vector<int> raw(static_cast<std::size_t>(n * n));
    int fresh = 2, ones = 0;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
        {
            int cyc = (r + c) % n;
            int v;
            if (cyc == 0)
                v = 0;
            else if (cyc == 1 && ones < 11)
            {
                v = 1;
                ++ones;
            }
            else
                v = fresh++;
            raw[static_cast<std::size_t>(r * n + c)] = v;
        }
    return GridArray::from_cells(n, raw);
}

} // namespace

TEST(EventModel, SmallSquare)
{
    auto m = build_event_model(parse_array("a b\nb a\n"));
    EXPECT_EQ(m.events.size(), 2u);
    EXPECT_EQ(m.event_probability(), (std::pair<long long, long long>{1, 2}));
    EXPECT_THROW(build_event_model(parse_array("a a\nb c\n")), Error);
}

TEST(EventModel, CountsAndCliques)
{
    for (const auto& a : corpus::small_arrays(6, 3, 6))
    {
        if (a.is_partial() || !is_latin(a) || a.order() < 2)
            continue;
        auto m = build_event_model(a);
        auto classes = classify_symbols(a);
        std::size_t expected = 0;
        for (int c : classes.counts)
            expected += static_cast<std::size_t>(c * (c - 1) / 2);
        EXPECT_EQ(m.events.size(), expected);
        // Each event lies in exactly mu cliques.
        std::vector<int> memberships(m.events.size(), 0);
        for (const auto& members : m.clique_members)
            for (int e : members)
                ++memberships[static_cast<std::size_t>(e)];
        for (int k : memberships)
            EXPECT_EQ(k, BadEventModel::kMu);
        std::size_t largest = 0;
        for (const auto& members : m.clique_members)
            largest = std::max(largest, members.size());
        auto rep = lll_condition(a);
        EXPECT_EQ(static_cast<std::size_t>(rep.kappa), largest);
        EXPECT_EQ(rep.kappa, oracle::brute_kappa(a));
        EXPECT_LE(rep.kappa, a.order() * a.order() - a.symbol_count());
    }
}

TEST(Condition, LatinSquaresFail)
{
    Rng rng(1);
    for (int n = 2; n <= 9; ++n)
    {
        auto rep = lll_condition(random_latin_square(n, rng));
        EXPECT_FALSE(rep.guaranteed);
        EXPECT_EQ(rep.kappa, n * (n - 1));
    }
    EXPECT_THROW(lll_condition(parse_array("a\n")), Error);
}

TEST(Condition, SparseSixteen)
{
    auto a = sparse_sixteen();
    ASSERT_TRUE(is_latin(a));
    EXPECT_EQ(a.symbol_count(), 231);
    auto rep = lll_condition(a);
    EXPECT_EQ(rep.kappa, 25);
    EXPECT_TRUE(rep.guaranteed);
    EXPECT_EQ(rep.x_string(), "1/100");
    EXPECT_TRUE(has_transversal(a));
    auto j = to_json(rep);
    EXPECT_EQ(j["kappa"], 25);
    EXPECT_EQ(j["guaranteed"], true);
    LLLOptions opt;
    opt.optimize_x = true;
    EXPECT_EQ(lll_condition(a, opt).guaranteed, rep.guaranteed);
}

TEST(Condition, AllDistinct)
{
    auto a = GridArray::from_cells(3, {0, 1, 2, 3, 4, 5, 6, 7, 8});
    auto rep = lll_condition(a);
    EXPECT_EQ(rep.kappa, 0);
    EXPECT_TRUE(rep.guaranteed);
}

TEST(Condition, GuaranteeImpliesTransversal)
{
    Rng rng(8);
    int fired = 0;
    for (int it = 0; it < 2000; ++it)
    {
        int n = 2 + static_cast<int>(rng() % 6);
        int s = n * n - static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));
        auto a = random_latin_array(n, std::max(n, s), rng);
        auto rep = lll_condition(a);
        EXPECT_EQ(rep.guaranteed, 256LL * rep.kappa <= 27LL * n * (n - 1) || rep.kappa == 0);
        if (rep.guaranteed)
        {
            ++fired;
            EXPECT_TRUE(has_transversal(a));
        }
    }
    EXPECT_GT(fired, 0);
}

TEST(Search, ValidAndDeterministic)
{
    Rng rng(17);
    for (int it = 0; it < 100; ++it)
    {
        int n = 2 + static_cast<int>(rng() % 7);
        auto a = random_latin_array(n, n + static_cast<int>(rng() % static_cast<std::uint64_t>(n * n - n + 1)), rng);
        auto r1 = random_transversal_search(a, 77, 50);
        auto r2 = random_transversal_search(a, 77, 50);
        EXPECT_EQ(r1.transversal.has_value(), r2.transversal.has_value());
        EXPECT_EQ(r1.stats.moves, r2.stats.moves);
        if (r1.transversal)
        {
            EXPECT_TRUE(is_valid_transversal(a, *r1.transversal));
            EXPECT_EQ(r1.transversal->entries, r2.transversal->entries);
        }
    }
}

TEST(Search, ExhaustsOnTransversalFreeAndSucceedsWhenEasy)
{
    auto r = random_transversal_search(arrays::l_double_prime(), 5, 20);
    EXPECT_FALSE(r.transversal);
    EXPECT_EQ(r.stats.restarts, 20);
    auto easy = random_transversal_search(GridArray::from_cells(3, {0, 1, 2, 3, 4, 5, 6, 7, 8}), 5, 1);
    ASSERT_TRUE(easy.transversal);
    EXPECT_EQ(easy.stats.moves, 0u);
}
