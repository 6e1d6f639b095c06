#include "latrans/constructions.hpp"
#include "latrans/transversal.hpp"
#include "latrans/trisotopy.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace latrans;

TEST(Representatives, LatinAndTransversalFree)
{
    for (const auto& a : {arrays::order4_cyclic(), arrays::order4_five_symbols(), arrays::order5_first(),
                          arrays::order5_second()})
    {
        EXPECT_TRUE(is_latin(a));
        EXPECT_FALSE(a.is_partial());
        EXPECT_EQ(oracle::count_transversals(a), 0u);
    }
    EXPECT_EQ(arrays::order4_cyclic().symbol_count(), 4);
    EXPECT_EQ(arrays::order4_five_symbols().symbol_count(), 5);
    EXPECT_EQ(arrays::order5_first().symbol_count(), 6);
    EXPECT_EQ(arrays::order5_second().symbol_count(), 6);
}

TEST(Completions, TransversalCounts)
{
    auto first = latin_square_completions(arrays::order5_first());
    auto second = latin_square_completions(arrays::order5_second());
    ASSERT_FALSE(first.empty());
    ASSERT_FALSE(second.empty());
    std::set<std::uint64_t> c1, c2;
    for (const auto& sq : first)
    {
        EXPECT_TRUE(is_latin(sq));
        EXPECT_EQ(sq.symbol_count(), 6);
        c1.insert(count_transversals(sq));
    }
    for (const auto& sq : second)
        c2.insert(count_transversals(sq));
    EXPECT_TRUE(c1.count(0));
    EXPECT_TRUE(c2.count(8));
}

TEST(Completions, SmallCases)
{
    auto a = parse_array("a b\nb a\n");
    auto one = latin_square_completions(a);
    EXPECT_TRUE(one.empty());
    auto two = latin_square_completions(a, 2);
    for (const auto& sq : two)
    {
        EXPECT_TRUE(is_latin(sq));
        EXPECT_EQ(sq.symbol_count(), 4);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                EXPECT_EQ(sq.at(r, c), a.at(r, c));
    }
    EXPECT_FALSE(two.empty());
    EXPECT_THROW(latin_square_completions(parse_array("a a\nb c\n")), Error);
}

TEST(Constructions, NineteenClasses)
{
    auto all = generate_order6_constructions();
    ASSERT_EQ(all.size(), 19u);
    std::set<CanonicalKey> keys;
    for (const auto& a : all)
    {
        EXPECT_EQ(a.order(), 6);
        EXPECT_TRUE(is_latin(a));
        EXPECT_EQ(a.symbol_count(), 7);
        EXPECT_EQ(count_transversals(a), 0u) << render_array(a);
        keys.insert(canonical_form(a));
    }
    EXPECT_EQ(keys.size(), 19u);
}

TEST(Constructions, ShadedL1IsL2)
{
    auto g = l1_marked_to_g();
    auto l2 = generate_order6_constructions()[1];
    EXPECT_EQ(canonical_form(g), canonical_form(l2));
}

TEST(Constructions, SourceArrays)
{
    EXPECT_EQ(arrays::l_double_prime().symbol_count(), 6);
    for (const auto& a : {arrays::l1(), arrays::l_prime(), arrays::l10(), arrays::l_double_prime()})
    {
        EXPECT_TRUE(is_latin(a));
        EXPECT_EQ(count_transversals(a), 0u);
    }
}

TEST(EditHelpers, Validation)
{
    auto a = arrays::l1();
    EXPECT_THROW(set_label(a, 0, 1, "g"), Error);
    EXPECT_THROW(set_label(a, 1, 7, "g"), Error);
    auto b = set_label(a, 1, 1, "new");
    EXPECT_EQ(b.symbol_count(), a.symbol_count() + 1);
    EXPECT_EQ(b.label(b.at(0, 0)), "new");
    EXPECT_GE(find_in_row(a, 1, a.label(a.at(0, 2))), 1);
}
