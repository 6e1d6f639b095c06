#include "latrans/catalogue.hpp"
#include "latrans/certificates.hpp"
#include "latrans/constructions.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace latrans;

namespace
{

std::vector<std::pair<int, int>> cells_with(const GridArray& a, const std::string& label)
{
    std::vector<std::pair<int, int>> out;
    for (int r = 0; r < a.order(); ++r)
        for (int c = 0; c < a.order(); ++c)
            if (a.label(a.at(r, c)) == label)
                out.push_back({r + 1, c + 1});
    return out;
}

} // namespace

TEST(Delta, AcceptsEverySubsetReplacement)
{
    const auto base = arrays::l_double_prime();
    const auto cert = standard_delta_certificate();
    const auto ds = cells_with(base, "d");
    ASSERT_EQ(ds.size(), 6u);
    for (unsigned mask = 0; mask < (1u << ds.size()); ++mask)
    {
        auto a = base;
        for (std::size_t k = 0; k < ds.size(); ++k)
            if (mask >> k & 1u)
                a = set_label(a, ds[k].first, ds[k].second, "g");
        auto v = verify_delta_certificate(a, cert);
        EXPECT_TRUE(v.accepted) << v.reason;
        EXPECT_EQ(count_transversals(a), 0u);
    }
}

TEST(Delta, RejectsArraysWithTransversals)
{
    const auto cert = standard_delta_certificate();
    Rng rng(12);
    for (int i = 0; i < 200; ++i)
    {
        auto sq = random_latin_square(6, rng);
        if (!has_transversal(sq))
            continue;
        std::vector<std::string> labels{"a", "b", "c", "d", "e", "f"};
        auto a = GridArray::from_cells(6, sq.raw(), labels);
        EXPECT_FALSE(verify_delta_certificate(a, cert).accepted);
    }
}

TEST(Delta, SoundOnRandomRelabelledArrays)
{
    // Acceptance must imply no transversal on anything the verifier sees.
    const auto cert = standard_delta_certificate();
    const std::vector<std::string> universe{"a", "b", "c", "d", "e", "f", "g"};
    Rng rng(99);
    int accepted = 0;
    for (int i = 0; i < 3000; ++i)
    {
        auto a = random_latin_array(6, 6 + static_cast<int>(rng() % 2), rng);
        std::vector<std::string> labels;
        auto perm = random_permutation(7, rng);
        for (int s = 0; s < a.symbol_count(); ++s)
            labels.push_back(universe[static_cast<std::size_t>(perm[static_cast<std::size_t>(s)])]);
        auto b = GridArray::from_cells(6, a.raw(), labels);
        if (verify_delta_certificate(b, cert).accepted)
        {
            ++accepted;
            EXPECT_EQ(count_transversals(b), 0u);
        }
    }
    auto lp = arrays::l_double_prime();
    EXPECT_TRUE(verify_delta_certificate(lp, cert).accepted);
    SUCCEED() << accepted;
}

TEST(Delta, PremiseFailuresAndMalformedInput)
{
    auto l = arrays::l_double_prime();
    auto cert = standard_delta_certificate();

    auto bad = cert;
    bad.nu["b"] = 0;
    EXPECT_FALSE(verify_delta_certificate(l, bad).accepted);

    bad = cert;
    bad.rho[0] = 1;
    auto v = verify_delta_certificate(l, bad);
    EXPECT_FALSE(v.accepted);
    EXPECT_FALSE(v.reason.empty());

    bad = cert;
    bad.s1.insert("x");
    bad.nu["x"] = 0;
    EXPECT_FALSE(verify_delta_certificate(l, bad).accepted);

    bad = cert;
    bad.rows1 = {0, 1, 3};
    EXPECT_THROW(verify_delta_certificate(l, bad), Error);
    bad = cert;
    bad.rho.pop_back();
    EXPECT_THROW(verify_delta_certificate(l, bad), Error);
    bad = cert;
    bad.s2.insert("a");
    EXPECT_THROW(verify_delta_certificate(l, bad), Error);
    bad = cert;
    bad.nu.erase("g");
    EXPECT_THROW(verify_delta_certificate(l, bad), Error);
    EXPECT_THROW(verify_delta_certificate(arrays::order5_first(), cert), Error);
}

TEST(GoodCol, HoldsForEveryRowWithAClone)
{
    int checked = 0;
    for (const auto& a : corpus::small_arrays(7, 55, 10))
    {
        if (a.is_partial() || !is_latin(a))
            continue;
        auto classes = classify_symbols(a);
        for (int i = 0; i < a.order(); ++i)
        {
            bool has_clone = false;
            for (int j = 0; j < a.order(); ++j)
                has_clone = has_clone || classes.counts[static_cast<std::size_t>(a.at(i, j))] > 1;
            if (!has_clone)
            {
                EXPECT_THROW(check_good_col(a, i), Error);
                continue;
            }
            auto w = check_good_col(a, i);
            EXPECT_TRUE(w.holds) << render_array(a) << " row " << i;
            EXPECT_GE(w.column, 0);
            ++checked;
        }
    }
    EXPECT_GT(checked, 0);
}

TEST(GoodCol, RandomLatinSweep)
{
    Rng rng(2);
    for (int it = 0; it < 1000; ++it)
    {
        int n = 2 + static_cast<int>(rng() % 7);
        auto a = random_latin_array(n, n + static_cast<int>(rng() % static_cast<std::uint64_t>(n * n - n)), rng);
        auto classes = classify_symbols(a);
        for (int i = 0; i < n; ++i)
        {
            bool has_clone = false;
            for (int j = 0; j < n; ++j)
                has_clone = has_clone || classes.counts[static_cast<std::size_t>(a.at(i, j))] > 1;
            if (has_clone)
                EXPECT_TRUE(check_good_col(a, i).holds) << render_array(a);
        }
    }
}

TEST(Larges, WorkedBound)
{
    // With k = 1 and n = 4 the bound is (16 + 4) / 2 = 10 symbols.
    auto a = arrays::order4_five_symbols();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
        {
            auto r = check_upper_bound_from_larges(a, {1, 1}, i, j);
            if (r.verdict == LemmaVerdict::NotApplicable)
                continue;
            EXPECT_EQ(r.scaled_bound, 20);
            EXPECT_EQ(r.scaled_symbols, 10);
        }
    EXPECT_EQ(check_upper_bound_from_larges(parse_array("a b\nc d\n"), {1, 1}).verdict, LemmaVerdict::NotApplicable);
    EXPECT_THROW(check_upper_bound_from_larges(a, {1, 0}), Error);
    EXPECT_STREQ(to_string(LemmaVerdict::Pass), "pass");
}

TEST(Larges, NeverFailsOnTransversalFreeArrays)
{
    std::vector<GridArray> pool;
    for (int n = 2; n <= 5; ++n)
        for (const auto& r : latin_tf_catalogue(n).records())
            pool.push_back(r.array());
    for (const auto& a : generate_order6_constructions())
        pool.push_back(a);
    int applied = 0;
    for (const auto& a : pool)
        for (Ratio k : {Ratio{0, 1}, Ratio{1, 2}, Ratio{1, 1}, Ratio{3, 2}})
            for (int i = 0; i < a.order(); ++i)
                for (int j = 0; j < a.order(); ++j)
                {
                    auto r = check_upper_bound_from_larges(a, k, i, j);
                    EXPECT_NE(r.verdict, LemmaVerdict::Fail) << render_array(a);
                    applied += r.verdict == LemmaVerdict::Pass;
                }
    EXPECT_GT(applied, 0);
}

TEST(Focused, Examples)
{
    Rng rng(3);
    for (int n = 1; n <= 5; ++n)
    {
        auto e = embed_fresh(random_latin_square(n, rng), 1);
        auto f = check_focused(e);
        EXPECT_TRUE(f.focused);
        ASSERT_TRUE(f.witness);
        EXPECT_EQ(static_cast<int>(psi(e, f.witness->first, f.witness->second).count()), 2 * (n + 1) - 1);
    }
    EXPECT_FALSE(check_focused(arrays::order4_cyclic()).focused);
    EXPECT_FALSE(check_focused(arrays::order4_cyclic()).witness);
    EXPECT_THROW(check_focused(parse_array("a a\nb c\n")), Error);
    // A singleton off the all-singleton lines breaks focus.
    auto e = embed_fresh(arrays::order4_cyclic(), 1);
    auto raw = e.raw();
    raw[0] = e.symbol_count();
    auto g = GridArray::from_cells(5, raw);
    ASSERT_TRUE(is_latin(g));
    auto f = check_focused(g);
    EXPECT_TRUE(f.witness);
    EXPECT_FALSE(f.focused);
}

TEST(Bounds, ThresholdsAtSix)
{
    auto r = guarantee_transversal(6, 22, ArrayKind::Latin);
    ASSERT_EQ(r.theorems.size(), 3u);
    EXPECT_EQ(r.theorems[0].threshold, 22);
    EXPECT_EQ(r.theorems[1].threshold, 25);
    EXPECT_EQ(r.theorems[2].threshold, 33);
    EXPECT_TRUE(r.theorems[0].fires);
    EXPECT_FALSE(r.theorems[1].fires);
    EXPECT_EQ(r.strongest, "latin");
    EXPECT_FALSE(guarantee_transversal(6, 21, ArrayKind::Latin).theorems[0].fires);
    EXPECT_TRUE(guarantee_transversal(6, 21, ArrayKind::Latin).strongest.empty());
    auto rl = guarantee_transversal(6, 30, ArrayKind::RowLatin);
    EXPECT_FALSE(rl.theorems[0].applies);
    EXPECT_TRUE(rl.theorems[1].fires);
    EXPECT_FALSE(rl.note.empty());
}

TEST(Bounds, TenAndErrors)
{
    auto r = guarantee_transversal(10, 59, ArrayKind::Latin);
    EXPECT_EQ(r.theorems[0].threshold, 59);
    EXPECT_EQ(r.theorems[1].threshold, 70);
    EXPECT_EQ(r.theorems[2].threshold, 91);
    EXPECT_FALSE(guarantee_transversal(10, 58, ArrayKind::Latin).theorems[0].fires);
    EXPECT_THROW(guarantee_transversal(6, 5, ArrayKind::Latin), Error);
    EXPECT_THROW(guarantee_transversal(6, 37, ArrayKind::Latin), Error);
    EXPECT_THROW(guarantee_transversal(0, 1, ArrayKind::Latin), Error);
    auto j = to_json(r);
    EXPECT_EQ(j["theorems"][0]["threshold"], 59);
    EXPECT_EQ(j["strongest"], "latin");
}

TEST(Bounds, ExactMatchesFloatingPointAwayFromTies)
{
    for (long long n = 1; n <= 2000; ++n)
    {
        double nn = static_cast<double>(n) * static_cast<double>(n);
        double lat = (2 - std::sqrt(2.0)) * nn, row = (5 - std::sqrt(5.0)) * nn / 4;
        double lll = (229 * nn + 27 * static_cast<double>(n)) / 256;
        auto check = [&](double x, long long got) {
            if (std::abs(x - std::round(x)) > 1e-6)
            {
                EXPECT_EQ(got, static_cast<long long>(std::ceil(x))) << n;
            }
        };
        check(lat, detail::least_symbols(n, detail::latin_bound_holds));
        check(row, detail::least_symbols(n, detail::row_latin_bound_holds));
        check(lll, detail::least_symbols(n, detail::lll_bound_holds));
    }
    EXPECT_EQ(detail::least_symbols(kMaxBoundOrder, detail::lll_bound_holds),
              (229 * kMaxBoundOrder * kMaxBoundOrder + 27 * kMaxBoundOrder + 255) / 256);
}

TEST(Bounds, MonotoneInSymbols)
{
    for (long long n = 1; n <= 40; ++n)
        for (auto kind : {ArrayKind::Latin, ArrayKind::RowLatin})
        {
            std::vector<bool> prev(3, false);
            for (long long s = n; s <= n * n; ++s)
            {
                auto r = guarantee_transversal(n, s, kind);
                for (std::size_t t = 0; t < 3; ++t)
                {
                    EXPECT_TRUE(!prev[t] || r.theorems[t].fires);
                    prev[t] = r.theorems[t].fires;
                }
            }
        }
}

TEST(Bounds, KnownEllValuesLieBelowThresholds)
{
    const std::map<int, int> ell{{2, 3}, {3, 3}, {4, 6}, {5, 7}, {6, 9}};
    for (auto [n, l] : ell)
        for (const auto& t : guarantee_transversal(n, n, ArrayKind::Latin).theorems)
            EXPECT_LE(l, std::max<long long>(t.threshold, n)) << n;
}

TEST(Bounds, FiringImpliesTransversal)
{
    Rng rng(404);
    for (int n = 1; n <= 7; ++n)
        for (int it = 0; it < 300; ++it)
        {
            auto kind = it % 2 ? ArrayKind::Latin : ArrayKind::RowLatin;
            int s = n + static_cast<int>(rng() % static_cast<std::uint64_t>(n * n - n + 1));
            auto rep = guarantee_transversal(n, s, kind);
            if (rep.strongest.empty())
                continue;
            auto a = kind == ArrayKind::Latin ? random_latin_array(n, s, rng) : random_row_latin_array(n, s, rng);
            EXPECT_TRUE(has_transversal(a)) << render_array(a);
        }
}
