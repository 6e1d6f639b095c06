#include "latrans/catalogue.hpp"
#include "latrans/constructions.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

using namespace latrans;

namespace
{

std::vector<CanonicalKey> keys_of(const CatalogueStore& s)
{
    std::vector<CanonicalKey> out;
    for (const auto& r : s.records())
        out.push_back(r.key);
    return out;
}

/// Independent enumeration: every partial Latin array of order m within the
/// limits, filtered by the permutation oracle, deduplicated by brute keys.
std::set<std::vector<int>> oracle_classes(int m, int per_line, int total)
{
    std::set<std::vector<int>> out;
    oracle::for_each_partial_latin(m, per_line, total, [&](const GridArray& a) {
        if (oracle::max_partial(a) < m)
            out.insert(oracle::brute_key(a));
    });
    return out;
}

std::vector<int> as_ints(const CanonicalKey& k)
{
    std::vector<int> v;
    for (auto c : k.code)
        v.push_back(c == CanonicalKey::kHoleCode ? 1000 : c);
    return v;
}

int max_line_holes(const GridArray& a)
{
    int best = 0;
    for (int i = 0; i < a.order(); ++i)
    {
        int r = 0, c = 0;
        for (int k = 0; k < a.order(); ++k)
        {
            r += a.is_hole(i, k);
            c += a.is_hole(k, i);
        }
        best = std::max({best, r, c});
    }
    return best;
}

/// Moves entries (r1, c1) and (r2, c2) to the top-left diagonal, deletes the
/// first two rows and columns and turns the two symbols into holes.
GridArray reduce_two(const GridArray& a, int r1, int c1, int r2, int c2)
{
    const int n = a.order();
    std::vector<int> rows{r1, r2}, cols{c1, c2};
    for (int r = 0; r < n; ++r)
        if (r != r1 && r != r2)
            rows.push_back(r);
    for (int c = 0; c < n; ++c)
        if (c != c1 && c != c2)
            cols.push_back(c);
    const Cell x = a.at(r1, c1), y = a.at(r2, c2);
    std::vector<int> raw;
    for (int i = 2; i < n; ++i)
        for (int j = 2; j < n; ++j)
        {
            Cell v = a.at(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
            raw.push_back(v == x || v == y ? -1 : v);
        }
    return GridArray::from_cells(n - 2, raw);
}

} // namespace

TEST(Store, SetSemanticsAndRoundTrip)
{
    CatalogueStore s;
    auto a = arrays::order4_cyclic();
    EXPECT_TRUE(s.insert(make_record(a, "test")));
    Rng rng(5);
    EXPECT_FALSE(s.insert(make_record(apply_scramble(a, random_scramble(a, rng)), "test")));
    EXPECT_TRUE(s.insert(make_record(arrays::order4_five_symbols(), "test")));
    EXPECT_EQ(s.size(), 2u);

    auto path = (std::filesystem::temp_directory_path() / "latrans_store_test.jsonl").string();
    s.save(path);
    auto t = CatalogueStore::load(path);
    EXPECT_EQ(keys_of(t), keys_of(s));
    auto recs = t.records();
    EXPECT_TRUE(recs[0].transversal_free);
    EXPECT_EQ(recs[0].provenance, "test");

    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    auto j = nlohmann::json::parse(line);
    for (const char* field : {"key", "order", "symbols", "holes", "tf", "prov"})
        EXPECT_TRUE(j.contains(field)) << field;
    std::filesystem::remove(path);
}

TEST(Store, AppendModeAndBadRecords)
{
    auto path = (std::filesystem::temp_directory_path() / "latrans_append_test.jsonl").string();
    std::filesystem::remove(path);
    {
        CatalogueStore s;
        s.attach(path);
        s.insert(make_record(arrays::order5_first(), "x"));
        s.insert(make_record(arrays::order5_first(), "x"));
        s.insert(make_record(arrays::order5_second(), "x"));
    }
    EXPECT_EQ(CatalogueStore::load(path).size(), 2u);
    std::filesystem::remove(path);

    auto j = to_json(make_record(arrays::order5_first(), "x"));
    j["symbols"] = 99;
    EXPECT_THROW(record_from_json(j), Error);
    EXPECT_THROW(CatalogueStore::load("/nonexistent/file.jsonl"), Error);
}

TEST(Store, ConcurrentInserts)
{
    CatalogueStore s;
    auto base = arrays::order5_first();
    std::vector<std::thread> pool;
    for (int t = 0; t < 4; ++t)
        pool.emplace_back([&, t] {
            Rng rng(static_cast<std::uint64_t>(t));
            for (int i = 0; i < 50; ++i)
            {
                s.insert(make_record(apply_scramble(base, random_scramble(base, rng)), "t"));
                (void)s.contains(canonical_form(base));
            }
        });
    for (auto& th : pool)
        th.join();
    EXPECT_EQ(s.size(), 1u);
}

TEST(Dedup, ScramblesCollapse)
{
    DedupIndex idx;
    Rng rng(8);
    auto a = arrays::order5_second();
    EXPECT_TRUE(idx.insert(a));
    for (int i = 0; i < 30; ++i)
        EXPECT_FALSE(idx.insert(apply_scramble(a, random_scramble(a, rng))));
    EXPECT_TRUE(idx.insert(arrays::order5_first()));
    auto keys = idx.keys();
    ASSERT_EQ(keys.size(), 2u);
    EXPECT_TRUE(keys[0] < keys[1]);
}

TEST(Direct, MatchesExhaustiveOracleAtSmallOrders)
{
    for (int m = 1; m <= 3; ++m)
        for (int h = 0; h <= m; ++h)
            for (int total : {0, 1, 2, 4, m * m})
            {
                auto got = enumerate_tf_direct(m, {h, total});
                std::set<std::vector<int>> mine;
                for (const auto& k : got)
                    mine.insert(as_ints(k));
                EXPECT_EQ(mine.size(), got.size());
                EXPECT_EQ(mine, oracle_classes(m, h, total)) << "m=" << m << " h=" << h << " H=" << total;
            }
}

TEST(Direct, PartialCataloguesRevalidate)
{
    for (int m = 1; m <= 4; ++m)
    {
        auto c = enumerate_partial_catalogue(m, 2);
        EXPECT_TRUE(c.complete());
        for (const auto& r : c.records())
        {
            auto a = r.array();
            EXPECT_TRUE(is_latin(a));
            EXPECT_LE(max_line_holes(a), 2);
            EXPECT_EQ(max_partial_transversal(a).length < m, true);
            EXPECT_EQ(r.symbols, a.symbol_count());
            EXPECT_EQ(r.holes, a.hole_count());
        }
    }
}

TEST(Latin, Table1RowsUpToFive)
{
    const std::map<int, std::pair<int, std::map<int, int>>> expected{
        {1, {1, {}}}, {2, {3, {{2, 1}}}}, {3, {3, {}}}, {4, {6, {{4, 1}, {5, 1}}}}, {5, {7, {{6, 2}}}}};
    for (const auto& [n, want] : expected)
    {
        auto direct = enumerate_latin_tf_direct(n);
        auto cat = latin_tf_catalogue(n);
        EXPECT_EQ(keys_of(cat), keys_of(direct)) << n;
        auto row = table1_row(n, cat);
        EXPECT_EQ(row.ell, want.first) << n;
        EXPECT_EQ(row.by_symbols, want.second) << n;
        for (const auto& r : cat.records())
        {
            auto a = r.array();
            EXPECT_TRUE(is_latin(a));
            EXPECT_FALSE(a.is_partial());
            EXPECT_EQ(count_transversals(a), 0u);
        }
    }
}

TEST(Latin, NamedRepresentativesAreInTheCatalogues)
{
    auto c4 = latin_tf_catalogue(4);
    EXPECT_TRUE(c4.contains(canonical_form(arrays::order4_cyclic())));
    EXPECT_TRUE(c4.contains(canonical_form(arrays::order4_five_symbols())));
    auto c5 = latin_tf_catalogue(5);
    EXPECT_TRUE(c5.contains(canonical_form(arrays::order5_first())));
    EXPECT_TRUE(c5.contains(canonical_form(arrays::order5_second())));
}

TEST(Latin, RandomTransversalFreeArraysAreCatalogued)
{
    std::map<int, CatalogueStore> cats{{4, latin_tf_catalogue(4)}, {5, latin_tf_catalogue(5)}};
    Rng rng(606);
    int found = 0;
    for (int i = 0; i < 20000; ++i)
    {
        int n = 4 + i % 2;
        auto a = i % 3 == 0 ? random_latin_square(n, rng)
                            : random_latin_array(n, n + static_cast<int>(rng() % 3), rng);
        if (oracle::count_transversals(a) == 0)
        {
            ++found;
            EXPECT_TRUE(cats[n].contains(canonical_form(a))) << render_array(a);
        }
    }
    EXPECT_GT(found, 0);
}

TEST(Latin, EveryTwoEntryReductionLandsInTheSeedCatalogue)
{
    for (int n = 4; n <= 5; ++n)
    {
        auto seeds = enumerate_partial_catalogue(n - 2, 2);
        for (const auto& r : latin_tf_catalogue(n).records())
        {
            auto a = r.array();
            int checked = 0;
            for (int r1 = 0; r1 < n; ++r1)
                for (int c1 = 0; c1 < n; ++c1)
                    for (int r2 = 0; r2 < n; ++r2)
                        for (int c2 = 0; c2 < n; ++c2)
                        {
                            if (r2 == r1 || c2 == c1 || a.at(r1, c1) == a.at(r2, c2))
                                continue;
                            ++checked;
                            EXPECT_TRUE(seeds.contains(canonical_form(reduce_two(a, r1, c1, r2, c2))));
                        }
            EXPECT_GT(checked, 0);
        }
    }
}

TEST(Latin, ExtensionMatchesDirectOnPartialTargets)
{
    // Order-5 arrays with at most one hole, by both reductions.
    auto direct = enumerate_partial_catalogue(5, 2, 1);
    auto seeds = enumerate_partial_catalogue(3, 3, 7);
    auto ext = extend_catalogue(seeds, 5, {2, 1});
    EXPECT_EQ(keys_of(ext), keys_of(direct));
    auto counts = table2_counts(direct);
    EXPECT_EQ(counts[0], (std::map<int, int>{{6, 2}}));
    EXPECT_EQ(counts[1], (std::map<int, int>{{5, 1}, {6, 17}}));
}

TEST(Latin, DeterministicAcrossJobs)
{
    auto seeds_store = enumerate_partial_catalogue(3, 2);
    std::vector<GridArray> seeds;
    for (const auto& r : seeds_store.records())
        seeds.push_back(r.array());
    GrowOptions one, many;
    many.jobs = 3;
    EXPECT_EQ(grow_catalogue(seeds, 2, {0, 0}, one), grow_catalogue(seeds, 2, {0, 0}, many));
}

TEST(Latin, ExtensionPreconditions)
{
    EXPECT_THROW(extend_catalogue(CatalogueStore{}, 2), Error);
    CatalogueStore wrong = enumerate_partial_catalogue(3, 2);
    EXPECT_THROW(extend_catalogue(wrong, 4), Error);
    CatalogueStore incomplete = enumerate_partial_catalogue(2, 2);
    incomplete.set_complete(false);
    EXPECT_FALSE(extend_catalogue(incomplete, 4).complete());
}

TEST(Ell, Values)
{
    CatalogueStore empty;
    EXPECT_THROW(compute_ell(3, empty), Error);
    empty.set_complete(true);
    EXPECT_EQ(compute_ell(3, empty), 3);
    EXPECT_EQ(compute_ell(1, latin_tf_catalogue(1)), 1);
}

TEST(Reports, Table1Layout)
{
    std::vector<Table1Row> rows;
    for (int n = 2; n <= 5; ++n)
        rows.push_back(table1_row(n, latin_tf_catalogue(n)));
    Table1Row missing;
    missing.n = 9;
    rows.push_back(missing);
    auto text = render_table1(rows);
    std::ifstream in(std::string(LATRANS_TEST_DATA) + "/table1_upto5.txt");
    std::stringstream want;
    want << in.rdbuf();
    EXPECT_EQ(text, want.str() + "9\tincomplete\t-\t-\t-\t0\n");
}
