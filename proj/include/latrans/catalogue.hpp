#ifndef LATRANS_CATALOGUE_HPP
#define LATRANS_CATALOGUE_HPP

// Catalogues of transversal-free (partial) Latin arrays up to trisotopy.
//
// Two reductions feed one growth engine. Both take a transversal-free array
// of order n, put k chosen entries with pairwise distinct columns and symbols
// on the leading diagonal, cut off the first k rows and columns, and turn the
// occurrences of the k chosen symbols in the remaining subarray into holes.
// That subarray has no partial transversal of length n - k. Growth reverses
// this: fill holes of a seed with the corner symbols, then fill the border.
//
//   k = 2: the extension path, seeds C_{n-2} (at most two holes per line).
//   k = 1: the direct path, used recursively down to order 1.

#include "latrans/core.hpp"
#include "latrans/transversal.hpp"
#include "latrans/trisotopy.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace latrans
{

inline constexpr int kUnlimited = std::numeric_limits<int>::max() / 4;

struct CatalogueRecord
{
    CanonicalKey key;
    int order = 0;
    int symbols = 0;
    int holes = 0;
    bool transversal_free = true;
    std::string provenance;

    GridArray array() const { return key.to_array(); }
};

inline nlohmann::json to_json(const CatalogueRecord& r)
{
    return {{"key", r.key.to_string()}, {"order", r.order},     {"symbols", r.symbols},
            {"holes", r.holes},         {"tf", r.transversal_free}, {"prov", r.provenance}};
}

inline CatalogueRecord record_from_json(const nlohmann::json& j)
{
    CatalogueRecord r;
    r.key = CanonicalKey::from_string(j.at("key").get<std::string>());
    r.order = j.at("order").get<int>();
    r.symbols = j.at("symbols").get<int>();
    r.holes = j.at("holes").get<int>();
    r.transversal_free = j.at("tf").get<bool>();
    r.provenance = j.value("prov", "");
    if (r.order != r.key.order || r.symbols != r.key.symbols || r.holes != r.key.holes)
        throw Error("record metadata disagrees with its key: " + j.dump());
    return r;
}

inline CatalogueRecord make_record(const GridArray& a, std::string provenance)
{
    CatalogueRecord r;
    r.key = canonical_form(a);
    r.order = a.order();
    r.symbols = a.symbol_count();
    r.holes = a.hole_count();
    r.transversal_free = !has_transversal(a);
    r.provenance = std::move(provenance);
    return r;
}

/// Append-only JSON-lines file of records plus an in-memory index keyed by
/// canonical key. Inserts are thread-safe and have set semantics.
class CatalogueStore
{
public:
    CatalogueStore() = default;

    CatalogueStore(const CatalogueStore& other)
    {
        std::shared_lock lock(other.mutex_);
        records_ = other.records_;
        complete_ = other.complete_;
        path_ = other.path_;
    }
    CatalogueStore& operator=(CatalogueStore other)
    {
        std::unique_lock lock(mutex_);
        records_ = std::move(other.records_);
        complete_ = other.complete_;
        path_ = std::move(other.path_);
        return *this;
    }

    /// Attaches a file; later inserts are appended to it.
    void attach(std::string path) { path_ = std::move(path); }

    bool insert(const CatalogueRecord& r)
    {
        std::unique_lock lock(mutex_);
        auto [it, inserted] = records_.emplace(r.key, r);
        if (inserted && !path_.empty())
        {
            std::ofstream out(path_, std::ios::app);
            out << to_json(r).dump() << '\n';
        }
        return inserted;
    }

    bool contains(const CanonicalKey& k) const
    {
        std::shared_lock lock(mutex_);
        return records_.count(k) > 0;
    }

    std::size_t size() const
    {
        std::shared_lock lock(mutex_);
        return records_.size();
    }

    /// Records sorted by canonical key.
    std::vector<CatalogueRecord> records() const
    {
        std::shared_lock lock(mutex_);
        std::vector<CatalogueRecord> out;
        out.reserve(records_.size());
        for (const auto& [k, r] : records_)
            out.push_back(r);
        return out;
    }

    bool complete() const { return complete_; }
    void set_complete(bool c) { complete_ = c; }

    void save(const std::string& path) const
    {
        std::ofstream out(path, std::ios::trunc);
        if (!out)
            throw Error("cannot write " + path);
        for (const auto& r : records())
            out << to_json(r).dump() << '\n';
    }

    void load_lines(std::istream& in)
    {
        std::string line;
        while (std::getline(in, line))
        {
            if (detail::is_blank(line))
                continue;
            auto r = record_from_json(nlohmann::json::parse(line));
            std::unique_lock lock(mutex_);
            records_.emplace(r.key, r);
        }
    }

    static CatalogueStore load(const std::string& path)
    {
        std::ifstream in(path);
        if (!in)
            throw Error("cannot read " + path);
        CatalogueStore s;
        s.load_lines(in);
        return s;
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<CanonicalKey, CatalogueRecord> records_;
    bool complete_ = false;
    std::string path_;
};

/// Deduplicates arrays by trisotopy class. Arrays are bucketed by
/// fingerprint; canonical keys are computed only when a bucket already holds
/// another array, and for the rest when the index is finalised.
class DedupIndex
{
public:
    /// Returns false if an array of the same class was inserted before.
    bool insert(const GridArray& a)
    {
        auto& bucket = buckets_[fingerprint(a)];
        if (bucket.empty())
        {
            bucket.push_back({a, std::nullopt});
            return true;
        }
        auto key = canonical_form(a);
        for (auto& e : bucket)
        {
            if (!e.key)
                e.key = canonical_form(e.array);
            if (*e.key == key)
                return false;
        }
        bucket.push_back({a, key});
        return true;
    }

    std::size_t size() const
    {
        std::size_t n = 0;
        for (const auto& [fp, b] : buckets_)
            n += b.size();
        return n;
    }

    /// Canonical keys of all classes, sorted.
    std::vector<CanonicalKey> keys()
    {
        std::vector<CanonicalKey> out;
        for (auto& [fp, b] : buckets_)
            for (auto& e : b)
            {
                if (!e.key)
                    e.key = canonical_form(e.array);
                out.push_back(*e.key);
            }
        std::sort(out.begin(), out.end());
        return out;
    }

    void merge(DedupIndex& other)
    {
        for (auto& [fp, b] : other.buckets_)
            for (auto& e : b)
                insert(e.array);
    }

private:
    struct Entry
    {
        GridArray array;
        std::optional<CanonicalKey> key;
    };
    std::unordered_map<std::uint64_t, std::vector<Entry>> buckets_;
};

// ---------------------------------------------------------------------------
// Growth engine

/// Hole limits of the arrays being produced.
struct HoleLimits
{
    int per_line = 0;
    int total = 0;

    friend auto operator<=>(const HoleLimits&, const HoleLimits&) = default;
};

struct GrowStats
{
    std::uint64_t hole_fillings = 0;
    std::uint64_t nodes = 0;
    std::uint64_t prunes = 0;
    std::uint64_t outputs = 0;
};

namespace detail
{

/// Prepends k rows and columns to a seed with no partial transversal of full
/// length. Corner symbol i sits at (i, i); the seed's holes become corner
/// symbols or stay holes; the border is filled with existing symbols, new
/// symbols (numbered by first use), or holes. A placement that completes a
/// transversal is rejected at once, so every output is transversal-free.
class Grower
{
public:
    static constexpr Cell kUnfilled = -2;

    Grower(const GridArray& seed, int k, HoleLimits limits) : seed_(seed), k_(k), limits_(limits)
    {
        q_ = seed.order();
        n_ = q_ + k;
        if (n_ > kMaxOrder)
            throw Error("grown order too large");
        grid_.assign(static_cast<std::size_t>(n_ * n_), kUnfilled);
        row_syms_.assign(static_cast<std::size_t>(n_), {});
        col_syms_.assign(static_cast<std::size_t>(n_), {});
        row_holes_.assign(static_cast<std::size_t>(n_), 0);
        col_holes_.assign(static_cast<std::size_t>(n_), 0);
        for (int r = 0; r < q_; ++r)
            for (int c = 0; c < q_; ++c)
            {
                Cell v = seed.at(r, c);
                if (v == kHole)
                    seed_holes_.push_back({r + k, c + k});
                else
                    put(r + k, c + k, v);
            }
        for (int i = 0; i < k; ++i)
            put(i, i, static_cast<Cell>(seed.symbol_count() + i));
        next_fresh_ = seed.symbol_count() + k;

        border_.clear();
        if (k == 1)
        {
            for (int c = 1; c < n_; ++c)
            {
                border_.push_back({0, c});
                border_.push_back({c, 0});
            }
        }
        else
        {
            border_.push_back({0, 1});
            border_.push_back({1, 0});
            for (int c = 2; c < n_; ++c)
            {
                border_.push_back({0, c});
                border_.push_back({c, 0});
                border_.push_back({1, c});
                border_.push_back({c, 1});
            }
        }
    }

    template <class Out>
    void run(Out&& out)
    {
        fill_holes(0, out);
    }

    const GrowStats& stats() const { return stats_; }

private:
    Cell& cell(int r, int c) { return grid_[static_cast<std::size_t>(r * n_ + c)]; }

    void put(int r, int c, Cell v)
    {
        cell(r, c) = v;
        if (v >= 0)
        {
            row_syms_[static_cast<std::size_t>(r)].set(static_cast<std::size_t>(v));
            col_syms_[static_cast<std::size_t>(c)].set(static_cast<std::size_t>(v));
        }
        else if (v == kHole)
        {
            ++row_holes_[static_cast<std::size_t>(r)];
            ++col_holes_[static_cast<std::size_t>(c)];
            ++holes_;
        }
    }

    void take(int r, int c)
    {
        Cell v = cell(r, c);
        if (v >= 0)
        {
            row_syms_[static_cast<std::size_t>(r)].reset(static_cast<std::size_t>(v));
            col_syms_[static_cast<std::size_t>(c)].reset(static_cast<std::size_t>(v));
        }
        else if (v == kHole)
        {
            --row_holes_[static_cast<std::size_t>(r)];
            --col_holes_[static_cast<std::size_t>(c)];
            --holes_;
        }
        cell(r, c) = kUnfilled;
    }

    bool hole_allowed(int r, int c) const
    {
        return row_holes_[static_cast<std::size_t>(r)] < limits_.per_line &&
               col_holes_[static_cast<std::size_t>(c)] < limits_.per_line && holes_ < limits_.total;
    }

    template <class Out>
    void fill_holes(std::size_t idx, Out& out)
    {
        if (idx == seed_holes_.size())
        {
            ++stats_.hole_fillings;
            fill_border(0, out);
            return;
        }
        auto [r, c] = seed_holes_[idx];
        for (int i = 0; i < k_; ++i)
        {
            auto s = static_cast<Cell>(seed_.symbol_count() + i);
            if (row_syms_[static_cast<std::size_t>(r)].test(static_cast<std::size_t>(s)) ||
                col_syms_[static_cast<std::size_t>(c)].test(static_cast<std::size_t>(s)))
                continue;
            put(r, c, s);
            fill_holes(idx + 1, out);
            take(r, c);
        }
        if (hole_allowed(r, c))
        {
            put(r, c, kHole);
            fill_holes(idx + 1, out);
            take(r, c);
        }
    }

    /// True if some transversal uses (r, c), given the current symbols.
    bool completes_transversal(int r, int c, Cell s) const
    {
        SymbolSet forbidden;
        forbidden.set(static_cast<std::size_t>(s));
        const auto all = full_mask(n_);
        return exists_cover(n_, grid_.data(), all & ~(1u << r), all & ~(1u << c), forbidden);
    }

    template <class Out>
    void fill_border(std::size_t idx, Out& out)
    {
        ++stats_.nodes;
        if (idx == border_.size())
        {
            emit(out);
            return;
        }
        auto [r, c] = border_[idx];
        const auto& rs = row_syms_[static_cast<std::size_t>(r)];
        const auto& cs = col_syms_[static_cast<std::size_t>(c)];
        for (int s = 0; s <= next_fresh_; ++s)
        {
            if (s >= kMaxSymbols)
                break;
            if (s < next_fresh_ && (rs.test(static_cast<std::size_t>(s)) || cs.test(static_cast<std::size_t>(s))))
                continue;
            auto v = static_cast<Cell>(s);
            put(r, c, v);
            if (completes_transversal(r, c, v))
                ++stats_.prunes;
            else
            {
                bool fresh = s == next_fresh_;
                if (fresh)
                    ++next_fresh_;
                fill_border(idx + 1, out);
                if (fresh)
                    --next_fresh_;
            }
            take(r, c);
        }
        if (hole_allowed(r, c))
        {
            put(r, c, kHole);
            fill_border(idx + 1, out);
            take(r, c);
        }
    }

    template <class Out>
    void emit(Out& out)
    {
        std::vector<int> raw(grid_.begin(), grid_.end());
        auto a = GridArray::from_cells(n_, raw);
        ++stats_.outputs;
        out(a);
    }

    const GridArray& seed_;
    int k_;
    HoleLimits limits_;
    int q_ = 0, n_ = 0;
    std::vector<Cell> grid_;
    std::vector<SymbolSet> row_syms_, col_syms_;
    std::vector<int> row_holes_, col_holes_;
    int holes_ = 0;
    int next_fresh_ = 0;
    std::vector<std::pair<int, int>> seed_holes_;
    std::vector<std::pair<int, int>> border_;
    GrowStats stats_;
};

} // namespace detail

/// Grows every seed by k rows and columns and returns the distinct classes
/// of transversal-free outputs within `limits`, sorted by key. Seeds are
/// split across `jobs` workers that share nothing; the merge is a sorted
/// set union, so the result does not depend on `jobs`.
struct GrowOptions
{
    unsigned jobs = 1;
    std::function<void(const std::string&)> heartbeat;
    double heartbeat_seconds = 30.0;
};

inline std::vector<CanonicalKey> grow_catalogue(const std::vector<GridArray>& seeds, int k,
                                                HoleLimits limits, const GrowOptions& opts = {},
                                                GrowStats* total_stats = nullptr)
{
    const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(seeds.size())));
    std::vector<std::vector<CanonicalKey>> partial(jobs);
    std::vector<GrowStats> stats(jobs);
    std::atomic<std::size_t> done{0};
    std::mutex beat_mutex;
    auto last_beat = std::chrono::steady_clock::now();

    auto work = [&](unsigned j) {
        DedupIndex index;
        for (std::size_t i = j; i < seeds.size(); i += jobs)
        {
            detail::Grower g(seeds[i], k, limits);
            g.run([&](const GridArray& a) { index.insert(a); });
            const auto& s = g.stats();
            stats[j].hole_fillings += s.hole_fillings;
            stats[j].nodes += s.nodes;
            stats[j].prunes += s.prunes;
            stats[j].outputs += s.outputs;
            std::size_t finished = ++done;
            if (opts.heartbeat)
            {
                std::lock_guard lock(beat_mutex);
                auto now = std::chrono::steady_clock::now();
                if (std::chrono::duration<double>(now - last_beat).count() >= opts.heartbeat_seconds)
                {
                    last_beat = now;
                    opts.heartbeat("seeds " + std::to_string(finished) + "/" + std::to_string(seeds.size()));
                }
            }
        }
        partial[j] = index.keys();
    };

    if (jobs == 1)
        work(0);
    else
    {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back(work, j);
        for (auto& t : pool)
            t.join();
    }

    std::set<CanonicalKey> merged;
    for (auto& p : partial)
        merged.insert(p.begin(), p.end());
    if (total_stats)
        for (const auto& s : stats)
        {
            total_stats->hole_fillings += s.hole_fillings;
            total_stats->nodes += s.nodes;
            total_stats->prunes += s.prunes;
            total_stats->outputs += s.outputs;
        }
    return {merged.begin(), merged.end()};
}

// ---------------------------------------------------------------------------
// Direct path: one row and column at a time

/// Class of arrays enumerated by the direct path: transversal-free partial
/// Latin arrays of the given order within the hole limits.
struct PartialClassSpec
{
    int order = 1;
    HoleLimits limits;

    PartialClassSpec normalized() const
    {
        return {order, {std::min(limits.per_line, order), std::min(limits.total, order * order)}};
    }
    friend auto operator<=>(const PartialClassSpec&, const PartialClassSpec&) = default;
};

namespace detail
{
inline std::vector<CanonicalKey> enumerate_direct(PartialClassSpec spec, const GrowOptions& opts,
                                                  std::map<PartialClassSpec, std::vector<CanonicalKey>>& memo)
{
    spec = spec.normalized();
    if (auto it = memo.find(spec); it != memo.end())
        return it->second;

    const int m = spec.order;
    std::vector<CanonicalKey> out;
    const bool all_holes_ok = spec.limits.per_line >= m && spec.limits.total >= m * m;
    if (m == 1)
    {
        // A filled 1x1 array is its own transversal.
        if (all_holes_ok)
            out.push_back(CanonicalKey::from_array(GridArray::from_cells(1, {-1})));
    }
    else
    {
        PartialClassSpec sub{m - 1, {spec.limits.per_line + 1, spec.limits.total + (m - 1)}};
        auto seeds_keys = enumerate_direct(sub, opts, memo);
        std::vector<GridArray> seeds;
        seeds.reserve(seeds_keys.size());
        for (const auto& k : seeds_keys)
            seeds.push_back(k.to_array());
        if (opts.heartbeat)
            opts.heartbeat("direct: order " + std::to_string(m) + " from " + std::to_string(seeds.size()) +
                           " seeds");
        out = grow_catalogue(seeds, 1, spec.limits, opts);
        if (all_holes_ok)
        {
            std::vector<int> raw(static_cast<std::size_t>(m * m), -1);
            out.push_back(CanonicalKey::from_array(GridArray::from_cells(m, raw)));
            std::sort(out.begin(), out.end());
        }
    }
    memo[spec] = out;
    return out;
}
} // namespace detail

/// Every trisotopy class of transversal-free partial Latin arrays of order
/// `order` within `limits`, by the direct (one row and column) path.
inline std::vector<CanonicalKey> enumerate_tf_direct(int order, HoleLimits limits, const GrowOptions& opts = {})
{
    if (order < 1)
        throw Error("order must be positive");
    std::map<PartialClassSpec, std::vector<CanonicalKey>> memo;
    return detail::enumerate_direct({order, limits}, opts, memo);
}

inline CatalogueStore store_from_keys(const std::vector<CanonicalKey>& keys, const std::string& prov)
{
    CatalogueStore store;
    for (const auto& k : keys)
    {
        CatalogueRecord r;
        r.key = k;
        r.order = k.order;
        r.symbols = k.symbols;
        r.holes = k.holes;
        r.transversal_free = true;
        r.provenance = prov;
        store.insert(r);
    }
    store.set_complete(true);
    return store;
}

/// C_m: transversal-free partial Latin arrays of order m with at most
/// `max_holes_per_line` holes in each row and column (and at most
/// `max_holes` in total).
inline CatalogueStore enumerate_partial_catalogue(int m, int max_holes_per_line = 2, int max_holes = kUnlimited,
                                                  const GrowOptions& opts = {})
{
    auto keys = enumerate_tf_direct(m, {max_holes_per_line, max_holes}, opts);
    return store_from_keys(keys, "direct");
}

// ---------------------------------------------------------------------------
// Extension path: two rows and columns at a time

/// Transversal-free arrays of order n obtained from a complete order n-2
/// catalogue by filling its holes with two corner symbols and extending.
/// With the default limits the outputs are Latin arrays (no holes).
inline CatalogueStore extend_catalogue(const CatalogueStore& seeds, int n, HoleLimits limits = {0, 0},
                                       const GrowOptions& opts = {})
{
    if (n < 3)
        throw Error("the two-row extension needs order >= 3");
    std::vector<GridArray> arrays;
    for (const auto& r : seeds.records())
    {
        if (r.order != n - 2)
            throw Error("seed catalogue has order " + std::to_string(r.order) + ", expected " +
                        std::to_string(n - 2));
        arrays.push_back(r.array());
    }
    auto keys = grow_catalogue(arrays, 2, limits, opts);
    auto store = store_from_keys(keys, "extend");
    store.set_complete(seeds.complete());
    return store;
}

/// Transversal-free Latin arrays of order n by the direct path.
inline CatalogueStore enumerate_latin_tf_direct(int n, const GrowOptions& opts = {})
{
    return store_from_keys(enumerate_tf_direct(n, {0, 0}, opts), "direct");
}

/// Builds the complete catalogue of transversal-free Latin arrays of order n
/// by the extension path (C_{n-2} comes from the direct path). Orders below 3
/// have no two-entry normalisation and use the direct path.
inline CatalogueStore latin_tf_catalogue(int n, const GrowOptions& opts = {})
{
    if (n < 3)
        return enumerate_latin_tf_direct(n, opts);
    auto seeds = enumerate_partial_catalogue(n - 2, 2, kUnlimited, opts);
    return extend_catalogue(seeds, n, {0, 0}, opts);
}

/// l(n) from a complete catalogue of transversal-free Latin arrays of order n.
inline int compute_ell(int n, const CatalogueStore& catalogue)
{
    if (!catalogue.complete())
        throw Error("l(n) needs a complete catalogue");
    int best = n;
    for (const auto& r : catalogue.records())
        if (r.order == n && r.holes == 0 && r.transversal_free)
            best = std::max(best, r.symbols + 1);
    return best;
}

// ---------------------------------------------------------------------------
// Reports

struct Table1Row
{
    int n = 0;
    bool complete = false;
    int ell = 0;
    std::map<int, int> by_symbols; ///< symbol count -> classes
    int total = 0;
};

inline Table1Row table1_row(int n, const CatalogueStore& catalogue)
{
    Table1Row row;
    row.n = n;
    row.complete = catalogue.complete();
    for (const auto& r : catalogue.records())
        if (r.order == n && r.holes == 0 && r.transversal_free)
        {
            ++row.by_symbols[r.symbols];
            ++row.total;
        }
    if (row.complete)
        row.ell = compute_ell(n, catalogue);
    return row;
}

inline std::string cell_or_dash(int v) { return v ? std::to_string(v) : std::string("-"); }

/// Columns: n, l(n), classes with n, n+1, n+2 symbols, total. Incomplete rows
/// are marked instead of showing l(n).
inline std::string render_table1(const std::vector<Table1Row>& rows)
{
    int extra = 2;
    for (const auto& r : rows)
        for (const auto& [s, c] : r.by_symbols)
            extra = std::max(extra, s - r.n);
    std::ostringstream out;
    out << "n\tl(n)";
    for (int e = 0; e <= extra; ++e)
        out << "\t" << (e ? "n+" + std::to_string(e) : std::string("n")) << " symbols";
    out << "\tTotal\n";
    for (const auto& r : rows)
    {
        out << r.n << "\t" << (r.complete ? std::to_string(r.ell) : std::string("incomplete"));
        for (int e = 0; e <= extra; ++e)
        {
            auto it = r.by_symbols.find(r.n + e);
            out << "\t" << cell_or_dash(it == r.by_symbols.end() ? 0 : it->second);
        }
        out << "\t" << r.total << "\n";
    }
    return out.str();
}

/// Counts of classes by (holes, symbols) for an order-m partial catalogue.
inline std::map<int, std::map<int, int>> table2_counts(const CatalogueStore& catalogue)
{
    std::map<int, std::map<int, int>> counts;
    for (const auto& r : catalogue.records())
        ++counts[r.holes][r.symbols];
    return counts;
}

inline std::string render_table2(const std::map<int, std::map<int, int>>& counts, int max_holes, bool complete,
                                 int min_symbols = 3, int max_symbols = 13)
{
    std::ostringstream out;
    out << "holes";
    for (int s = min_symbols; s <= max_symbols; ++s)
        out << "\t" << s;
    out << "\tTotal\n";
    long long grand = 0;
    for (int h = 0; h <= max_holes; ++h)
    {
        out << h;
        long long total = 0;
        auto it = counts.find(h);
        for (int s = min_symbols; s <= max_symbols; ++s)
        {
            int v = 0;
            if (it != counts.end())
                if (auto jt = it->second.find(s); jt != it->second.end())
                    v = jt->second;
            out << "\t" << cell_or_dash(v);
        }
        if (it != counts.end())
            for (const auto& [s, v] : it->second)
                total += v;
        grand += total;
        out << "\t" << total << "\n";
    }
    out << "total\t" << grand << (complete ? "" : "\tincomplete") << "\n";
    return out.str();
}

} // namespace latrans

#endif // LATRANS_CATALOGUE_HPP
