#ifndef LATRANS_TRANSVERSAL_HPP
#define LATRANS_TRANSVERSAL_HPP

#include "latrans/core.hpp"

#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

namespace latrans
{

/// A set of entries pairwise distinct in row, column and symbol. Full
/// transversals have one entry per row; shorter ones are partial.
struct Transversal
{
    std::vector<Entry> entries;

    std::size_t length() const { return entries.size(); }
};

struct SearchStats
{
    std::uint64_t nodes = 0;
    std::uint64_t prunes = 0;
    double seconds = 0.0;
};

struct SearchOptions
{
    /// Branch on the row with the fewest feasible cells instead of the next
    /// row in ascending order.
    bool dynamic_row_order = false;
};

struct TransversalResult
{
    std::optional<Transversal> witness;
    SearchStats stats;

    bool found() const { return witness.has_value(); }
};

struct PartialTransversalResult
{
    int length = 0;
    Transversal witness;
    SearchStats stats;
};

/// Checks the partial-transversal invariants against the array: entries are
/// in range, match the array's symbols, avoid holes, and agree in no
/// coordinate.
inline bool is_valid_partial_transversal(const GridArray& a, const Transversal& t)
{
    std::uint32_t rows = 0, cols = 0;
    SymbolSet syms;
    for (const auto& e : t.entries)
    {
        if (e.row < 0 || e.row >= a.order() || e.col < 0 || e.col >= a.order())
            return false;
        if (a.at(e.row, e.col) != e.sym || e.sym == kHole)
            return false;
        if ((rows >> e.row & 1u) || (cols >> e.col & 1u) || syms.test(static_cast<std::size_t>(e.sym)))
            return false;
        rows |= 1u << e.row;
        cols |= 1u << e.col;
        syms.set(static_cast<std::size_t>(e.sym));
    }
    return true;
}

inline bool is_valid_transversal(const GridArray& a, const Transversal& t)
{
    return static_cast<int>(t.length()) == a.order() && is_valid_partial_transversal(a, t);
}

namespace detail
{

/// Exact-cover style backtracking: every row in the row list must receive a
/// cell whose column is free and whose symbol is unused. Negative cell values
/// are never selectable.
class CoverSearch
{
public:
    CoverSearch(int n, const Cell* cells, std::uint32_t row_mask, std::uint32_t col_mask,
                const SymbolSet& forbidden, bool dynamic)
        : n_(n), cells_(cells), col_free_(col_mask), used_(forbidden), dynamic_(dynamic)
    {
        for (int r = 0; r < n; ++r)
            if (row_mask >> r & 1u)
                rows_[static_cast<std::size_t>(depth_count_++)] = r;
    }

    /// Calls visit(rows, cols, depth) at each complete cover; a true return
    /// stops the search. Returns true iff stopped.
    template <class Visit>
    bool run(Visit&& visit)
    {
        return step(0, visit);
    }

    int cover_size() const { return depth_count_; }
    const SearchStats& stats() const { return stats_; }
    const std::array<int, kMaxOrder>& rows() const { return rows_; }
    const std::array<int, kMaxOrder>& picks() const { return pick_; }

    /// Feasible columns of row r under the current state.
    std::uint32_t feasible(int r) const
    {
        std::uint32_t out = 0;
        const Cell* row = cells_ + r * n_;
        for (std::uint32_t m = col_free_; m; m &= m - 1)
        {
            int c = std::countr_zero(m);
            Cell v = row[c];
            if (v >= 0 && !used_.test(static_cast<std::size_t>(v)))
                out |= 1u << c;
        }
        return out;
    }

private:
    template <class Visit>
    bool step(int depth, Visit& visit)
    {
        ++stats_.nodes;
        if (depth == depth_count_)
            return visit(rows_, pick_, depth_count_);

        if (dynamic_)
        {
            int best = depth, best_count = n_ + 1;
            for (int d = depth; d < depth_count_; ++d)
            {
                int cnt = std::popcount(feasible(rows_[static_cast<std::size_t>(d)]));
                if (cnt < best_count)
                {
                    best_count = cnt;
                    best = d;
                }
            }
            std::swap(rows_[static_cast<std::size_t>(depth)], rows_[static_cast<std::size_t>(best)]);
        }

        // Remaining rows outnumber the free columns: cannot complete.
        if (std::popcount(col_free_) < depth_count_ - depth)
        {
            ++stats_.prunes;
            return false;
        }

        const int r = rows_[static_cast<std::size_t>(depth)];
        std::uint32_t options = feasible(r);
        if (!options)
            ++stats_.prunes;
        for (; options; options &= options - 1)
        {
            int c = std::countr_zero(options);
            auto s = static_cast<std::size_t>(cells_[r * n_ + c]);
            col_free_ &= ~(1u << c);
            used_.set(s);
            pick_[static_cast<std::size_t>(depth)] = c;
            bool stop = step(depth + 1, visit);
            used_.reset(s);
            col_free_ |= 1u << c;
            if (stop)
                return true;
        }
        return false;
    }

    int n_;
    const Cell* cells_;
    std::uint32_t col_free_;
    SymbolSet used_;
    bool dynamic_;
    int depth_count_ = 0;
    std::array<int, kMaxOrder> rows_{};
    std::array<int, kMaxOrder> pick_{};
    SearchStats stats_;
};

inline std::uint32_t full_mask(int n) { return n >= 32 ? ~0u : ((1u << n) - 1u); }

inline Transversal make_transversal(const GridArray& a, const std::array<int, kMaxOrder>& rows,
                                    const std::array<int, kMaxOrder>& picks, int len)
{
    Transversal t;
    for (int d = 0; d < len; ++d)
    {
        int r = rows[static_cast<std::size_t>(d)], c = picks[static_cast<std::size_t>(d)];
        t.entries.push_back({r, c, a.at(r, c)});
    }
    std::sort(t.entries.begin(), t.entries.end());
    return t;
}

/// True iff the rows in row_mask can all be covered using columns from
/// col_mask with distinct symbols outside `forbidden`. Works on raw cells
/// where any negative value is unusable.
inline bool exists_cover(int n, const Cell* cells, std::uint32_t row_mask, std::uint32_t col_mask,
                         const SymbolSet& forbidden = {})
{
    CoverSearch s(n, cells, row_mask, col_mask, forbidden, false);
    return s.run([](auto&, auto&, int) { return true; });
}

} // namespace detail

inline TransversalResult find_transversal(const GridArray& a, const SearchOptions& opts = {})
{
    auto t0 = std::chrono::steady_clock::now();
    const auto mask = detail::full_mask(a.order());
    detail::CoverSearch s(a.order(), a.cells().data(), mask, mask, {}, opts.dynamic_row_order);
    TransversalResult res;
    s.run([&](const auto& rows, const auto& picks, int len) {
        res.witness = detail::make_transversal(a, rows, picks, len);
        return true;
    });
    res.stats = s.stats();
    res.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

inline bool has_transversal(const GridArray& a)
{
    const auto mask = detail::full_mask(a.order());
    return detail::exists_cover(a.order(), a.cells().data(), mask, mask);
}

/// Visits every transversal. The visitor receives a Transversal whose
/// entries are sorted by row.
template <class Visit>
void for_each_transversal(const GridArray& a, Visit&& visit)
{
    const auto mask = detail::full_mask(a.order());
    detail::CoverSearch s(a.order(), a.cells().data(), mask, mask, {}, false);
    s.run([&](const auto& rows, const auto& picks, int len) {
        visit(detail::make_transversal(a, rows, picks, len));
        return false;
    });
}

inline std::uint64_t count_transversals(const GridArray& a, const SearchOptions& opts = {},
                                        SearchStats* stats = nullptr)
{
    auto t0 = std::chrono::steady_clock::now();
    const auto mask = detail::full_mask(a.order());
    detail::CoverSearch s(a.order(), a.cells().data(), mask, mask, {}, opts.dynamic_row_order);
    std::uint64_t count = 0;
    s.run([&](auto&, auto&, int) {
        ++count;
        return false;
    });
    if (stats)
    {
        *stats = s.stats();
        stats->seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    return count;
}

/// Splits on the cell chosen in row 0 and counts the subtrees on up to
/// `jobs` threads. Equal to count_transversals for any job count.
inline std::uint64_t count_transversals_parallel(const GridArray& a, unsigned jobs)
{
    const int n = a.order();
    if (jobs <= 1 || n < 2)
        return count_transversals(a);
    std::vector<int> firsts;
    for (int c = 0; c < n; ++c)
        if (!a.is_hole(0, c))
            firsts.push_back(c);
    std::vector<std::uint64_t> partial(firsts.size(), 0);
    auto work = [&](std::size_t begin, std::size_t step) {
        for (std::size_t i = begin; i < firsts.size(); i += step)
        {
            int c = firsts[i];
            SymbolSet forbidden;
            forbidden.set(static_cast<std::size_t>(a.at(0, c)));
            detail::CoverSearch s(n, a.cells().data(), detail::full_mask(n) & ~1u,
                                  detail::full_mask(n) & ~(1u << c), forbidden, false);
            s.run([&](auto&, auto&, int) {
                ++partial[i];
                return false;
            });
        }
    };
    std::vector<std::thread> pool;
    unsigned used = std::min<unsigned>(jobs, static_cast<unsigned>(firsts.size()));
    for (unsigned j = 0; j < used; ++j)
        pool.emplace_back(work, j, used);
    for (auto& t : pool)
        t.join();
    std::uint64_t total = 0;
    for (auto v : partial)
        total += v;
    return total;
}

namespace detail
{

/// Branch and bound for the longest partial transversal inside
/// row_mask x col_mask. Rows are taken in ascending order; each is either
/// skipped or assigned a feasible cell.
class PartialSearch
{
public:
    PartialSearch(const GridArray& a, std::uint32_t row_mask, std::uint32_t col_mask)
        : a_(a), col_free_(col_mask)
    {
        for (int r = 0; r < a.order(); ++r)
            if (row_mask >> r & 1u)
                rows_.push_back(r);
    }

    PartialTransversalResult run()
    {
        auto t0 = std::chrono::steady_clock::now();
        step(0);
        PartialTransversalResult res;
        res.length = best_;
        res.witness.entries = best_entries_;
        std::sort(res.witness.entries.begin(), res.witness.entries.end());
        res.stats = stats_;
        res.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return res;
    }

private:
    void step(std::size_t depth)
    {
        ++stats_.nodes;
        const int cur = static_cast<int>(current_.size());
        if (cur > best_)
        {
            best_ = cur;
            best_entries_ = current_;
        }
        if (depth == rows_.size())
            return;
        const int remaining = static_cast<int>(rows_.size() - depth);
        // Admissible bound: at most one more entry per remaining row and free column.
        if (cur + std::min(remaining, std::popcount(col_free_)) <= best_)
        {
            ++stats_.prunes;
            return;
        }
        const int r = rows_[depth];
        for (std::uint32_t m = col_free_; m; m &= m - 1)
        {
            int c = std::countr_zero(m);
            Cell v = a_.at(r, c);
            if (v == kHole || used_.test(static_cast<std::size_t>(v)))
                continue;
            col_free_ &= ~(1u << c);
            used_.set(static_cast<std::size_t>(v));
            current_.push_back({r, c, v});
            step(depth + 1);
            current_.pop_back();
            used_.reset(static_cast<std::size_t>(v));
            col_free_ |= 1u << c;
            if (best_ == static_cast<int>(rows_.size()))
                return;
        }
        step(depth + 1);
    }

    const GridArray& a_;
    std::uint32_t col_free_;
    SymbolSet used_;
    std::vector<int> rows_;
    std::vector<Entry> current_;
    std::vector<Entry> best_entries_;
    int best_ = 0;
    SearchStats stats_;
};

inline std::uint32_t index_mask(const GridArray& a, const std::vector<int>& idx, const char* what)
{
    if (idx.empty())
        throw Error(std::string("empty ") + what + " subset");
    std::uint32_t m = 0;
    for (int i : idx)
    {
        check_index(a, i, what);
        m |= 1u << i;
    }
    return m;
}

} // namespace detail

inline PartialTransversalResult max_partial_transversal(const GridArray& a)
{
    const auto mask = detail::full_mask(a.order());
    return detail::PartialSearch(a, mask, mask).run();
}

/// Longest partial transversal using only cells in rows x cols.
inline int max_partial_within(const GridArray& a, const std::vector<int>& rows,
                              const std::vector<int>& cols)
{
    auto rm = detail::index_mask(a, rows, "row");
    auto cm = detail::index_mask(a, cols, "column");
    return detail::PartialSearch(a, rm, cm).run().length;
}

/// ((n - t)^2 > t) implies a partial transversal of length t + 1. A false
/// return is a counterexample.
inline bool woolbright_predicate(const GridArray& a, int t)
{
    const int n = a.order();
    if (t < 0 || t >= n)
        throw Error("t must satisfy 0 <= t < n");
    if (a.is_partial() || !is_latin(a))
        throw Error("woolbright_predicate requires a Latin array");
    const long long gap = n - t;
    if (!(gap * gap > t))
        return true;
    return max_partial_transversal(a).length >= t + 1;
}

/// A partial transversal of length n - 1 that meets neither row i nor
/// column j.
inline std::optional<Transversal> near_transversal_avoiding(const GridArray& a, int i, int j)
{
    check_index(a, i, "row");
    check_index(a, j, "column");
    const auto mask = detail::full_mask(a.order());
    detail::CoverSearch s(a.order(), a.cells().data(), mask & ~(1u << i), mask & ~(1u << j), {},
                          false);
    std::optional<Transversal> out;
    s.run([&](const auto& rows, const auto& picks, int len) {
        out = detail::make_transversal(a, rows, picks, len);
        return true;
    });
    return out;
}

} // namespace latrans

#endif // LATRANS_TRANSVERSAL_HPP
