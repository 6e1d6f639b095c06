#ifndef LATRANS_TESTS_ORACLES_HPP
#define LATRANS_TESTS_ORACLES_HPP

// Slow, obviously-correct reference implementations used only by tests.

#include "latrans/core.hpp"
#include "latrans/random.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle
{

using latrans::GridArray;
using latrans::kHole;

inline std::vector<int> identity(int n)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

/// Distinct symbols among the non-hole cells (i, perm[i]).
inline int distinct_on(const GridArray& a, const std::vector<int>& perm)
{
    std::set<int> seen;
    for (int i = 0; i < a.order(); ++i)
        if (a.at(i, perm[static_cast<std::size_t>(i)]) != kHole)
            seen.insert(a.at(i, perm[static_cast<std::size_t>(i)]));
    return static_cast<int>(seen.size());
}

/// Transversals by walking all n! permutations.
inline std::uint64_t count_transversals(const GridArray& a)
{
    auto p = identity(a.order());
    std::uint64_t count = 0;
    do
        count += distinct_on(a, p) == a.order();
    while (std::next_permutation(p.begin(), p.end()));
    return count;
}

/// Any partial transversal extends to a permutation, so the longest one is
/// the best distinct-symbol count over permutations.
inline int max_partial(const GridArray& a)
{
    auto p = identity(a.order());
    int best = 0;
    do
        best = std::max(best, distinct_on(a, p));
    while (std::next_permutation(p.begin(), p.end()));
    return best;
}

inline bool is_latin(const GridArray& a)
{
    const int n = a.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = y + 1; z < n; ++z)
            {
                if (a.at(x, y) != kHole && a.at(x, y) == a.at(x, z))
                    return false;
                if (a.at(y, x) != kHole && a.at(y, x) == a.at(z, x))
                    return false;
            }
    return true;
}

/// Canonical string by trying every row order, column order and
/// transposition and relabelling symbols by first use.
inline std::vector<int> brute_key(const GridArray& a)
{
    const int n = a.order();
    std::vector<int> best;
    for (int t = 0; t < 2; ++t)
    {
        auto rows = identity(n);
        do
        {
            auto cols = identity(n);
            do
            {
                std::map<int, int> relabel;
                std::vector<int> code;
                for (int r : rows)
                    for (int c : cols)
                    {
                        int v = t ? a.at(c, r) : a.at(r, c);
                        if (v == kHole)
                            code.push_back(1000);
                        else
                            code.push_back(relabel.try_emplace(v, static_cast<int>(relabel.size())).first->second);
                    }
                if (best.empty() || code < best)
                    best = code;
            } while (std::next_permutation(cols.begin(), cols.end()));
        } while (std::next_permutation(rows.begin(), rows.end()));
    }
    return best;
}

/// Every array of order n (holes allowed when max_holes > 0) with symbols
/// numbered by first use in row-major order, Latin on filled cells, with at
/// most `per_line` holes in each line and `max_holes` in total.
inline void for_each_partial_latin(int n, int per_line, int max_holes, const std::function<void(const GridArray&)>& f)
{
    std::vector<int> raw(static_cast<std::size_t>(n * n), -2);
    auto ok = [&](int idx) {
        int r = idx / n, c = idx % n, v = raw[static_cast<std::size_t>(idx)];
        int rh = 0, ch = 0, th = 0;
        for (int k = 0; k < n; ++k)
        {
            if (k != c && v >= 0 && raw[static_cast<std::size_t>(r * n + k)] == v)
                return false;
            if (k != r && v >= 0 && raw[static_cast<std::size_t>(k * n + c)] == v)
                return false;
            rh += raw[static_cast<std::size_t>(r * n + k)] == -1;
            ch += raw[static_cast<std::size_t>(k * n + c)] == -1;
        }
        for (int x : raw)
            th += x == -1;
        return rh <= per_line && ch <= per_line && th <= max_holes;
    };
    std::function<void(int, int)> rec = [&](int idx, int next) {
        if (idx == n * n)
        {
            std::vector<int> out(raw);
            f(GridArray::from_cells(n, out));
            return;
        }
        for (int v = -1; v <= next; ++v)
        {
            raw[static_cast<std::size_t>(idx)] = v;
            if (ok(idx))
                rec(idx + 1, v == next ? next + 1 : next);
        }
        raw[static_cast<std::size_t>(idx)] = -2;
    };
    rec(0, 0);
}

/// Largest clique over lines: events (pairs of equal-symbol cells in
/// distinct rows and columns) that touch the line.
inline int brute_kappa(const GridArray& a)
{
    const int n = a.order();
    std::vector<int> size(static_cast<std::size_t>(2 * n), 0);
    for (int x = 0; x < n * n; ++x)
        for (int y = x + 1; y < n * n; ++y)
        {
            int r1 = x / n, c1 = x % n, r2 = y / n, c2 = y % n;
            if (r1 == r2 || c1 == c2 || a.at(r1, c1) != a.at(r2, c2))
                continue;
            std::set<int> lines{r1, r2, n + c1, n + c2};
            for (int l : lines)
                ++size[static_cast<std::size_t>(l)];
        }
    return *std::max_element(size.begin(), size.end());
}

} // namespace oracle

#endif // LATRANS_TESTS_ORACLES_HPP
