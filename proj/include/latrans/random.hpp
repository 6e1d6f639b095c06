#ifndef LATRANS_RANDOM_HPP
#define LATRANS_RANDOM_HPP

// Seeded generators for test corpora and the `sample` command. All take a
// std::mt19937_64 so runs are reproducible from the printed seed.

#include "latrans/core.hpp"
#include "latrans/trisotopy.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace latrans
{

using Rng = std::mt19937_64;

inline std::vector<int> random_permutation(int n, Rng& rng)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

inline Scramble random_scramble(const GridArray& a, Rng& rng)
{
    Scramble g;
    g.row_perm = random_permutation(a.order(), rng);
    g.col_perm = random_permutation(a.order(), rng);
    g.sym_perm = random_permutation(a.symbol_count(), rng);
    g.transpose = std::bernoulli_distribution(0.5)(rng);
    return g;
}

namespace detail
{
/// Kuhn augmenting path over a shuffled adjacency; used to extend a Latin
/// rectangle by one row.
inline bool augment(int col, const std::vector<std::vector<int>>& adj, std::vector<int>& sym_owner,
                    std::vector<char>& seen)
{
    for (int s : adj[static_cast<std::size_t>(col)])
    {
        if (seen[static_cast<std::size_t>(s)])
            continue;
        seen[static_cast<std::size_t>(s)] = 1;
        int& owner = sym_owner[static_cast<std::size_t>(s)];
        if (owner < 0 || augment(owner, adj, sym_owner, seen))
        {
            owner = col;
            return true;
        }
    }
    return false;
}
} // namespace detail

/// Latin square built row by row from random perfect matchings, then
/// scrambled. Not uniform, but every row extension is random.
inline GridArray random_latin_square(int n, Rng& rng)
{
    std::vector<int> grid(static_cast<std::size_t>(n * n), -1);
    std::vector<std::vector<char>> col_used(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int r = 0; r < n; ++r)
    {
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
        for (int c = 0; c < n; ++c)
        {
            for (int s = 0; s < n; ++s)
                if (!col_used[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)])
                    adj[static_cast<std::size_t>(c)].push_back(s);
            std::shuffle(adj[static_cast<std::size_t>(c)].begin(), adj[static_cast<std::size_t>(c)].end(), rng);
        }
        std::vector<int> sym_owner(static_cast<std::size_t>(n), -1);
        auto cols = random_permutation(n, rng);
        for (int c : cols)
        {
            std::vector<char> seen(static_cast<std::size_t>(n), 0);
            detail::augment(c, adj, sym_owner, seen); // Hall's condition holds for Latin rectangles
        }
        for (int s = 0; s < n; ++s)
        {
            int c = sym_owner[static_cast<std::size_t>(s)];
            grid[static_cast<std::size_t>(r * n + c)] = s;
            col_used[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)] = 1;
        }
    }
    auto sq = GridArray::from_cells(n, grid);
    Scramble g;
    g.row_perm = random_permutation(n, rng);
    g.col_perm = random_permutation(n, rng);
    g.sym_perm = random_permutation(n, rng);
    return apply_scramble(sq, g);
}

/// Latin array with exactly `symbols` symbols: a random Latin square whose
/// clone occurrences are replaced by new symbols one at a time.
inline GridArray random_latin_array(int n, int symbols, Rng& rng)
{
    if (symbols < n || symbols > n * n)
        throw Error("symbol count must lie in n..n^2");
    auto raw = random_latin_square(n, rng).raw();
    std::vector<int> counts(static_cast<std::size_t>(n * n), 0);
    for (int v : raw)
        ++counts[static_cast<std::size_t>(v)];
    int next = n;
    auto order = random_permutation(n * n, rng);
    for (int idx : order)
    {
        if (next == symbols)
            break;
        int& v = raw[static_cast<std::size_t>(idx)];
        if (counts[static_cast<std::size_t>(v)] > 1)
        {
            --counts[static_cast<std::size_t>(v)];
            v = next;
            counts[static_cast<std::size_t>(next++)] = 1;
        }
    }
    return GridArray::from_cells(n, raw);
}

/// Latin array from a greedy random fill: each cell reuses an allowed
/// existing symbol or, with probability p_new (or when nothing fits), takes
/// a new one. Reaches structures not refined from any Latin square.
inline GridArray random_latin_array_greedy(int n, double p_new, Rng& rng)
{
    std::vector<int> raw(static_cast<std::size_t>(n * n), -1);
    int next = 0;
    std::bernoulli_distribution fresh(p_new);
    for (int idx : random_permutation(n * n, rng))
    {
        int r = idx / n, c = idx % n;
        std::vector<char> banned(static_cast<std::size_t>(next), 0);
        for (int k = 0; k < n; ++k)
        {
            int a = raw[static_cast<std::size_t>(r * n + k)], b = raw[static_cast<std::size_t>(k * n + c)];
            if (a >= 0)
                banned[static_cast<std::size_t>(a)] = 1;
            if (b >= 0)
                banned[static_cast<std::size_t>(b)] = 1;
        }
        std::vector<int> allowed;
        for (int s = 0; s < next; ++s)
            if (!banned[static_cast<std::size_t>(s)])
                allowed.push_back(s);
        if (allowed.empty() || fresh(rng))
            raw[static_cast<std::size_t>(idx)] = next++;
        else
            raw[static_cast<std::size_t>(idx)] =
                allowed[std::uniform_int_distribution<std::size_t>(0, allowed.size() - 1)(rng)];
    }
    return GridArray::from_cells(n, raw);
}

/// Row-Latin array with exactly `symbols` symbols.
inline GridArray random_row_latin_array(int n, int symbols, Rng& rng)
{
    if (symbols < n || symbols > n * n)
        throw Error("symbol count must lie in n..n^2");
    // Every row starts as a random n-subset of a pool of `symbols`; symbols
    // missing afterwards are patched in over clone occurrences.
    std::vector<int> raw(static_cast<std::size_t>(n * n));
    for (int r = 0; r < n; ++r)
    {
        auto p = random_permutation(symbols, rng);
        for (int c = 0; c < n; ++c)
            raw[static_cast<std::size_t>(r * n + c)] = p[static_cast<std::size_t>(c)];
    }
    std::vector<int> counts(static_cast<std::size_t>(symbols), 0);
    for (int v : raw)
        ++counts[static_cast<std::size_t>(v)];
    for (int s = 0; s < symbols; ++s)
    {
        if (counts[static_cast<std::size_t>(s)] > 0)
            continue;
        for (int idx : random_permutation(n * n, rng))
        {
            int& v = raw[static_cast<std::size_t>(idx)];
            if (counts[static_cast<std::size_t>(v)] > 1)
            {
                --counts[static_cast<std::size_t>(v)];
                v = s;
                ++counts[static_cast<std::size_t>(s)];
                break;
            }
        }
    }
    return GridArray::from_cells(n, raw);
}

/// Unconstrained partial array over at most `max_symbols` symbols.
inline GridArray random_partial_array(int n, int max_symbols, double p_hole, Rng& rng)
{
    std::vector<int> raw(static_cast<std::size_t>(n * n));
    std::bernoulli_distribution hole(p_hole);
    std::uniform_int_distribution<int> sym(0, max_symbols - 1);
    for (auto& v : raw)
        v = hole(rng) ? -1 : sym(rng);
    return GridArray::from_cells(n, raw);
}

} // namespace latrans

#endif // LATRANS_RANDOM_HPP
