#ifndef LATRANS_LLL_HPP
#define LATRANS_LLL_HPP

// Bad events for a uniformly random permutation choosing one cell per row:
// an event is a pair of chosen cells carrying the same symbol. Cliques are
// indexed by the 2n lines; each event lies in the four cliques of its two
// cells' rows and columns.

#include "latrans/core.hpp"
#include "latrans/random.hpp"
#include "latrans/transversal.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace latrans
{

struct BadEvent
{
    int i = 0, j = 0, i2 = 0, j2 = 0; ///< cells (i, j) and (i2, j2), i < i2

    friend bool operator==(const BadEvent&, const BadEvent&) = default;
};

struct BadEventModel
{
    int n = 0;
    std::vector<BadEvent> events;
    /// clique_members[line] lists event indices; lines 0..n-1 are rows,
    /// n..2n-1 are columns.
    std::vector<std::vector<int>> clique_members;
    static constexpr int kMu = 4;

    /// P(event) = 1 / (n(n-1)) as numerator and denominator.
    std::pair<long long, long long> event_probability() const { return {1, static_cast<long long>(n) * (n - 1)}; }
};

inline BadEventModel build_event_model(const GridArray& a)
{
    if (a.is_partial() || !is_latin(a))
        throw Error("the event model needs a Latin array");
    const int n = a.order();
    BadEventModel m;
    m.n = n;
    m.clique_members.assign(static_cast<std::size_t>(2 * n), {});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int i2 = i + 1; i2 < n; ++i2)
                for (int j2 = 0; j2 < n; ++j2)
                {
                    if (j2 == j || a.at(i, j) != a.at(i2, j2))
                        continue;
                    int idx = static_cast<int>(m.events.size());
                    m.events.push_back({i, j, i2, j2});
                    for (int line : {i, i2, n + j, n + j2})
                        m.clique_members[static_cast<std::size_t>(line)].push_back(idx);
                }
    return m;
}

/// Cells outside `line` sharing a symbol with a cell on it. Lines 0..n-1
/// are rows and n..2n-1 are columns.
inline int line_d_size(const GridArray& a, int line)
{
    const int n = a.order();
    const bool is_row = line < n;
    const int k = is_row ? line : line - n;
    SymbolSet on_line = is_row ? row_symbols(a, k) : col_symbols(a, k);
    int d = 0;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
        {
            if ((is_row ? r : c) == k)
                continue;
            Cell v = a.at(r, c);
            if (v != kHole && on_line.test(static_cast<std::size_t>(v)))
                ++d;
        }
    return d;
}

struct LLLReport
{
    int n = 0;
    int symbols = 0;
    int kappa = 0;
    int mu = BadEventModel::kMu;
    long long x_num = 0, x_den = 1; ///< x = 1/(mu kappa), 0 when kappa = 0
    bool guaranteed = false;
    bool threshold_met = false; ///< symbols >= (229 n^2 + 27 n) / 256

    std::string x_string() const
    {
        return x_den == 1 ? std::to_string(x_num) : std::to_string(x_num) + "/" + std::to_string(x_den);
    }
};

struct LLLOptions
{
    /// Maximise x (1 - kappa x)^(mu-1) over (0, 1/kappa) instead of using
    /// x = 1/(4 kappa). Both choices coincide: the maximiser is 1/(mu kappa).
    bool optimize_x = false;
};

/// Clique local lemma condition 1/(n(n-1)) <= x (1 - kappa x)^3 at
/// x = 1/(4 kappa), i.e. 256 kappa <= 27 n (n - 1). kappa is the largest
/// per-line D-set.
inline LLLReport lll_condition(const GridArray& a, const LLLOptions& opts = {})
{
    if (a.order() < 2)
        throw Error("the event model needs order >= 2");
    if (a.is_partial() || !is_latin(a))
        throw Error("the event model needs a Latin array");
    const int n = a.order();
    LLLReport rep;
    rep.n = n;
    rep.symbols = a.symbol_count();
    for (int line = 0; line < 2 * n; ++line)
        rep.kappa = std::max(rep.kappa, line_d_size(a, line));
    const long long nn = n;
    rep.threshold_met = 256LL * rep.symbols >= 229 * nn * nn + 27 * nn;
    if (rep.kappa == 0)
    {
        // No events at all: every permutation is a transversal.
        rep.guaranteed = true;
        return rep;
    }
    // The optimum of x(1 - kappa x)^(mu-1) is at x = 1/(mu kappa), which is
    // the fixed choice for mu = 4; optimize_x only documents that.
    (void)opts;
    rep.x_num = 1;
    rep.x_den = static_cast<long long>(rep.mu) * rep.kappa;
    // (1/(n(n-1))) <= 27/(256 kappa)
    rep.guaranteed = 256LL * rep.kappa <= 27 * nn * (nn - 1);
    return rep;
}

inline nlohmann::json to_json(const LLLReport& r)
{
    return {{"kappa", r.kappa},
            {"mu", r.mu},
            {"x", r.x_string()},
            {"guaranteed", r.guaranteed},
            {"n", r.n},
            {"symbols", r.symbols},
            {"threshold_met", r.threshold_met}};
}

// ---------------------------------------------------------------------------
// Randomised search

struct RandomSearchStats
{
    std::uint64_t seed = 0;
    int restarts = 0; ///< permutations tried
    std::uint64_t moves = 0;
    std::uint64_t evaluations = 0;
};

struct RandomSearchResult
{
    std::optional<Transversal> transversal;
    RandomSearchStats stats;
};

namespace detail
{
/// Chosen holes plus pairs of chosen cells with equal symbols.
inline int violations(const GridArray& a, const std::vector<int>& perm)
{
    const int n = a.order();
    std::vector<int> seen(static_cast<std::size_t>(a.symbol_count()), 0);
    int v = 0;
    for (int r = 0; r < n; ++r)
    {
        Cell s = a.at(r, perm[static_cast<std::size_t>(r)]);
        if (s == kHole)
            ++v;
        else
            v += seen[static_cast<std::size_t>(s)]++;
    }
    return v;
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::uint32_t words[2];
    seq.generate(words, words + 2);
    return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}
} // namespace detail

/// Local search over permutations: restart r draws a uniform permutation
/// from a generator seeded by (seed, r), then applies improving row swaps
/// (scanned in a random order) until none is left.
inline RandomSearchResult random_transversal_search(const GridArray& a, std::uint64_t seed, int max_restarts = 100)
{
    const int n = a.order();
    RandomSearchResult res;
    res.stats.seed = seed;
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            pairs.push_back({x, y});
    for (int restart = 0; restart < max_restarts; ++restart)
    {
        ++res.stats.restarts;
        Rng rng(detail::derive_seed(seed, static_cast<std::uint64_t>(restart)));
        auto perm = random_permutation(n, rng);
        int cur = detail::violations(a, perm);
        ++res.stats.evaluations;
        bool improved = true;
        while (cur > 0 && improved)
        {
            improved = false;
            std::shuffle(pairs.begin(), pairs.end(), rng);
            for (auto [x, y] : pairs)
            {
                std::swap(perm[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(y)]);
                int v = detail::violations(a, perm);
                ++res.stats.evaluations;
                if (v < cur)
                {
                    cur = v;
                    ++res.stats.moves;
                    improved = true;
                    break;
                }
                std::swap(perm[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(y)]);
            }
        }
        if (cur == 0)
        {
            Transversal t;
            for (int r = 0; r < n; ++r)
            {
                int c = perm[static_cast<std::size_t>(r)];
                t.entries.push_back({r, c, a.at(r, c)});
            }
            res.transversal = t;
            return res;
        }
    }
    return res;
}

} // namespace latrans

#endif // LATRANS_LLL_HPP
