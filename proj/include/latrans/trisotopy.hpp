#ifndef LATRANS_TRISOTOPY_HPP
#define LATRANS_TRISOTOPY_HPP

// Canonical forms under row permutation x column permutation x symbol
// renaming x transposition. Holes are a fixed extra cell state: they map to
// holes and sort after every symbol.

#include "latrans/core.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace latrans
{

inline constexpr int kMaxCanonicalOrder = 8;
inline constexpr int kMaxBruteOrder = 4;

/// Row-major cell codes of the canonical representative. Symbols are
/// numbered by first occurrence; kHoleCode sorts after all of them.
struct CanonicalKey
{
    static constexpr std::uint8_t kHoleCode = 0xFF;

    int order = 0;
    int symbols = 0;
    int holes = 0;
    std::vector<std::uint8_t> code;

    friend bool operator==(const CanonicalKey& a, const CanonicalKey& b)
    {
        return a.order == b.order && a.code == b.code;
    }
    friend std::strong_ordering operator<=>(const CanonicalKey& a, const CanonicalKey& b)
    {
        if (auto c = a.order <=> b.order; c != 0)
            return c;
        return a.code <=> b.code;
    }

    /// "n=<order>;<row-major tokens>" with "." for holes.
    std::string to_string() const
    {
        std::string out = "n=" + std::to_string(order) + ";";
        for (std::size_t i = 0; i < code.size(); ++i)
        {
            if (i)
                out += ' ';
            out += code[i] == kHoleCode ? std::string(".") : default_label(code[i]);
        }
        return out;
    }

    GridArray to_array() const
    {
        std::vector<int> raw(code.size());
        for (std::size_t i = 0; i < code.size(); ++i)
            raw[i] = code[i] == kHoleCode ? -1 : code[i];
        return GridArray::from_cells(order, raw);
    }

    static CanonicalKey from_string(std::string_view text)
    {
        auto semi = text.find(';');
        if (text.substr(0, 2) != "n=" || semi == std::string_view::npos)
            throw Error("malformed canonical key: " + std::string(text));
        int n = std::stoi(std::string(text.substr(2, semi - 2)));
        auto toks = detail::split_ws(text.substr(semi + 1));
        if (n < 1 || static_cast<int>(toks.size()) != n * n)
            throw Error("canonical key has wrong token count");
        std::vector<std::vector<std::string>> rows(static_cast<std::size_t>(n));
        for (int i = 0; i < n * n; ++i)
            rows[static_cast<std::size_t>(i / n)].push_back(toks[static_cast<std::size_t>(i)]);
        return from_array(detail::parse_rows(rows));
    }

    /// Encodes an array that is already in canonical position (first
    /// occurrence numbering is applied, nothing is permuted).
    static CanonicalKey from_array(const GridArray& a)
    {
        CanonicalKey k;
        k.order = a.order();
        k.symbols = a.symbol_count();
        k.holes = a.hole_count();
        std::vector<int> relabel(static_cast<std::size_t>(a.symbol_count()), -1);
        int next = 0;
        for (Cell v : a.cells())
        {
            if (v == kHole)
            {
                k.code.push_back(kHoleCode);
                continue;
            }
            auto& l = relabel[static_cast<std::size_t>(v)];
            if (l < 0)
                l = next++;
            k.code.push_back(static_cast<std::uint8_t>(l));
        }
        return k;
    }
};

/// An element of the trisotopy group acting on order-n arrays.
struct Scramble
{
    std::vector<int> row_perm; ///< row r goes to row_perm[r]
    std::vector<int> col_perm;
    std::vector<int> sym_perm; ///< symbol s becomes sym_perm[s]
    bool transpose = false;
};

inline GridArray apply_scramble(const GridArray& a, const Scramble& g)
{
    const int n = a.order();
    std::vector<int> raw(static_cast<std::size_t>(n * n), -1);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
        {
            Cell v = a.at(r, c);
            int rr = g.row_perm[static_cast<std::size_t>(r)];
            int cc = g.col_perm[static_cast<std::size_t>(c)];
            if (g.transpose)
                std::swap(rr, cc);
            raw[static_cast<std::size_t>(rr * n + cc)] =
                v == kHole ? -1 : g.sym_perm[static_cast<std::size_t>(v)];
        }
    return GridArray::from_cells(n, raw);
}

// ---------------------------------------------------------------------------
// Fingerprint

namespace detail
{
inline std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t hash_seq(const std::vector<std::uint64_t>& v, std::uint64_t seed)
{
    std::uint64_t h = mix64(seed ^ v.size());
    for (auto x : v)
        h = mix64(h ^ x);
    return h;
}
} // namespace detail

/// Trisotopy-invariant digest built from the symbol frequency spectrum and
/// the sorted per-line profiles (multiset of symbol frequencies plus hole
/// count). Rows and columns are combined symmetrically so transposition does
/// not change the value.
inline std::uint64_t fingerprint(const GridArray& a)
{
    const int n = a.order();
    auto classes = classify_symbols(a);
    std::vector<std::uint64_t> spectrum(classes.counts.begin(), classes.counts.end());
    std::sort(spectrum.begin(), spectrum.end());

    auto line_profiles = [&](bool by_row) {
        std::vector<std::uint64_t> lines;
        for (int i = 0; i < n; ++i)
        {
            std::vector<std::uint64_t> prof;
            int holes = 0;
            for (int j = 0; j < n; ++j)
            {
                Cell v = by_row ? a.at(i, j) : a.at(j, i);
                if (v == kHole)
                    ++holes;
                else
                    prof.push_back(static_cast<std::uint64_t>(classes.counts[static_cast<std::size_t>(v)]));
            }
            std::sort(prof.begin(), prof.end());
            prof.push_back(1000 + static_cast<std::uint64_t>(holes));
            lines.push_back(detail::hash_seq(prof, 0x51));
        }
        std::sort(lines.begin(), lines.end());
        return detail::hash_seq(lines, 0x77);
    };
    std::uint64_t hr = line_profiles(true), hc = line_profiles(false);
    std::vector<std::uint64_t> top{static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(a.hole_count()),
                                   detail::hash_seq(spectrum, 0x33), std::min(hr, hc), std::max(hr, hc)};
    return detail::hash_seq(top, 0x1234);
}

// ---------------------------------------------------------------------------
// Exhaustive oracle

namespace detail
{
inline void encode_arrangement(const GridArray& a, bool tr, const std::vector<int>& rows,
                               const std::vector<int>& cols, std::vector<std::uint8_t>& out,
                               std::vector<int>& relabel)
{
    const int n = a.order();
    std::fill(relabel.begin(), relabel.end(), -1);
    int next = 0;
    out.clear();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
        {
            int r = rows[static_cast<std::size_t>(i)], c = cols[static_cast<std::size_t>(j)];
            Cell v = tr ? a.at(c, r) : a.at(r, c);
            if (v == kHole)
            {
                out.push_back(CanonicalKey::kHoleCode);
                continue;
            }
            auto& l = relabel[static_cast<std::size_t>(v)];
            if (l < 0)
                l = next++;
            out.push_back(static_cast<std::uint8_t>(l));
        }
}
} // namespace detail

/// Minimum encoding over all 2 (n!)^2 arrangements, by plain enumeration.
inline CanonicalKey brute_canonical(const GridArray& a)
{
    const int n = a.order();
    if (n > kMaxBruteOrder)
        throw Error("brute_canonical supports order <= " + std::to_string(kMaxBruteOrder));
    CanonicalKey best;
    best.order = n;
    best.symbols = a.symbol_count();
    best.holes = a.hole_count();
    std::vector<int> rows(static_cast<std::size_t>(n)), cols(static_cast<std::size_t>(n));
    std::vector<std::uint8_t> code;
    std::vector<int> relabel(static_cast<std::size_t>(a.symbol_count()));
    for (int tr = 0; tr < 2; ++tr)
    {
        std::iota(rows.begin(), rows.end(), 0);
        do
        {
            std::iota(cols.begin(), cols.end(), 0);
            do
            {
                detail::encode_arrangement(a, tr == 1, rows, cols, code, relabel);
                if (best.code.empty() || code < best.code)
                    best.code = code;
            } while (std::next_permutation(cols.begin(), cols.end()));
        } while (std::next_permutation(rows.begin(), rows.end()));
    }
    return best;
}

// ---------------------------------------------------------------------------
// Branch and bound canonical form

namespace detail
{

/// A partial arrangement: a prefix of chosen rows, an ordered partition of
/// the columns, and labels for the symbols seen so far.
struct CanonNode
{
    static constexpr std::uint8_t kNone = 0xFF;

    std::array<std::uint8_t, kMaxCanonicalOrder> col{};
    std::uint8_t boundary = 0; ///< bit p set: a block ends at position p
    std::uint8_t used_rows = 0;
    std::uint8_t next_label = 0;
    std::uint8_t orient = 0;
    std::array<std::uint8_t, kMaxCanonicalOrder * kMaxCanonicalOrder> label{};
};

using Code = std::array<std::uint8_t, kMaxCanonicalOrder>;

class Canonicalizer
{
public:
    void load(const GridArray& a)
    {
        n_ = a.order();
        for (int o = 0; o < 2; ++o)
            for (int r = 0; r < n_; ++r)
            {
                SymbolSet seen;
                bool simple = true;
                for (int c = 0; c < n_; ++c)
                {
                    Cell v = o ? a.at(c, r) : a.at(r, c);
                    grid_[o][r][c] = v == kHole ? CanonicalKey::kHoleCode : static_cast<std::uint8_t>(v);
                    if (v != kHole)
                    {
                        if (seen.test(static_cast<std::size_t>(v)))
                            simple = false;
                        seen.set(static_cast<std::size_t>(v));
                    }
                }
                simple_[o][r] = simple;
            }
    }

    std::vector<std::uint8_t> run()
    {
        std::vector<std::uint8_t> key;
        key.reserve(static_cast<std::size_t>(n_ * n_));
        level_.clear();
        for (std::uint8_t o = 0; o < 2; ++o)
        {
            CanonNode root;
            for (int p = 0; p < n_; ++p)
                root.col[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(p);
            root.boundary = static_cast<std::uint8_t>(1u << (n_ - 1));
            root.orient = o;
            root.label.fill(CanonNode::kNone);
            level_.push_back(root);
        }

        for (int depth = 0; depth < n_; ++depth)
        {
            Code best;
            best.fill(0xFF);
            bool have = false;
            simple_cands_.clear();
            general_.clear();
            for (std::size_t i = 0; i < level_.size(); ++i)
            {
                const CanonNode& node = level_[i];
                for (int r = 0; r < n_; ++r)
                {
                    if (node.used_rows >> r & 1u)
                        continue;
                    if (simple_[node.orient][r])
                    {
                        Code enc = encode_simple(node, r);
                        int cmp = compare(enc, best);
                        if (!have || cmp < 0)
                        {
                            best = enc;
                            have = true;
                            simple_cands_.clear();
                            general_.clear();
                            cmp = 0;
                        }
                        if (cmp == 0)
                            simple_cands_.push_back({i, r});
                    }
                    else
                    {
                        scratch_.clear();
                        expand(node, r, scratch_);
                        for (auto& child : scratch_)
                        {
                            Code enc = read_row(child, r);
                            int cmp = compare(enc, best);
                            if (!have || cmp < 0)
                            {
                                best = enc;
                                have = true;
                                simple_cands_.clear();
                                general_.clear();
                                cmp = 0;
                            }
                            if (cmp == 0)
                                general_.push_back(child);
                        }
                    }
                }
            }
            for (int p = 0; p < n_; ++p)
                key.push_back(best[static_cast<std::size_t>(p)]);
            next_.clear();
            for (auto [i, r] : simple_cands_)
                expand(level_[i], r, next_);
            next_.insert(next_.end(), general_.begin(), general_.end());
            std::swap(level_, next_);
        }
        return key;
    }

private:
    static int compare(const Code& a, const Code& b)
    {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i])
                return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    /// Encoding of row r for a row without repeated symbols: within each
    /// block, known labels ascending, then new symbols, then holes.
    Code encode_simple(const CanonNode& node, int r) const
    {
        Code out;
        out.fill(0xFF);
        const auto& row = grid_[node.orient][r];
        int pos = 0, start = 0;
        std::uint8_t next = node.next_label;
        for (int p = 0; p < n_; ++p)
        {
            if (!(node.boundary >> p & 1u))
                continue;
            std::array<std::uint8_t, kMaxCanonicalOrder> known{};
            int nk = 0, nn = 0;
            for (int q = start; q <= p; ++q)
            {
                std::uint8_t v = row[node.col[static_cast<std::size_t>(q)]];
                if (v == CanonicalKey::kHoleCode)
                    continue;
                std::uint8_t l = node.label[v];
                if (l != CanonNode::kNone)
                    known[static_cast<std::size_t>(nk++)] = l;
                else
                    ++nn;
            }
            std::sort(known.begin(), known.begin() + nk);
            for (int i = 0; i < nk; ++i)
                out[static_cast<std::size_t>(pos++)] = known[static_cast<std::size_t>(i)];
            for (int i = 0; i < nn; ++i)
                out[static_cast<std::size_t>(pos++)] = next++;
            pos = p + 1; // holes keep the 0xFF fill
            start = p + 1;
        }
        return out;
    }

    Code read_row(const CanonNode& node, int r) const
    {
        Code out;
        out.fill(0xFF);
        const auto& row = grid_[node.orient][r];
        for (int p = 0; p < n_; ++p)
        {
            std::uint8_t v = row[node.col[static_cast<std::size_t>(p)]];
            out[static_cast<std::size_t>(p)] = v == CanonicalKey::kHoleCode ? v : node.label[v];
        }
        return out;
    }

    struct Group
    {
        std::uint8_t sym;
        std::array<std::uint8_t, kMaxCanonicalOrder> cols;
        int size;
    };

    /// All children obtained by placing row r next: each block is split by
    /// the row's values, and new symbols with equal multiplicity in a block
    /// are tried in every order.
    void expand(const CanonNode& node, int r, std::vector<CanonNode>& out) const
    {
        CanonNode child = node;
        child.used_rows = static_cast<std::uint8_t>(node.used_rows | (1u << r));
        child.boundary = 0;
        expand_block(node, r, 0, child, out);
    }

    void expand_block(const CanonNode& node, int r, int start, CanonNode& child,
                      std::vector<CanonNode>& out) const
    {
        if (start == n_)
        {
            out.push_back(child);
            return;
        }
        int end = start;
        while (!(node.boundary >> end & 1u))
            ++end;
        const auto& row = grid_[node.orient][r];

        // Known labels in ascending order, repeated labels share a sub-block.
        std::array<std::pair<std::uint8_t, std::uint8_t>, kMaxCanonicalOrder> known{};
        int nk = 0, nh = 0;
        std::array<std::uint8_t, kMaxCanonicalOrder> hole_cols{};
        std::array<Group, kMaxCanonicalOrder> groups{};
        int ng = 0;
        for (int q = start; q <= end; ++q)
        {
            std::uint8_t c = node.col[static_cast<std::size_t>(q)];
            std::uint8_t v = row[c];
            if (v == CanonicalKey::kHoleCode)
            {
                hole_cols[static_cast<std::size_t>(nh++)] = c;
                continue;
            }
            std::uint8_t l = child.label[v];
            if (l != CanonNode::kNone)
            {
                known[static_cast<std::size_t>(nk++)] = {l, c};
                continue;
            }
            auto it = std::find_if(groups.begin(), groups.begin() + ng, [&](const Group& g) { return g.sym == v; });
            if (it == groups.begin() + ng)
            {
                *it = {v, {}, 0};
                ++ng;
            }
            it->cols[static_cast<std::size_t>(it->size++)] = c;
        }
        std::sort(known.begin(), known.begin() + nk);
        int pos = start;
        for (int i = 0; i < nk; ++i)
        {
            child.col[static_cast<std::size_t>(pos)] = known[static_cast<std::size_t>(i)].second;
            if (i + 1 == nk || known[static_cast<std::size_t>(i + 1)].first != known[static_cast<std::size_t>(i)].first)
                child.boundary = static_cast<std::uint8_t>(child.boundary | (1u << pos));
            ++pos;
        }
        std::stable_sort(groups.begin(), groups.begin() + ng,
                         [](const Group& a, const Group& b) { return a.size > b.size; });
        std::array<int, kMaxCanonicalOrder> order{};
        std::iota(order.begin(), order.begin() + ng, 0);
        permute_runs(node, r, end, child, out, groups, ng, order, 0, pos, hole_cols, nh);
    }

    /// Enumerates orderings of equal-size runs of groups, then lays out the
    /// groups and the hole columns and continues with the next block.
    void permute_runs(const CanonNode& node, int r, int end, CanonNode& child,
                      std::vector<CanonNode>& out, const std::array<Group, kMaxCanonicalOrder>& groups,
                      int ng, std::array<int, kMaxCanonicalOrder>& order, int run_start, int pos,
                      const std::array<std::uint8_t, kMaxCanonicalOrder>& hole_cols, int nh) const
    {
        if (run_start == ng)
        {
            CanonNode saved = child;
            int p = pos;
            for (int k = 0; k < ng; ++k)
            {
                int gi = order[static_cast<std::size_t>(k)];
                const Group& g = groups[static_cast<std::size_t>(gi)];
                child.label[g.sym] = child.next_label++;
                for (int i = 0; i < g.size; ++i)
                    child.col[static_cast<std::size_t>(p++)] = g.cols[static_cast<std::size_t>(i)];
                child.boundary = static_cast<std::uint8_t>(child.boundary | (1u << (p - 1)));
            }
            for (int i = 0; i < nh; ++i)
                child.col[static_cast<std::size_t>(p++)] = hole_cols[static_cast<std::size_t>(i)];
            if (nh)
                child.boundary = static_cast<std::uint8_t>(child.boundary | (1u << (p - 1)));
            expand_block(node, r, end + 1, child, out);
            child = saved;
            return;
        }
        int run_end = run_start;
        while (run_end < ng && groups[static_cast<std::size_t>(run_end)].size ==
                                   groups[static_cast<std::size_t>(run_start)].size)
            ++run_end;
        auto first = order.begin() + run_start;
        auto last = order.begin() + run_end;
        std::sort(first, last);
        do
        {
            permute_runs(node, r, end, child, out, groups, ng, order, run_end, pos, hole_cols, nh);
        } while (std::next_permutation(first, last));
    }

    int n_ = 0;
    std::array<std::array<std::array<std::uint8_t, kMaxCanonicalOrder>, kMaxCanonicalOrder>, 2> grid_{};
    std::array<std::array<bool, kMaxCanonicalOrder>, 2> simple_{};
    std::vector<CanonNode> level_, next_, general_, scratch_;
    std::vector<std::pair<std::size_t, int>> simple_cands_;
};

} // namespace detail

inline CanonicalKey canonical_form(const GridArray& a)
{
    if (a.order() > kMaxCanonicalOrder)
        throw Error("canonical_form supports order <= " + std::to_string(kMaxCanonicalOrder));
    CanonicalKey k;
    k.order = a.order();
    k.symbols = a.symbol_count();
    k.holes = a.hole_count();
    thread_local detail::Canonicalizer canon;
    canon.load(a);
    k.code = canon.run();
    return k;
}

inline GridArray canonical_array(const GridArray& a) { return canonical_form(a).to_array(); }

inline bool are_trisotopic(const GridArray& a, const GridArray& b)
{
    if (a.order() != b.order() || a.symbol_count() != b.symbol_count() ||
        a.hole_count() != b.hole_count())
        return false;
    if (fingerprint(a) != fingerprint(b))
        return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace latrans

#endif // LATRANS_TRISOTOPY_HPP
