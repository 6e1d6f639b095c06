#ifndef LATRANS_CORE_HPP
#define LATRANS_CORE_HPP

// Square arrays of symbols with optional holes: the common carrier for Latin
// arrays, row-Latin arrays and partial Latin arrays.

#include <algorithm>
#include <bitset>
#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace latrans
{

inline constexpr int kMaxOrder = 16;
inline constexpr int kMaxSymbols = 256;

/// Raw cell content: a dense symbol id in [0, symbol_count) or kHole.
using Cell = std::int16_t;
inline constexpr Cell kHole = -1;

using SymbolId = int;
using SymbolSet = std::bitset<kMaxSymbols>;

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct Entry
{
    int row = 0;
    int col = 0;
    SymbolId sym = 0;

    friend bool operator==(const Entry&, const Entry&) = default;
    friend auto operator<=>(const Entry&, const Entry&) = default;
};

/// Default display label for a symbol id: a..z, then A..Z, then s<id>.
inline std::string default_label(SymbolId id)
{
    if (id < 26)
        return std::string(1, static_cast<char>('a' + id));
    if (id < 52)
        return std::string(1, static_cast<char>('A' + id - 26));
    return "s" + std::to_string(id);
}

/// Immutable n x n array. Symbol ids are contiguous: every id in
/// [0, symbol_count()) occurs in at least one cell.
class GridArray
{
public:
    GridArray() = default;

    /// Builds an array from raw ids (negative = hole). Ids are compacted to
    /// 0..s-1 preserving their relative order; labels, when given, are indexed
    /// by the raw id and follow the compaction.
    static GridArray from_cells(int order, const std::vector<int>& raw,
                                const std::vector<std::string>& labels = {})
    {
        if (order < 1 || order > kMaxOrder)
            throw Error("array order must be in 1.." + std::to_string(kMaxOrder));
        if (raw.size() != static_cast<std::size_t>(order * order))
            throw Error("cell count does not match order");

        int max_id = -1;
        for (int v : raw)
            max_id = std::max(max_id, v);
        std::vector<int> remap(static_cast<std::size_t>(max_id + 1), -1);
        for (int v : raw)
            if (v >= 0)
                remap[static_cast<std::size_t>(v)] = 0;
        int next = 0;
        for (auto& r : remap)
            if (r == 0)
                r = next++;
        if (next > kMaxSymbols)
            throw Error("alphabet exceeds " + std::to_string(kMaxSymbols) + " symbols");

        GridArray a;
        a.order_ = order;
        a.symbols_ = next;
        a.cells_.resize(raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i)
        {
            if (raw[i] < 0)
            {
                a.cells_[i] = kHole;
                ++a.holes_;
            }
            else
                a.cells_[i] = static_cast<Cell>(remap[static_cast<std::size_t>(raw[i])]);
        }
        if (!labels.empty())
        {
            a.labels_.resize(static_cast<std::size_t>(next));
            for (std::size_t id = 0; id < remap.size(); ++id)
                if (remap[id] >= 0)
                {
                    if (id >= labels.size())
                        throw Error("missing label for symbol id " + std::to_string(id));
                    a.labels_[static_cast<std::size_t>(remap[id])] = labels[id];
                }
        }
        return a;
    }

    int order() const { return order_; }
    int symbol_count() const { return symbols_; }
    int hole_count() const { return holes_; }
    int filled_count() const { return order_ * order_ - holes_; }
    bool is_partial() const { return holes_ > 0; }

    Cell at(int r, int c) const { return cells_[static_cast<std::size_t>(r * order_ + c)]; }
    bool is_hole(int r, int c) const { return at(r, c) == kHole; }
    std::optional<SymbolId> symbol(int r, int c) const
    {
        Cell v = at(r, c);
        if (v == kHole)
            return std::nullopt;
        return v;
    }

    const std::vector<Cell>& cells() const { return cells_; }
    const std::vector<std::string>& labels() const { return labels_; }
    bool has_labels() const { return !labels_.empty(); }

    std::string label(SymbolId id) const
    {
        if (!labels_.empty())
            return labels_[static_cast<std::size_t>(id)];
        return default_label(id);
    }

    /// Raw ids as ints, holes as -1; convenient input for from_cells.
    std::vector<int> raw() const { return {cells_.begin(), cells_.end()}; }

    friend bool operator==(const GridArray& a, const GridArray& b)
    {
        return a.order_ == b.order_ && a.cells_ == b.cells_;
    }

private:
    int order_ = 0;
    int symbols_ = 0;
    int holes_ = 0;
    std::vector<Cell> cells_;
    std::vector<std::string> labels_;
};

// ---------------------------------------------------------------------------
// Text format

namespace detail
{
inline std::vector<std::string> split_ws(std::string_view line)
{
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size())
    {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
            ++j;
        if (j > i)
            out.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline bool is_blank(std::string_view line)
{
    return std::all_of(line.begin(), line.end(),
                       [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); });
}

inline std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size())
    {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        lines.push_back(line);
        if (end == text.size())
            break;
        start = end + 1;
    }
    return lines;
}

inline GridArray parse_rows(const std::vector<std::vector<std::string>>& rows)
{
    if (rows.empty())
        throw Error("array has zero rows");
    const int n = static_cast<int>(rows.size());
    for (const auto& row : rows)
        if (static_cast<int>(row.size()) != n)
            throw Error("ragged row: expected " + std::to_string(n) + " tokens, got " +
                        std::to_string(row.size()));

    std::unordered_map<std::string, int> ids;
    std::vector<std::string> labels;
    std::vector<int> raw;
    raw.reserve(static_cast<std::size_t>(n * n));
    for (const auto& row : rows)
        for (const auto& tok : row)
        {
            if (tok.empty())
                throw Error("empty token");
            if (tok == ".")
            {
                raw.push_back(-1);
                continue;
            }
            auto [it, inserted] = ids.try_emplace(tok, static_cast<int>(labels.size()));
            if (inserted)
                labels.push_back(tok);
            raw.push_back(it->second);
        }
    return GridArray::from_cells(n, raw, labels);
}
} // namespace detail

/// Parses whitespace-separated tokens, one row per line. "." is a hole and
/// lines starting with '#' are comments. Symbols get ids by first occurrence.
inline GridArray parse_array(std::string_view text)
{
    std::vector<std::vector<std::string>> rows;
    for (auto line : detail::split_lines(text))
    {
        if (detail::is_blank(line))
            continue;
        auto toks = detail::split_ws(line);
        if (!toks.empty() && toks.front().front() == '#')
            continue;
        rows.push_back(std::move(toks));
    }
    return detail::parse_rows(rows);
}

/// Parses several arrays separated by blank lines.
inline std::vector<GridArray> parse_arrays(std::string_view text)
{
    std::vector<GridArray> out;
    std::vector<std::vector<std::string>> rows;
    for (auto line : detail::split_lines(text))
    {
        if (detail::is_blank(line))
        {
            if (!rows.empty())
                out.push_back(detail::parse_rows(rows));
            rows.clear();
            continue;
        }
        auto toks = detail::split_ws(line);
        if (toks.front().front() == '#')
            continue;
        rows.push_back(std::move(toks));
    }
    if (!rows.empty())
        out.push_back(detail::parse_rows(rows));
    return out;
}

inline std::string render_array(const GridArray& a)
{
    std::string out;
    for (int r = 0; r < a.order(); ++r)
    {
        for (int c = 0; c < a.order(); ++c)
        {
            if (c)
                out += ' ';
            auto s = a.symbol(r, c);
            out += s ? a.label(*s) : std::string(".");
        }
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Structural predicates

inline bool is_row_latin(const GridArray& a)
{
    for (int r = 0; r < a.order(); ++r)
    {
        SymbolSet seen;
        for (int c = 0; c < a.order(); ++c)
        {
            Cell v = a.at(r, c);
            if (v == kHole)
                continue;
            if (seen.test(static_cast<std::size_t>(v)))
                return false;
            seen.set(static_cast<std::size_t>(v));
        }
    }
    return true;
}

inline GridArray transpose(const GridArray& a)
{
    const int n = a.order();
    std::vector<int> raw(static_cast<std::size_t>(n * n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            raw[static_cast<std::size_t>(c * n + r)] = a.at(r, c);
    return GridArray::from_cells(n, raw, a.labels());
}

inline bool is_latin(const GridArray& a)
{
    if (!is_row_latin(a))
        return false;
    for (int c = 0; c < a.order(); ++c)
    {
        SymbolSet seen;
        for (int r = 0; r < a.order(); ++r)
        {
            Cell v = a.at(r, c);
            if (v == kHole)
                continue;
            if (seen.test(static_cast<std::size_t>(v)))
                return false;
            seen.set(static_cast<std::size_t>(v));
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Derived quantities

struct SymbolClasses
{
    std::vector<int> counts; ///< occurrences per symbol id
    SymbolSet singletons;
    SymbolSet clones;
};

inline SymbolClasses classify_symbols(const GridArray& a)
{
    SymbolClasses out;
    out.counts.assign(static_cast<std::size_t>(a.symbol_count()), 0);
    for (Cell v : a.cells())
        if (v != kHole)
            ++out.counts[static_cast<std::size_t>(v)];
    for (std::size_t s = 0; s < out.counts.size(); ++s)
        (out.counts[s] == 1 ? out.singletons : out.clones).set(s);
    return out;
}

inline void check_index(const GridArray& a, int i, const char* what)
{
    if (i < 0 || i >= a.order())
        throw Error(std::string(what) + " index " + std::to_string(i) + " out of range");
}

/// R_i(A): symbols occurring in row i.
inline SymbolSet row_symbols(const GridArray& a, int i)
{
    check_index(a, i, "row");
    SymbolSet s;
    for (int c = 0; c < a.order(); ++c)
        if (Cell v = a.at(i, c); v != kHole)
            s.set(static_cast<std::size_t>(v));
    return s;
}

/// C_j(A): symbols occurring in column j.
inline SymbolSet col_symbols(const GridArray& a, int j)
{
    check_index(a, j, "column");
    SymbolSet s;
    for (int r = 0; r < a.order(); ++r)
        if (Cell v = a.at(r, j); v != kHole)
            s.set(static_cast<std::size_t>(v));
    return s;
}

inline SymbolSet all_symbols(const GridArray& a)
{
    SymbolSet s;
    for (Cell v : a.cells())
        if (v != kHole)
            s.set(static_cast<std::size_t>(v));
    return s;
}

/// A(i|j): the array with row i and column j removed. Surviving symbol ids
/// keep their relative order.
inline GridArray delete_row_col(const GridArray& a, int i, int j)
{
    check_index(a, i, "row");
    check_index(a, j, "column");
    if (a.order() == 1)
        throw Error("deleting a row and column of an order-1 array leaves an empty array");
    const int n = a.order();
    std::vector<int> raw;
    raw.reserve(static_cast<std::size_t>((n - 1) * (n - 1)));
    for (int r = 0; r < n; ++r)
        if (r != i)
            for (int c = 0; c < n; ++c)
                if (c != j)
                    raw.push_back(a.at(r, c));
    return GridArray::from_cells(n - 1, raw, a.labels());
}

/// Psi_ij(A): symbols of A that do not survive in A(i|j). Computed directly
/// from occurrence counts so it is defined for order 1 as well.
inline SymbolSet psi(const GridArray& a, int i, int j)
{
    check_index(a, i, "row");
    check_index(a, j, "column");
    const int n = a.order();
    std::vector<int> outside(static_cast<std::size_t>(a.symbol_count()), 0);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (r != i && c != j)
                if (Cell v = a.at(r, c); v != kHole)
                    ++outside[static_cast<std::size_t>(v)];
    SymbolSet out;
    for (int s = 0; s < a.symbol_count(); ++s)
        if (outside[static_cast<std::size_t>(s)] == 0)
            out.set(static_cast<std::size_t>(s));
    return out;
}

/// Places a Latin array L in the top-left corner of an order n+k array whose
/// 2nk + k^2 border cells hold pairwise distinct new symbols.
inline GridArray embed_fresh(const GridArray& l, int k)
{
    if (k < 0)
        throw Error("embedding width must be non-negative");
    if (!is_latin(l))
        throw Error("embed_fresh requires a Latin array");
    const int n = l.order();
    const int m = n + k;
    if (m > kMaxOrder)
        throw Error("embedded order exceeds " + std::to_string(kMaxOrder));
    std::vector<int> raw(static_cast<std::size_t>(m * m));
    int next = l.symbol_count();
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
            raw[static_cast<std::size_t>(r * m + c)] = (r < n && c < n) ? l.at(r, c) : next++;

    std::vector<std::string> labels;
    if (l.has_labels() || next > 52)
    {
        labels.reserve(static_cast<std::size_t>(next));
        for (int s = 0; s < l.symbol_count(); ++s)
            labels.push_back(l.label(s));
        int fresh = 0;
        while (static_cast<int>(labels.size()) < next)
        {
            std::string cand = "z" + std::to_string(fresh++);
            if (std::find(labels.begin(), labels.end(), cand) == labels.end())
                labels.push_back(cand);
        }
    }
    return GridArray::from_cells(m, raw, labels);
}

/// Replaces the symbol at (r, c) by a symbol appearing nowhere else.
inline GridArray with_fresh_symbol(const GridArray& a, int r, int c)
{
    check_index(a, r, "row");
    check_index(a, c, "column");
    auto raw = a.raw();
    raw[static_cast<std::size_t>(r * a.order() + c)] = a.symbol_count();
    std::vector<std::string> labels;
    if (a.has_labels())
    {
        labels = a.labels();
        std::string cand = "z";
        for (int i = 0; std::find(labels.begin(), labels.end(), cand) != labels.end(); ++i)
            cand = "z" + std::to_string(i);
        labels.push_back(cand);
    }
    return GridArray::from_cells(a.order(), raw, labels);
}

} // namespace latrans

#endif // LATRANS_CORE_HPP
