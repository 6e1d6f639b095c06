#ifndef LATRANS_CONSTRUCTIONS_HPP
#define LATRANS_CONSTRUCTIONS_HPP

// Named transversal-free arrays of orders 4, 5 and 6 and the edits that
// derive the 19 seven-symbol classes of order 6. Row and column arguments of
// the edit helpers are 1-based to match the usual matrix notation.

#include "latrans/core.hpp"

#include <string>
#include <vector>

namespace latrans
{

namespace arrays
{

inline GridArray order4_cyclic()
{
    return parse_array("a b c d\n"
                       "b c d a\n"
                       "c d a b\n"
                       "d a b c\n");
}

inline GridArray order4_five_symbols()
{
    return parse_array("a b c d\n"
                       "b c a e\n"
                       "c a d b\n"
                       "e d b a\n");
}

inline GridArray order5_first()
{
    return parse_array("a b c d e\n"
                       "b c a e f\n"
                       "c a b f d\n"
                       "e d f c a\n"
                       "d f e a b\n");
}

inline GridArray order5_second()
{
    return parse_array("f b c d e\n"
                       "b c a e f\n"
                       "c a b f d\n"
                       "e d f c a\n"
                       "d f e a b\n");
}

inline GridArray l1()
{
    return parse_array("a b c d e f\n"
                       "b c a f d e\n"
                       "c a b e f d\n"
                       "d e f g b c\n"
                       "f d e b g a\n"
                       "e f d c a g\n");
}

inline GridArray l_prime()
{
    return parse_array("a b c d e f\n"
                       "c f b e d a\n"
                       "b c e f a d\n"
                       "d e f a b c\n"
                       "e d a c f b\n"
                       "f a d b c e\n");
}

inline GridArray l10()
{
    return parse_array("a b c d e f\n"
                       "b c g a f e\n"
                       "c f d g a b\n"
                       "d a f e g c\n"
                       "e g a f c d\n"
                       "g e b c d a\n");
}

inline GridArray l_double_prime()
{
    return parse_array("a b c d e f\n"
                       "b c a e f d\n"
                       "c a b f d e\n"
                       "d e f a c b\n"
                       "e f d c b a\n"
                       "f d e b a c\n");
}

/// Marked cells of l1(), 1-based.
inline const std::vector<std::pair<int, int>> kL1Marked{{1, 1}, {2, 2}, {3, 3}};
/// Marked cells of l_prime(), 1-based; one per row, column and symbol.
inline const std::vector<std::pair<int, int>> kLPrimeMarked{{1, 6}, {2, 4}, {3, 5}, {4, 3}, {5, 1}, {6, 2}};

inline const std::vector<std::vector<int>> kLPrimeDiagonalSets{{1, 2, 3, 4, 5, 6}, {1, 2, 4, 5, 6}, {1, 3, 4, 5},
                                                               {1, 3, 6},          {1, 4},          {2, 3, 5, 6},
                                                               {3, 4, 5, 6}};
inline const std::vector<std::vector<int>> kLDoublePrimeRowSets{{1}, {1, 2}, {1, 2, 3}, {1, 3, 5}, {1, 4}};

} // namespace arrays

/// Sets cell (row, col), 1-based, to the symbol labelled `label`; a new
/// label becomes a new symbol.
inline GridArray set_label(const GridArray& a, int row, int col, const std::string& label)
{
    const int n = a.order();
    if (row < 1 || row > n || col < 1 || col > n)
        throw Error("cell out of range");
    auto labels = a.labels();
    auto raw = a.raw();
    int id = -1;
    for (std::size_t s = 0; s < labels.size(); ++s)
        if (labels[s] == label)
            id = static_cast<int>(s);
    if (id < 0)
    {
        id = static_cast<int>(labels.size());
        labels.push_back(label);
    }
    raw[static_cast<std::size_t>((row - 1) * n + col - 1)] = id;
    return GridArray::from_cells(n, raw, labels);
}

/// 1-based column of `label` in `row`; throws if absent.
inline int find_in_row(const GridArray& a, int row, const std::string& label)
{
    for (int c = 0; c < a.order(); ++c)
        if (!a.is_hole(row - 1, c) && a.label(a.at(row - 1, c)) == label)
            return c + 1;
    throw Error("symbol " + label + " not in row " + std::to_string(row));
}

/// Replaces `from` by `to` in each listed row (1-based).
inline GridArray replace_in_rows(GridArray a, const std::vector<int>& rows, const std::string& from,
                                 const std::string& to)
{
    for (int r : rows)
        a = set_label(a, r, find_in_row(a, r, from), to);
    return a;
}

inline GridArray l1_marked_to_g()
{
    auto a = arrays::l1();
    for (auto [r, c] : arrays::kL1Marked)
        a = set_label(a, r, c, "g");
    return a;
}

/// L1, ..., L19 in order.
inline std::vector<GridArray> generate_order6_constructions()
{
    std::vector<GridArray> out;
    out.push_back(arrays::l1());
    for (const auto& rows : arrays::kLPrimeDiagonalSets)
    {
        auto a = arrays::l_prime();
        for (int r : rows)
            a = set_label(a, r, r, "g");
        out.push_back(a);
    }
    {
        auto a = arrays::l_prime();
        for (auto [r, c] : arrays::kLPrimeMarked)
            a = set_label(a, r, c, "g");
        out.push_back(a);
    }
    out.push_back(arrays::l10());
    out.push_back(set_label(arrays::l10(), 3, 3, "e"));
    out.push_back(set_label(arrays::l10(), 4, 4, "b"));
    {
        auto a = arrays::l_double_prime();
        int f_col = find_in_row(a, 2, "f");
        a = replace_in_rows(a, {2, 3}, "d", "g");
        a = set_label(a, 2, f_col, "d");
        out.push_back(a);
        out.push_back(set_label(a, 3, find_in_row(a, 3, "e"), "d"));
    }
    for (const auto& rows : arrays::kLDoublePrimeRowSets)
        out.push_back(replace_in_rows(arrays::l_double_prime(), rows, "d", "g"));
    return out;
}

/// Every Latin square of order n + k on n + k symbols whose leading n x n
/// block is `a` (symbols of `a` keep their ids; new ones follow).
inline std::vector<GridArray> latin_square_completions(const GridArray& a, int k = 1)
{
    const int n = a.order(), m = n + k;
    if (a.is_partial() || !is_latin(a))
        throw Error("completion needs a Latin array without holes");
    if (a.symbol_count() > m)
        return {};
    std::vector<int> grid(static_cast<std::size_t>(m * m), -1);
    std::vector<std::vector<char>> row_used(static_cast<std::size_t>(m), std::vector<char>(static_cast<std::size_t>(m), 0));
    auto col_used = row_used;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
        {
            int s = a.at(r, c);
            grid[static_cast<std::size_t>(r * m + c)] = s;
            row_used[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] = 1;
            col_used[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)] = 1;
        }
    std::vector<std::pair<int, int>> border;
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
            if (r >= n || c >= n)
                border.push_back({r, c});
    std::vector<GridArray> out;
    auto dfs = [&](auto&& self, std::size_t idx) -> void {
        if (idx == border.size())
        {
            auto labels = a.labels();
            if (a.has_labels())
                for (int s = a.symbol_count(); s < m; ++s)
                    labels.push_back("z" + std::to_string(s - a.symbol_count()));
            out.push_back(GridArray::from_cells(m, grid, labels));
            return;
        }
        auto [r, c] = border[idx];
        for (int s = 0; s < m; ++s)
        {
            auto& ru = row_used[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)];
            auto& cu = col_used[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)];
            if (ru || cu)
                continue;
            ru = cu = 1;
            grid[static_cast<std::size_t>(r * m + c)] = s;
            self(self, idx + 1);
            ru = cu = 0;
        }
        grid[static_cast<std::size_t>(r * m + c)] = -1;
    };
    dfs(dfs, 0);
    return out;
}

} // namespace latrans

#endif // LATRANS_CONSTRUCTIONS_HPP
