#ifndef LATRANS_CERTIFICATES_HPP
#define LATRANS_CERTIFICATES_HPP

// Checkable forms of the non-search arguments: a Z_3 weighting certificate
// for transversal-freeness at order 6, two counting lemmas on general
// arrays, and the symbol-count thresholds that force a transversal.

#include "latrans/core.hpp"
#include "latrans/transversal.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace latrans
{

// ---------------------------------------------------------------------------
// Delta certificate

/// Rows R1/R2 and columns C1/C2 each split into halves of size 3; the
/// symbol universe splits into S1 (3 symbols) and S2 (4 symbols). The block
/// D = R2 x C2. rho weights rows and columns, nu weights symbols, both mod 3.
/// Symbols are named by label so the universe may include symbols absent
/// from the array.
struct DeltaCertificate
{
    std::vector<int> rows1, rows2, cols1, cols2;
    std::set<std::string> s1, s2;
    std::vector<int> rho;
    std::map<std::string, int> nu;
};

/// rho(1)=rho(4)=0, rho(2)=rho(5)=1, rho(3)=rho(6)=2; nu(a)=nu(d)=nu(g)=0,
/// nu(b)=nu(e)=1, nu(c)=nu(f)=2; S1 = {a,b,c}, S2 = {d,e,f,g}.
inline DeltaCertificate standard_delta_certificate()
{
    DeltaCertificate c;
    c.rows1 = c.cols1 = {0, 1, 2};
    c.rows2 = c.cols2 = {3, 4, 5};
    c.s1 = {"a", "b", "c"};
    c.s2 = {"d", "e", "f", "g"};
    c.rho = {0, 1, 2, 0, 1, 2};
    c.nu = {{"a", 0}, {"b", 1}, {"c", 2}, {"d", 0}, {"e", 1}, {"f", 2}, {"g", 0}};
    return c;
}

struct DeltaVerdict
{
    bool accepted = false;
    std::string reason; ///< first failed premise, empty when accepted
};

inline int mod3(int v) { return ((v % 3) + 3) % 3; }

/// Accepts only if every premise of the counting argument holds, in which
/// case L has no transversal:
///   - blocks R1 x C1 and D use only S1 symbols, the other two only S2;
///   - the weight rho(r) + rho(c) - nu(s) is 0 off D and nu(s) on D;
///   - |S1| = 3, |S2| = 4, nu is injective on S1;
///   - 2 * sum(rho) - sum(nu over S1 and S2) = 0 mod 3;
///   - every symbol of L lies in S1 or S2.
/// Malformed certificates throw; failed premises return a reason.
inline DeltaVerdict verify_delta_certificate(const GridArray& l, const DeltaCertificate& cert)
{
    const int n = l.order();
    auto check_split = [n](const std::vector<int>& a, const std::vector<int>& b, const char* what) {
        std::vector<int> seen(static_cast<std::size_t>(n), 0);
        if (static_cast<int>(a.size()) * 2 != n || a.size() != b.size())
            throw Error(std::string(what) + " halves must each have n/2 lines");
        for (const auto* half : {&a, &b})
            for (int x : *half)
            {
                if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)]++)
                    throw Error(std::string(what) + " partition is not an exact cover");
            }
    };
    if (n != 6)
        throw Error("the Z_3 certificate is defined for order 6");
    check_split(cert.rows1, cert.rows2, "row");
    check_split(cert.cols1, cert.cols2, "column");
    if (static_cast<int>(cert.rho.size()) != n)
        throw Error("rho must weight every line index");
    for (const auto& s : cert.s1)
        if (cert.s2.count(s))
            throw Error("symbol " + s + " lies in both S1 and S2");
    for (const auto* part : {&cert.s1, &cert.s2})
        for (const auto& s : *part)
            if (!cert.nu.count(s))
                throw Error("nu is undefined on " + s);

    auto fail = [](std::string why) { return DeltaVerdict{false, std::move(why)}; };
    if (l.is_partial())
        return fail("array has holes");
    if (cert.s1.size() != 3 || cert.s2.size() != 4)
        return fail("need |S1| = 3 and |S2| = 4");
    {
        std::set<int> w;
        for (const auto& s : cert.s1)
            w.insert(mod3(cert.nu.at(s)));
        if (w.size() != cert.s1.size())
            return fail("nu is not injective on S1");
    }
    {
        int total = 0;
        for (int r : cert.rho)
            total += 2 * r;
        for (const auto* part : {&cert.s1, &cert.s2})
            for (const auto& s : *part)
                total -= cert.nu.at(s);
        if (mod3(total) != 0)
            return fail("line weights and symbol weights do not balance mod 3");
    }
    std::vector<char> in_r1(static_cast<std::size_t>(n), 0), in_c1(static_cast<std::size_t>(n), 0);
    for (int r : cert.rows1)
        in_r1[static_cast<std::size_t>(r)] = 1;
    for (int c : cert.cols1)
        in_c1[static_cast<std::size_t>(c)] = 1;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
        {
            const std::string s = l.label(l.at(r, c));
            const bool top = in_r1[static_cast<std::size_t>(r)], left = in_c1[static_cast<std::size_t>(c)];
            const bool in_d = !top && !left;
            const bool wants_s1 = top == left;
            if (!cert.s1.count(s) && !cert.s2.count(s))
                return fail("symbol " + s + " is outside S1 and S2");
            if (wants_s1 != (cert.s1.count(s) > 0))
                return fail("block alphabet violated at (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")");
            const int delta = mod3(cert.rho[static_cast<std::size_t>(r)] + cert.rho[static_cast<std::size_t>(c)] -
                                   cert.nu.at(s));
            const int want = in_d ? mod3(cert.nu.at(s)) : 0;
            if (delta != want)
                return fail("weight condition fails at (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")");
        }
    return {true, ""};
}

// ---------------------------------------------------------------------------
// Counting lemmas

struct GoodColWitness
{
    bool holds = false;
    int column = -1; ///< clone column achieving the maximum union
    int union_size = 0;
};

/// For a row i with d >= 1 clone cells in an array with s symbols, looks
/// for a clone A_ij with d |R_i u C_j| >= d |R_i| + s - (n-d)(n-1) - |R_i|.
inline GoodColWitness check_good_col(const GridArray& a, int i)
{
    check_index(a, i, "row");
    if (a.is_partial())
        throw Error("array has holes");
    const int n = a.order();
    const auto classes = classify_symbols(a);
    const auto ri = row_symbols(a, i);
    const long long ri_size = static_cast<long long>(ri.count());
    std::vector<int> clone_cols;
    for (int j = 0; j < n; ++j)
        if (classes.counts[static_cast<std::size_t>(a.at(i, j))] > 1)
            clone_cols.push_back(j);
    const long long d = static_cast<long long>(clone_cols.size());
    if (d == 0)
        throw Error("row " + std::to_string(i + 1) + " has no clones");
    const long long rhs = d * ri_size + a.symbol_count() - (n - d) * (n - 1) - ri_size;
    GoodColWitness best;
    for (int j : clone_cols)
    {
        int u = static_cast<int>((ri | col_symbols(a, j)).count());
        if (u > best.union_size || best.column < 0)
        {
            best.union_size = u;
            best.column = j;
        }
    }
    best.holds = d * best.union_size >= rhs;
    return best;
}

/// Rational p/q with q > 0.
struct Ratio
{
    long long p = 1;
    long long q = 1;
};

enum class LemmaVerdict
{
    Pass,
    Fail,
    NotApplicable
};

inline const char* to_string(LemmaVerdict v)
{
    switch (v)
    {
    case LemmaVerdict::Pass:
        return "pass";
    case LemmaVerdict::Fail:
        return "fail";
    default:
        return "not applicable";
    }
}

struct LargesReport
{
    LemmaVerdict verdict = LemmaVerdict::NotApplicable;
    std::string reason;
    int union_size = 0;
    /// Twice q^2 times the bound, so the comparison stays integral.
    long long scaled_bound = 0;
    long long scaled_symbols = 0;
};

/// With row i and column j (default: the last ones) and k = p/q: if A has
/// no transversal, A(i|j) has one, and |R_i u C_j| >= (k+1)n - 1, then A has
/// at most ((k^2 - 2k + 2) n^2 + (3k - 2) n) / 2 symbols.
inline LargesReport check_upper_bound_from_larges(const GridArray& a, Ratio k, int i = -1, int j = -1)
{
    const int n = a.order();
    if (i < 0)
        i = n - 1;
    if (j < 0)
        j = n - 1;
    check_index(a, i, "row");
    check_index(a, j, "column");
    if (k.q <= 0)
        throw Error("k must have a positive denominator");
    LargesReport rep;
    auto na = [&](std::string why) {
        rep.verdict = LemmaVerdict::NotApplicable;
        rep.reason = std::move(why);
        return rep;
    };
    rep.union_size = static_cast<int>((row_symbols(a, i) | col_symbols(a, j)).count());
    if (n < 2)
        return na("order below 2");
    if (has_transversal(a))
        return na("array has a transversal");
    if (!has_transversal(delete_row_col(a, i, j)))
        return na("the minor has no transversal");
    const long long p = k.p, q = k.q, nn = n;
    if (q * rep.union_size < (p + q) * nn - q)
        return na("|R u C| is below (k+1)n - 1");
    rep.scaled_bound = (p * p - 2 * p * q + 2 * q * q) * nn * nn + (3 * p - 2 * q) * q * nn;
    rep.scaled_symbols = 2 * q * q * a.symbol_count();
    rep.verdict = rep.scaled_symbols <= rep.scaled_bound ? LemmaVerdict::Pass : LemmaVerdict::Fail;
    return rep;
}

struct FocusedReport
{
    bool focused = false;
    std::optional<std::pair<int, int>> witness; ///< (i, j) with |Psi_ij| = 2n - 1
};

/// Focused: every singleton lies in a row or column of singletons, and some
/// row i and column j consist only of singletons.
inline FocusedReport check_focused(const GridArray& a)
{
    if (a.is_partial() || !is_latin(a))
        throw Error("check_focused needs a Latin array");
    const int n = a.order();
    const auto classes = classify_symbols(a);
    auto single = [&](int r, int c) { return classes.counts[static_cast<std::size_t>(a.at(r, c))] == 1; };
    std::vector<char> row_all(static_cast<std::size_t>(n), 1), col_all(static_cast<std::size_t>(n), 1);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (!single(r, c))
                row_all[static_cast<std::size_t>(r)] = col_all[static_cast<std::size_t>(c)] = 0;
    FocusedReport rep;
    for (int i = 0; i < n && !rep.witness; ++i)
        for (int j = 0; j < n && !rep.witness; ++j)
            if (static_cast<int>(psi(a, i, j).count()) == 2 * n - 1)
                rep.witness = std::make_pair(i, j);
    if (!rep.witness)
        return rep;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (single(r, c) && !row_all[static_cast<std::size_t>(r)] && !col_all[static_cast<std::size_t>(c)])
                return rep;
    rep.focused = true;
    return rep;
}

// ---------------------------------------------------------------------------
// Symbol-count thresholds

enum class ArrayKind
{
    Latin,
    RowLatin
};

namespace detail
{
using i128 = __int128;

/// s >= (2 - sqrt 2) n^2
inline bool latin_bound_holds(long long n, long long s)
{
    i128 t = 2 * static_cast<i128>(n) * n - s;
    return t <= 0 || t * t <= 2 * static_cast<i128>(n) * n * n * n;
}

/// s >= (5 - sqrt 5) n^2 / 4
inline bool row_latin_bound_holds(long long n, long long s)
{
    i128 t = 5 * static_cast<i128>(n) * n - 4 * static_cast<i128>(s);
    return t <= 0 || t * t <= 5 * static_cast<i128>(n) * n * n * n;
}

/// s >= (229 n^2 + 27 n) / 256
inline bool lll_bound_holds(long long n, long long s)
{
    return 256 * static_cast<i128>(s) >= 229 * static_cast<i128>(n) * n + 27 * static_cast<i128>(n);
}

/// Least s >= 0 with pred(n, s); pred is monotone in s and holds at 2n^2.
template <class Pred>
long long least_symbols(long long n, Pred pred)
{
    long long lo = 0, hi = 2 * n * n;
    while (lo < hi)
    {
        long long mid = lo + (hi - lo) / 2;
        if (pred(n, mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}
} // namespace detail

struct TheoremThreshold
{
    std::string name;
    std::string expression;
    long long threshold = 0; ///< least symbol count meeting the hypothesis
    bool applies = false;    ///< the theorem covers this kind of array
    bool fires = false;
};

struct BoundReport
{
    long long n = 0;
    long long symbols = 0;
    ArrayKind kind = ArrayKind::Latin;
    std::vector<TheoremThreshold> theorems;
    std::string strongest; ///< name of the lowest firing threshold, empty if none
    std::string note;
};

inline constexpr long long kMaxBoundOrder = 1000000;

/// Which symbol-count theorems force a transversal in every array of this
/// kind, order n and s symbols.
inline BoundReport guarantee_transversal(long long n, long long s, ArrayKind kind)
{
    if (n < 1 || n > kMaxBoundOrder)
        throw Error("order out of range");
    if (s < n || s > n * n)
        throw Error("symbol count must lie in n..n^2");
    BoundReport rep;
    rep.n = n;
    rep.symbols = s;
    rep.kind = kind;
    const bool latin = kind == ArrayKind::Latin;
    rep.theorems.push_back({"latin", "(2-sqrt2)n^2", detail::least_symbols(n, detail::latin_bound_holds), latin});
    rep.theorems.push_back(
        {"row-latin", "(5-sqrt5)n^2/4", detail::least_symbols(n, detail::row_latin_bound_holds), true});
    rep.theorems.push_back({"lll", "(229n^2+27n)/256", detail::least_symbols(n, detail::lll_bound_holds), latin});
    long long best = -1;
    for (auto& t : rep.theorems)
    {
        t.fires = t.applies && s >= t.threshold;
        if (t.fires && (best < 0 || t.threshold < best))
        {
            best = t.threshold;
            rep.strongest = t.name;
        }
    }
    if (!latin)
        rep.note = "row-Latin arrays without a transversal exist with n^2/2 - O(n) symbols";
    return rep;
}

inline nlohmann::json to_json(const BoundReport& r)
{
    nlohmann::json th = nlohmann::json::array();
    for (const auto& t : r.theorems)
        th.push_back({{"name", t.name},
                      {"expression", t.expression},
                      {"threshold", t.threshold},
                      {"applies", t.applies},
                      {"fires", t.fires}});
    nlohmann::json j{{"n", r.n},
                     {"symbols", r.symbols},
                     {"kind", r.kind == ArrayKind::Latin ? "latin" : "row-latin"},
                     {"theorems", th},
                     {"strongest", r.strongest.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.strongest)}};
    if (!r.note.empty())
        j["note"] = r.note;
    return j;
}

inline std::string render_bound_report(const BoundReport& r)
{
    std::ostringstream out;
    out << "n=" << r.n << " symbols=" << r.symbols << " kind=" << (r.kind == ArrayKind::Latin ? "latin" : "row-latin")
        << "\n";
    out << "theorem\tthreshold\tverdict\n";
    for (const auto& t : r.theorems)
        out << t.name << "\t" << t.threshold << "\t"
            << (!t.applies ? "n/a" : t.fires ? "transversal guaranteed" : "below threshold") << "\n";
    if (!r.note.empty())
        out << "note: " << r.note << "\n";
    return out.str();
}

} // namespace latrans

#endif // LATRANS_CERTIFICATES_HPP
