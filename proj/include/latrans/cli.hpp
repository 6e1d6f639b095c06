#ifndef LATRANS_CLI_HPP
#define LATRANS_CLI_HPP

// Command-line front end. run() takes the arguments after the program name
// and writes results to `out` and progress or diagnostics to `err`.
// Exit status: 0 success, 1 negative answer, 2 usage or input error.

#include "latrans/catalogue.hpp"
#include "latrans/certificates.hpp"
#include "latrans/constructions.hpp"
#include "latrans/core.hpp"
#include "latrans/lll.hpp"
#include "latrans/random.hpp"
#include "latrans/transversal.hpp"
#include "latrans/trisotopy.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace latrans::cli
{

inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUsage = 2;

struct UsageError : Error
{
    using Error::Error;
};

struct Shard
{
    int index = 0;
    int count = 1;
};

inline Shard parse_shard(const std::string& text)
{
    auto slash = text.find('/');
    if (slash == std::string::npos)
        throw UsageError("--shard expects A/B");
    Shard s;
    try
    {
        s.index = std::stoi(text.substr(0, slash));
        s.count = std::stoi(text.substr(slash + 1));
    }
    catch (const std::exception&)
    {
        throw UsageError("--shard expects A/B");
    }
    if (s.count < 1 || s.index < 0 || s.index >= s.count)
        throw UsageError("--shard needs 0 <= A < B");
    return s;
}

struct GlobalFlags
{
    bool json = false;
    unsigned jobs = 1;
    std::uint64_t seed = 1;
    std::string checkpoint;
    std::string shard = "0/1";
    int limit_order = kMaxCanonicalOrder;
};

// ---------------------------------------------------------------------------
// Files

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline bool is_jsonl(const std::string& path)
{
    return std::filesystem::path(path).extension() == ".jsonl";
}

/// Arrays from a grid file (blank-line separated) or a JSON-lines catalogue.
inline std::vector<GridArray> load_arrays(const std::string& path)
{
    std::vector<GridArray> out;
    if (is_jsonl(path))
    {
        std::istringstream in(read_file(path));
        CatalogueStore s;
        s.load_lines(in);
        for (const auto& r : s.records())
            out.push_back(r.array());
    }
    else
        out = parse_arrays(read_file(path));
    if (out.empty())
        throw UsageError(path + " holds no arrays");
    return out;
}

/// Checkpoint directory manifest: file name -> {"order", "complete", "finished", "records"}.
class Manifest
{
public:
    explicit Manifest(std::string dir) : dir_(std::move(dir))
    {
        if (dir_.empty())
            return;
        std::filesystem::create_directories(dir_);
        if (std::filesystem::exists(path()))
            data_ = nlohmann::json::parse(read_file(path()));
        if (!data_.is_object())
            data_ = nlohmann::json::object();
    }

    bool enabled() const { return !dir_.empty(); }
    std::string file(const std::string& name) const { return (std::filesystem::path(dir_) / name).string(); }

    std::optional<CatalogueStore> load(const std::string& name) const
    {
        if (!enabled() || !data_.contains(name) || !std::filesystem::exists(file(name)))
            return std::nullopt;
        auto s = CatalogueStore::load(file(name));
        s.set_complete(data_[name].value("complete", false));
        return s;
    }

    void save(const std::string& name, const CatalogueStore& s, int order)
    {
        if (!enabled())
            return;
        s.save(file(name));
        data_[name] = {{"order", order}, {"complete", s.complete()}, {"finished", true}, {"records", s.size()}};
        std::ofstream(path()) << data_.dump(2) << '\n';
    }

    bool finished(const std::string& name) const
    {
        return data_.contains(name) && data_[name].value("finished", false);
    }

    bool complete(const std::string& name) const
    {
        return data_.contains(name) && data_[name].value("complete", false);
    }

private:
    std::string path() const { return file("manifest.json"); }
    std::string dir_;
    nlohmann::json data_ = nlohmann::json::object();
};

/// Completeness of a catalogue file, read from a manifest next to it.
inline bool manifest_says_complete(const std::string& path)
{
    auto p = std::filesystem::path(path);
    auto m = p.parent_path() / "manifest.json";
    if (!std::filesystem::exists(m))
        return false;
    auto j = nlohmann::json::parse(read_file(m.string()));
    auto name = p.filename().string();
    return j.contains(name) && j[name].value("complete", false);
}

inline std::string latin_name(int n) { return "latin_" + std::to_string(n) + ".jsonl"; }
inline std::string partial_name(int m, int h, int total)
{
    return "partial_" + std::to_string(m) + "_h" + std::to_string(h) + "_H" +
           (total >= kUnlimited ? std::string("inf") : std::to_string(total)) + ".jsonl";
}

// ---------------------------------------------------------------------------
// Output helpers

inline nlohmann::json transversal_json(const GridArray& a, const Transversal& t)
{
    auto j = nlohmann::json::array();
    for (const auto& e : t.entries)
        j.push_back({e.row + 1, e.col + 1, a.label(e.sym)});
    return j;
}

inline std::string transversal_text(const GridArray& a, const Transversal& t)
{
    std::string s;
    for (const auto& e : t.entries)
    {
        if (!s.empty())
            s += ' ';
        s += "(" + std::to_string(e.row + 1) + "," + std::to_string(e.col + 1) + "," + a.label(e.sym) + ")";
    }
    return s;
}

inline void emit_records(std::ostream& out, const CatalogueStore& s)
{
    for (const auto& r : s.records())
        out << to_json(r).dump() << '\n';
}

// ---------------------------------------------------------------------------
// Application

class App
{
public:
    App(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(const std::vector<std::string>& args)
    {
        CLI::App app{"Transversals in Latin arrays with many symbols", "latrans"};
        app.require_subcommand(1, 1);
        app.add_flag("--json", g_.json, "Machine-readable output");
        app.add_option("--jobs", g_.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
        app.add_option("--seed", g_.seed, "Random seed");
        app.add_option("--checkpoint", g_.checkpoint, "Directory for catalogue files and manifest");
        app.add_option("--shard", g_.shard, "Process shard A of B (A/B)");
        app.add_option("--limit-order", g_.limit_order, "Largest order to build")->check(CLI::Range(1, kMaxOrder));

        std::vector<std::string> files;
        int order = 0, symbols = 0, holes = 0, per_line = 2, upto = 6, count = 1, restarts = 100, min_order = 2;
        std::string from, kind = "latin", max_holes = "inf";
        bool latin = false, direct = false, build = true, search = false, all = false;

        auto* check = app.add_subcommand("check", "Report structure and whether each array has a transversal");
        check->add_option("files", files, "Array files")->required();
        auto* count_cmd = app.add_subcommand("count", "Count transversals");
        count_cmd->add_option("files", files)->required();
        count_cmd->add_flag("--all", all, "List every transversal");
        auto* maxpt = app.add_subcommand("maxpt", "Longest partial transversal");
        maxpt->add_option("files", files)->required();
        auto* canon = app.add_subcommand("canon", "Canonical key under trisotopy");
        canon->add_option("files", files)->required();
        auto* dedupe = app.add_subcommand("dedupe", "Distinct trisotopy classes across inputs");
        dedupe->add_option("files", files)->required();
        auto* catalogue = app.add_subcommand("catalogue", "Enumerate transversal-free arrays");
        catalogue->add_option("--order", order)->required()->check(CLI::Range(1, kMaxCanonicalOrder));
        catalogue->add_option("--per-line", per_line, "Hole limit per row and column")->check(CLI::NonNegativeNumber);
        catalogue->add_option("--max-holes", max_holes, "Total hole limit or inf");
        catalogue->add_flag("--latin", latin, "Latin arrays (no holes) of the given order");
        catalogue->add_flag("--direct", direct, "Use the one-row path for --latin");
        auto* extend = app.add_subcommand("extend", "Grow a complete order n-2 catalogue to order n");
        extend->add_option("--from", from, "Seed catalogue (.jsonl)")->required();
        extend->add_option("--order", order)->required()->check(CLI::Range(3, kMaxCanonicalOrder));
        auto* ell = app.add_subcommand("ell", "l(n) from a complete catalogue");
        ell->add_option("--order", order)->required()->check(CLI::Range(1, kMaxCanonicalOrder));
        ell->add_option("--from", from, "Catalogue file or checkpoint directory");
        auto* table1 = app.add_subcommand("table1", "l(n) and class counts");
        table1->add_option("--upto", upto)->check(CLI::Range(1, kMaxCanonicalOrder));
        table1->add_option("--min-order", min_order)->check(CLI::Range(1, kMaxCanonicalOrder));
        table1->add_option("--from", from, "Checkpoint directory with latin_<n>.jsonl");
        table1->add_flag("--build,!--no-build", build, "Compute missing rows");
        auto* table2 = app.add_subcommand("table2", "Partial classes by holes and symbols");
        table2->add_option("--holes", holes, "Largest hole count")->check(CLI::Range(0, 25));
        table2->add_option("--order", order, "Order (default 5)")->check(CLI::Range(1, kMaxCanonicalOrder));
        table2->add_option("--per-line", per_line)->check(CLI::NonNegativeNumber);
        auto* constructions = app.add_subcommand("constructions", "The 19 seven-symbol order-6 classes");
        auto* delta = app.add_subcommand("delta-verify", "Check the Z_3 certificate");
        delta->add_option("files", files)->required();
        delta->add_option("--certificate", from, "Certificate JSON (default: the standard one)");
        auto* bounds = app.add_subcommand("bounds", "Symbol-count thresholds forcing a transversal");
        bounds->add_option("--order", order)->required()->check(CLI::Range(1, static_cast<int>(kMaxBoundOrder)));
        bounds->add_option("--symbols", symbols)->required();
        bounds->add_option("--kind", kind)->check(CLI::IsMember({"latin", "row-latin"}));
        auto* lll = app.add_subcommand("lll", "Clique local lemma condition");
        lll->add_option("files", files)->required();
        lll->add_flag("--search", search, "Also run the randomised transversal search");
        lll->add_option("--restarts", restarts)->check(CLI::PositiveNumber);
        auto* sample = app.add_subcommand("sample", "Random arrays");
        sample->add_option("--order", order)->required()->check(CLI::Range(1, kMaxOrder));
        sample->add_option("--symbols", symbols);
        sample->add_option("--kind", kind)->check(CLI::IsMember({"latin", "row-latin", "square", "greedy"}));
        sample->add_option("--count", count)->check(CLI::PositiveNumber);

        for (auto* sub : app.get_subcommands({}))
            sub->fallthrough();

        std::vector<const char*> argv{"latrans"};
        for (const auto& a : args)
            argv.push_back(a.c_str());
        try
        {
            app.parse(static_cast<int>(argv.size()), argv.data());
        }
        catch (const CLI::ParseError& e)
        {
            int code = app.exit(e, out_, err_);
            return code == 0 ? kOk : kUsage;
        }

        try
        {
            shard_ = parse_shard(g_.shard);
            opts_.jobs = g_.jobs;
            opts_.heartbeat = [this](const std::string& s) { err_ << "[progress] " << s << std::endl; };
            if (check->parsed())
                return cmd_check(files);
            if (count_cmd->parsed())
                return cmd_count(files, all);
            if (maxpt->parsed())
                return cmd_maxpt(files);
            if (canon->parsed())
                return cmd_canon(files);
            if (dedupe->parsed())
                return cmd_dedupe(files);
            if (catalogue->parsed())
                return cmd_catalogue(order, per_line, parse_limit(max_holes), latin, direct);
            if (extend->parsed())
                return cmd_extend(from, order);
            if (ell->parsed())
                return cmd_ell(order, from);
            if (table1->parsed())
                return cmd_table1(std::min(min_order, upto), upto, from, build);
            if (table2->parsed())
                return cmd_table2(order ? order : 5, per_line, holes);
            if (constructions->parsed())
                return cmd_constructions();
            if (delta->parsed())
                return cmd_delta(files, from);
            if (bounds->parsed())
                return cmd_bounds(order, symbols, kind);
            if (lll->parsed())
                return cmd_lll(files, search, restarts);
            if (sample->parsed())
                return cmd_sample(order, symbols, kind, count);
        }
        catch (const std::exception& e)
        {
            err_ << "error: " << e.what() << '\n';
            return kUsage;
        }
        return kUsage;
    }

private:
    static int parse_limit(const std::string& text)
    {
        if (text == "inf")
            return kUnlimited;
        try
        {
            int v = std::stoi(text);
            if (v < 0)
                throw UsageError("--max-holes must be non-negative");
            return v;
        }
        catch (const std::invalid_argument&)
        {
            throw UsageError("--max-holes expects an integer or inf");
        }
    }

    std::vector<std::pair<std::string, GridArray>> inputs(const std::vector<std::string>& files)
    {
        std::vector<std::pair<std::string, GridArray>> out;
        for (const auto& f : files)
        {
            auto arrays = load_arrays(f);
            for (std::size_t i = 0; i < arrays.size(); ++i)
                out.emplace_back(arrays.size() == 1 ? f : f + "#" + std::to_string(i + 1), arrays[i]);
        }
        return out;
    }

    int cmd_check(const std::vector<std::string>& files)
    {
        bool all_have = true;
        for (const auto& [name, a] : inputs(files))
        {
            auto r = find_transversal(a);
            all_have = all_have && r.found();
            if (g_.json)
            {
                nlohmann::json j{{"input", name},           {"order", a.order()},
                                 {"symbols", a.symbol_count()}, {"holes", a.hole_count()},
                                 {"latin", is_latin(a)},       {"row_latin", is_row_latin(a)},
                                 {"transversal", r.found()}};
                if (r.found())
                    j["witness"] = transversal_json(a, *r.witness);
                out_ << j.dump() << '\n';
            }
            else
            {
                out_ << name << ": order " << a.order() << ", " << a.symbol_count() << " symbols, "
                     << a.hole_count() << " holes, " << (is_latin(a) ? "Latin" : is_row_latin(a) ? "row-Latin" : "not row-Latin")
                     << "; ";
                if (r.found())
                    out_ << "transversal " << transversal_text(a, *r.witness) << '\n';
                else
                    out_ << "no transversal\n";
            }
        }
        return all_have ? kOk : kNegative;
    }

    int cmd_count(const std::vector<std::string>& files, bool all)
    {
        for (const auto& [name, a] : inputs(files))
        {
            auto c = g_.jobs > 1 ? count_transversals_parallel(a, g_.jobs) : count_transversals(a);
            if (g_.json)
                out_ << nlohmann::json{{"input", name}, {"transversals", c}}.dump() << '\n';
            else
                out_ << name << ": " << c << '\n';
            if (all)
                for_each_transversal(a, [&](const Transversal& t) {
                    out_ << (g_.json ? transversal_json(a, t).dump() : transversal_text(a, t)) << '\n';
                    return false;
                });
        }
        return kOk;
    }

    int cmd_maxpt(const std::vector<std::string>& files)
    {
        for (const auto& [name, a] : inputs(files))
        {
            auto r = max_partial_transversal(a);
            if (g_.json)
                out_ << nlohmann::json{{"input", name}, {"length", r.length}, {"witness", transversal_json(a, r.witness)}}
                            .dump()
                     << '\n';
            else
                out_ << name << ": " << r.length << " " << transversal_text(a, r.witness) << '\n';
        }
        return kOk;
    }

    int cmd_canon(const std::vector<std::string>& files)
    {
        for (const auto& [name, a] : inputs(files))
        {
            auto k = canonical_form(a);
            if (g_.json)
                out_ << nlohmann::json{{"input", name}, {"key", k.to_string()}}.dump() << '\n';
            else
                out_ << name << ": " << k.to_string() << '\n';
        }
        return kOk;
    }

    int cmd_dedupe(const std::vector<std::string>& files)
    {
        CatalogueStore store;
        for (const auto& [name, a] : inputs(files))
            store.insert(make_record(a, "dedupe"));
        if (g_.json)
            emit_records(out_, store);
        else
            for (const auto& r : store.records())
                out_ << r.key.to_string() << '\n';
        err_ << store.size() << " classes\n";
        return kOk;
    }

    int cmd_catalogue(int order, int per_line, int max_holes, bool latin, bool direct)
    {
        if (order > g_.limit_order)
            throw UsageError("--order exceeds --limit-order");
        Manifest manifest(g_.checkpoint);
        std::string name = latin ? latin_name(order) : partial_name(order, per_line, max_holes);
        std::optional<CatalogueStore> store = manifest.complete(name) ? manifest.load(name) : std::nullopt;
        if (store)
            err_ << "[checkpoint] reusing " << manifest.file(name) << '\n';
        else if (latin)
            store = direct ? enumerate_latin_tf_direct(order, opts_) : latin_tf_catalogue(order, opts_);
        else
            store = enumerate_partial_catalogue(order, per_line, max_holes, opts_);
        manifest.save(name, *store, order);
        emit_records(out_, *store);
        err_ << store->size() << " classes" << (store->complete() ? "" : " (incomplete)") << '\n';
        return kOk;
    }

    int cmd_extend(const std::string& from, int order)
    {
        auto seeds = CatalogueStore::load(from);
        seeds.set_complete(manifest_says_complete(from));
        if (!seeds.complete())
            err_ << "warning: seed catalogue not marked complete; output is a lower bound\n";
        // Contiguous record ranges per shard.
        auto all = seeds.records();
        std::size_t lo = all.size() * static_cast<std::size_t>(shard_.index) / static_cast<std::size_t>(shard_.count);
        std::size_t hi =
            all.size() * static_cast<std::size_t>(shard_.index + 1) / static_cast<std::size_t>(shard_.count);
        CatalogueStore part;
        for (std::size_t i = lo; i < hi; ++i)
            part.insert(all[i]);
        part.set_complete(seeds.complete() && shard_.count == 1);
        Manifest manifest(g_.checkpoint);
        std::string name = shard_.count == 1 ? "extend_" + std::to_string(order) + ".jsonl"
                                             : "extend_" + std::to_string(order) + "_shard" +
                                                   std::to_string(shard_.index) + "of" + std::to_string(shard_.count) +
                                                   ".jsonl";
        std::optional<CatalogueStore> done = manifest.finished(name) ? manifest.load(name) : std::nullopt;
        if (done)
            err_ << "[checkpoint] reusing " << manifest.file(name) << '\n';
        else
        {
            done = extend_catalogue(part, order, {0, 0}, opts_);
            done->set_complete(part.complete());
        }
        manifest.save(name, *done, order);
        emit_records(out_, *done);
        err_ << done->size() << " classes from seeds " << lo << ".." << hi << '\n';
        return kOk;
    }

    /// Complete Latin catalogue of order n: from a file, a checkpoint
    /// directory, or built (and checkpointed when a directory is set).
    std::optional<CatalogueStore> latin_catalogue(int n, const std::string& from, bool build)
    {
        if (!from.empty() && std::filesystem::is_regular_file(from))
        {
            auto s = CatalogueStore::load(from);
            s.set_complete(manifest_says_complete(from));
            return s;
        }
        Manifest manifest(from.empty() ? g_.checkpoint : from);
        if (auto s = manifest.load(latin_name(n)))
            return s;
        if (!build || n > g_.limit_order)
            return std::nullopt;
        auto s = latin_tf_catalogue(n, opts_);
        manifest.save(latin_name(n), s, n);
        return s;
    }

    int cmd_ell(int n, const std::string& from)
    {
        auto s = latin_catalogue(n, from, from.empty());
        if (!s)
            throw Error("no catalogue for order " + std::to_string(n));
        int v = compute_ell(n, *s);
        if (g_.json)
            out_ << nlohmann::json{{"order", n}, {"ell", v}, {"classes", s->size()}}.dump() << '\n';
        else
            out_ << v << '\n';
        return kOk;
    }

    int cmd_table1(int lo, int upto, const std::string& from, bool build)
    {
        std::vector<Table1Row> rows;
        for (int n = lo; n <= upto; ++n)
        {
            auto s = latin_catalogue(n, from, build);
            if (s)
                rows.push_back(table1_row(n, *s));
            else
            {
                Table1Row r;
                r.n = n;
                rows.push_back(r);
            }
        }
        if (g_.json)
            for (const auto& r : rows)
            {
                nlohmann::json by = nlohmann::json::object();
                for (const auto& [s, c] : r.by_symbols)
                    by[std::to_string(s)] = c;
                out_ << nlohmann::json{{"n", r.n},
                                       {"complete", r.complete},
                                       {"ell", r.complete ? nlohmann::json(r.ell) : nlohmann::json(nullptr)},
                                       {"by_symbols", by},
                                       {"total", r.total}}
                            .dump()
                     << '\n';
            }
        else
            out_ << render_table1(rows);
        return kOk;
    }

    int cmd_table2(int m, int per_line, int holes)
    {
        if (m > g_.limit_order)
            throw UsageError("--order exceeds --limit-order");
        Manifest manifest(g_.checkpoint);
        std::string name = partial_name(m, per_line, holes);
        auto store = manifest.complete(name) ? *manifest.load(name) : enumerate_partial_catalogue(m, per_line, holes, opts_);
        manifest.save(name, store, m);
        auto counts = table2_counts(store);
        if (g_.json)
        {
            for (const auto& [h, row] : counts)
                for (const auto& [s, c] : row)
                    out_ << nlohmann::json{{"holes", h}, {"symbols", s}, {"classes", c}}.dump() << '\n';
        }
        else
        {
            int widest = 13;
            for (const auto& [h, row] : counts)
                if (!row.empty())
                    widest = std::max(widest, row.rbegin()->first);
            out_ << render_table2(counts, holes, store.complete(), std::min(3, m), widest);
        }
        return kOk;
    }

    int cmd_constructions()
    {
        auto arrays = generate_order6_constructions();
        for (std::size_t i = 0; i < arrays.size(); ++i)
        {
            const auto& a = arrays[i];
            auto key = canonical_form(a);
            auto t = count_transversals(a);
            if (g_.json)
                out_ << nlohmann::json{{"name", "L" + std::to_string(i + 1)},
                                       {"symbols", a.symbol_count()},
                                       {"latin", is_latin(a)},
                                       {"transversals", t},
                                       {"key", key.to_string()}}
                            .dump()
                     << '\n';
            else
                out_ << "L" << i + 1 << " (" << a.symbol_count() << " symbols, " << t << " transversals)\n"
                     << render_array(a) << '\n';
        }
        return kOk;
    }

    static DeltaCertificate certificate_from_json(const nlohmann::json& j)
    {
        DeltaCertificate c;
        auto lines = [](const nlohmann::json& v) {
            std::vector<int> out;
            for (int x : v.get<std::vector<int>>())
                out.push_back(x - 1);
            return out;
        };
        c.rows1 = lines(j.at("rows1"));
        c.rows2 = lines(j.at("rows2"));
        c.cols1 = lines(j.at("cols1"));
        c.cols2 = lines(j.at("cols2"));
        for (const auto& s : j.at("s1"))
            c.s1.insert(s.get<std::string>());
        for (const auto& s : j.at("s2"))
            c.s2.insert(s.get<std::string>());
        c.rho = j.at("rho").get<std::vector<int>>();
        c.nu = j.at("nu").get<std::map<std::string, int>>();
        return c;
    }

    int cmd_delta(const std::vector<std::string>& files, const std::string& cert_path)
    {
        auto cert = cert_path.empty() ? standard_delta_certificate()
                                      : certificate_from_json(nlohmann::json::parse(read_file(cert_path)));
        bool all_ok = true;
        for (const auto& [name, a] : inputs(files))
        {
            auto v = verify_delta_certificate(a, cert);
            all_ok = all_ok && v.accepted;
            if (g_.json)
                out_ << nlohmann::json{{"input", name}, {"accepted", v.accepted}, {"reason", v.reason}}.dump() << '\n';
            else
                out_ << name << ": " << (v.accepted ? "certified transversal-free" : "rejected: " + v.reason) << '\n';
        }
        return all_ok ? kOk : kNegative;
    }

    int cmd_bounds(int n, int s, const std::string& kind)
    {
        auto rep = guarantee_transversal(n, s, kind == "latin" ? ArrayKind::Latin : ArrayKind::RowLatin);
        out_ << (g_.json ? to_json(rep).dump() + "\n" : render_bound_report(rep));
        return rep.strongest.empty() ? kNegative : kOk;
    }

    int cmd_lll(const std::vector<std::string>& files, bool search, int restarts)
    {
        bool all_guaranteed = true;
        for (const auto& [name, a] : inputs(files))
        {
            auto rep = lll_condition(a);
            all_guaranteed = all_guaranteed && rep.guaranteed;
            nlohmann::json j = to_json(rep);
            j["input"] = name;
            std::optional<RandomSearchResult> sr;
            if (search)
            {
                sr = random_transversal_search(a, g_.seed, restarts);
                j["search"] = {{"seed", g_.seed},
                               {"found", sr->transversal.has_value()},
                               {"restarts", sr->stats.restarts},
                               {"moves", sr->stats.moves}};
                if (sr->transversal)
                    j["search"]["witness"] = transversal_json(a, *sr->transversal);
            }
            if (g_.json)
                out_ << j.dump() << '\n';
            else
            {
                out_ << name << ": kappa=" << rep.kappa << " mu=" << rep.mu << " x=" << rep.x_string() << " "
                     << (rep.guaranteed ? "transversal guaranteed" : "condition fails") << '\n';
                if (sr)
                    out_ << "  search (seed " << g_.seed << "): "
                         << (sr->transversal ? "found " + transversal_text(a, *sr->transversal)
                                             : std::string("exhausted"))
                         << " after " << sr->stats.restarts << " restarts\n";
            }
        }
        return all_guaranteed ? kOk : kNegative;
    }

    int cmd_sample(int n, int symbols, const std::string& kind, int count)
    {
        Rng rng(g_.seed);
        out_ << "# seed " << g_.seed << '\n';
        for (int i = 0; i < count; ++i)
        {
            GridArray a;
            if (kind == "square")
                a = random_latin_square(n, rng);
            else if (kind == "greedy")
                a = random_latin_array_greedy(n, 0.3, rng);
            else if (kind == "row-latin")
                a = random_row_latin_array(n, symbols ? symbols : n, rng);
            else
                a = random_latin_array(n, symbols ? symbols : n, rng);
            out_ << (i ? "\n" : "") << render_array(a);
        }
        return kOk;
    }

    std::ostream& out_;
    std::ostream& err_;
    GlobalFlags g_;
    Shard shard_;
    GrowOptions opts_;
};

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    App app(out, err);
    return app.run(args);
}

} // namespace latrans::cli

#endif // LATRANS_CLI_HPP
