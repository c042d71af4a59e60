// accdom: exact counting, enumeration, and auditing of accurate dominating
// sets.  Subcommands wrap the library oracles, the closed-form tables, and
// the formula/bound auditor; see README.md for the exit-code contract
// (0 ok or expected findings, 1 usage error, 2 unexpected audit outcome,
// 3 capacity).

#include "accdom/accurate.hpp"
#include "accdom/audit.hpp"
#include "accdom/closed_forms.hpp"
#include "accdom/domination.hpp"
#include "accdom/graph.hpp"
#include "accdom/subset_sweep.hpp"
#include "accdom/tables.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace accdom;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUnexpectedFinding = 2;
constexpr int kExitCapacity = 3;

struct CommonOpts {
    std::string format = "human";
    int workers = 1;
    int guard = kSweepGuard;

    SweepOptions sweep() const { return {workers, guard}; }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"human", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--workers", opts.workers, "worker threads for subset sweeps")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--guard", opts.guard,
                    "max graph order admitted to exhaustive sweeps (explicit override)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

struct NRange {
    int lo = 0, hi = 0;
};

NRange parse_n_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw parse_error("bad range '" + text + "', expected LO..HI");
    }
}

std::vector<int> one_indexed(VertexSet s) {
    std::vector<int> out;
    for (int v : s.members()) out.push_back(v + 1);
    return out;
}

void emit(const std::string& text) { std::cout << text << '\n'; }

int run_count(const std::string& graph_arg, int size, bool accurate, const CommonOpts& opts) {
    Graph g = load_graph_argument(graph_arg);
    Count c = accurate ? count_accurate(g, size, opts.sweep())
                       : count_dominating(g, size, opts.sweep());
    if (opts.format == "json") {
        ordered_json j{{"graph", graph_arg},
                       {"size", size},
                       {"accurate", accurate},
                       {"count", c.str()}};
        emit(j.dump());
    } else if (opts.format == "csv") {
        emit("graph,size,accurate,count");
        emit(graph_arg + "," + std::to_string(size) + "," + (accurate ? "1" : "0") + "," +
             c.str());
    } else {
        emit(c.str());
    }
    return kExitOk;
}

int run_enumerate(const std::string& graph_arg, int size, bool accurate,
                  const CommonOpts& opts) {
    Graph g = load_graph_argument(graph_arg);
    std::vector<VertexSet> sets;
    if (accurate) {
        sets = enumerate_accurate(g, size, opts.sweep());
    } else {
        if (size < 0 || size > g.n())
            throw input_error("cardinality " + std::to_string(size) + " out of range");
        if (g.n() > opts.guard)
            throw capacity_error("exhaustive sweep refused for n=" + std::to_string(g.n()) +
                                 " (guard " + std::to_string(opts.guard) + ")");
        // same sweep contract, dominating sets only
        sweep_k_subsets(g.n(), size, {0, binomial_u64(g.n(), size)},
                        [&](std::uint64_t mask) {
                            if (is_dominating(g, VertexSet(mask))) sets.emplace_back(mask);
                        });
    }
    if (opts.format == "json") {
        ordered_json j{{"graph", graph_arg}, {"size", size}, {"accurate", accurate}};
        auto& arr = j["sets"] = ordered_json::array();
        for (VertexSet s : sets) arr.push_back(one_indexed(s));
        emit(j.dump());
    } else if (opts.format == "csv") {
        for (VertexSet s : sets) {
            std::string line;
            for (int v : one_indexed(s)) line += (line.empty() ? "" : ",") + std::to_string(v);
            emit(line);
        }
    } else {
        for (VertexSet s : sets) emit(s.to_string(1));
    }
    return kExitOk;
}

int run_poly(const std::string& graph_arg, bool accurate, const CommonOpts& opts) {
    Graph g = load_graph_argument(graph_arg);
    CountPolynomial p =
        accurate ? accurate_polynomial(g, opts.sweep()) : domination_polynomial(g, opts.sweep());
    if (opts.format == "json") {
        ordered_json j{{"graph", graph_arg}, {"accurate", accurate}};
        auto& arr = j["coeffs"] = ordered_json::array();
        for (const Count& c : p.coeffs) arr.push_back(c.str());
        emit(j.dump());
    } else if (opts.format == "csv") {
        emit("i,count");
        for (std::size_t i = 0; i < p.coeffs.size(); ++i)
            emit(std::to_string(i) + "," + p.coeffs[i].str());
    } else {
        emit(p.to_string());
    }
    return kExitOk;
}

int run_table(const std::string& family, int n_max, const std::string& cache_path,
              std::uint64_t seed, const CommonOpts& opts) {
    auto kind = family == "path" ? DominationTable::Kind::path : DominationTable::Kind::cycle;
    std::optional<DominationTable> table;
    TableCache cache;
    if (!cache_path.empty()) {
        if (auto loaded = TableCache::load(cache_path)) {
            cache = *loaded;
            if (auto cached = cache.table(kind, n_max)) {
                if (validate_cached_table(*cached, seed)) {
                    table = std::move(cached);
                } else {
                    std::cerr << "warning: cache '" << cache_path
                              << "' failed row validation, regenerating\n";
                    cache.rows.erase(family);
                }
            }
        } else if (std::ifstream(cache_path).good()) {
            std::cerr << "warning: cache '" << cache_path << "' is corrupt, regenerating\n";
        }
    }
    if (!table) {
        table = kind == DominationTable::Kind::path ? DominationTable::paths(n_max)
                                                    : DominationTable::cycles(n_max);
        if (!cache_path.empty()) {
            cache.store(*table);
            cache.save(cache_path);
        }
    }

    int lo = kind == DominationTable::Kind::path ? 1 : 3;
    if (opts.format == "json") {
        ordered_json j{{"family", family}, {"n_max", n_max}};
        auto& rows = j["rows"] = ordered_json::object();
        for (int n = lo; n <= n_max; ++n) {
            auto& arr = rows[std::to_string(n)] = ordered_json::array();
            for (const Count& c : table->row(n)) arr.push_back(c.str());
        }
        emit(j.dump());
    } else {
        std::cout << "family,n,i,count\n";
        for (int n = lo; n <= n_max; ++n) {
            const auto& row = table->row(n);
            for (std::size_t i = 0; i < row.size(); ++i)
                std::cout << family << ',' << n << ',' << i << ',' << row[i] << '\n';
        }
    }
    return kExitOk;
}

void print_report_human(const AuditReport& report) {
    std::cout << "subject: " << report.subject << "\ndomain:  " << report.domain << '\n';
    for (auto [v, c] : report.summary)
        std::cout << "  " << verdict_name(v) << ": " << c << '\n';
    for (const auto& note : report.notes) std::cout << "note: " << note << '\n';
    auto expected = report.expected_violations;
    for (const auto& r : report.records)
        if (r.verdict == Verdict::violation) {
            bool known = std::find(expected.begin(), expected.end(), r.point) != expected.end() ||
                         violations_expected_everywhere(report.subject);
            std::cout << "violation at " << r.point.to_string() << ": printed "
                      << r.printed_value << ", oracle " << r.oracle_value
                      << (known ? " [known finding]" : " [UNEXPECTED]") << '\n';
        }
    std::cout << (report.clean() ? "verdicts as expected\n" : "UNEXPECTED AUDIT OUTCOME\n");
}

int run_audit(const std::string& formula, const std::string& bound, bool threshold_audit,
              bool cycle_consecutive, bool path_vs_cycle, bool llano_cycle,
              const std::string& range_text, int random_count, std::uint64_t seed,
              const std::string& out_path, bool with_records, const CommonOpts& opts) {
    if (opts.format == "csv") throw parse_error("audit reports are human or json only");
    Auditor auditor(opts.sweep());
    std::optional<AuditReport> report;

    if (!formula.empty()) {
        auto id = parse_formula_id(formula);
        if (!id) throw parse_error("unknown formula id '" + formula + "'");
        AuditRange range = default_formula_range(*id);
        if (!range_text.empty()) {
            NRange r = parse_n_range(range_text);
            range = {r.lo, r.hi};
        }
        report = auditor.audit_formula(*id, range);
    } else if (!bound.empty()) {
        auto id = parse_bound_id(bound);
        if (!id) throw parse_error("unknown bound id '" + bound + "'");
        AuditRange range = default_bound_range(*id);
        if (!range_text.empty()) {
            NRange r = parse_n_range(range_text);
            range = {r.lo, r.hi};
        }
        report = auditor.audit_bound(*id, range);
    } else if (threshold_audit) {
        int max_order = 12;
        if (!range_text.empty()) max_order = parse_n_range(range_text).hi;
        auto corpus = family_corpus(max_order);
        if (random_count > 0)
            for (auto& cg : random_corpus(seed, random_count, 5, 10))
                corpus.push_back(std::move(cg));
        report = auditor.audit_threshold_equality(corpus);
    } else if (cycle_consecutive) {
        AuditRange range{6, 14};
        if (!range_text.empty()) {
            NRange r = parse_n_range(range_text);
            range = {r.lo, r.hi};
        }
        report = auditor.audit_cycle_consecutive(range);
    } else if (path_vs_cycle) {
        AuditRange range{3, 14};
        if (!range_text.empty()) {
            NRange r = parse_n_range(range_text);
            range = {r.lo, r.hi};
        }
        report = auditor.audit_path_vs_cycle(range);
    } else if (llano_cycle) {
        AuditRange range{3, 14};
        if (!range_text.empty()) {
            NRange r = parse_n_range(range_text);
            range = {r.lo, r.hi};
        }
        report = auditor.resolve_llano_cycle_interpretation(range);
    } else {
        throw parse_error("audit needs one of --formula, --bound, --threshold, "
                          "--cycle-consecutive, --path-vs-cycle, --llano-cycle");
    }

    std::string json = report_to_json(*report, with_records);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw input_error("cannot write '" + out_path + "'");
        out << json << '\n';
    }
    if (opts.format == "human")
        print_report_human(*report);
    else
        emit(json);
    return report->clean() ? kExitOk : kExitUnexpectedFinding;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration and formula auditing for accurate dominating sets"};
    app.require_subcommand(1);

    CommonOpts opts;

    std::string graph_arg;
    int size = 0;
    bool accurate = false;

    auto* count_cmd = app.add_subcommand("count", "count (accurate) dominating sets of one size");
    count_cmd->add_option("--graph", graph_arg, "family spec (e.g. path:7, corona:complete:2) or @edge-list-file")
        ->required();
    count_cmd->add_option("--size", size, "set cardinality")->required();
    count_cmd->add_flag("--accurate", accurate, "count accurate dominating sets");
    add_common(count_cmd, opts);

    auto* enum_cmd = app.add_subcommand("enumerate", "list (accurate) dominating sets, 1-indexed");
    enum_cmd->add_option("--graph", graph_arg, "family spec or @edge-list-file")->required();
    enum_cmd->add_option("--size", size, "set cardinality")->required();
    enum_cmd->add_flag("--accurate", accurate, "enumerate accurate dominating sets");
    add_common(enum_cmd, opts);

    auto* poly_cmd = app.add_subcommand("poly", "domination / accurate domination polynomial");
    poly_cmd->add_option("--graph", graph_arg, "family spec or @edge-list-file")->required();
    poly_cmd->add_flag("--accurate", accurate, "accurate domination polynomial");
    add_common(poly_cmd, opts);

    std::string family = "path", cache_path;
    int n_max = 16;
    std::uint64_t seed = 0;
    auto* table_cmd = app.add_subcommand("table", "d(P_n,i) / d(C_n,i) recurrence tables as CSV");
    table_cmd->add_option("--family", family, "path or cycle")
        ->check(CLI::IsMember({"path", "cycle"}))
        ->capture_default_str();
    table_cmd->add_option("--n-max", n_max, "largest n")->check(CLI::PositiveNumber)
        ->capture_default_str();
    table_cmd->add_option("--cache", cache_path, "CSV cache file (read/write)");
    table_cmd->add_option("--seed", seed, "seed for cache row validation")->capture_default_str();
    add_common(table_cmd, opts);

    std::string audit_formula, audit_bound, range_text, out_path;
    bool threshold_audit = false, cycle_consecutive = false, path_vs_cycle = false,
         llano_cycle = false, no_records = false;
    int random_count = 0;
    auto* audit_cmd = app.add_subcommand("audit", "compare printed formulas/bounds to the oracle");
    auto* f_opt = audit_cmd->add_option("--formula", audit_formula, "formula id to audit");
    auto* b_opt = audit_cmd->add_option("--bound", audit_bound, "bound id to audit");
    auto* t_opt = audit_cmd->add_flag("--threshold", threshold_audit,
                                      "d(G,i)=d_a(G,i) for i >= floor(n/2)+1 over a corpus");
    auto* c_opt = audit_cmd->add_flag("--cycle-consecutive", cycle_consecutive,
                                      "every accurate set of C_n with |D|<=n/2 has a 3-run");
    auto* p_opt = audit_cmd->add_flag("--path-vs-cycle", path_vs_cycle,
                                      "d_a(P_n,i) <= d_a(C_n,i) for i >= floor(n/2)");
    auto* l_opt = audit_cmd->add_flag("--llano-cycle", llano_cycle,
                                      "resolve the ambiguous printed cycle formula");
    f_opt->excludes(b_opt)->excludes(t_opt)->excludes(c_opt)->excludes(p_opt)->excludes(l_opt);
    b_opt->excludes(t_opt)->excludes(c_opt)->excludes(p_opt)->excludes(l_opt);
    t_opt->excludes(c_opt)->excludes(p_opt)->excludes(l_opt);
    c_opt->excludes(p_opt)->excludes(l_opt);
    p_opt->excludes(l_opt);
    audit_cmd->add_option("--n", range_text, "parameter range LO..HI (default per subject)");
    audit_cmd->add_option("--random", random_count,
                          "threshold audit: extra seeded random graphs (n in 5..10)");
    audit_cmd->add_option("--seed", seed, "seed for random corpora")->capture_default_str();
    audit_cmd->add_option("--out", out_path, "also write the JSON report to this file");
    audit_cmd->add_flag("--no-records", no_records, "omit per-point records from JSON");
    add_common(audit_cmd, opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*count_cmd) return run_count(graph_arg, size, accurate, opts);
        if (*enum_cmd) return run_enumerate(graph_arg, size, accurate, opts);
        if (*poly_cmd) return run_poly(graph_arg, accurate, opts);
        if (*table_cmd) return run_table(family, n_max, cache_path, seed, opts);
        if (*audit_cmd)
            return run_audit(audit_formula, audit_bound, threshold_audit, cycle_consecutive,
                             path_vs_cycle, llano_cycle, range_text, random_count, seed,
                             out_path, !no_records, opts);
    } catch (const capacity_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
