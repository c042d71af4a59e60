#include "accdom/audit.hpp"

#include "accdom/subset_sweep.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>
#include <sstream>

namespace accdom {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::match: return "match";
        case Verdict::lower_bound_holds: return "lower_bound_holds";
        case Verdict::upper_bound_holds: return "upper_bound_holds";
        case Verdict::sharp: return "sharp";
        case Verdict::violation: return "violation";
    }
    return "?";
}

std::string AuditPoint::to_string() const {
    std::string s = "(";
    for (std::size_t j = 0; j < coords.size(); ++j) {
        if (j) s += ',';
        s += std::to_string(coords[j]);
    }
    return s + ")";
}

std::vector<AuditPoint> AuditReport::violations() const {
    std::vector<AuditPoint> out;
    for (const auto& r : records)
        if (r.verdict == Verdict::violation) out.push_back(r.point);
    return out;
}

std::vector<AuditPoint> AuditReport::sharp_points() const {
    std::vector<AuditPoint> out;
    for (const auto& r : records)
        if (r.verdict == Verdict::sharp) out.push_back(r.point);
    return out;
}

bool AuditReport::has_sharp_at(const AuditPoint& p) const {
    for (const auto& r : records)
        if (r.verdict == Verdict::sharp && r.point == p) return true;
    return false;
}

bool AuditReport::clean() const {
    if (violations_expected_everywhere(subject)) return true;
    auto got = violations();
    auto want = expected_violations;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    return got == want;
}

namespace {

AuditReport finalize(std::string subject, std::string domain,
                     std::vector<AuditRecord> records,
                     std::vector<std::string> notes = {}) {
    AuditReport report;
    report.subject = std::move(subject);
    report.domain = std::move(domain);
    report.records = std::move(records);
    report.notes = std::move(notes);
    for (const auto& r : report.records) {
        ++report.summary[r.verdict];
        if (r.verdict == Verdict::violation && !report.first_violation)
            report.first_violation = r.point;
    }
    if (!violations_expected_everywhere(report.subject))
        for (const auto& r : report.records)
            if (expected_violation_at(report.subject, r.point))
                report.expected_violations.push_back(r.point);
    return report;
}

AuditRecord formula_record(const std::string& subject, AuditPoint point,
                           Count printed, Count oracle) {
    Verdict v = printed == oracle ? Verdict::match : Verdict::violation;
    return {subject, std::move(point), printed, oracle, v, oracle - printed};
}

AuditRecord bound_record(const std::string& subject, AuditPoint point,
                         Count bound, Count oracle, BoundDirection dir) {
    Verdict v;
    if (bound == oracle)
        v = Verdict::sharp;
    else if (dir == BoundDirection::lower)
        v = bound < oracle ? Verdict::lower_bound_holds : Verdict::violation;
    else
        v = bound > oracle ? Verdict::upper_bound_holds : Verdict::violation;
    return {subject, std::move(point), bound, oracle, v, oracle - bound};
}

std::string range_str(int lo, int hi) {
    return "n=" + std::to_string(lo) + ".." + std::to_string(hi);
}

// Pre-registered oracle findings: points where the printed statement is
// wrong and an exhaustive-oracle run has confirmed it.  Rules are exact over
// the stated frontier (everything the n<=22 sweep guard admits, unless
// noted); violations beyond a frontier are reported as unexpected because
// nothing is registered there.

// The recursive cycle bound fails at these 69 points (oracle-verified for
// 6 <= n <= 18); it is sharp at i = n.
const std::vector<AuditPoint> kCycleRecursiveFindings = {
    {{6, 4}},   {{6, 5}},   {{7, 5}},   {{7, 6}},   {{8, 5}},   {{8, 6}},
    {{8, 7}},   {{9, 6}},   {{9, 7}},   {{9, 8}},   {{10, 6}},  {{10, 7}},
    {{10, 8}},  {{10, 9}},  {{11, 7}},  {{11, 8}},  {{11, 9}},  {{11, 10}},
    {{12, 7}},  {{12, 8}},  {{12, 9}},  {{12, 10}}, {{12, 11}}, {{13, 7}},
    {{13, 8}},  {{13, 9}},  {{13, 10}}, {{13, 11}}, {{13, 12}}, {{14, 7}},
    {{14, 8}},  {{14, 9}},  {{14, 10}}, {{14, 11}}, {{14, 12}}, {{14, 13}},
    {{15, 8}},  {{15, 9}},  {{15, 10}}, {{15, 11}}, {{15, 12}}, {{15, 13}},
    {{15, 14}}, {{16, 8}},  {{16, 9}},  {{16, 10}}, {{16, 11}}, {{16, 12}},
    {{16, 13}}, {{16, 14}}, {{16, 15}}, {{17, 8}},  {{17, 9}},  {{17, 10}},
    {{17, 11}}, {{17, 12}}, {{17, 13}}, {{17, 14}}, {{17, 15}}, {{17, 16}},
    {{18, 9}},  {{18, 10}}, {{18, 11}}, {{18, 12}}, {{18, 13}}, {{18, 14}},
    {{18, 15}}, {{18, 16}}, {{18, 17}},
};

// The corollary d_a(P_n,i) <= d_a(C_n,i) for i >= floor(n/2) fails exactly
// here for n <= 18, plus the paper's own sub-threshold point (9,3).
const std::vector<AuditPoint> kPathVsCycleFindings = {
    {{3, 1}}, {{5, 2}}, {{6, 3}}, {{7, 3}}, {{9, 3}}, {{9, 4}}, {{11, 5}},
};

}  // namespace

bool violations_expected_everywhere(const std::string& subject) {
    return subject == "llano_cycle_sum" || subject == "llano_cycle_product" ||
           subject == "llano_cycle_difference" ||
           subject == "llano_cycle_interpretation";
}

bool expected_violation_at(const std::string& subject, const AuditPoint& p) {
    if (violations_expected_everywhere(subject)) return true;
    const auto& c = p.coords;
    if (subject == "corona_poly_printed")
        // coefficient of x^n is 2^n - 2 as printed but 0 in truth (n >= 2)
        return c.size() == 2 && c[0] >= 2 && c[1] == c[0];
    if (subject == "d_a_friendship_printed")
        // wrong exactly on n <= i <= 2n; oracle-verified for every n the
        // sweep guard admits (2 <= n <= 10)
        return c.size() == 2 && c[0] >= 2 && c[0] <= 10 && c[1] >= c[0] && c[1] <= 2 * c[0];
    if (subject == "d_a_book")
        // the printed zero range is wrong from n = 6 on: those sets are the
        // two star centers plus i-2 leaves, C(2n, i-2) of them
        return c.size() == 2 && c[0] >= 6 && c[0] <= 10 && c[1] >= 3 && 2 * c[1] <= c[0];
    if (subject == "d_a_hypercube") {
        // C(2^d, i) only counts correctly from max(2^(d-1)+1, 2^d-d) up
        if (c.size() != 2 || c[0] < 1 || c[0] > 4) return false;
        long long lo = std::max((1LL << (c[0] - 1)) + 1, (1LL << c[0]) - c[0]);
        return c[1] >= 1 && c[1] < lo;
    }
    if (subject == "gamma_a_hypercube")
        // gamma_a(Q_4) is 6, not the printed 2^3+1 = 9: N[v] plus the
        // antipode of v is accurate (the complement cannot cover v), and the
        // oracle finds exactly those 16 sets at size 6.  Q_5 is beyond the
        // sweep guard, so d=4 is the registered frontier.
        return c.size() == 1 && c[0] == 4;
    if (subject == "cycle_recursive_lower")
        return std::find(kCycleRecursiveFindings.begin(), kCycleRecursiveFindings.end(), p) !=
               kCycleRecursiveFindings.end();
    if (subject == "path_vs_cycle")
        return std::find(kPathVsCycleFindings.begin(), kPathVsCycleFindings.end(), p) !=
               kPathVsCycleFindings.end();
    return false;
}

std::string report_to_json(const AuditReport& report, bool include_records) {
    nlohmann::ordered_json j;
    j["subject"] = report.subject;
    j["domain"] = report.domain;
    nlohmann::ordered_json summary;
    for (Verdict v : {Verdict::match, Verdict::lower_bound_holds, Verdict::upper_bound_holds,
                      Verdict::sharp, Verdict::violation}) {
        auto it = report.summary.find(v);
        summary[verdict_name(v)] = it == report.summary.end() ? 0 : it->second;
    }
    j["summary"] = summary;
    if (report.first_violation)
        j["first_violation"] = report.first_violation->coords;
    else
        j["first_violation"] = nullptr;
    j["expected_violations"] = nlohmann::ordered_json::array();
    for (const auto& p : report.expected_violations) j["expected_violations"].push_back(p.coords);
    j["clean"] = report.clean();
    j["notes"] = report.notes;
    if (include_records) {
        auto& recs = j["records"] = nlohmann::ordered_json::array();
        for (const auto& r : report.records) {
            nlohmann::ordered_json rec;
            rec["subject"] = r.subject;
            rec["point"] = r.point.coords;
            rec["printed_value"] = r.printed_value.str();
            rec["oracle_value"] = r.oracle_value.str();
            rec["verdict"] = verdict_name(r.verdict);
            rec["slack"] = r.slack.str();
            recs.push_back(rec);
        }
    }
    return j.dump(2);
}

// --- corpora --------------------------------------------------------------

std::vector<Graph> all_labeled_graphs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<Graph> out;
    out.reserve(std::size_t{1} << pairs.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if (mask >> b & 1) edges.push_back(pairs[b]);
        out.push_back(build_graph(n, edges));
    }
    return out;
}

namespace {

Graph random_graph_from(std::mt19937_64& rng, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() & 1) edges.emplace_back(u, v);
    return build_graph(n, edges);
}

}  // namespace

Graph random_graph(std::uint64_t seed, int n) {
    std::mt19937_64 rng(seed);
    return random_graph_from(rng, n);
}

std::vector<CorpusGraph> random_corpus(std::uint64_t seed, int count, int n_lo, int n_hi) {
    std::mt19937_64 rng(seed);
    std::vector<CorpusGraph> out;
    out.reserve(count);
    int span = n_hi - n_lo + 1;
    for (int j = 0; j < count; ++j) {
        int n = n_lo + static_cast<int>(rng() % span);
        Graph g = random_graph_from(rng, n);
        out.push_back({"random:" + std::to_string(j) + ":n=" + std::to_string(n), std::move(g)});
    }
    return out;
}

std::vector<CorpusGraph> family_corpus(int max_order) {
    std::vector<CorpusGraph> out;
    auto add = [&](FamilySpec spec) {
        if (spec.order() <= max_order)
            out.push_back({spec.to_string(), make_family(spec)});
    };
    for (int n = 1; n <= max_order; ++n) add({Family::path, n});
    for (int n = 3; n <= max_order; ++n) add({Family::cycle, n});
    for (int n = 1; n <= max_order; ++n) add({Family::complete, n});
    for (int m = 1; m <= max_order; ++m)
        for (int n = m; m + n <= max_order; ++n) add({Family::complete_bipartite, m, n});
    for (int n = 1; n + 1 <= max_order; ++n) add({Family::star, n});
    for (int n = 1; 2 * n <= max_order; ++n) add({Family::ladder, n});
    for (int n = 1; 2 * (n + 1) <= max_order; ++n) add({Family::book, n});
    for (int d = 1; (1 << d) <= max_order; ++d) add({Family::hypercube, d});
    for (int n = 1; 2 * n + 1 <= max_order; ++n) add({Family::friendship, n});
    return out;
}

std::vector<CorpusGraph> corona_base_list() {
    return {
        {"complete:1", make_family({Family::complete, 1})},
        {"complete:2", make_family({Family::complete, 2})},
        {"path:3", make_family({Family::path, 3})},
        {"complete:3", make_family({Family::complete, 3})},
        {"path:4", make_family({Family::path, 4})},
        {"cycle:4", make_family({Family::cycle, 4})},
    };
}

// --- auditor ---------------------------------------------------------------

AuditRange default_formula_range(FormulaId id) {
    switch (id) {
        case FormulaId::gamma_a_complete: return {1, 12};
        case FormulaId::gamma_a_complete_bipartite_equal:
        case FormulaId::gamma_a_complete_bipartite_unequal: return {2, 12};  // total order
        case FormulaId::gamma_a_cycle: return {3, 14};
        case FormulaId::gamma_a_path: return {1, 14};
        case FormulaId::gamma_a_ladder: return {2, 8};
        case FormulaId::gamma_a_book: return {2, 8};
        case FormulaId::gamma_a_hypercube: return {1, 3};
        case FormulaId::gamma_a_friendship: return {2, 4};
        case FormulaId::gamma_a_corona: return {1, 6};  // fixed base list
        case FormulaId::d_a_book: return {3, 8};
        case FormulaId::d_a_hypercube: return {1, 4};
        case FormulaId::d_a_friendship_printed: return {2, 4};
        case FormulaId::d_a_corona_count: return {1, 6};  // fixed base list
        case FormulaId::corona_poly_printed:
        case FormulaId::corona_poly_corrected: return {1, 3};
        case FormulaId::llano_path: return {1, 16};
        case FormulaId::llano_cycle_sum:
        case FormulaId::llano_cycle_product:
        case FormulaId::llano_cycle_difference: return {3, 14};
        case FormulaId::path_recurrence: return {1, 16};
        case FormulaId::cycle_recurrence: return {3, 14};
        case FormulaId::threshold: return {1, 12};  // max corpus order
    }
    return {1, 12};
}

AuditRange default_bound_range(BoundId id) {
    switch (id) {
        case BoundId::path_lower:
        case BoundId::path_upper: return {1, 14};
        case BoundId::path_lower_alt: return {4, 14};
        case BoundId::cycle_lower:
        case BoundId::cycle_upper:
        case BoundId::cycle_recursive_lower: return {6, 14};
        case BoundId::path_vs_cycle: return {3, 14};
    }
    return {3, 14};
}

const CountPolynomial& Auditor::poly(Family f, int n, bool accurate) {
    auto key = std::make_tuple(f, n, accurate);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Graph g = make_family({f, n});
    CountPolynomial p = accurate ? accurate_polynomial(g, opt_) : domination_polynomial(g, opt_);
    return cache_.emplace(key, std::move(p)).first->second;
}

Count Auditor::d_path(long long n, long long i) {
    if (n < 0 || i < 0 || i > n) return 0;
    if (n == 0) return i == 0 ? 1 : 0;
    return poly(Family::path, static_cast<int>(n), false).coeffs[i];
}

Count Auditor::da_path(long long n, long long i) {
    if (n < 0 || i < 0 || i > n) return 0;
    if (n == 0) return i == 0 ? 1 : 0;
    return poly(Family::path, static_cast<int>(n), true).coeffs[i];
}

Count Auditor::d_cycle(long long n, long long i) {
    if (n < 3) throw domain_error("d(C_n,i) needs n >= 3");
    if (i < 0 || i > n) return 0;
    return poly(Family::cycle, static_cast<int>(n), false).coeffs[i];
}

Count Auditor::da_cycle(long long n, long long i) {
    if (n < 3) throw domain_error("d_a(C_n,i) needs n >= 3");
    if (i < 0 || i > n) return 0;
    return poly(Family::cycle, static_cast<int>(n), true).coeffs[i];
}

namespace {

void check_audit_capacity(int order, const SweepOptions& opt) {
    if (order > opt.guard)
        throw capacity_error("audit domain includes a graph of order " +
                             std::to_string(order) + ", above the sweep guard " +
                             std::to_string(opt.guard));
}

}  // namespace

AuditReport Auditor::audit_formula(FormulaId id, AuditRange range) {
    const std::string subject = formula_name(id);
    std::vector<AuditRecord> records;
    std::vector<std::string> notes;
    std::string domain = range_str(range.lo, range.hi);

    auto gamma_a_family_sweep = [&](Family f, int lo_min) {
        for (int n = std::max(range.lo, lo_min); n <= range.hi; ++n) {
            FamilySpec spec{f, n};
            check_audit_capacity(spec.order(), opt_);
            Count printed = gamma_a_closed(GraphSpec{GraphSpec::Kind::family, spec, {}});
            Count oracle = gamma_a(make_family(spec));
            records.push_back(formula_record(subject, {{n}}, printed, oracle));
        }
    };

    switch (id) {
        case FormulaId::gamma_a_complete: gamma_a_family_sweep(Family::complete, 1); break;
        case FormulaId::gamma_a_cycle: gamma_a_family_sweep(Family::cycle, 3); break;
        case FormulaId::gamma_a_path: gamma_a_family_sweep(Family::path, 1); break;
        case FormulaId::gamma_a_ladder:
            gamma_a_family_sweep(Family::ladder, 2);
            notes.push_back("formula domain starts at n=2: the printed value at n=1 "
                            "(3) exceeds the order of L_1 (2)");
            break;
        case FormulaId::gamma_a_book: gamma_a_family_sweep(Family::book, 2); break;
        case FormulaId::gamma_a_hypercube:
            gamma_a_family_sweep(Family::hypercube, 1);
            if (range.hi >= 4)
                notes.push_back("gamma_a(Q_4) is 6, not the printed 9: N[v] plus the "
                                "antipode of v is an accurate dominating 6-set");
            break;
        case FormulaId::gamma_a_friendship:
            gamma_a_family_sweep(Family::friendship, 2);
            notes.push_back("formula domain starts at n=2: F_1 = K_3 has gamma_a = 2, "
                            "not the printed 1");
            break;

        case FormulaId::gamma_a_complete_bipartite_equal:
            for (int n = 1; 2 * n <= range.hi; ++n) {
                if (2 * n < range.lo) continue;
                check_audit_capacity(2 * n, opt_);
                Count oracle = gamma_a(make_family({Family::complete_bipartite, n, n}));
                records.push_back(formula_record(subject, {{n, n}}, Count(n + 1), oracle));
            }
            domain += " (total order)";
            break;

        case FormulaId::gamma_a_complete_bipartite_unequal:
            for (int m = 1; m <= range.hi; ++m)
                for (int n = m + 1; m + n <= range.hi; ++n) {
                    if (m + n < range.lo) continue;
                    check_audit_capacity(m + n, opt_);
                    Count oracle = gamma_a(make_family({Family::complete_bipartite, m, n}));
                    records.push_back(formula_record(subject, {{m, n}}, Count(m), oracle));
                }
            domain += " (total order)";
            break;

        case FormulaId::gamma_a_corona: {
            auto bases = corona_base_list();
            for (std::size_t idx = 0; idx < bases.size(); ++idx) {
                const Graph& base = bases[idx].graph;
                check_audit_capacity(2 * base.n(), opt_);
                Count oracle = gamma_a(corona_k1(base));
                records.push_back(formula_record(
                    subject, {{static_cast<long long>(idx)}}, Count(base.n() + 1), oracle));
            }
            domain = "fixed corona base list {K1,K2,P3,K3,P4,C4}";
            break;
        }

        case FormulaId::d_a_book:
            for (int n = std::max(range.lo, 3); n <= range.hi; ++n) {
                FamilySpec spec{Family::book, n};
                check_audit_capacity(spec.order(), opt_);
                Graph g = make_family(spec);
                records.push_back(formula_record(subject, {{n, 2}}, d_a_book(n, 2),
                                                 count_accurate(g, 2, opt_)));
                for (int i = 3; 2 * i <= n; ++i)
                    records.push_back(formula_record(subject, {{n, i}}, d_a_book(n, i),
                                                     count_accurate(g, i, opt_)));
            }
            break;

        case FormulaId::d_a_hypercube:
            for (int d = std::max(range.lo, 1); d <= range.hi; ++d) {
                int order = 1 << d;
                check_audit_capacity(order, opt_);
                const auto& da = poly(Family::hypercube, d, true);
                for (int i = 1; i <= order; ++i)
                    records.push_back(formula_record(subject, {{d, i}},
                                                     d_a_hypercube_printed(d, i), da.coeffs[i]));
            }
            notes.push_back("the printed claim carries no i-range; this sweep maps where "
                            "it actually holds");
            break;

        case FormulaId::d_a_friendship_printed:
            for (int n = std::max(range.lo, 2); n <= range.hi; ++n) {
                FamilySpec spec{Family::friendship, n};
                check_audit_capacity(spec.order(), opt_);
                const auto& da = poly(Family::friendship, n, true);
                for (int i = 1; i <= 2 * n + 1; ++i)
                    records.push_back(formula_record(subject, {{n, i}},
                                                     d_a_friendship_printed(n, i), da.coeffs[i]));
            }
            break;

        case FormulaId::d_a_corona_count: {
            auto bases = corona_base_list();
            for (std::size_t idx = 0; idx < bases.size(); ++idx) {
                const Graph& base = bases[idx].graph;
                int n = base.n();
                check_audit_capacity(2 * n, opt_);
                Graph cg = corona_k1(base);
                for (int m = n + 1; m <= 2 * n; ++m)
                    records.push_back(formula_record(subject,
                                                     {{static_cast<long long>(idx), m}},
                                                     corona_count(n, m),
                                                     count_accurate(cg, m, opt_)));
            }
            domain = "fixed corona base list {K1,K2,P3,K3,P4,C4}, m=n+1..2n";
            break;
        }

        case FormulaId::corona_poly_printed:
        case FormulaId::corona_poly_corrected: {
            auto variant = id == FormulaId::corona_poly_printed ? CoronaVariant::printed
                                                                : CoronaVariant::corrected;
            for (int n = std::max(range.lo, 1); n <= range.hi; ++n) {
                check_audit_capacity(2 * n, opt_);
                Graph cg = corona_k1(make_family({Family::path, n}));
                CountPolynomial printed = corona_polynomial(n, variant);
                CountPolynomial oracle = accurate_polynomial(cg, opt_);
                for (int m = 0; m <= 2 * n; ++m)
                    records.push_back(formula_record(subject, {{n, m}}, printed.coeffs[m],
                                                     oracle.coeffs[m]));
            }
            notes.push_back("oracle graph is corona(path:n); the count depends only on the "
                            "order of the base graph");
            break;
        }

        case FormulaId::llano_path:
            for (int n = std::max(range.lo, 1); n <= range.hi; ++n) {
                check_audit_capacity(n, opt_);
                for (int k = 1; k <= n; ++k)
                    records.push_back(formula_record(subject, {{n, k}},
                                                     llano_path_count(n, k), d_path(n, k)));
            }
            break;

        case FormulaId::llano_cycle_sum:
        case FormulaId::llano_cycle_product:
        case FormulaId::llano_cycle_difference: {
            CycleReading reading = id == FormulaId::llano_cycle_sum ? CycleReading::sum
                                   : id == FormulaId::llano_cycle_product
                                       ? CycleReading::product
                                       : CycleReading::difference;
            for (int n = std::max(range.lo, 3); n <= range.hi; ++n) {
                check_audit_capacity(n, opt_);
                for (int k = 1; k <= n; ++k)
                    records.push_back(formula_record(
                        subject, {{n, k}}, llano_cycle_count(n, k, reading), d_cycle(n, k)));
            }
            notes.push_back("no reading of the printed formula matches the oracle; see "
                            "llano_cycle_interpretation");
            break;
        }

        case FormulaId::path_recurrence: {
            DominationTable table = DominationTable::paths(range.hi);
            for (int n = std::max(range.lo, 1); n <= range.hi; ++n) {
                check_audit_capacity(n, opt_);
                for (int i = 0; i <= n; ++i)
                    records.push_back(
                        formula_record(subject, {{n, i}}, table.at(n, i), d_path(n, i)));
            }
            break;
        }

        case FormulaId::cycle_recurrence: {
            DominationTable table = DominationTable::cycles(std::max(range.hi, 3));
            for (int n = std::max(range.lo, 3); n <= range.hi; ++n) {
                check_audit_capacity(n, opt_);
                for (int i = 0; i <= n; ++i)
                    records.push_back(
                        formula_record(subject, {{n, i}}, table.at(n, i), d_cycle(n, i)));
            }
            break;
        }

        case FormulaId::threshold:
            return audit_threshold_equality(family_corpus(range.hi));
    }

    return finalize(subject, domain, std::move(records), std::move(notes));
}

AuditReport Auditor::audit_bound(BoundId id, AuditRange range) {
    if (id == BoundId::path_vs_cycle) return audit_path_vs_cycle(range);

    const std::string subject = bound_name(id);
    const BoundDirection dir = bound_direction(id);
    std::vector<AuditRecord> records;
    std::vector<std::string> notes;
    check_audit_capacity(range.hi, opt_);

    const bool is_path =
        id == BoundId::path_lower || id == BoundId::path_upper || id == BoundId::path_lower_alt;
    DominationTable table = DominationTable::paths(std::max(range.hi, 1));
    AccurateCountProvider da_paths = [this](long long n, long long i) { return da_path(n, i); };
    AccurateCountProvider da_cycles = [this](long long n, long long i) {
        return da_cycle(n, i);
    };

    if (is_path) {
        for (int n = std::max(range.lo, 1); n <= range.hi; ++n) {
            if (id == BoundId::path_lower_alt) {
                if (n < 4) continue;
                for (int i = 2; i <= n; ++i) {
                    Count b = bound_path_lower_alt(n, i, table);
                    if (b < 0)
                        notes.push_back("negative evaluation at " +
                                        AuditPoint{{n, i}}.to_string());
                    records.push_back(bound_record(subject, {{n, i}}, b, da_path(n, i), dir));
                }
            } else {
                for (int i = (n + 2) / 3; i <= n / 2; ++i) {
                    Count b = id == BoundId::path_lower
                                  ? bound_path_lower(n, i, table)
                                  : bound_path_upper(n, i, table, da_paths);
                    records.push_back(bound_record(subject, {{n, i}}, b, da_path(n, i), dir));
                }
                if (id == BoundId::path_upper && n == 7) {
                    // the paper's sharpness witness (P7, i=4) sits one step
                    // above the stated window; record it alongside
                    records.push_back(bound_record(
                        subject, {{7, 4}}, bound_path_upper(7, 4, table, da_paths),
                        da_path(7, 4), dir));
                    notes.push_back("sharpness witness (7,4) lies above the theorem's "
                                    "stated window (floor(7/2)=3) and is recorded alongside");
                }
            }
        }
    } else {
        for (int n = std::max(range.lo, 6); n <= range.hi; ++n) {
            if (id == BoundId::cycle_recursive_lower) {
                for (int i = 1; i <= n; ++i)
                    records.push_back(bound_record(subject, {{n, i}},
                                                   bound_cycle_recursive(n, i, da_cycles),
                                                   da_cycle(n, i), dir));
            } else {
                for (int i = n / 3 + 2; i <= n / 2; ++i) {
                    Count b = id == BoundId::cycle_lower ? bound_cycle_lower(n, i, table)
                                                         : bound_cycle_upper(n, i, table);
                    records.push_back(bound_record(subject, {{n, i}}, b, da_cycle(n, i), dir));
                }
            }
        }
    }

    if (id == BoundId::cycle_recursive_lower)
        notes.push_back("the printed inequality fails at the pre-registered points; the "
                        "insertion construction in its proof double-counts. Sharp at i=n.");

    const char* i_domain = id == BoundId::cycle_recursive_lower ? ", i=1..n"
                           : id == BoundId::path_lower_alt      ? ", i=2..n"
                                                                : ", i in stated window";
    return finalize(subject, range_str(range.lo, range.hi) + i_domain, std::move(records),
                    std::move(notes));
}

AuditReport Auditor::audit_threshold_equality(const std::vector<CorpusGraph>& corpus) {
    std::vector<AuditRecord> records;
    std::vector<std::string> notes;
    for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
        const Graph& g = corpus[idx].graph;
        if (g.n() < 1) continue;
        check_audit_capacity(g.n(), opt_);
        for (int i = static_cast<int>(threshold(g.n())); i <= g.n(); ++i) {
            // pointwise: every dominating set of this size must be accurate
            std::uint64_t dominating = 0, accurate = 0;
            std::uint64_t mask = first_k_subset(i);
            const std::uint64_t total = binomial_u64(g.n(), i);
            for (std::uint64_t r = 0; r < total; ++r) {
                VertexSet d{mask};
                if (is_dominating(g, d)) {
                    ++dominating;
                    if (is_accurate(g, d)) ++accurate;
                }
                mask = next_k_subset(mask);
            }
            auto rec = formula_record("threshold", {{static_cast<long long>(idx), i}},
                                      Count(dominating), Count(accurate));
            if (rec.verdict == Verdict::violation)
                notes.push_back("violation on corpus graph '" + corpus[idx].label + "'");
            records.push_back(std::move(rec));
        }
    }
    return finalize("threshold",
                    "corpus of " + std::to_string(corpus.size()) +
                        " graphs, i >= floor(n/2)+1 (point = corpus index, i)",
                    std::move(records), std::move(notes));
}

AuditReport Auditor::audit_cycle_consecutive(AuditRange range) {
    std::vector<AuditRecord> records;
    for (int n = std::max(range.lo, 6); n <= range.hi; ++n) {
        check_audit_capacity(n, opt_);
        Graph g = make_family({Family::cycle, n});
        for (int i = 1; 2 * i <= n; ++i) {
            long long without_run = 0;
            for (VertexSet d : enumerate_accurate(g, i, opt_)) {
                bool has_run = false;
                for (int v = 0; v < n && !has_run; ++v)
                    has_run = d.contains(v) && d.contains((v + 1) % n) &&
                              d.contains((v + 2) % n);
                if (!has_run) ++without_run;
            }
            // The Observation predicts no accurate set of size <= n/2 lacks a
            // run of three cyclically consecutive vertices.
            records.push_back(
                formula_record("cycle_consecutive", {{n, i}}, 0, Count(without_run)));
        }
    }
    return finalize("cycle_consecutive",
                    range_str(std::max(range.lo, 6), range.hi) +
                        ", i <= n/2 (oracle_value = accurate sets without a 3-run)",
                    std::move(records));
}

AuditReport Auditor::audit_path_vs_cycle(AuditRange range) {
    std::vector<AuditRecord> records;
    std::vector<std::string> notes;
    for (int n = std::max(range.lo, 3); n <= range.hi; ++n) {
        check_audit_capacity(n, opt_);
        if (n == 9)
            // the paper's own sub-threshold counterexample, kept as a record
            records.push_back(bound_record("path_vs_cycle", {{9, 3}}, da_path(9, 3),
                                           da_cycle(9, 3), BoundDirection::lower));
        for (int i = n / 2; i <= n; ++i)
            records.push_back(bound_record("path_vs_cycle", {{n, i}}, da_path(n, i),
                                           da_cycle(n, i), BoundDirection::lower));
    }
    notes.push_back("printed_value = d_a(P_n,i), oracle_value = d_a(C_n,i); the corollary "
                    "claims <= for i >= floor(n/2). (9,3) is the paper's sub-threshold "
                    "counterexample, recorded alongside.");
    return finalize("path_vs_cycle", range_str(std::max(range.lo, 3), range.hi) +
                        ", i >= floor(n/2), plus the sub-threshold point (9,3)",
                    std::move(records), std::move(notes));
}

AuditReport Auditor::resolve_llano_cycle_interpretation(AuditRange range) {
    std::vector<AuditRecord> records;
    std::vector<std::string> notes;
    for (CycleReading reading :
         {CycleReading::product, CycleReading::sum, CycleReading::difference}) {
        std::string subject = std::string("llano_cycle_") + cycle_reading_name(reading);
        long long matches = 0, points = 0;
        std::optional<AuditPoint> first_mismatch;
        Count first_printed = 0, first_oracle = 0;
        for (int n = std::max(range.lo, 3); n <= range.hi; ++n) {
            check_audit_capacity(n, opt_);
            for (int k = 1; k <= n; ++k) {
                Count printed = llano_cycle_count(n, k, reading);
                Count oracle = d_cycle(n, k);
                ++points;
                if (printed == oracle) {
                    ++matches;
                } else if (!first_mismatch) {
                    first_mismatch = AuditPoint{{n, k}};
                    first_printed = printed;
                    first_oracle = oracle;
                }
                records.push_back(formula_record(subject, {{n, k}}, printed, oracle));
            }
        }
        std::ostringstream note;
        note << subject << ": matches " << matches << "/" << points;
        if (first_mismatch)
            note << ", first mismatch at " << first_mismatch->to_string() << " (formula "
                 << first_printed << ", oracle " << first_oracle << ")";
        else
            note << ", matches everywhere";
        notes.push_back(note.str());
    }
    std::sort(records.begin(), records.end(),
              [](const AuditRecord& a, const AuditRecord& b) {
                  return a.point != b.point ? a.point < b.point : a.subject < b.subject;
              });
    return finalize("llano_cycle_interpretation",
                    range_str(std::max(range.lo, 3), range.hi) + ", all k, three readings",
                    std::move(records), std::move(notes));
}

}  // namespace accdom
