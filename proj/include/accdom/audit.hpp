#pragma once

// Differential testing of every printed formula and bound against the
// exhaustive oracle.  Violations are data, never aborts: each audit sweeps
// its declared domain, records per-point verdicts, and compares observed
// violations against the pre-registered "known findings" (paper statements
// the oracle has already refuted) so CI can tell a confirmed paper
// discrepancy from an implementation regression.

#include "accdom/accurate.hpp"
#include "accdom/closed_forms.hpp"
#include "accdom/count.hpp"
#include "accdom/graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace accdom {

enum class Verdict { match, lower_bound_holds, upper_bound_holds, sharp, violation };

const char* verdict_name(Verdict v);

// Parameter tuple; ordering is lexicographic, which is also sweep order.
struct AuditPoint {
    std::vector<long long> coords;

    auto operator<=>(const AuditPoint&) const = default;
    std::string to_string() const;  // "(7,4)"
};

struct AuditRecord {
    std::string subject;
    AuditPoint point;
    Count printed_value;  // the paper's side (formula or bound value)
    Count oracle_value;
    Verdict verdict;
    Count slack;  // oracle - printed, signed
};

struct AuditReport {
    std::string subject;
    std::string domain;  // human description of the swept ranges
    std::vector<AuditRecord> records;
    std::map<Verdict, std::size_t> summary;
    std::optional<AuditPoint> first_violation;
    std::vector<AuditPoint> expected_violations;  // known findings inside the domain
    std::vector<std::string> notes;

    std::vector<AuditPoint> violations() const;
    std::vector<AuditPoint> sharp_points() const;
    bool has_sharp_at(const AuditPoint& p) const;

    // True iff the observed violation set equals the expected one (or, for
    // subjects with a blanket expectation, every violation is expected).
    bool clean() const;
};

std::string report_to_json(const AuditReport& report, bool include_records = true);

// --- graph corpora ------------------------------------------------------

struct CorpusGraph {
    std::string label;
    Graph graph;
};

// All 2^C(n,2) labeled graphs on n vertices.
std::vector<Graph> all_labeled_graphs(int n);

// Edge probability 1/2 from a seeded mt19937_64; pairs are drawn in
// lexicographic order so the corpus is reproducible everywhere.
Graph random_graph(std::uint64_t seed, int n);
std::vector<CorpusGraph> random_corpus(std::uint64_t seed, int count, int n_lo, int n_hi);

// Every family instance with order <= max_order.
std::vector<CorpusGraph> family_corpus(int max_order);

// The fixed corona base list used by the corona audits.
std::vector<CorpusGraph> corona_base_list();

// --- auditor ------------------------------------------------------------

struct AuditRange {
    int lo = 0;
    int hi = 0;
};

AuditRange default_formula_range(FormulaId id);
AuditRange default_bound_range(BoundId id);

// Holds memoized oracle polynomials for paths/cycles so repeated audits do
// not recompute sweeps; all public methods are deterministic.
class Auditor {
public:
    explicit Auditor(SweepOptions opt = {}) : opt_(opt) {}

    // Oracle accessors with the degenerate-index conventions.
    Count d_path(long long n, long long i);
    Count da_path(long long n, long long i);
    Count d_cycle(long long n, long long i);
    Count da_cycle(long long n, long long i);

    AuditReport audit_formula(FormulaId id, AuditRange range);
    AuditReport audit_bound(BoundId id, AuditRange range);
    AuditReport audit_threshold_equality(const std::vector<CorpusGraph>& corpus);
    AuditReport audit_cycle_consecutive(AuditRange range);   // 6 <= n <= 14
    AuditReport audit_path_vs_cycle(AuditRange range);       // 3 <= n
    AuditReport resolve_llano_cycle_interpretation(AuditRange range);

private:
    const CountPolynomial& poly(Family f, int n, bool accurate);

    SweepOptions opt_;
    std::map<std::tuple<Family, int, bool>, CountPolynomial> cache_;
};

// Pre-registered oracle findings: true iff the printed statement behind
// `subject` is known (oracle-verified) to fail at this parameter point.
// Rules are exact over their verified frontier, which covers everything the
// sweep guard admits; beyond it nothing is registered, so new violations
// there surface as unexpected.
bool violations_expected_everywhere(const std::string& subject);
bool expected_violation_at(const std::string& subject, const AuditPoint& point);

}  // namespace accdom
