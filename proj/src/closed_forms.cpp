#include "accdom/closed_forms.hpp"

#include <cmath>

namespace accdom {

const char* formula_name(FormulaId id) {
    switch (id) {
        case FormulaId::gamma_a_complete: return "gamma_a_complete";
        case FormulaId::gamma_a_complete_bipartite_equal: return "gamma_a_complete_bipartite_equal";
        case FormulaId::gamma_a_complete_bipartite_unequal:
            return "gamma_a_complete_bipartite_unequal";
        case FormulaId::gamma_a_cycle: return "gamma_a_cycle";
        case FormulaId::gamma_a_path: return "gamma_a_path";
        case FormulaId::gamma_a_ladder: return "gamma_a_ladder";
        case FormulaId::gamma_a_book: return "gamma_a_book";
        case FormulaId::gamma_a_hypercube: return "gamma_a_hypercube";
        case FormulaId::gamma_a_friendship: return "gamma_a_friendship";
        case FormulaId::gamma_a_corona: return "gamma_a_corona";
        case FormulaId::d_a_book: return "d_a_book";
        case FormulaId::d_a_hypercube: return "d_a_hypercube";
        case FormulaId::d_a_friendship_printed: return "d_a_friendship_printed";
        case FormulaId::d_a_corona_count: return "d_a_corona_count";
        case FormulaId::corona_poly_printed: return "corona_poly_printed";
        case FormulaId::corona_poly_corrected: return "corona_poly_corrected";
        case FormulaId::llano_path: return "llano_path";
        case FormulaId::llano_cycle_sum: return "llano_cycle_sum";
        case FormulaId::llano_cycle_product: return "llano_cycle_product";
        case FormulaId::llano_cycle_difference: return "llano_cycle_difference";
        case FormulaId::path_recurrence: return "path_recurrence";
        case FormulaId::cycle_recurrence: return "cycle_recurrence";
        case FormulaId::threshold: return "threshold";
    }
    return "?";
}

const char* bound_name(BoundId id) {
    switch (id) {
        case BoundId::path_lower: return "path_lower";
        case BoundId::path_upper: return "path_upper";
        case BoundId::path_lower_alt: return "path_lower_alt";
        case BoundId::cycle_lower: return "cycle_lower";
        case BoundId::cycle_upper: return "cycle_upper";
        case BoundId::cycle_recursive_lower: return "cycle_recursive_lower";
        case BoundId::path_vs_cycle: return "path_vs_cycle";
    }
    return "?";
}

namespace {

constexpr FormulaId kAllFormulas[] = {
    FormulaId::gamma_a_complete,
    FormulaId::gamma_a_complete_bipartite_equal,
    FormulaId::gamma_a_complete_bipartite_unequal,
    FormulaId::gamma_a_cycle,
    FormulaId::gamma_a_path,
    FormulaId::gamma_a_ladder,
    FormulaId::gamma_a_book,
    FormulaId::gamma_a_hypercube,
    FormulaId::gamma_a_friendship,
    FormulaId::gamma_a_corona,
    FormulaId::d_a_book,
    FormulaId::d_a_hypercube,
    FormulaId::d_a_friendship_printed,
    FormulaId::d_a_corona_count,
    FormulaId::corona_poly_printed,
    FormulaId::corona_poly_corrected,
    FormulaId::llano_path,
    FormulaId::llano_cycle_sum,
    FormulaId::llano_cycle_product,
    FormulaId::llano_cycle_difference,
    FormulaId::path_recurrence,
    FormulaId::cycle_recurrence,
    FormulaId::threshold,
};

constexpr BoundId kAllBounds[] = {
    BoundId::path_lower,          BoundId::path_upper,
    BoundId::path_lower_alt,      BoundId::cycle_lower,
    BoundId::cycle_upper,         BoundId::cycle_recursive_lower,
    BoundId::path_vs_cycle,
};

}  // namespace

std::optional<FormulaId> parse_formula_id(const std::string& name) {
    for (FormulaId id : kAllFormulas)
        if (name == formula_name(id)) return id;
    return std::nullopt;
}

std::optional<BoundId> parse_bound_id(const std::string& name) {
    for (BoundId id : kAllBounds)
        if (name == bound_name(id)) return id;
    return std::nullopt;
}

BoundDirection bound_direction(BoundId id) {
    switch (id) {
        case BoundId::path_upper:
        case BoundId::cycle_upper: return BoundDirection::upper;
        default: return BoundDirection::lower;
    }
}

long long threshold(long long n) {
    if (n < 1) throw domain_error("threshold needs n >= 1");
    return n / 2 + 1;
}

namespace {

long long gamma_a_family(const FamilySpec& spec) {
    const long long n = spec.p1;
    switch (spec.family) {
        case Family::complete:
            if (n < 1) throw domain_error("gamma_a(K_n) needs n >= 1");
            return n / 2 + 1;
        case Family::complete_bipartite: {
            long long m = spec.p1, nn = spec.p2;
            if (m < 1 || nn < 1) throw domain_error("gamma_a(K_{m,n}) needs m,n >= 1");
            return m == nn ? nn + 1 : std::min(m, nn);
        }
        case Family::star:
            if (n < 1) throw domain_error("gamma_a(K_{1,n}) needs n >= 1");
            return n == 1 ? 2 : 1;  // K_{m,n} lemma at m=1
        case Family::cycle:
            if (n < 3) throw domain_error("gamma_a(C_n) needs n >= 3");
            return n / 3 - 3 / n + 2;
        case Family::path:
            if (n < 1) throw domain_error("gamma_a(P_n) needs n >= 1");
            if (n == 2) return 2;  // the paper's "unless n in {2,4}";
            if (n == 4) return 3;  // values supplied by the exhaustive oracle
            return (n + 2) / 3;
        case Family::ladder:
            // At n=1 the printed value ceil(1/2)+2 = 3 exceeds the order 2.
            if (n < 2) throw domain_error("gamma_a(L_n) formula valid for n >= 2");
            return (n + 1) / 2 + 2;
        case Family::book:
            if (n < 2) throw domain_error("gamma_a(B_n) formula valid for n >= 2");
            return n == 2 ? 4 : 2;
        case Family::hypercube:
            if (n < 1) throw domain_error("gamma_a(Q_d) needs d >= 1");
            return (1LL << (n - 1)) + 1;
        case Family::friendship:
            // F_1 = K_3, where gamma_a is 2, not the printed 1.
            if (n < 2) throw domain_error("gamma_a(F_n) formula valid for n >= 2");
            return 1;
    }
    throw domain_error("no gamma_a closed form for this family");
}

}  // namespace

long long gamma_a_closed(const GraphSpec& spec) {
    switch (spec.kind) {
        case GraphSpec::Kind::family: return gamma_a_family(spec.family);
        case GraphSpec::Kind::corona: {
            long long n = spec.parts[0].order();
            if (n < 1) throw domain_error("gamma_a(G o K_1) needs |V(G)| >= 1");
            return n + 1;
        }
        default:
            throw domain_error("no gamma_a closed form for spec " + spec.to_string());
    }
}

Count d_a_book(long long n, long long i) {
    if (n < 3) throw domain_error("d_a(B_n,i) is printed for n >= 3");
    if (i == 2) return 1;
    if (3 <= i && 2 * i <= n) return 0;
    throw domain_error("d_a(B_n,i) is printed for i = 2 or 3 <= i <= n/2");
}

Count d_a_hypercube_printed(long long d, long long i) {
    if (d < 1) throw domain_error("d_a(Q_d,i) needs d >= 1");
    long long n = 1LL << d;
    if (i < 0 || i > n) throw domain_error("cardinality out of range for Q_d");
    return binomial(n, i);
}

Count d_a_friendship_printed(long long n, long long i) {
    if (n < 2) throw domain_error("d_a(F_n,i) formula valid for n >= 2 (F_1 = K_3)");
    if (i < 1 || i > 2 * n + 1) throw domain_error("cardinality out of range for F_n");
    return binomial(n, i - n) * pow2(n) + binomial(2 * n, i - 1);
}

Count corona_count(long long n, long long m) {
    if (n < 1) throw domain_error("corona count needs n >= 1");
    if (m < n + 1 || m > 2 * n)
        throw domain_error("corona count is printed for n+1 <= m <= 2n");
    return binomial(n, m - n) * pow2(2 * n - m);
}

CountPolynomial corona_polynomial(long long n, CoronaVariant variant) {
    if (n < 1) throw domain_error("corona polynomial needs n >= 1");
    CountPolynomial p;
    p.coeffs.assign(2 * n + 1, 0);
    for (long long j = 0; j <= n; ++j)  // x^n (x+2)^n = sum_j C(n,j) 2^(n-j) x^(n+j)
        p.coeffs[n + j] = binomial(n, j) * pow2(n - j);
    p.coeffs[n] -= variant == CoronaVariant::printed ? Count(2) : pow2(n);
    return p;
}

Count llano_path_count(long long n, long long k) {
    if (n < 1 || k < 1 || k > n) throw domain_error("llano path formula needs 1 <= k <= n");
    Count total = 0;
    for (long long m = 0; m <= (n - k) / 2 + 1; ++m)
        total += binomial(k - 1, n - k - m) * binomial(n - k - m + 2, m);
    return total;
}

const char* cycle_reading_name(CycleReading r) {
    switch (r) {
        case CycleReading::product: return "product";
        case CycleReading::sum: return "sum";
        case CycleReading::difference: return "difference";
    }
    return "?";
}

Count llano_cycle_count(long long n, long long k, CycleReading reading) {
    if (n < 3 || k < 1 || k > n)
        throw domain_error("llano cycle formula needs n >= 3, 1 <= k <= n");
    Count total = 0;
    for (long long m = 0; m <= (n - k) / 2 + 1; ++m) {
        Count a = binomial(n - k - m + 2, m + 2);
        Count b = binomial(n - k - m, m - 2);
        Count inner = reading == CycleReading::product ? Count(a * b)
                      : reading == CycleReading::sum   ? Count(a + b)
                                                       : Count(a - b);
        total += binomial(k - 1, n - k - m) * inner;
    }
    return total;
}

namespace {

// The theorems state the window ceil(n/3) <= i <= floor(n/2), but the
// paper's own sharpness witnesses evaluate one step above it (P7 with i=4,
// C9 with i=5 in the spec'd examples), so the evaluators accept any
// cardinality and the auditor picks its sweep window.
void check_path_args(int n, int i) {
    if (n < 1 || i < 1 || i > n)
        throw domain_error("path bound needs n >= 1, 1 <= i <= n");
}

Count path_bound_sums(int n, int i, const DominationTable& d) {
    Count total = 0;
    for (int k = 3; k <= i; ++k) total += d.at(n - k, i - k + 1);
    for (int k = 5; k <= i + 1; ++k) total += d.at(n - k, i - k + 2);
    return total;
}

}  // namespace

Count bound_path_lower(int n, int i, const DominationTable& d_paths) {
    check_path_args(n, i);
    return path_bound_sums(n, i, d_paths);
}

Count bound_path_upper(int n, int i, const DominationTable& d_paths,
                       const AccurateCountProvider& d_a_paths) {
    check_path_args(n, i);
    return d_a_paths(n - 2, i - 1) + d_a_paths(n - 3, i - 1) + d_a_paths(n - 4, i - 2) +
           path_bound_sums(n, i, d_paths);
}

Count bound_path_lower_alt(int n, int i, const DominationTable& d_paths) {
    if (n < 4 || i < 2)
        throw domain_error("alternate path bound stated for n >= 4, i >= 2");
    return 2 * d_paths.at(n - 3, i - 2) - d_paths.at(n - 6, i - 4);
}

namespace {

void check_cycle_args(int n, int i) {
    if (n < 6) throw domain_error("cycle bound stated for n >= 6");
    if (i < 1 || i > n) throw domain_error("cardinality out of range");
}

}  // namespace

Count bound_cycle_lower(int n, int i, const DominationTable& d_paths) {
    check_cycle_args(n, i);
    Count total = 0;
    for (int k = 3; k <= i - 1; ++k) total += Count(k + 2) * d_paths.at(n - k - 2, i - k);
    return total;
}

Count bound_cycle_upper(int n, int i, const DominationTable& d_paths) {
    check_cycle_args(n, i);
    Count total = 0;
    for (int k = 3; k <= i - 1; ++k) total += Count(n) * d_paths.at(n - k - 2, i - k);
    return total;
}

Count bound_cycle_recursive(int n, int i, const AccurateCountProvider& d_a_cycles) {
    if (n < 6) throw domain_error("recursive cycle bound stated for n >= 6");
    if (i < 1 || i > n) throw domain_error("cardinality out of range");
    return Count(n - i + 1) * d_a_cycles(n - 1, i - 1);
}

}  // namespace accdom
