#pragma once

// Memoized d(P_n,i) / d(C_n,i) tables.  Base rows come from the exhaustive
// oracle (P1..P3, C3..C5); everything above is extended by the recurrence
// d(G_n,i) = d(G_{n-1},i-1) + d(G_{n-2},i-1) + d(G_{n-3},i-1).
//
// Degenerate-index conventions for paths, needed by the bound sums:
//   d(P_n, i) = 0 for n < 0, i < 0 or i > n;  d(P_0, 0) = 1.
// These make the sharpness arithmetic in the paper's remarks come out
// exactly.

#include "accdom/count.hpp"
#include "accdom/errors.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace accdom {

class DominationTable {
public:
    enum class Kind { path, cycle };

    static DominationTable paths(int n_max);
    static DominationTable cycles(int n_max);  // n_max >= 3

    Kind kind() const { return kind_; }
    int n_max() const {
        return kind_ == Kind::path ? static_cast<int>(rows_.size()) - 1
                                   : static_cast<int>(rows_.size()) + 2;
    }

    // Applies the conventions above; cycle lookups below n=3 are a domain
    // error (the recurrence never reaches them).
    Count at(long long n, long long i) const;

    const std::vector<Count>& row(int n) const;

    bool operator==(const DominationTable&) const = default;

private:
    friend struct TableCache;

    DominationTable(Kind k, std::vector<std::vector<Count>> rows)
        : kind_(k), rows_(std::move(rows)) {}

    Kind kind_;
    std::vector<std::vector<Count>> rows_;  // path: rows_[n]; cycle: rows_[n-3]
};

const char* table_kind_name(DominationTable::Kind k);

// CSV cache, header "family,n,i,count", exact decimal integers.  One file
// may hold rows for both families.
struct TableCache {
    std::map<std::string, std::map<int, std::vector<Count>>> rows;  // family -> n -> row

    static std::optional<TableCache> load(const std::string& path);  // nullopt: unreadable/corrupt
    void store(const DominationTable& t);
    std::optional<DominationTable> table(DominationTable::Kind k, int n_max) const;
    void save(const std::string& path) const;
    void write_csv(std::ostream& out) const;
};

// Cache rows are trusted only after two seeded-random rows of the requested
// family recompute to the same values.
bool validate_cached_table(const DominationTable& cached, std::uint64_t seed);

}  // namespace accdom
