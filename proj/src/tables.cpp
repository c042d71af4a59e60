#include "accdom/tables.hpp"

#include "accdom/accurate.hpp"
#include "accdom/domination.hpp"
#include "accdom/graph.hpp"

#include <fstream>
#include <random>
#include <sstream>

namespace accdom {

namespace {

std::vector<Count> oracle_row(Family f, int n) {
    return domination_polynomial(make_family({f, n})).coeffs;
}

std::vector<Count> recurrence_row(const std::vector<std::vector<Count>>& prev,
                                  int n, int base_n) {
    // prev holds rows base_n .. n-1; d(X_n,i) = sum_{k=1..3} d(X_{n-k}, i-1)
    std::vector<Count> row(n + 1, 0);
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= 3; ++k) {
            const auto& r = prev[n - k - base_n];
            if (i - 1 <= n - k) row[i] += r[i - 1];
        }
    return row;
}

}  // namespace

DominationTable DominationTable::paths(int n_max) {
    if (n_max < 1) throw domain_error("path table needs n_max >= 1");
    std::vector<std::vector<Count>> rows;
    rows.push_back({Count(1)});  // P0 row (convention d(P0,0)=1), index 0
    for (int n = 1; n <= std::min(n_max, 3); ++n) rows.push_back(oracle_row(Family::path, n));
    for (int n = 4; n <= n_max; ++n) rows.push_back(recurrence_row(rows, n, 0));
    return DominationTable(Kind::path, std::move(rows));
}

DominationTable DominationTable::cycles(int n_max) {
    if (n_max < 3) throw domain_error("cycle table needs n_max >= 3");
    std::vector<std::vector<Count>> rows;
    for (int n = 3; n <= std::min(n_max, 5); ++n) rows.push_back(oracle_row(Family::cycle, n));
    for (int n = 6; n <= n_max; ++n) rows.push_back(recurrence_row(rows, n, 3));
    return DominationTable(Kind::cycle, std::move(rows));
}

Count DominationTable::at(long long n, long long i) const {
    if (kind_ == Kind::path) {
        if (n < 0) return 0;
        if (i < 0 || i > n) return 0;
        if (n == 0) return i == 0 ? 1 : 0;
        if (n > n_max())
            throw domain_error("path table covers n <= " + std::to_string(n_max()));
        return rows_[n][i];
    }
    if (n < 3) throw domain_error("cycle table has no rows below n=3");
    if (n > n_max()) throw domain_error("cycle table covers n <= " + std::to_string(n_max()));
    if (i < 0 || i > n) return 0;
    return rows_[n - 3][i];
}

const std::vector<Count>& DominationTable::row(int n) const {
    int idx = kind_ == Kind::path ? n : n - 3;
    if (idx < 0 || idx >= static_cast<int>(rows_.size()))
        throw domain_error("table row " + std::to_string(n) + " out of range");
    return rows_[idx];
}

const char* table_kind_name(DominationTable::Kind k) {
    return k == DominationTable::Kind::path ? "path" : "cycle";
}

std::optional<TableCache> TableCache::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line) || line != "family,n,i,count") return std::nullopt;
    TableCache cache;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string family, n_s, i_s, count_s;
        if (!std::getline(row, family, ',') || !std::getline(row, n_s, ',') ||
            !std::getline(row, i_s, ',') || !std::getline(row, count_s))
            return std::nullopt;
        try {
            int n = std::stoi(n_s), i = std::stoi(i_s);
            if (n < 0 || i < 0 || i > n) return std::nullopt;
            if (count_s.empty() ||
                count_s.find_first_not_of("0123456789") != std::string::npos)
                return std::nullopt;
            auto& r = cache.rows[family][n];
            if (r.size() < static_cast<std::size_t>(n + 1)) r.resize(n + 1, 0);
            r[i] = Count(count_s);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    return cache;
}

void TableCache::store(const DominationTable& t) {
    int lo = t.kind() == DominationTable::Kind::path ? 1 : 3;
    auto& per_family = rows[table_kind_name(t.kind())];
    for (int n = lo; n <= t.n_max(); ++n) per_family[n] = t.row(n);
}

std::optional<DominationTable> TableCache::table(DominationTable::Kind k, int n_max) const {
    auto it = rows.find(table_kind_name(k));
    if (it == rows.end()) return std::nullopt;
    int lo = k == DominationTable::Kind::path ? 1 : 3;
    for (int n = lo; n <= n_max; ++n) {
        auto rit = it->second.find(n);
        if (rit == it->second.end() || rit->second.size() != static_cast<std::size_t>(n + 1))
            return std::nullopt;
    }
    std::vector<std::vector<Count>> rws;
    if (k == DominationTable::Kind::path) {
        rws.push_back({Count(1)});
        for (int n = 1; n <= n_max; ++n) rws.push_back(it->second.at(n));
        return DominationTable(k, std::move(rws));
    }
    for (int n = 3; n <= n_max; ++n) rws.push_back(it->second.at(n));
    return DominationTable(k, std::move(rws));
}

void TableCache::write_csv(std::ostream& out) const {
    out << "family,n,i,count\n";
    for (const auto& [family, per_n] : rows)
        for (const auto& [n, row] : per_n)
            for (std::size_t i = 0; i < row.size(); ++i)
                out << family << ',' << n << ',' << i << ',' << row[i] << '\n';
}

void TableCache::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write cache file '" + path + "'");
    write_csv(out);
}

bool validate_cached_table(const DominationTable& cached, std::uint64_t seed) {
    int lo = cached.kind() == DominationTable::Kind::path ? 1 : 3;
    if (cached.n_max() < lo) return false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(lo, cached.n_max());
    int n1 = pick(rng), n2 = pick(rng);
    int top = std::max({n1, n2, lo});
    DominationTable fresh = cached.kind() == DominationTable::Kind::path
                                ? DominationTable::paths(top)
                                : DominationTable::cycles(top);
    return cached.row(n1) == fresh.row(n1) && cached.row(n2) == fresh.row(n2);
}

}  // namespace accdom
