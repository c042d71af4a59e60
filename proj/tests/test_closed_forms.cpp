#include "accdom/closed_forms.hpp"

#include "accdom/accurate.hpp"

#include <doctest.h>

using namespace accdom;

namespace {

GraphSpec spec(const std::string& text) { return parse_family_spec(text); }

AccurateCountProvider oracle_da_paths() {
    return [](long long n, long long i) -> Count {
        if (n < 0 || i < 0 || i > n) return 0;
        if (n == 0) return i == 0 ? 1 : 0;
        return count_accurate(make_family({Family::path, static_cast<int>(n)}),
                              static_cast<int>(i));
    };
}

AccurateCountProvider oracle_da_cycles() {
    return [](long long n, long long i) -> Count {
        if (i < 0 || i > n) return 0;
        return count_accurate(make_family({Family::cycle, static_cast<int>(n)}),
                              static_cast<int>(i));
    };
}

}  // namespace

TEST_CASE("threshold") {
    CHECK(threshold(5) == 3);
    CHECK(threshold(6) == 4);
    CHECK(threshold(7) == 4);
    CHECK_THROWS_AS(threshold(0), domain_error);
}

TEST_CASE("gamma_a closed forms at the paper's spot values") {
    CHECK(gamma_a_closed(spec("complete:7")) == 4);
    CHECK(gamma_a_closed(spec("path:2")) == 2);
    CHECK(gamma_a_closed(spec("path:4")) == 3);
    CHECK(gamma_a_closed(spec("path:5")) == 2);
    CHECK(gamma_a_closed(spec("cycle:3")) == 2);
    CHECK(gamma_a_closed(spec("cycle:6")) == 4);
    CHECK(gamma_a_closed(spec("complete_bipartite:3:3")) == 4);
    CHECK(gamma_a_closed(spec("complete_bipartite:2:5")) == 2);
    CHECK(gamma_a_closed(spec("star:4")) == 1);
    CHECK(gamma_a_closed(spec("star:1")) == 2);
    CHECK(gamma_a_closed(spec("ladder:2")) == 3);
    CHECK(gamma_a_closed(spec("book:2")) == 4);
    CHECK(gamma_a_closed(spec("book:5")) == 2);
    CHECK(gamma_a_closed(spec("hypercube:3")) == 5);
    CHECK(gamma_a_closed(spec("friendship:3")) == 1);
    CHECK(gamma_a_closed(spec("corona:complete:2")) == 3);
    CHECK(gamma_a_closed(spec("corona:cycle:5")) == 6);
}

TEST_CASE("gamma_a closed-form domain errors") {
    CHECK_THROWS_AS(gamma_a_closed(spec("ladder:1")), domain_error);
    CHECK_THROWS_AS(gamma_a_closed(spec("friendship:1")), domain_error);
    CHECK_THROWS_AS(gamma_a_closed(spec("book:1")), domain_error);
    CHECK_THROWS_AS(gamma_a_closed(spec("join:complete:1:cycle:5")), domain_error);
}

TEST_CASE("gamma_a closed forms match the oracle on small instances") {
    for (int n = 1; n <= 9; ++n)
        CHECK(gamma_a_closed(spec("complete:" + std::to_string(n))) ==
              gamma_a(make_family({Family::complete, n})));
    for (int n = 3; n <= 10; ++n)
        CHECK(gamma_a_closed(spec("cycle:" + std::to_string(n))) ==
              gamma_a(make_family({Family::cycle, n})));
    for (int n = 1; n <= 10; ++n)
        CHECK(gamma_a_closed(spec("path:" + std::to_string(n))) ==
              gamma_a(make_family({Family::path, n})));
    for (int n = 2; n <= 5; ++n)
        CHECK(gamma_a_closed(spec("ladder:" + std::to_string(n))) ==
              gamma_a(make_family({Family::ladder, n})));
}

TEST_CASE("book counts as printed") {
    CHECK(d_a_book(5, 2) == 1);
    CHECK(d_a_book(8, 4) == 0);
    CHECK_THROWS_AS(d_a_book(5, 3), domain_error);  // 3 > 5/2
    CHECK_THROWS_AS(d_a_book(2, 2), domain_error);
}

TEST_CASE("friendship count as printed") {
    CHECK(d_a_friendship_printed(2, 1) == 1);  // C(2,-1)*4 + C(4,0)
    CHECK(d_a_friendship_printed(2, 2) == 8);  // C(2,0)*4 + C(4,1); oracle says 0
    CHECK_THROWS_AS(d_a_friendship_printed(1, 1), domain_error);
}

TEST_CASE("hypercube count as printed") {
    CHECK(d_a_hypercube_printed(3, 5) == 56);
    CHECK(d_a_hypercube_printed(6, 32) == Count("1832624140942590534"));
}

TEST_CASE("corona count formula") {
    CHECK(corona_count(2, 3) == 4);
    CHECK(corona_count(2, 4) == 1);
    CHECK(count_accurate(corona_k1(make_family({Family::complete, 2})), 3) == 4);
    CHECK_THROWS_AS(corona_count(2, 2), domain_error);
    CHECK_THROWS_AS(corona_count(2, 5), domain_error);
}

TEST_CASE("corona polynomial variants") {
    CHECK(corona_polynomial(1, CoronaVariant::printed).coeffs ==
          std::vector<Count>{0, 0, 1});
    CHECK(corona_polynomial(1, CoronaVariant::corrected).coeffs ==
          std::vector<Count>{0, 0, 1});
    CHECK(corona_polynomial(2, CoronaVariant::printed).coeffs ==
          std::vector<Count>{0, 0, 2, 4, 1});
    CHECK(corona_polynomial(2, CoronaVariant::corrected).coeffs ==
          std::vector<Count>{0, 0, 0, 4, 1});
    CHECK(corona_polynomial(2, CoronaVariant::corrected).coeffs ==
          accurate_polynomial(make_family({Family::path, 4})).coeffs);
}

TEST_CASE("llano path formula") {
    CHECK(llano_path_count(4, 2) == 4);
    CHECK(llano_path_count(5, 2) == 3);
    for (int n = 1; n <= 16; ++n) CHECK(llano_path_count(n, n) == 1);
    CHECK_THROWS_AS(llano_path_count(4, 0), domain_error);
}

TEST_CASE("llano cycle readings at the paper's degenerate points") {
    CHECK(llano_cycle_count(3, 1, CycleReading::product) == 0);
    CHECK(llano_cycle_count(3, 1, CycleReading::sum) == 1);
    CHECK(llano_cycle_count(3, 1, CycleReading::difference) == -1);
    for (int n = 3; n <= 12; ++n) {
        CHECK(llano_cycle_count(n, n, CycleReading::sum) == 1);
        CHECK(llano_cycle_count(n, n, CycleReading::difference) == 1);
        CHECK(llano_cycle_count(n, n, CycleReading::product) == 0);
    }
}

TEST_CASE("path bounds at the paper's sharpness witnesses") {
    DominationTable table = DominationTable::paths(16);
    auto da = oracle_da_paths();

    CHECK(bound_path_upper(7, 4, table, da) == 22);  // sharp: d_a(P7,4)=22
    CHECK(bound_path_lower(7, 4, table) == 7);
    CHECK(bound_path_lower(6, 3, table) == 1);
    CHECK(bound_path_lower(9, 3, table) == 0);

    CHECK(bound_path_lower_alt(6, 3, table) == 2);  // sharp: {1,2,5},{2,5,6}
    CHECK(bound_path_lower_alt(7, 4, table) == 8);
    CHECK(bound_path_lower_alt(9, 3, table) == 0);

    CHECK_THROWS_AS(bound_path_lower(7, 0, table), domain_error);
    CHECK_THROWS_AS(bound_path_lower(7, 8, table), domain_error);
    CHECK_THROWS_AS(bound_path_lower_alt(3, 2, table), domain_error);
}

TEST_CASE("cycle bounds at the paper's witnesses") {
    DominationTable table = DominationTable::paths(16);
    auto da_c = oracle_da_cycles();

    CHECK(bound_cycle_lower(10, 5, table) == 15);  // 5*d(P5,2) + 6*d(P4,1)
    CHECK(bound_cycle_upper(10, 5, table) == 30);  // sharp at C10
    CHECK(bound_cycle_recursive(10, 5, da_c) == 0);   // 6*d_a(C9,4) = 0
    CHECK(bound_cycle_recursive(10, 10, da_c) == 1);  // sharp at i=n
    CHECK(bound_cycle_recursive(8, 4, da_c) == 0);    // 5*d_a(C7,3) = 0

    CHECK_THROWS_AS(bound_cycle_lower(5, 3, table), domain_error);
    CHECK_THROWS_AS(bound_cycle_upper(10, 11, table), domain_error);
    CHECK_THROWS_AS(bound_cycle_recursive(5, 2, da_c), domain_error);
}

TEST_CASE("formula and bound id name round trip") {
    CHECK(parse_formula_id("corona_poly_printed") == FormulaId::corona_poly_printed);
    CHECK(parse_formula_id("nonsense") == std::nullopt);
    CHECK(parse_bound_id("path_upper") == BoundId::path_upper);
    CHECK(bound_direction(BoundId::path_upper) == BoundDirection::upper);
    CHECK(bound_direction(BoundId::cycle_recursive_lower) == BoundDirection::lower);
}
