#include "doctest.h"

#include "cwb/stirling.hpp"

using namespace cwb::stirling;

namespace {

Poly ints(std::initializer_list<long> v) {
    Poly p;
    for (long x : v) p.push_back(x);
    return p;
}

Poly strs(std::initializer_list<const char*> v) {
    Poly p;
    for (const char* x : v) p.emplace_back(x);
    return p;
}

Poly multiply(const Poly& a, const Poly& b) {
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

}  // namespace

TEST_CASE("examples") {
    CHECK(assoc_stirling(3, 1, 2) == 2);
    CHECK(assoc_stirling(4, 2, 2) == 3);
    for (int n = 0; n <= 12; ++n) CHECK(assoc_stirling(n, n, 1) == 1);
    CHECK(assoc_stirling(0, 0, 3) == 1);
    CHECK(assoc_stirling(5, 2, 3) == 0);
    CHECK(assoc_stirling(3, 4, 1) == 0);
    CHECK(rth_order(2, 1, 2) == 2);
    CHECK(rth_order(1, 1, 3) == 2);
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) CHECK(rth_order(n, k, 1) == assoc_stirling(n, k, 1));
}

TEST_CASE("recurrence agrees with enumeration of S_n for n <= 8, r <= 4") {
    for (int r = 1; r <= 4; ++r) {
        const auto t = assoc_table(8, r);
        for (int n = 0; n <= 8; ++n) CHECK(enumerate_row(n, r) == t.values[static_cast<std::size_t>(n)]);
    }
    CHECK(enumerate_row(8, 2) == ints({0, 5040, 7308, 2380, 105, 0, 0, 0, 0}));
    CHECK_THROWS_AS(enumerate_row(11, 1), cwb::LimitExceeded);
}

TEST_CASE("frozen values from the exponential formula") {
    const auto row = assoc_table(20, 3).values[20];
    const Poly expected = strs({"0", "121645100408832000", "235937061364838400", "146766506654753280",
                                "35434013965099776", "3015336422498400", "55795720780800"});
    for (std::size_t k = 0; k < row.size(); ++k) CHECK(row[k] == (k < expected.size() ? expected[k] : mpz_class(0)));
    CHECK(cycle_poly(3, 5) == ints({0, 720, 38304, 859320, 9609600, 44844800}));
    CHECK(cycle_poly(2, 10) == ints({0, 3628800, 76998240, 647536032, 2920525608, 7934927000, 13642629000, 14980405440,
                                     10199989800, 3928374450, 654729075}));
}

TEST_CASE("row sums") {
    const auto t1 = assoc_table(20, 1);
    mpz_class fact = 1;
    for (int n = 0; n <= 20; ++n) {
        if (n) fact *= n;
        mpz_class s = 0;
        for (const auto& v : t1.values[static_cast<std::size_t>(n)]) s += v;
        CHECK(s == fact);
    }
    // fixed-point-free permutations by inclusion-exclusion
    const auto t2 = assoc_table(12, 2);
    for (int n = 0; n <= 12; ++n) {
        mpz_class d = 0, f = 1, term;
        for (int i = 1; i <= n; ++i) f *= i;
        mpz_class fi = 1;
        for (int i = 0; i <= n; ++i) {
            if (i) fi *= i;
            term = f / fi;
            d += i % 2 ? -term : term;
        }
        mpz_class s = 0;
        for (const auto& v : t2.values[static_cast<std::size_t>(n)]) s += v;
        CHECK(s == d);
    }
}

TEST_CASE("cycle polynomials") {
    CHECK(cycle_poly(1, 3) == ints({0, 2, 3, 1}));
    for (int n = 1; n <= 12; ++n) {
        Poly rising = ints({1});
        for (int i = 0; i < n; ++i) rising = multiply(rising, ints({i, 1}));
        CHECK(cycle_poly(1, n) == rising);
    }
    for (int r = 1; r <= 5; ++r) CHECK(cycle_poly(r, 0) == ints({1}));
    for (int n = 1; n <= 15; ++n) {
        const auto c = cycle_poly(2, n);
        CHECK(c[0] == 0);
        for (const auto& x : c) CHECK(x >= 0);
    }
    // the row recurrence matches the index shift into the associated table
    for (int r = 1; r <= 5; ++r) {
        const auto rows = cycle_poly_rows(r, 9);
        for (int n = 0; n <= 9; ++n)
            for (int k = 0; k <= n; ++k) CHECK(rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] == rth_order(n, k, r));
    }
}

TEST_CASE("log-concavity") {
    CHECK(is_log_concave(ints({1, 2, 1})).holds);
    const auto bad = is_log_concave(ints({1, 1, 2}));
    CHECK_FALSE(bad.holds);
    CHECK(bad.index == 1);
    CHECK_FALSE(is_log_concave(ints({1, 0, 1})).holds);
    CHECK(is_log_concave(ints({0, 0, 3, 4, 1, 0})).holds);
    CHECK(is_log_concave({}).holds);
}

TEST_CASE("real roots") {
    CHECK(is_real_rooted(ints({1, 2, 1})));
    CHECK_FALSE(is_real_rooted(ints({1, 0, 1})));
    CHECK(is_real_rooted(ints({5})));
    CHECK(is_real_rooted(ints({0, 0, 1})));
    const auto r = real_roots(ints({-2, 0, 1, 0, 0}));  // x^2 - 2 written with trailing zeros
    CHECK(r.distinct_real == 2);
    CHECK(r.real_rooted);
    // (x-1)^2 (x^2+1) has a double real root and two complex roots
    const auto m = real_roots(multiply(ints({1, -2, 1}), ints({1, 0, 1})));
    CHECK(m.distinct_real == 1);
    CHECK(m.squarefree_degree == 3);
    CHECK_FALSE(m.real_rooted);
    CHECK(is_real_rooted(multiply(ints({1, -2, 1}), ints({-3, 1}))));
    CHECK_THROWS_AS(real_roots(ints({0, 0})), cwb::InvalidInput);
    const auto c1 = real_roots(cycle_poly(1, 12));
    CHECK(c1.distinct_real == 12);
    CHECK(c1.real_rooted);
}

TEST_CASE("sweeps") {
    CHECK(real_rootedness_sweep(1, 25).holds);
    CHECK(real_rootedness_sweep(2, 25).holds);
    const auto lc = log_concavity_sweep(3, 60, 2);
    CHECK(lc.holds);
    CHECK_FALSE(lc.first_failure.has_value());
    // real-rooted rows are log-concave (Newton)
    for (int r = 1; r <= 4; ++r)
        for (const auto& row : cycle_poly_rows(r, 20))
            if (is_real_rooted(row)) CHECK(is_log_concave(row).holds);
}

TEST_CASE("csv export") {
    CHECK(assoc_table(3, 1).csv() == "1\n0,1\n0,1,1\n0,2,3,1\n");
}
