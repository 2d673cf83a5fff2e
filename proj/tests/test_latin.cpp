#include "doctest.h"

#include <numeric>

#include "cwb/latin.hpp"

using namespace cwb::latin;

namespace {

// Octuple loop over (r1,r2,c1,c2) x (r1',r2',c1',c2').
std::uint64_t octuple(const LatinSquare& l) {
    const int n = l.order();
    std::uint64_t total = 0;
    for (int r1 = 0; r1 < n; ++r1)
        for (int r2 = 0; r2 < n; ++r2)
            for (int c1 = 0; c1 < n; ++c1)
                for (int c2 = 0; c2 < n; ++c2)
                    for (int s1 = 0; s1 < n; ++s1)
                        for (int d1 = 0; d1 < n; ++d1) {
                            if (l.at(s1, d1) != l.at(r1, c1)) continue;
                            for (int s2 = 0; s2 < n; ++s2) {
                                if (l.at(s2, d1) != l.at(r2, c1)) continue;
                                for (int d2 = 0; d2 < n; ++d2)
                                    total += l.at(s1, d2) == l.at(r1, c2) && l.at(s2, d2) == l.at(r2, c2);
                            }
                        }
    return total;
}

std::vector<LatinSquare> all_squares(int n) {
    std::vector<LatinSquare> out;
    std::vector<int> cells(static_cast<std::size_t>(n * n), -1);
    auto rec = [&](auto&& self, int p) -> void {
        if (p == n * n) {
            out.emplace_back(n, cells);
            return;
        }
        const int i = p / n, j = p % n;
        for (int v = 0; v < n; ++v) {
            bool ok = true;
            for (int k = 0; k < j && ok; ++k) ok = cells[static_cast<std::size_t>(i * n + k)] != v;
            for (int k = 0; k < i && ok; ++k) ok = cells[static_cast<std::size_t>(k * n + j)] != v;
            if (!ok) continue;
            cells[static_cast<std::size_t>(p)] = v;
            self(self, p + 1);
            cells[static_cast<std::size_t>(p)] = -1;
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<int> random_perm(int n, cwb::Rng& rng) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    rng.shuffle(p);
    return p;
}

std::uint64_t pow5(int n) { return static_cast<std::uint64_t>(n) * n * n * n * n; }

// The order-5 square closest to the cyclic table (an 8-cell trade); Z5 has no intercalate.
const LatinSquare kPerturbedZ5(5, {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 3, 4, 0, 1, 3, 4, 1, 2, 0, 4, 2, 0, 1, 3});

}  // namespace

TEST_CASE("validation and parsing") {
    CHECK(is_latin(2, {0, 1, 1, 0}));
    CHECK_FALSE(is_latin(2, {0, 1, 0, 1}));
    CHECK_FALSE(is_latin(2, {0, 1, 1}));
    CHECK_THROWS_AS(LatinSquare(2, {0, 0, 1, 1}), cwb::InvalidInput);
    const auto l = LatinSquare::parse("0 1 2\n1 2 0\n2 0 1\n");
    CHECK(l == LatinSquare::cyclic(3));
    CHECK(LatinSquare::parse(l.str()) == l);
    CHECK_THROWS_AS(LatinSquare::parse("0 1\n1"), cwb::InvalidInput);
    CHECK_THROWS_AS(LatinSquare::parse("0 x\n1 0"), cwb::InvalidInput);
}

TEST_CASE("cayley tables") {
    CHECK(cayley_table(GroupSpec::cyclic(2)).rows() == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
    const auto v4 = cayley_table(GroupSpec::parse("Z2xZ2"));
    REQUIRE(v4.order() == 4);
    for (int x = 0; x < 4; ++x) CHECK(v4.at(x, x) == 0);
    const auto z6 = cayley_table(GroupSpec::parse("Z6"));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) CHECK(z6.at(i, j) == (i + j) % 6);
    CHECK(cayley_table(GroupSpec::explicit_table({0, 1, 1, 0})).order() == 2);
    CHECK_THROWS_AS(cayley_table(GroupSpec::explicit_table(kPerturbedZ5.cells())), cwb::InvalidInput);
    CHECK_THROWS_AS(GroupSpec::parse("Q8"), cwb::InvalidInput);
    CHECK_THROWS_AS(GroupSpec::parse("Z2x"), cwb::InvalidInput);
}

TEST_CASE("group anchor n^5") {
    for (int n = 2; n <= 6; ++n) CHECK(count_cuboctahedra(LatinSquare::cyclic(n)) == pow5(n));
    CHECK(count_cuboctahedra(cayley_table(GroupSpec::parse("Z2xZ2"))) == 1024);
    CHECK(count_cuboctahedra(cayley_table(GroupSpec::parse("Z2xZ3"))) == pow5(6));
    CHECK(count_cuboctahedra(cayley_table(GroupSpec::parse("Z2xZ2xZ2"))) == pow5(8));
    CHECK(octuple(LatinSquare::cyclic(2)) == 32);
    CHECK(octuple(LatinSquare::cyclic(3)) == 243);
    CHECK(count_cuboctahedra(LatinSquare::cyclic(1)) == 1);
}

TEST_CASE("perturbed Z5") {
    CHECK(count_cuboctahedra(kPerturbedZ5) == 1949);  // frozen from an independent Python count
    CHECK(count_cuboctahedra(kPerturbedZ5) < pow5(5));
    CHECK(octuple(kPerturbedZ5) == 1949);
    CHECK_FALSE(is_group_table(kPerturbedZ5));
}

TEST_CASE("fast counter equals the octuple loop on every square of order <= 4") {
    for (int n = 1; n <= 4; ++n) {
        const auto squares = all_squares(n);
        CHECK(squares.size() == std::vector<std::size_t>{1, 2, 12, 576}[static_cast<std::size_t>(n - 1)]);
        for (const auto& l : squares) {
            const auto k = count_cuboctahedra(l);
            CHECK(k == octuple(l));
            CHECK(is_group_table(l) == (k == pow5(n)));
        }
    }
}

TEST_CASE("is_group_table") {
    cwb::Rng rng(3);
    const auto z4 = LatinSquare::cyclic(4);
    CHECK(is_group_table(isotope(z4, random_perm(4, rng), {0, 1, 2, 3}, {0, 1, 2, 3})));
    CHECK(is_group_table(LatinSquare::cyclic(1)));
    for (int trial = 0; trial < 10; ++trial) {
        const auto l = isotope(cayley_table(GroupSpec::parse("Z2xZ4")), random_perm(8, rng), random_perm(8, rng),
                               random_perm(8, rng));
        CHECK(is_group_table(l));
    }
}

TEST_CASE("isotopy invariance") {
    cwb::Rng rng(11);
    for (int n = 2; n <= 6; ++n)
        for (int trial = 0; trial < 5; ++trial) {
            const auto l = jm_sample(n, 50, rng.next());
            const auto iso = isotope(l, random_perm(n, rng), random_perm(n, rng), random_perm(n, rng));
            CHECK(count_cuboctahedra(iso) == count_cuboctahedra(l));
        }
}

TEST_CASE("Brandt cross-check on sampled squares of order 5 and 6") {
    for (int n = 5; n <= 6; ++n)
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            const auto l = jm_sample(n, seed % 7, seed);
            CHECK(is_group_table(l) == (count_cuboctahedra(l) == pow5(n)));
        }
}

TEST_CASE("jm_sample") {
    CHECK(jm_sample(5, 0, 9) == LatinSquare::cyclic(5));
    CHECK(jm_sample(7, 300, 9) == jm_sample(7, 300, 9));
    CHECK_FALSE(jm_sample(7, 300, 9) == jm_sample(7, 300, 10));
    for (int n = 2; n <= 9; ++n) {
        const auto l = jm_sample(n, 200, static_cast<std::uint64_t>(n));
        CHECK(is_latin(n, l.cells()));
    }
    CHECK_THROWS_AS(jm_sample(1, 1, 0), cwb::InvalidInput);
    const auto serial = jm_samples(6, 8, 100, 42, 1);
    CHECK(serial == jm_samples(6, 8, 100, 42, 3));
}

TEST_CASE("counter threads") {
    const auto l = jm_sample(12, 500, 1);
    CHECK(count_cuboctahedra(l, 1) == count_cuboctahedra(l, 4));
}

TEST_CASE("minimize") {
    const auto r4 = minimize_cuboctahedra(4, 60, 1);
    CHECK(r4.count >= 1024);  // every order-4 square counts 1024
    CHECK(r4.count == count_cuboctahedra(r4.best));
    const auto r5 = minimize_cuboctahedra(5, 200, 1);
    CHECK(r5.count == 1949);
    CHECK(r5.ratio == doctest::Approx(1949.0 / 625));
    CHECK(minimize_cuboctahedra(6, 100, 5).count == minimize_cuboctahedra(6, 100, 5).count);
}
