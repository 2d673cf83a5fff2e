#include "doctest.h"

#include "cwb/capset.hpp"

using namespace cwb::capset;

namespace {

// Every unordered triple of distinct points.
bool cubic_is_cap(const std::vector<Vec3>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t k = j + 1; k < pts.size(); ++k)
                if ((pts[i] + pts[j] + pts[k]) == Vec3::zero(pts[i].n)) return false;
    return true;
}

std::vector<Vec3> all_points(int n) {
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    std::vector<Vec3> v;
    for (std::uint64_t x = 0; x < total; ++x) v.push_back(Vec3::from_index(n, x));
    return v;
}

CapSet cap_of(std::initializer_list<const char*> pts) {
    CapSet c;
    for (const char* p : pts) c.points.push_back(Vec3::parse(p));
    c.n = c.points.front().n;
    return c;
}

}  // namespace

TEST_CASE("vectors") {
    const auto v = Vec3::parse("0211");
    CHECK(v.str() == "0211");
    CHECK(v.trit(1) == 2);
    CHECK((v + Vec3::parse("1111")).str() == "1022");
    CHECK((-v).str() == "0122");
    CHECK(Vec3::from_index(4, v.index()) == v);
    CHECK(concat(Vec3::parse("01"), Vec3::parse("2")).str() == "012");
    CHECK_THROWS_AS(Vec3::parse("013"), cwb::InvalidInput);
    CHECK_THROWS_AS(v + Vec3::parse("0"), cwb::InvalidInput);
    CHECK(parse_cap("00\n01\n\n10\n").size() == 3);
    CHECK(to_text(cap_of({"00", "12"})) == "00\n12\n");
}

TEST_CASE("is_capset examples") {
    CHECK(is_capset(cap_of({"0", "1"})).is_cap);
    const auto line = is_capset(cap_of({"0", "1", "2"}));
    CHECK_FALSE(line.is_cap);
    REQUIRE(line.triple.has_value());
    CHECK((*line.triple)[2].str() == "2");
    CHECK(is_capset(cap_of({"00", "01", "10", "11"})).is_cap);
    CHECK_THROWS_AS(is_capset(2, {Vec3::parse("00"), Vec3::parse("1")}), cwb::InvalidInput);
    CHECK_THROWS_AS(is_capset(1, {Vec3::parse("0"), Vec3::parse("0")}), cwb::InvalidInput);
}

TEST_CASE("pair test agrees with the cubic triple scan") {
    cwb::Rng rng(7);
    for (int n = 1; n <= 3; ++n) {
        const auto pts = all_points(n);
        for (int trial = 0; trial < 400; ++trial) {
            std::vector<Vec3> s;
            for (const auto& p : pts)
                if (rng.below(3) == 0) s.push_back(p);
            CHECK(is_capset(n, s).is_cap == cubic_is_cap(s));
        }
    }
    // every subset of F_3^2
    const auto pts = all_points(2);
    for (unsigned mask = 0; mask < 512; ++mask) {
        std::vector<Vec3> s;
        for (unsigned i = 0; i < 9; ++i)
            if ((mask >> i) & 1u) s.push_back(pts[i]);
        CHECK(is_capset(2, s).is_cap == cubic_is_cap(s));
    }
}

TEST_CASE("max_capset") {
    const std::vector<std::size_t> expected = {1, 2, 4, 9};
    for (int n = 0; n <= 3; ++n) {
        const auto r = max_capset(n);
        CHECK(r.size == expected[static_cast<std::size_t>(n)]);
        CHECK(r.witness.size() == r.size);
        CHECK(is_capset(r.witness).is_cap);
        CHECK(r.size >= (std::size_t{1} << n));
    }
    CHECK(max_capset(3, 3).witness.points == max_capset(3, 1).witness.points);
    CHECK_THROWS_AS(max_capset(5), cwb::LimitExceeded);
    CHECK_THROWS_AS(max_capset(4, 1, 3), cwb::LimitExceeded);
}

TEST_CASE("max over all subsets of F_3^1 and F_3^2") {
    for (int n = 1; n <= 2; ++n) {
        const auto pts = all_points(n);
        std::size_t best = 0;
        for (unsigned mask = 0; mask < (1u << pts.size()); ++mask) {
            std::vector<Vec3> s;
            for (unsigned i = 0; i < pts.size(); ++i)
                if ((mask >> i) & 1u) s.push_back(pts[i]);
            if (cubic_is_cap(s)) best = std::max(best, s.size());
        }
        CHECK(best == max_capset(n).size);
    }
}

TEST_CASE("products") {
    const auto a = cap_of({"0", "1"});
    const auto aa = product(a, a);
    CHECK(aa.size() == 4);
    CHECK(is_capset(aa).is_cap);
    const auto single = product(max_capset(2).witness, cap_of({"2"}));
    CHECK(single.n == 3);
    CHECK(is_capset(single).is_cap);
    const auto eight = product(max_capset(1).witness, max_capset(2).witness);
    CHECK(eight.size() == 8);
    CHECK(is_capset(eight).is_cap);
    CHECK(eight.size() < max_capset(3).size);
    CapSet power = a;
    for (int i = 2; i <= 5; ++i) power = product(power, a);
    CHECK(power.size() == 32);
    CHECK(is_capset(power).is_cap);
}

TEST_CASE("random products stay caps") {
    cwb::Rng rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + rng.below(3), m = 1 + rng.below(3);
        const auto a = random_cap(n, 1 + rng.below(static_cast<int>(max_capset(n).size)), rng);
        const auto b = random_cap(m, 1 + rng.below(static_cast<int>(max_capset(m).size)), rng);
        REQUIRE(a);
        REQUIRE(b);
        CHECK(is_capset(product(*a, *b)).is_cap);
    }
}

TEST_CASE("affine images stay caps") {
    cwb::Rng rng(5);
    for (int n = 1; n <= 4; ++n)
        for (int trial = 0; trial < 50; ++trial) {
            const auto f = AffineMap::random_invertible(n, rng);
            CHECK(f.invertible());
            const auto c = random_cap(n, std::size_t{1} << n, rng);
            REQUIRE(c);
            const auto img = image(f, *c);
            CHECK(is_capset(img).is_cap);
        }
    AffineMap singular{2, {1, 1, 2, 2}, Vec3::zero(2)};
    CHECK_FALSE(singular.invertible());
}

TEST_CASE("no 4-cap in F_3^2 has a disjoint translate") {
    const auto pts = all_points(2);
    int caps = 0;
    for (unsigned mask = 0; mask < 512; ++mask) {
        if (std::popcount(mask) != 4) continue;
        CapSet c;
        c.n = 2;
        for (unsigned i = 0; i < 9; ++i)
            if ((mask >> i) & 1u) c.points.push_back(pts[i]);
        if (!is_capset(c).is_cap) continue;
        ++caps;
        for (const auto& t : pts) {
            const auto img = image(AffineMap::translation(t), c);
            bool disjoint = true;
            for (const auto& p : img.points)
                disjoint = disjoint && std::find(c.points.begin(), c.points.end(), p) == c.points.end();
            CHECK_FALSE(disjoint);
        }
    }
    CHECK(caps == 54);
}

TEST_CASE("find_disjoint_equal") {
    const auto none = find_disjoint_equal(1, 2, 100, 1);
    CHECK_FALSE(none.found);
    CHECK(none.method == "counting");
    const auto two = find_disjoint_equal(2, 4, 1000, 1);
    REQUIRE(two.found);
    CHECK(two.first.size() == 4);
    CHECK(two.second.size() == 4);
    CHECK(is_capset(two.first).is_cap);
    CHECK(is_capset(two.second).is_cap);
    for (const auto& p : two.second.points)
        CHECK(std::find(two.first.points.begin(), two.first.points.end(), p) == two.first.points.end());
    const auto again = find_disjoint_equal(2, 4, 1000, 1);
    CHECK(again.second.points == two.second.points);
    const auto three = find_disjoint_equal(3, 9, 2000, 3);
    if (three.found) {
        CHECK(is_capset(three.second).is_cap);
        CHECK(three.second.size() == 9);
    }
}
