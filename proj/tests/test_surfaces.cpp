#include "doctest.h"

#include <numeric>
#include <set>

#include "cwb/surfaces.hpp"

using namespace cwb::surfaces;

namespace {

// K4 drawn with 0 in the centre of triangle 1 2 3, counterclockwise.
const RotationSystem kPlanarK4({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});

}  // namespace

TEST_CASE("faces of small systems") {
    const auto faces = trace_faces(kPlanarK4);
    CHECK(faces.size() == 4);
    for (const auto& f : faces) CHECK(f.size() == 3);
    CHECK(genus(kPlanarK4) == 0);
    for (int n = 3; n <= 7; ++n) {
        std::vector<std::vector<int>> rot;
        for (int v = 0; v < n; ++v) rot.push_back({(v + 1) % n, (v + n - 1) % n});
        const RotationSystem c(rot);
        const auto cf = trace_faces(c);
        CHECK(cf.size() == 2);
        CHECK(cf[0].size() == static_cast<std::size_t>(n));
        CHECK(genus(c) == 0);
    }
    CHECK(genus(RotationSystem(std::vector<std::vector<int>>(1))) == 0);
    CHECK_THROWS_AS(trace_faces(RotationSystem({{1}, {0}, {3}, {2}})), cwb::InvalidInput);
    CHECK_THROWS_AS(RotationSystem({{1}, {}}), cwb::InvalidInput);
    CHECK_THROWS_AS(RotationSystem({{1, 1}, {0}}), cwb::InvalidInput);
}

TEST_CASE("parsing and codes") {
    const auto rs = RotationSystem::parse(kPlanarK4.str());
    CHECK(rs == kPlanarK4);
    CHECK(rs.graph().edges.size() == 6);
    CHECK_THROWS_AS(RotationSystem::parse("1 x\n0\n"), cwb::InvalidInput);
    std::set<std::string> distinct;
    for (int code = 0; code < kK5Systems; code += 37) distinct.insert(RotationSystem::k5(code).normalised().str());
    CHECK(distinct.size() == (kK5Systems + 36) / 37);
    CHECK_THROWS_AS(RotationSystem::k5(kK5Systems), cwb::InvalidInput);
}

TEST_CASE("dart partition and Euler consistency on every K5 system") {
    for (int code = 0; code < kK5Systems; ++code) {
        const auto rs = RotationSystem::k5(code);
        std::set<Dart> darts;
        std::size_t total = 0;
        for (const auto& f : trace_faces(rs)) {
            total += f.size();
            for (std::size_t i = 0; i < f.size(); ++i) {
                darts.insert(f[i]);
                CHECK(f[i].second == f[(i + 1) % f.size()].first);
            }
        }
        CHECK(total == 20);
        CHECK(darts.size() == 20);
        const int g = genus(rs);
        CHECK(g >= 1);
        CHECK(g <= 3);
    }
}

TEST_CASE("genus invariance and reversal") {
    cwb::Rng rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const auto rs = RotationSystem::k5(rng.below(kK5Systems));
        std::vector<int> perm(5);
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(perm);
        CHECK(genus(rs.relabelled(perm)) == genus(rs));
        CHECK(genus(rs.reversed()) == genus(rs));
        CHECK(rs.reversed().reversed() == rs);
    }
}

TEST_CASE("K5 genus distribution") {
    // frozen from an independent Python sweep
    const auto d = k5_genus_distribution();
    CHECK(d == std::map<int, int>{{1, 462}, {2, 4974}, {3, 2340}});
    CHECK(k5_genus_distribution(3) == d);
    int total = 0;
    for (auto [g, c] : d) total += c;
    CHECK(total == kK5Systems);
    CHECK(d.begin()->first == 1);
}

TEST_CASE("classify_k5") {
    const auto g3 = classify_k5(3);
    CHECK(g3.size() == 13);
    CHECK(classify_k5(3, false).size() == 24);
    CHECK(classify_k5(1).size() == 6);
    CHECK(classify_k5(1, false).size() == 9);
    CHECK(classify_k5(2).size() == 31);
    CHECK(classify_k5(2, false).size() == 45);
    CHECK(classify_k5(0).empty());
    int total = 0;
    for (int g = 0; g <= 3; ++g)
        for (const auto& c : classify_k5(g)) {
            CHECK(genus(c.representative) == g);
            total += c.orbit_size;
        }
    CHECK(total == kK5Systems);
}
