#include "doctest.h"

#include <numeric>
#include <set>

#include "cwb/graphlab.hpp"

using namespace cwb::graphlab;

namespace {

std::vector<int> members(unsigned mask) {
    std::vector<int> s;
    for (int i = 0; i < 7; ++i)
        if ((mask >> i) & 1u) s.push_back(i + 1);
    return s;
}

// Verdicts for every subset of {1..7}, bit = subset mask; from an independent
// Python search over last-m-colour windows.
bool frozen_colours(unsigned mask) {
    const std::uint64_t hi = 0xeaa8a8a8a8a8a880ULL, lo = 0xa8a8a880a8808080ULL;
    return mask < 64 ? (lo >> mask) & 1u : (hi >> (mask - 64)) & 1u;
}

// Every A-subset, directly from the adjacency lists.
bool naive_hall(const Graph& g, const std::vector<int>& lambda) {
    for (unsigned a = 1; a < (1u << g.n); ++a) {
        int lam = 0, edges = 0;
        for (int v = 0; v < g.n; ++v)
            if ((a >> v) & 1u) lam += lambda[static_cast<std::size_t>(v)];
        for (auto [u, v] : g.edges) edges += ((a >> u) & 1u) && ((a >> v) & 1u);
        if (lam < edges) return false;
    }
    return true;
}

std::vector<int> random_lambda(const Graph& g, cwb::Rng& rng) {
    std::vector<int> lam;
    for (int d : g.degrees()) lam.push_back(rng.below(d + 1));
    return lam;
}

}  // namespace

TEST_CASE("graphs") {
    const auto g = Graph::parse("3 2\n0 1\n1 2\n");
    CHECK(g.n == 3);
    CHECK(g.degrees() == std::vector<int>{1, 2, 1});
    CHECK(Graph::parse(g.str()).edges == g.edges);
    CHECK_THROWS_AS(Graph::parse("3 2\n0 1\n"), cwb::InvalidInput);
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), cwb::InvalidInput);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), cwb::InvalidInput);
    cwb::Rng rng(1);
    const auto r = random_regular(10, 3, rng);
    for (int d : r.degrees()) CHECK(d == 3);
    CHECK_THROWS_AS(random_regular(5, 3, rng), cwb::InvalidInput);
}

TEST_CASE("partial sums") {
    CHECK(partial_sum({1, 2, 3}) == mpq_class(13, 12));
    CHECK(partial_sum({1}) == mpq_class(1, 2));
    std::vector<int> powers;
    for (int i = 0; i < 10; ++i) powers.push_back(1 << i);
    const mpq_class p = partial_sum(powers);
    CHECK(p == mpq_class("174001012583/137817352530"));
    CHECK(p > 1.26);
    CHECK(p < 1.27);
}

TEST_CASE("colours_Z examples") {
    const auto r = colours_Z({1, 2, 3});
    CHECK(r.colours);
    CHECK(r.certificate == std::vector<int>{1, 2, 1, 3});
    CHECK(valid_periodic(r.certificate));
    CHECK_FALSE(colours_Z({1}).colours);
    CHECK_FALSE(colours_Z({2, 3, 4, 5}).colours);
    CHECK_THROWS_AS(colours_Z({}), cwb::InvalidInput);
    CHECK_THROWS_AS(colours_Z({0, 1}), cwb::InvalidInput);
    CHECK_THROWS_AS(colours_Z({5, 6, 7, 8, 9}, 100), cwb::LimitExceeded);
}

TEST_CASE("colours_Z agrees with the frozen table on subsets of 1..7") {
    int colouring = 0;
    for (unsigned mask = 1; mask < 128; ++mask) {
        const auto s = members(mask);
        const auto r = colours_Z(s);
        CHECK_MESSAGE(r.colours == frozen_colours(mask), "mask " << mask);
        colouring += r.colours;
        if (r.colours) {
            CHECK(valid_periodic(r.certificate));
            for (int c : r.certificate) CHECK(std::find(s.begin(), s.end(), c) != s.end());
        }
    }
    CHECK(colouring == 40);
}

TEST_CASE("colours_Z is monotone along random chains") {
    cwb::Rng rng(4);
    for (int chain = 0; chain < 40; ++chain) {
        std::vector<int> s;
        bool seen = false;
        for (int step = 0; step < 6; ++step) {
            s.push_back(1 + rng.below(12));
            const bool c = colours_Z(s).colours;
            CHECK((!seen || c));
            seen = seen || c;
        }
    }
}

TEST_CASE("sets with partial sum at least 2 colour Z") {
    cwb::Rng rng(8);
    int tested = 0;
    while (tested < 60) {
        std::set<int> s;
        while (partial_sum(std::vector<int>(s.begin(), s.end())) < 2) s.insert(1 + rng.below(16));
        const auto r = colours_Z(std::vector<int>(s.begin(), s.end()));
        CHECK(r.colours);
        CHECK(valid_periodic(r.certificate));
        ++tested;
    }
}

TEST_CASE("infimum probe") {
    const auto small = infimum_probe(2, 1);
    REQUIRE(small.largest_non_colouring);
    CHECK(*small.largest_non_colouring == std::vector<int>{1});
    CHECK(small.lower_bound == mpq_class(1, 2));
    REQUIRE(small.smallest_colouring);
    CHECK(small.smallest_colouring_sum == mpq_class(13, 12));
    mpq_class prev = 0;
    for (std::uint64_t budget : {5, 20, 80}) {
        const auto rep = infimum_probe(budget, 3);
        CHECK(rep.samples == budget);
        CHECK(rep.lower_bound >= prev);
        CHECK(rep.lower_bound < 2);
        prev = rep.lower_bound;
    }
}

TEST_CASE("hall condition") {
    const auto k4 = Graph::complete(4);
    CHECK(hall_condition(k4, k4.degrees()).holds);
    const Graph edge(2, {{0, 1}});
    const auto h = hall_condition(edge, {0, 0});
    CHECK_FALSE(h.holds);
    CHECK(h.violating == std::vector<int>{0, 1});
    CHECK(hall_condition(Graph::cycle(5), std::vector<int>(5, 1)).holds);
    CHECK_FALSE(hall_condition(Graph::cycle(5), {1, 1, 1, 1, 0}).holds);
    CHECK_THROWS_AS(hall_condition(edge, {2, 0}), cwb::InvalidInput);
    CHECK_THROWS_AS(hall_condition(Graph(25, {}), std::vector<int>(25, 0)), cwb::LimitExceeded);
}

TEST_CASE("orientations") {
    for (int n = 3; n <= 8; ++n) {
        const auto c = Graph::cycle(n);
        const auto r = orientation_exists(c, std::vector<int>(static_cast<std::size_t>(n), 1));
        REQUIRE(r.exists);
        for (int d : in_degrees(c, r.arcs)) CHECK(d == 1);
    }
    CHECK_FALSE(orientation_exists(Graph(2, {{0, 1}}), {0, 0}).exists);
    CHECK(orientation_exists(Graph(3, {}), {0, 0, 0}).exists);
}

TEST_CASE("hall condition and orientations agree on random instances") {
    cwb::Rng rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + rng.below(9);
        const auto g = random_graph(n, rng.unit(), rng);
        const auto lam = random_lambda(g, rng);
        const auto h = hall_condition(g, lam);
        const auto o = orientation_exists(g, lam);
        CHECK(h.holds == o.exists);
        CHECK(h.holds == naive_hall(g, lam));
        if (o.exists) {
            const auto in = in_degrees(g, o.arcs);
            for (int v = 0; v < n; ++v) CHECK(in[static_cast<std::size_t>(v)] <= lam[static_cast<std::size_t>(v)]);
        }
    }
}

TEST_CASE("hatN") {
    const auto k22 = BipartiteGraph::complete(2, 2);
    CHECK(hatN(k22, {0, 1}) == std::vector<int>{0, 1});
    const auto c6 = BipartiteGraph::even_cycle(3);
    CHECK(hatN(c6, {0, 1}).size() == 1);
    CHECK(hatN(c6, {2}).empty());
    CHECK_THROWS_AS(hatN(c6, {3}), cwb::InvalidInput);
}

TEST_CASE("bipartite cycle check") {
    const auto k22 = bipartite_cycle_check(BipartiteGraph::complete(2, 2));
    CHECK(k22.verdict == CycleVerdict::ConjectureHolds);
    CHECK(k22.cycle.size() == 2);
    const auto c6 = bipartite_cycle_check(BipartiteGraph::even_cycle(3));
    CHECK(c6.verdict == CycleVerdict::HypothesisFails);
    CHECK(c6.failing_set.size() == 2);
    CHECK(bipartite_cycle_check(BipartiteGraph::complete(6, 6)).verdict == CycleVerdict::ConjectureHolds);
    const auto parsed = BipartiteGraph::parse("4 4 2\n0 2\n0 3\n1 2\n1 3\n");
    CHECK(bipartite_cycle_check(parsed).verdict == CycleVerdict::ConjectureHolds);
    CHECK_THROWS_AS(bipartite_cycle_check(BipartiteGraph::complete(1, 3)), cwb::InvalidInput);
    CHECK_THROWS_AS(bipartite_cycle_check(BipartiteGraph::complete(13, 2)), cwb::LimitExceeded);
}

TEST_CASE("random bipartite sweep") {
    cwb::Rng rng(21);
    int holds = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int na = 2 + rng.below(5), nb = na + rng.below(4);
        const double p = 0.4 + 0.6 * rng.unit();
        std::vector<Edge> e;
        for (int a = 0; a < na; ++a)
            for (int b = 0; b < nb; ++b)
                if (rng.unit() < p) e.push_back({a, b});
        const BipartiteGraph g(na, nb, e);
        const auto r = bipartite_cycle_check(g);
        CHECK(r.verdict != CycleVerdict::Counterexample);
        if (r.verdict == CycleVerdict::ConjectureHolds) {
            ++holds;
            // the cycle visits every A vertex once and distinct B vertices
            REQUIRE(r.cycle.size() == static_cast<std::size_t>(na));
            std::set<int> as, bs;
            for (std::size_t i = 0; i < r.cycle.size(); ++i) {
                const auto [a, b] = r.cycle[i];
                const int next_a = r.cycle[(i + 1) % r.cycle.size()].first;
                CHECK(std::find(e.begin(), e.end(), Edge{a, b}) != e.end());
                CHECK(std::find(e.begin(), e.end(), Edge{next_a, b}) != e.end());
                as.insert(a), bs.insert(b);
            }
            CHECK(as.size() == static_cast<std::size_t>(na));
            CHECK(bs.size() == static_cast<std::size_t>(na));
        }
    }
    CHECK(holds > 0);
}

TEST_CASE("flip_verify") {
    const auto c5 = Graph::cycle(5);
    CHECK(flip_verify({c5, std::vector<int>(5, 1), {2}}).holds);
    // K4 with a = (1, 2): colour 1 the matching 01, 23
    const auto k4 = Graph::complete(4);
    std::vector<int> col;
    for (auto [u, v] : k4.edges) col.push_back((u == 0 && v == 1) || (u == 2 && v == 3) ? 1 : 2);
    const auto r = flip_verify({k4, col, {1, 2}});
    CHECK_FALSE(r.holds);
    CHECK(r.condition == 2);
    CHECK(r.e[0] == std::vector<int>{2, 4});
    const auto inc = flip_verify({k4, col, {1, 2}}, FlipMode::Incident);
    CHECK_FALSE(inc.holds);
    std::vector<int> bad = col;
    std::swap(bad[0], bad[1]);
    CHECK(flip_verify({k4, bad, {1, 2}}).condition == 1);
    CHECK_THROWS_AS(flip_verify({c5, std::vector<int>(5, 1), {3}}), cwb::InvalidInput);
    CHECK_THROWS_AS(flip_verify({k4, col, {2, 1}}), cwb::InvalidInput);
}

TEST_CASE("flip_verify is invariant under relabelling") {
    cwb::Rng rng(30);
    for (int trial = 0; trial < 30; ++trial) {
        const auto g = random_regular(8, 5, rng);
        std::vector<int> col;
        for (std::size_t i = 0; i < g.edges.size(); ++i) col.push_back(1 + rng.below(2));
        std::vector<int> perm(8);
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(perm);
        std::vector<Edge> e;
        for (auto [u, v] : g.edges) e.push_back({perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]});
        const Graph h(8, e);
        for (auto mode : {FlipMode::Induced, FlipMode::Incident}) {
            const auto a = flip_verify({g, col, {2, 3}}, mode), b = flip_verify({h, col, {2, 3}}, mode);
            CHECK(a.holds == b.holds);
            for (int v = 0; v < 8; ++v) CHECK(a.e[static_cast<std::size_t>(v)] == b.e[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])]);
        }
    }
}

TEST_CASE("no flip colouring with a1 < 3 turns up") {
    cwb::Rng rng(31);
    const std::vector<std::vector<int>> shapes = {{1, 2}, {2, 3}, {1, 3}, {2, 4}};
    for (const auto& a : shapes) {
        const int d = a[0] + a[1];
        for (int trial = 0; trial < 3; ++trial) {
            const int n = 2 * d + 2 + 2 * rng.below(3);
            const auto g = random_regular((n * d) % 2 ? n + 1 : n, d, rng);
            const auto r = flip_search(g, a, 400, rng.next());
            CHECK_FALSE(r.found);
            CHECK(r.score > 0);
        }
    }
}
