#pragma once

// Small graph decision procedures: package colourings of Z, in-degree
// bounded orientations, the bipartite N-hat cycle question and flip colourings.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cwb/common.hpp"

namespace cwb::graphlab {

using Edge = std::pair<int, int>;

struct Graph {
    int n = 0;
    std::vector<Edge> edges;

    Graph() = default;
    /// Throws InvalidInput on loops, repeated edges or out-of-range endpoints.
    Graph(int n, std::vector<Edge> edges);
    /// "n m" header followed by m lines "u v".
    static Graph parse(const std::string& text);
    static Graph cycle(int n);
    static Graph complete(int n);

    std::vector<int> degrees() const;
    std::vector<std::vector<int>> adjacency() const;
    std::string str() const;
};

Graph random_graph(int n, double p, Rng& rng);
/// Pairing model with restarts; throws InvalidInput if n*d is odd or d >= n.
Graph random_regular(int n, int d, Rng& rng);

// ---- package colouring of Z

mpq_class partial_sum(const std::vector<int>& s);

struct ColourResult {
    bool colours = false;
    std::vector<int> certificate;  // one period of a periodic colouring
    std::uint64_t states = 0;      // reachable states explored
};

/// Cooldown-state search; throws LimitExceeded once more than `state_limit` states are reached.
ColourResult colours_Z(const std::vector<int>& s, std::uint64_t state_limit = 2'000'000);

/// True iff the word, repeated `repeats` times, never reuses colour c at distance <= c.
bool valid_periodic(const std::vector<int>& word, int repeats = 3);

struct InfimumReport {
    std::uint64_t samples = 0, refused = 0;
    std::optional<std::vector<int>> largest_non_colouring;
    mpq_class lower_bound = 0;  // partial sum of largest_non_colouring
    std::optional<std::vector<int>> smallest_colouring;
    mpq_class smallest_colouring_sum = 0;
};

/// Samples sets with partial sum below 2; {1} and {1,2,3} come first.
InfimumReport infimum_probe(std::uint64_t budget, std::uint64_t seed, std::uint64_t state_limit = 200'000);

// ---- orientations

struct HallResult {
    bool holds = true;
    std::vector<int> violating;  // smallest violating vertex set
};

/// sum_{v in A} lambda(v) >= |E(G[A])| for all A; throws LimitExceeded above 24 vertices.
HallResult hall_condition(const Graph& g, const std::vector<int>& lambda);

struct OrientationResult {
    bool exists = false;
    std::vector<Edge> arcs;  // (tail, head)
    int flow = 0;
};

/// Max flow source -> edge -> endpoint -> sink (capacity lambda(v)).
OrientationResult orientation_exists(const Graph& g, const std::vector<int>& lambda);

/// In-degrees of an orientation, checked against the graph's edge set.
std::vector<int> in_degrees(const Graph& g, const std::vector<Edge>& arcs);

// ---- bipartite N-hat cycles

struct BipartiteGraph {
    int na = 0, nb = 0;
    std::vector<Edge> edges;  // (a, b), a in [0, na), b in [0, nb)

    BipartiteGraph() = default;
    BipartiteGraph(int na, int nb, std::vector<Edge> edges);
    /// "n m a" header (vertices 0..a-1 form A, the rest B) then m lines "u v".
    static BipartiteGraph parse(const std::string& text);
    /// The even cycle a0 b0 a1 b1 ... with k vertices on each side.
    static BipartiteGraph even_cycle(int k);
    static BipartiteGraph complete(int na, int nb);
};

/// B-vertices with at least two neighbours in D.
std::vector<int> hatN(const BipartiteGraph& g, const std::vector<int>& d);

enum class CycleVerdict { HypothesisFails, ConjectureHolds, Counterexample };
std::string to_string(CycleVerdict v);

struct CycleResult {
    CycleVerdict verdict = CycleVerdict::HypothesisFails;
    std::vector<int> failing_set;  // D with |hatN(D)| < |D|
    std::vector<Edge> cycle;       // (a_i, b_i): a0 b0 a1 b1 ... back to a0
};

/// Needs 2 <= |A| <= 12 and |B| <= 64.
CycleResult bipartite_cycle_check(const BipartiteGraph& g);

// ---- flip colourings

enum class FlipMode { Induced, Incident };

struct FlipColouring {
    Graph g;
    std::vector<int> colour;  // per edge, 1..k
    std::vector<int> a;       // increasing, sum = degree
};

struct FlipResult {
    bool holds = false;
    int condition = 0;  // 1: colour degrees, 2: neighbourhood counts, 0: none
    int vertex = -1, colour = -1;
    std::vector<std::vector<int>> e;  // e[v][j-1]
    std::string reason;
};

/// Throws InvalidInput when G is not regular of degree sum(a) or colours are out of range.
FlipResult flip_verify(const FlipColouring& fc, FlipMode mode = FlipMode::Induced);

struct FlipSearchResult {
    bool found = false;
    FlipColouring best;
    int score = 0;  // 0 iff best verifies
    std::uint64_t moves = 0;
};

/// Recolouring local search on a fixed graph.
FlipSearchResult flip_search(const Graph& g, const std::vector<int>& a, std::uint64_t budget, std::uint64_t seed,
                             FlipMode mode = FlipMode::Induced);

}  // namespace cwb::graphlab
