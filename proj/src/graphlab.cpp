#include "cwb/graphlab.hpp"

#include <bit>
#include <deque>
#include <limits>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace cwb::graphlab {

Graph::Graph(int n_, std::vector<Edge> edges_) : n(n_), edges(std::move(edges_)) {
    require(n >= 0, "vertex count must be non-negative");
    std::set<Edge> seen;
    for (auto& [u, v] : edges) {
        require(u >= 0 && v >= 0 && u < n && v < n, "edge endpoint out of range");
        require(u != v, "loops are not allowed");
        require(seen.insert({std::min(u, v), std::max(u, v)}).second, "repeated edge");
    }
}

namespace {

std::vector<int> read_ints(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> out;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        require(used == tok.size() && !tok.empty(), "bad integer '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

}  // namespace

Graph Graph::parse(const std::string& text) {
    const auto v = read_ints(text);
    require(v.size() >= 2, "expected an 'n m' header");
    const int n = v[0], m = v[1];
    require(m >= 0 && v.size() == static_cast<std::size_t>(2 + 2 * m), "expected m edge lines after the header");
    std::vector<Edge> e;
    for (int i = 0; i < m; ++i) e.push_back({v[static_cast<std::size_t>(2 + 2 * i)], v[static_cast<std::size_t>(3 + 2 * i)]});
    return {n, std::move(e)};
}

Graph Graph::cycle(int n) {
    require(n >= 3, "a cycle needs 3 vertices");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return {n, std::move(e)};
}

Graph Graph::complete(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return {n, std::move(e)};
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) ++d[static_cast<std::size_t>(u)], ++d[static_cast<std::size_t>(v)];
    return d;
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) adj[static_cast<std::size_t>(u)].push_back(v), adj[static_cast<std::size_t>(v)].push_back(u);
    return adj;
}

std::string Graph::str() const {
    std::string s = std::to_string(n) + " " + std::to_string(edges.size()) + "\n";
    for (auto [u, v] : edges) s += std::to_string(u) + " " + std::to_string(v) + "\n";
    return s;
}

Graph random_graph(int n, double p, Rng& rng) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p) e.push_back({u, v});
    return {n, std::move(e)};
}

Graph random_regular(int n, int d, Rng& rng) {
    require(n >= 1 && d >= 0 && d < n && (n * d) % 2 == 0, "no simple d-regular graph on n vertices");
    // pairing with per-pair rejection, restarting when stuck
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<int> points;
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < d; ++i) points.push_back(v);
        std::set<Edge> seen;
        bool stuck = false;
        while (!points.empty() && !stuck) {
            stuck = true;
            for (int tries = 0; tries < 100; ++tries) {
                const std::size_t i = rng.below(std::uint64_t{points.size()}), j = rng.below(std::uint64_t{points.size()});
                const int u = std::min(points[i], points[j]), v = std::max(points[i], points[j]);
                if (i == j || u == v || seen.count({u, v})) continue;
                seen.insert({u, v});
                points.erase(points.begin() + static_cast<std::ptrdiff_t>(std::max(i, j)));
                points.erase(points.begin() + static_cast<std::ptrdiff_t>(std::min(i, j)));
                stuck = false;
                break;
            }
        }
        if (!stuck) return {n, std::vector<Edge>(seen.begin(), seen.end())};
    }
    throw LimitExceeded("pairing model did not produce a simple graph");
}

// ---- package colouring

mpq_class partial_sum(const std::vector<int>& s) {
    mpq_class total = 0;
    for (int x : std::set<int>(s.begin(), s.end())) {
        require(x >= 1, "colours must be positive integers");
        total += mpq_class(1, x + 1);
    }
    return total;
}

bool valid_periodic(const std::vector<int>& word, int repeats) {
    if (word.empty()) return false;
    std::unordered_map<int, long> last;
    long pos = 0;
    for (int r = 0; r < repeats; ++r)
        for (int c : word) {
            if (c < 1) return false;
            if (auto it = last.find(c); it != last.end() && pos - it->second < c + 1) return false;
            last[c] = pos++;
        }
    return true;
}

namespace {

/// Per colour s, the distance from the last use to the next position, capped at s + 1.
class CooldownGraph {
public:
    explicit CooldownGraph(std::vector<int> s) : s_(std::move(s)) {}

    using State = std::vector<std::uint32_t>;

    State start() const {
        State st;
        for (int x : s_) st.push_back(static_cast<std::uint32_t>(x + 1));
        return st;
    }

    bool legal(const State& st, std::size_t i) const { return st[i] == static_cast<std::uint32_t>(s_[i] + 1); }

    State next(const State& st, std::size_t i) const {
        State out(st.size());
        for (std::size_t j = 0; j < st.size(); ++j)
            out[j] = j == i ? 1u : std::min<std::uint32_t>(st[j] + 1, static_cast<std::uint32_t>(s_[j] + 1));
        return out;
    }

    int colour(std::size_t i) const { return s_[i]; }
    std::size_t size() const { return s_.size(); }

private:
    std::vector<int> s_;
};

struct StateHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto x : v) h = (h ^ x) * 0x100000001b3ULL + (h >> 29);
        return static_cast<std::size_t>(h);
    }
};

std::vector<int> min_rotation(const std::vector<int>& w) {
    std::vector<int> best = w;
    for (std::size_t r = 1; r < w.size(); ++r) {
        std::vector<int> rot(w.begin() + static_cast<std::ptrdiff_t>(r), w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
        best = std::min(best, rot);
    }
    return best;
}

/// Shortest cycle over all reachable states, or nullopt if more than `limit` states are reachable.
std::optional<std::vector<int>> shortest_cycle(const CooldownGraph& g, std::size_t limit) {
    using State = CooldownGraph::State;
    std::unordered_map<State, int, StateHash> id;
    std::vector<State> states;
    std::deque<int> queue;
    id.emplace(g.start(), 0);
    states.push_back(g.start());
    queue.push_back(0);
    std::vector<std::vector<std::pair<int, int>>> adj;  // (target, colour)
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        if (adj.size() <= static_cast<std::size_t>(u)) adj.resize(static_cast<std::size_t>(u) + 1);
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (!g.legal(states[static_cast<std::size_t>(u)], i)) continue;
            State nx = g.next(states[static_cast<std::size_t>(u)], i);
            auto [it, fresh] = id.emplace(nx, static_cast<int>(states.size()));
            if (fresh) {
                if (states.size() >= limit) return std::nullopt;
                states.push_back(std::move(nx));
                queue.push_back(it->second);
            }
            adj[static_cast<std::size_t>(u)].push_back({it->second, g.colour(i)});
        }
    }
    adj.resize(states.size());
    std::optional<std::vector<int>> best;
    for (int src = 0; src < static_cast<int>(states.size()); ++src) {
        // BFS back to src
        std::vector<int> prev(states.size(), -1), via(states.size(), 0);
        std::deque<int> q{src};
        std::vector<bool> seen(states.size(), false);
        seen[static_cast<std::size_t>(src)] = true;
        int closing = -1, closing_colour = 0;
        while (!q.empty() && closing < 0) {
            const int u = q.front();
            q.pop_front();
            for (auto [v, c] : adj[static_cast<std::size_t>(u)]) {
                if (v == src) {
                    closing = u, closing_colour = c;
                    break;
                }
                if (seen[static_cast<std::size_t>(v)]) continue;
                seen[static_cast<std::size_t>(v)] = true;
                prev[static_cast<std::size_t>(v)] = u, via[static_cast<std::size_t>(v)] = c;
                q.push_back(v);
            }
        }
        if (closing < 0) continue;
        std::vector<int> word{closing_colour};
        for (int v = closing; v != src; v = prev[static_cast<std::size_t>(v)]) word.push_back(via[static_cast<std::size_t>(v)]);
        std::reverse(word.begin(), word.end());
        word = min_rotation(word);
        if (!best || word.size() < best->size() || (word.size() == best->size() && word < *best)) best = word;
    }
    return best ? best : std::optional<std::vector<int>>{std::vector<int>{}};
}

}  // namespace

ColourResult colours_Z(const std::vector<int>& s_in, std::uint64_t state_limit) {
    std::set<int> uniq(s_in.begin(), s_in.end());
    require(!uniq.empty(), "colour set must be nonempty");
    require(*uniq.begin() >= 1, "colours must be positive integers");
    const CooldownGraph g(std::vector<int>(uniq.begin(), uniq.end()));
    using State = CooldownGraph::State;

    // iterative DFS; 1 = on the stack, 2 = finished
    std::unordered_map<State, std::uint8_t, StateHash> mark;
    struct Frame {
        State st;
        std::size_t next = 0;
        int via = 0;  // colour used to enter this frame
    };
    std::vector<Frame> stack;
    stack.push_back({g.start(), 0, 0});
    mark.emplace(g.start(), 1);
    ColourResult res;
    while (!stack.empty()) {
        Frame& top = stack.back();
        if (top.next == g.size()) {
            mark[top.st] = 2;
            stack.pop_back();
            continue;
        }
        const std::size_t i = top.next++;
        if (!g.legal(top.st, i)) continue;
        State nx = g.next(top.st, i);
        auto [it, fresh] = mark.emplace(nx, 1);
        if (fresh) {
            if (mark.size() > state_limit)
                throw LimitExceeded("package colouring search exceeded " + std::to_string(state_limit) + " states");
            stack.push_back({std::move(nx), 0, g.colour(i)});
            continue;
        }
        if (it->second == 1) {
            std::size_t k = stack.size();
            while (stack[k - 1].st != nx) --k;
            std::vector<int> word;
            for (std::size_t j = k; j < stack.size(); ++j) word.push_back(stack[j].via);
            word.push_back(g.colour(i));
            res.colours = true;
            res.certificate = min_rotation(word);
            break;
        }
    }
    res.states = mark.size();
    if (res.colours) {
        if (auto best = shortest_cycle(g, 4096); best && !best->empty()) res.certificate = *best;
    }
    return res;
}

InfimumReport infimum_probe(std::uint64_t budget, std::uint64_t seed, std::uint64_t state_limit) {
    InfimumReport rep;
    Rng rng(seed);
    auto record = [&](const std::vector<int>& s) {
        ++rep.samples;
        const mpq_class sum = partial_sum(s);
        ColourResult r;
        try {
            r = colours_Z(s, state_limit);
        } catch (const LimitExceeded&) {
            ++rep.refused;
            return;
        }
        if (!r.colours && (!rep.largest_non_colouring || sum > rep.lower_bound)) {
            rep.largest_non_colouring = s;
            rep.lower_bound = sum;
        }
        if (r.colours && (!rep.smallest_colouring || sum < rep.smallest_colouring_sum)) {
            rep.smallest_colouring = s;
            rep.smallest_colouring_sum = sum;
        }
    };
    const std::vector<std::vector<int>> fixed = {{1}, {1, 2, 3}};
    for (std::size_t i = 0; i < fixed.size() && rep.samples < budget; ++i) record(fixed[i]);
    while (rep.samples < budget) {
        std::set<int> s;
        const int size = 1 + rng.below(6);
        while (static_cast<int>(s.size()) < size) s.insert(1 + rng.below(24));
        std::vector<int> v(s.begin(), s.end());
        while (partial_sum(v) >= 2) v.pop_back();
        if (v.empty()) continue;
        record(v);
    }
    return rep;
}

// ---- orientations

namespace {

void check_lambda(const Graph& g, const std::vector<int>& lambda) {
    require(lambda.size() == static_cast<std::size_t>(g.n), "lambda needs one value per vertex");
    const auto deg = g.degrees();
    for (std::size_t v = 0; v < lambda.size(); ++v)
        require(lambda[v] >= 0 && lambda[v] <= deg[v], "lambda(v) must lie in [0, deg v]");
}

/// Dinic's algorithm on an explicit arc list.
class MaxFlow {
public:
    explicit MaxFlow(int nodes) : adj_(static_cast<std::size_t>(nodes)) {}

    int add(int u, int v, int cap) {
        adj_[static_cast<std::size_t>(u)].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({v, cap});
        adj_[static_cast<std::size_t>(v)].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({u, 0});
        return static_cast<int>(arcs_.size()) - 2;
    }

    int run(int s, int t) {
        int flow = 0;
        while (bfs(s, t)) {
            it_.assign(adj_.size(), 0);
            while (int f = dfs(s, t, std::numeric_limits<int>::max())) flow += f;
        }
        return flow;
    }

    int residual(int arc) const { return arcs_[static_cast<std::size_t>(arc)].cap; }

private:
    struct Arc {
        int to, cap;
    };

    bool bfs(int s, int t) {
        level_.assign(adj_.size(), -1);
        std::deque<int> q{s};
        level_[static_cast<std::size_t>(s)] = 0;
        while (!q.empty()) {
            const int u = q.front();
            q.pop_front();
            for (int a : adj_[static_cast<std::size_t>(u)]) {
                const auto& arc = arcs_[static_cast<std::size_t>(a)];
                if (arc.cap > 0 && level_[static_cast<std::size_t>(arc.to)] < 0) {
                    level_[static_cast<std::size_t>(arc.to)] = level_[static_cast<std::size_t>(u)] + 1;
                    q.push_back(arc.to);
                }
            }
        }
        return level_[static_cast<std::size_t>(t)] >= 0;
    }

    int dfs(int u, int t, int pushed) {
        if (u == t) return pushed;
        auto& adj = adj_[static_cast<std::size_t>(u)];
        for (auto& i = it_[static_cast<std::size_t>(u)]; i < adj.size(); ++i) {
            const int a = adj[i];
            auto& arc = arcs_[static_cast<std::size_t>(a)];
            if (arc.cap <= 0 || level_[static_cast<std::size_t>(arc.to)] != level_[static_cast<std::size_t>(u)] + 1) continue;
            if (int f = dfs(arc.to, t, std::min(pushed, arc.cap))) {
                arc.cap -= f;
                arcs_[static_cast<std::size_t>(a ^ 1)].cap += f;
                return f;
            }
        }
        return 0;
    }

    std::vector<std::vector<int>> adj_;
    std::vector<Arc> arcs_;
    std::vector<int> level_;
    std::vector<std::size_t> it_;
};

}  // namespace

HallResult hall_condition(const Graph& g, const std::vector<int>& lambda) {
    check_lambda(g, lambda);
    if (g.n > 24) throw LimitExceeded("hall_condition enumerates subsets and is capped at 24 vertices");
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.n));
    for (auto [u, v] : g.edges) adj[static_cast<std::size_t>(u)] |= 1u << v, adj[static_cast<std::size_t>(v)] |= 1u << u;
    for (int k = 1; k <= g.n; ++k) {
        // Gosper's hack: k-subsets in increasing numeric order
        std::uint32_t a = (1u << k) - 1;
        const std::uint32_t end = g.n == 32 ? 0 : (1u << g.n);
        while (a < end) {
            long lam = 0, twice_edges = 0;
            for (std::uint32_t x = a; x; x &= x - 1) {
                const int v = std::countr_zero(x);
                lam += lambda[static_cast<std::size_t>(v)];
                twice_edges += std::popcount(adj[static_cast<std::size_t>(v)] & a);
            }
            if (2 * lam < twice_edges) {
                HallResult r{false, {}};
                for (std::uint32_t x = a; x; x &= x - 1) r.violating.push_back(std::countr_zero(x));
                return r;
            }
            const std::uint32_t c = a & (~a + 1), r = a + c;
            a = (((r ^ a) >> 2) / c) | r;
        }
    }
    return {};
}

OrientationResult orientation_exists(const Graph& g, const std::vector<int>& lambda) {
    check_lambda(g, lambda);
    const int m = static_cast<int>(g.edges.size());
    const int source = 0, sink = 1 + m + g.n;
    MaxFlow f(sink + 1);
    std::vector<std::pair<int, int>> to_end(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e) {
        f.add(source, 1 + e, 1);
        const auto [u, v] = g.edges[static_cast<std::size_t>(e)];
        to_end[static_cast<std::size_t>(e)] = {f.add(1 + e, 1 + m + u, 1), f.add(1 + e, 1 + m + v, 1)};
    }
    for (int v = 0; v < g.n; ++v) f.add(1 + m + v, sink, lambda[static_cast<std::size_t>(v)]);
    OrientationResult res;
    res.flow = f.run(source, sink);
    res.exists = res.flow == m;
    if (res.exists)
        for (int e = 0; e < m; ++e) {
            const auto [u, v] = g.edges[static_cast<std::size_t>(e)];
            // flow into an endpoint makes it the head
            res.arcs.push_back(f.residual(to_end[static_cast<std::size_t>(e)].first) == 0 ? Edge{v, u} : Edge{u, v});
        }
    return res;
}

std::vector<int> in_degrees(const Graph& g, const std::vector<Edge>& arcs) {
    require(arcs.size() == g.edges.size(), "orientation must give one arc per edge");
    std::multiset<Edge> want;
    for (auto [u, v] : g.edges) want.insert({std::min(u, v), std::max(u, v)});
    std::vector<int> in(static_cast<std::size_t>(g.n));
    for (auto [t, h] : arcs) {
        auto it = want.find({std::min(t, h), std::max(t, h)});
        require(it != want.end(), "arc does not match an edge");
        want.erase(it);
        ++in[static_cast<std::size_t>(h)];
    }
    return in;
}

// ---- bipartite N-hat cycles

BipartiteGraph::BipartiteGraph(int na_, int nb_, std::vector<Edge> edges_) : na(na_), nb(nb_), edges(std::move(edges_)) {
    require(na >= 0 && nb >= 0, "part sizes must be non-negative");
    std::set<Edge> seen;
    for (auto [a, b] : edges) {
        require(a >= 0 && a < na && b >= 0 && b < nb, "edge endpoint out of range");
        require(seen.insert({a, b}).second, "repeated edge");
    }
}

BipartiteGraph BipartiteGraph::parse(const std::string& text) {
    const auto v = read_ints(text);
    require(v.size() >= 3, "expected an 'n m a' header");
    const int n = v[0], m = v[1], na = v[2];
    require(na >= 0 && na <= n && m >= 0 && v.size() == static_cast<std::size_t>(3 + 2 * m),
            "expected m edge lines after the header");
    std::vector<Edge> e;
    for (int i = 0; i < m; ++i) {
        int x = v[static_cast<std::size_t>(3 + 2 * i)], y = v[static_cast<std::size_t>(4 + 2 * i)];
        if (x > y) std::swap(x, y);
        require(x >= 0 && x < na && y >= na && y < n, "edges must join A = [0, a) to B = [a, n)");
        e.push_back({x, y - na});
    }
    return {na, n - na, std::move(e)};
}

BipartiteGraph BipartiteGraph::even_cycle(int k) {
    require(k >= 2, "even cycle needs k >= 2");
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i) e.push_back({i, i}), e.push_back({(i + 1) % k, i});
    return {k, k, std::move(e)};
}

BipartiteGraph BipartiteGraph::complete(int na, int nb) {
    std::vector<Edge> e;
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < nb; ++b) e.push_back({a, b});
    return {na, nb, std::move(e)};
}

std::vector<int> hatN(const BipartiteGraph& g, const std::vector<int>& d) {
    std::vector<bool> in_d(static_cast<std::size_t>(g.na), false);
    for (int a : d) {
        require(a >= 0 && a < g.na, "D must be a subset of A");
        in_d[static_cast<std::size_t>(a)] = true;
    }
    std::vector<int> count(static_cast<std::size_t>(g.nb));
    for (auto [a, b] : g.edges)
        if (in_d[static_cast<std::size_t>(a)]) ++count[static_cast<std::size_t>(b)];
    std::vector<int> out;
    for (int b = 0; b < g.nb; ++b)
        if (count[static_cast<std::size_t>(b)] >= 2) out.push_back(b);
    return out;
}

std::string to_string(CycleVerdict v) {
    switch (v) {
    case CycleVerdict::HypothesisFails: return "hypothesis_fails";
    case CycleVerdict::ConjectureHolds: return "conjecture_holds";
    case CycleVerdict::Counterexample: return "COUNTEREXAMPLE";
    }
    return "?";
}

namespace {

struct CycleKey {
    std::uint64_t used_b;
    std::uint32_t used_a_cur;
    bool operator==(const CycleKey&) const = default;
};

struct CycleKeyHash {
    std::size_t operator()(const CycleKey& k) const {
        return static_cast<std::size_t>(k.used_b * 0x9e3779b97f4a7c15ULL ^ (k.used_a_cur * 0xc2b2ae3d27d4eb4fULL));
    }
};

/// Hamiltonian-on-A alternating cycle search with memoised dead ends.
class CycleSearch {
public:
    explicit CycleSearch(const BipartiteGraph& g) : g_(g), a_nbrs_(static_cast<std::size_t>(g.na)), b_nbrs_(static_cast<std::size_t>(g.nb)) {
        for (auto [a, b] : g.edges) {
            a_nbrs_[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
            b_nbrs_[static_cast<std::size_t>(b)] |= std::uint32_t{1} << a;
        }
    }

    bool run(std::vector<Edge>& cycle) {
        path_.clear();
        if (!dfs(1u, 0, 0)) return false;
        cycle = path_;
        return true;
    }

private:
    bool dfs(std::uint32_t used_a, std::uint64_t used_b, int cur) {
        const std::uint32_t full = (1u << g_.na) - 1;
        const std::uint64_t free_b = a_nbrs_[static_cast<std::size_t>(cur)] & ~used_b;
        if (used_a == full) {
            for (std::uint64_t x = free_b; x; x &= x - 1) {
                const int b = std::countr_zero(x);
                if (b_nbrs_[static_cast<std::size_t>(b)] & 1u) {
                    path_.push_back({cur, b});
                    return true;
                }
            }
            return false;
        }
        const CycleKey key{used_b, (used_a << 4) | static_cast<std::uint32_t>(cur)};
        if (dead_.count(key)) return false;
        for (std::uint64_t x = free_b; x; x &= x - 1) {
            const int b = std::countr_zero(x);
            for (std::uint32_t y = b_nbrs_[static_cast<std::size_t>(b)] & ~used_a; y; y &= y - 1) {
                const int a = std::countr_zero(y);
                path_.push_back({cur, b});
                if (dfs(used_a | (1u << a), used_b | (std::uint64_t{1} << b), a)) return true;
                path_.pop_back();
            }
        }
        dead_.insert(key);
        return false;
    }

    const BipartiteGraph& g_;
    std::vector<std::uint64_t> a_nbrs_;
    std::vector<std::uint32_t> b_nbrs_;
    std::unordered_set<CycleKey, CycleKeyHash> dead_;
    std::vector<Edge> path_;
};

}  // namespace

CycleResult bipartite_cycle_check(const BipartiteGraph& g) {
    require(g.na >= 2, "the cycle question needs |A| >= 2");
    if (g.na > 12 || g.nb > 64) throw LimitExceeded("exact cycle search is capped at |A| <= 12, |B| <= 64");
    CycleResult res;
    for (int k = 2; k <= g.na; ++k) {
        std::uint32_t d = (1u << k) - 1;
        while (d < (1u << g.na)) {
            std::vector<int> dv;
            for (std::uint32_t x = d; x; x &= x - 1) dv.push_back(std::countr_zero(x));
            if (hatN(g, dv).size() < dv.size()) {
                res.verdict = CycleVerdict::HypothesisFails;
                res.failing_set = dv;
                return res;
            }
            const std::uint32_t c = d & (~d + 1), r = d + c;
            d = (((r ^ d) >> 2) / c) | r;
        }
    }
    CycleSearch search(g);
    res.verdict = search.run(res.cycle) ? CycleVerdict::ConjectureHolds : CycleVerdict::Counterexample;
    return res;
}

// ---- flip colourings

namespace {

int check_flip_shape(const FlipColouring& fc) {
    const int k = static_cast<int>(fc.a.size());
    require(k >= 1, "a must be nonempty");
    int d = 0;
    for (int j = 0; j < k; ++j) {
        require(fc.a[static_cast<std::size_t>(j)] >= 1, "a_j must be positive");
        require(j == 0 || fc.a[static_cast<std::size_t>(j)] > fc.a[static_cast<std::size_t>(j - 1)], "a must be increasing");
        d += fc.a[static_cast<std::size_t>(j)];
    }
    for (int x : fc.g.degrees()) require(x == d, "graph must be regular of degree sum(a) = " + std::to_string(d));
    require(fc.colour.size() == fc.g.edges.size(), "one colour per edge expected");
    for (int c : fc.colour) require(c >= 1 && c <= k, "edge colours must lie in 1..k");
    return k;
}

/// e[v][j] under the chosen mode.
std::vector<std::vector<int>> neighbourhood_counts(const FlipColouring& fc, int k, FlipMode mode) {
    const int n = fc.g.n;
    const auto adj = fc.g.adjacency();
    std::vector<std::vector<int>> e(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(k)));
    std::vector<char> in(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        std::fill(in.begin(), in.end(), 0);
        in[static_cast<std::size_t>(v)] = 1;
        for (int w : adj[static_cast<std::size_t>(v)]) in[static_cast<std::size_t>(w)] = 1;
        for (std::size_t i = 0; i < fc.g.edges.size(); ++i) {
            const auto [x, y] = fc.g.edges[i];
            const bool bx = in[static_cast<std::size_t>(x)], by = in[static_cast<std::size_t>(y)];
            if (mode == FlipMode::Induced ? (bx && by) : (bx || by))
                ++e[static_cast<std::size_t>(v)][static_cast<std::size_t>(fc.colour[i] - 1)];
        }
    }
    return e;
}

std::vector<std::vector<int>> colour_degrees(const FlipColouring& fc, int k) {
    std::vector<std::vector<int>> deg(static_cast<std::size_t>(fc.g.n), std::vector<int>(static_cast<std::size_t>(k)));
    for (std::size_t i = 0; i < fc.g.edges.size(); ++i) {
        const auto [x, y] = fc.g.edges[i];
        ++deg[static_cast<std::size_t>(x)][static_cast<std::size_t>(fc.colour[i] - 1)];
        ++deg[static_cast<std::size_t>(y)][static_cast<std::size_t>(fc.colour[i] - 1)];
    }
    return deg;
}

int flip_score(const FlipColouring& fc, int k, FlipMode mode) {
    int score = 0;
    const auto deg = colour_degrees(fc, k);
    for (const auto& row : deg)
        for (int j = 0; j < k; ++j) score += std::abs(row[static_cast<std::size_t>(j)] - fc.a[static_cast<std::size_t>(j)]);
    const auto e = neighbourhood_counts(fc, k, mode);
    for (const auto& row : e)
        for (int j = 0; j + 1 < k; ++j)
            score += std::max(0, row[static_cast<std::size_t>(j + 1)] - row[static_cast<std::size_t>(j)] + 1);
    return score;
}

}  // namespace

FlipResult flip_verify(const FlipColouring& fc, FlipMode mode) {
    const int k = check_flip_shape(fc);
    FlipResult res;
    res.e = neighbourhood_counts(fc, k, mode);
    const auto deg = colour_degrees(fc, k);
    for (int v = 0; v < fc.g.n; ++v)
        for (int j = 0; j < k; ++j)
            if (deg[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)] != fc.a[static_cast<std::size_t>(j)]) {
                res.condition = 1, res.vertex = v, res.colour = j + 1;
                res.reason = "vertex " + std::to_string(v) + " has " + std::to_string(deg[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)]) +
                             " edges of colour " + std::to_string(j + 1) + ", expected " + std::to_string(fc.a[static_cast<std::size_t>(j)]);
                return res;
            }
    for (int v = 0; v < fc.g.n; ++v)
        for (int j = 1; j < k; ++j) {
            const auto& row = res.e[static_cast<std::size_t>(v)];
            if (row[static_cast<std::size_t>(j)] >= row[static_cast<std::size_t>(j - 1)]) {
                res.condition = 2, res.vertex = v, res.colour = j + 1;
                res.reason = "at vertex " + std::to_string(v) + ": e_" + std::to_string(j + 1) + " = " + std::to_string(row[static_cast<std::size_t>(j)]) +
                             " is not below e_" + std::to_string(j) + " = " + std::to_string(row[static_cast<std::size_t>(j - 1)]);
                return res;
            }
        }
    res.holds = true;
    return res;
}

FlipSearchResult flip_search(const Graph& g, const std::vector<int>& a, std::uint64_t budget, std::uint64_t seed,
                             FlipMode mode) {
    FlipSearchResult res;
    Rng rng(seed);
    const int k = static_cast<int>(a.size());
    FlipColouring cur{g, std::vector<int>(g.edges.size(), 1), a};
    check_flip_shape(cur);
    if (g.edges.empty()) {
        res.best = cur;
        res.found = flip_verify(cur, mode).holds;
        return res;
    }
    int d = 0;
    for (int x : a) d += x;
    for (auto& c : cur.colour) {
        int r = rng.below(d), j = 0;
        while (r >= a[static_cast<std::size_t>(j)]) r -= a[static_cast<std::size_t>(j++)];
        c = j + 1;
    }
    int score = flip_score(cur, k, mode);
    res.best = cur;
    res.score = score;
    while (res.moves < budget && res.score > 0) {
        ++res.moves;
        const std::size_t e = rng.below(std::uint64_t{cur.colour.size()});
        const int old = cur.colour[e];
        cur.colour[e] = 1 + rng.below(k);
        const int s = flip_score(cur, k, mode);
        if (s <= score || rng.unit() < 0.02) {
            score = s;
            if (s < res.score) res.best = cur, res.score = s;
        } else {
            cur.colour[e] = old;
        }
    }
    res.found = res.score == 0 && flip_verify(res.best, mode).holds;
    return res;
}

}  // namespace cwb::graphlab
