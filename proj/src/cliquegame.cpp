#include "cwb/cliquegame.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <unordered_map>

namespace cwb::cliquegame {

std::string to_string(Player p) { return p == Player::Red ? "RED" : "BLUE"; }

int edge_index(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    require(u != v && u >= 0 && v < n, "bad edge");
    return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

std::pair<int, int> edge_endpoints(int n, int edge) {
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge_index(n, u, v) == edge) return {u, v};
    throw InvalidInput("edge index out of range");
}

GameState::GameState(int n) : GameState(n, std::vector<Colour>(static_cast<std::size_t>(n * (n - 1) / 2), Colour::None)) {}

GameState::GameState(int n, std::vector<Colour> colours, Rules rules)
    : n_(n), colours_(std::move(colours)), rules_(rules) {
    require(n >= 0 && n <= 8, "board size must be 0..8");
    require(static_cast<int>(colours_.size()) == edge_count(), "one colour per edge expected");
    const auto first = rules_.first == Player::Red ? Colour::Red : Colour::Blue;
    const auto nf = std::count(colours_.begin(), colours_.end(), first);
    const auto ns = std::count_if(colours_.begin(), colours_.end(), [&](Colour c) { return c != Colour::None && c != first; });
    require(nf - ns == 0 || nf - ns == 1, "colour counts inconsistent with alternating play");
}

Colour GameState::colour(int u, int v) const { return colour(edge_index(n_, u, v)); }

bool GameState::terminal() const {
    return std::none_of(colours_.begin(), colours_.end(), [](Colour c) { return c == Colour::None; });
}

Player GameState::to_move() const {
    const auto first = rules_.first == Player::Red ? Colour::Red : Colour::Blue;
    const auto nf = std::count(colours_.begin(), colours_.end(), first);
    const auto coloured = std::count_if(colours_.begin(), colours_.end(), [](Colour c) { return c != Colour::None; });
    return 2 * nf == coloured ? rules_.first : other(rules_.first);
}

void GameState::play(int edge) {
    require(edge >= 0 && edge < edge_count() && colours_[static_cast<std::size_t>(edge)] == Colour::None,
            "edge already coloured or out of range");
    colours_[static_cast<std::size_t>(edge)] = to_move() == Player::Red ? Colour::Red : Colour::Blue;
}

std::uint32_t GameState::mask(Colour c) const {
    std::uint32_t m = 0;
    for (int e = 0; e < edge_count(); ++e)
        if (colours_[static_cast<std::size_t>(e)] == c) m |= 1u << e;
    return m;
}

int clique_number(int n, std::uint32_t edges) {
    int best = n > 0 ? 1 : 0;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        const int size = std::popcount(s);
        if (size <= best) continue;
        bool clique = true;
        for (int u = 0; u < n && clique; ++u)
            if ((s >> u) & 1u)
                for (int v = u + 1; v < n && clique; ++v)
                    if ((s >> v) & 1u) clique = (edges >> edge_index(n, u, v)) & 1u;
        if (clique) best = size;
    }
    return best;
}

Player winner_at_end(const GameState& s) {
    require(s.terminal(), "winner_at_end needs a fully coloured board");
    const int red = clique_number(s.size(), s.mask(Colour::Red));
    const int blue = clique_number(s.size(), s.mask(Colour::Blue));
    if (s.rules().strict == Player::Red) return red > blue ? Player::Red : Player::Blue;
    return blue > red ? Player::Blue : Player::Red;
}

namespace {

/// Minimax over (first-player edges, second-player edges). Values are "the
/// strict side wins", so the game is boolean.
class Solver {
public:
    Solver(int n, const SolveOptions& opt) : n_(n), m_(n * (n - 1) / 2), opt_(opt) {
        full_ = m_ == 0 ? 0u : ((1u << m_) - 1u);
        for (std::uint32_t s = 0; s < (1u << n); ++s) {
            std::uint32_t pairs = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (((s >> u) & 1u) && ((s >> v) & 1u)) pairs |= 1u << edge_index(n, u, v);
            subsets_.push_back({std::popcount(s), pairs});
        }
        std::sort(subsets_.begin(), subsets_.end(), [](auto a, auto b) { return a.first > b.first; });
        if (opt_.memoize && opt_.canonicalize) {
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            do {
                std::array<std::uint8_t, 32> map{};
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v)
                        map[static_cast<std::size_t>(edge_index(n, u, v))] = static_cast<std::uint8_t>(
                            edge_index(n, perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]));
                edge_maps_.push_back(map);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }

    bool first_is_strict() const { return opt_.rules.first == opt_.rules.strict; }

    int clique(std::uint32_t edges) const {
        for (auto [size, pairs] : subsets_)
            if ((edges & pairs) == pairs) return size;
        return 0;
    }

    bool strict_wins_terminal(std::uint32_t f, std::uint32_t s) const {
        const int cf = clique(f), cs = clique(s);
        return first_is_strict() ? cf > cs : cs > cf;
    }

    bool first_to_move(std::uint32_t f, std::uint32_t s) const { return std::popcount(f) == std::popcount(s); }

    std::uint64_t key(std::uint32_t f, std::uint32_t s) const {
        if (edge_maps_.empty()) return (std::uint64_t{f} << 32) | s;
        std::uint64_t best = ~0ULL;
        for (const auto& map : edge_maps_) {
            std::uint32_t pf = 0, ps = 0;
            for (std::uint32_t x = f; x; x &= x - 1) pf |= 1u << map[static_cast<std::size_t>(std::countr_zero(x))];
            for (std::uint32_t x = s; x; x &= x - 1) ps |= 1u << map[static_cast<std::size_t>(std::countr_zero(x))];
            best = std::min(best, (std::uint64_t{pf} << 32) | ps);
        }
        return best;
    }

    /// Uncoloured edges, those touching the most-coloured vertex first.
    std::vector<int> ordered_moves(std::uint32_t f, std::uint32_t s) const {
        std::array<int, 8> deg{};
        const std::uint32_t used = f | s;
        std::vector<int> moves;
        for (int e = 0; e < m_; ++e) {
            const auto [u, v] = endpoints(e);
            if ((used >> e) & 1u) ++deg[static_cast<std::size_t>(u)], ++deg[static_cast<std::size_t>(v)];
            else moves.push_back(e);
        }
        auto weight = [&](int e) {
            const auto [u, v] = endpoints(e);
            return std::max(deg[static_cast<std::size_t>(u)], deg[static_cast<std::size_t>(v)]);
        };
        std::stable_sort(moves.begin(), moves.end(), [&](int a, int b) { return weight(a) > weight(b); });
        return moves;
    }

    std::pair<int, int> endpoints(int e) const {
        int u = 0;
        while (e >= n_ - 1 - u) e -= n_ - 1 - u, ++u;
        return {u, u + 1 + e};
    }

    bool value(std::uint32_t f, std::uint32_t s) {
        ++nodes_;
        if ((f | s) == full_) return strict_wins_terminal(f, s);
        std::uint64_t k = 0;
        if (opt_.memoize) {
            k = key(f, s);
            if (auto it = table_.find(k); it != table_.end()) return it->second;
        }
        const bool first = first_to_move(f, s);
        // The mover wants `strict wins` iff the mover is the strict side.
        const bool want = first == first_is_strict();
        bool result = !want;
        for (int e : ordered_moves(f, s)) {
            const std::uint32_t bit = 1u << e;
            if (value(first ? f | bit : f, first ? s : s | bit) == want) {
                result = want;
                break;
            }
        }
        if (opt_.memoize) table_.emplace(k, result);
        return result;
    }

    std::uint64_t nodes() const { return nodes_; }
    std::uint64_t memo_entries() const { return table_.size(); }
    std::uint32_t full() const { return full_; }

private:
    int n_, m_;
    std::uint32_t full_ = 0;
    SolveOptions opt_;
    std::vector<std::pair<int, std::uint32_t>> subsets_;
    std::vector<std::array<std::uint8_t, 32>> edge_maps_;
    std::unordered_map<std::uint64_t, bool> table_;
    std::uint64_t nodes_ = 0;
};

void check_cap(int n, const SolveOptions& opt) {
    require(n >= 1, "need at least one vertex");
    if (n > std::min(opt.cap, kHardCap))
        throw LimitExceeded("K_" + std::to_string(n) + " is above the solver cap " + std::to_string(opt.cap) +
                            "; K_6 is available with an explicit cap of 6");
}

Colour colour_of(Player p) { return p == Player::Red ? Colour::Red : Colour::Blue; }

}  // namespace

Player solve_position(const GameState& st, const SolveOptions& opt_in) {
    SolveOptions opt = opt_in;
    opt.rules = st.rules();
    check_cap(st.size(), opt);
    Solver solver(st.size(), opt);
    const bool strict = solver.value(st.mask(colour_of(opt.rules.first)), st.mask(colour_of(other(opt.rules.first))));
    return strict ? opt.rules.strict : other(opt.rules.strict);
}

Solution solve(int n, const SolveOptions& opt) {
    check_cap(n, opt);
    Solution sol;
    sol.n = n;
    Solver solver(n, opt);
    const Colour first_colour = colour_of(opt.rules.first), second_colour = colour_of(other(opt.rules.first));

    bool strict_wins;
    const auto root_moves = solver.ordered_moves(0, 0);
    if (opt.threads > 1 && root_moves.size() > 1) {
        // Root split with one table per task; the merge is an exact any/all.
        const bool want = solver.first_is_strict();
        const auto values = parallel_tasks(root_moves.size(), opt.threads, [&](std::size_t i) {
            Solver local(n, opt);
            const bool v = local.value(1u << root_moves[i], 0);
            return std::tuple<bool, std::uint64_t, std::uint64_t>{v, local.nodes(), local.memo_entries()};
        });
        strict_wins = !want;
        for (const auto& [v, nodes, entries] : values) {
            if (v == want) strict_wins = want;
            sol.nodes += nodes;
            sol.memo_entries += entries;
        }
    } else {
        strict_wins = solver.value(0, 0);
    }
    sol.winner = strict_wins ? opt.rules.strict : other(opt.rules.strict);

    // Walk one optimal line: winners pick the first winning move, losers the first move.
    std::uint32_t f = 0, s = 0;
    while ((f | s) != solver.full()) {
        const bool first = solver.first_to_move(f, s);
        const bool want = first == solver.first_is_strict();
        const auto moves = solver.ordered_moves(f, s);
        int chosen = moves.front();
        for (int e : moves) {
            const std::uint32_t bit = 1u << e;
            if (solver.value(first ? f | bit : f, first ? s : s | bit) == want) {
                chosen = e;
                break;
            }
        }
        const auto [u, v] = solver.endpoints(chosen);
        sol.principal_variation.push_back({{u, v}, first ? first_colour : second_colour});
        if (first) f |= 1u << chosen;
        else s |= 1u << chosen;
    }
    sol.nodes += solver.nodes();
    sol.memo_entries += solver.memo_entries();
    return sol;
}

}  // namespace cwb::cliquegame
