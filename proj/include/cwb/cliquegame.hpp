#pragma once

// Exact solver for the RED/BLUE edge-colouring clique game on K_n.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cwb/common.hpp"

namespace cwb::cliquegame {

inline constexpr int kDefaultCap = 5;
inline constexpr int kHardCap = 6;

enum class Player : std::uint8_t { Red, Blue };
enum class Colour : std::uint8_t { None, Red, Blue };

std::string to_string(Player p);
inline Player other(Player p) { return p == Player::Red ? Player::Blue : Player::Red; }

/// Who moves first, and whose clique must be strictly larger to win. The
/// standard game is {Red, Red}: RED moves first and wins only if strictly ahead.
struct Rules {
    Player first = Player::Red;
    Player strict = Player::Red;
};

/// Partially coloured K_n; edges indexed by pairs (i<j) in lexicographic order.
class GameState {
public:
    GameState() = default;
    explicit GameState(int n);
    GameState(int n, std::vector<Colour> colours, Rules rules = {});

    int size() const { return n_; }
    int edge_count() const { return n_ * (n_ - 1) / 2; }
    Colour colour(int edge) const { return colours_[static_cast<std::size_t>(edge)]; }
    Colour colour(int u, int v) const;
    bool terminal() const;
    Player to_move() const;
    void play(int edge);
    std::uint32_t mask(Colour c) const;
    const Rules& rules() const { return rules_; }

private:
    int n_ = 0;
    std::vector<Colour> colours_;
    Rules rules_;
};

std::pair<int, int> edge_endpoints(int n, int edge);
int edge_index(int n, int u, int v);

/// Largest clique (in vertices) of the graph on n vertices with the given edge
/// mask. An edgeless graph on n >= 1 vertices has clique number 1.
int clique_number(int n, std::uint32_t edges);

/// Winner of a fully coloured board: the strict side wins iff its largest clique
/// is strictly larger than the other's.
Player winner_at_end(const GameState& s);

struct SolveOptions {
    int cap = kDefaultCap;
    bool memoize = true;
    /// Identify states up to vertex relabelling (memoized mode only).
    bool canonicalize = true;
    unsigned threads = 1;
    Rules rules{};
};

struct Solution {
    int n = 0;
    Player winner = Player::Blue;
    /// One optimal line of play: (u, v, colour) per move, RED/BLUE alternating.
    std::vector<std::pair<std::pair<int, int>, Colour>> principal_variation;
    std::uint64_t nodes = 0;
    std::uint64_t memo_entries = 0;
};

/// Winner of `s` under optimal play from this position.
Player solve_position(const GameState& s, const SolveOptions& opt = {});

/// Winner of the empty board on K_n with a principal variation.
Solution solve(int n, const SolveOptions& opt = {});

}  // namespace cwb::cliquegame
