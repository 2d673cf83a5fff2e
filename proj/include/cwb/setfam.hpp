#pragma once

// Set-pair families: the Bollobas two-families condition, the conjectured
// variant with |A_i n B_i| = 2, the extremal construction meeting its bound,
// and exhaustive maxima over small ground sets.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cwb/common.hpp"
#include "json.hpp"

namespace cwb::setfam {

using Set = std::vector<int>;  // sorted, elements >= 1

struct SetPair {
    Set a, b;
    friend bool operator==(const SetPair&, const SetPair&) = default;
    friend auto operator<=>(const SetPair&, const SetPair&) = default;
};

struct SetPairFamily {
    std::vector<SetPair> pairs;
    int a = 0, b = 0;
    std::size_t size() const { return pairs.size(); }
    /// Sorted set of sorted pairs.
    SetPairFamily canonical() const;
};

enum class Mode { Bollobas, Calbet };

struct Verdict {
    bool holds = true;
    std::size_t size = 0;
    mpz_class bound;
    bool within_bound = true;
    /// For a failed condition: the offending indices (i, j, k); k = -1 in Bollobas mode.
    std::optional<std::array<int, 3>> witness;
    std::string reason;
};

/// |A_i| = a, |B_i| = b, A_i n B_i = {} are preconditions (InvalidInput otherwise);
/// checks A_i n B_j != {} for i != j and compares |I| with C(a+b, a).
Verdict check_bollobas(const SetPairFamily& f);

/// |A_i| = a, |B_i| = b, |A_i n B_i| = 2 and b >= a >= 2 are preconditions;
/// checks A_i n B_j not a subset of A_k n B_k for all i != j and every k,
/// and compares |I| with bound(a, b).
Verdict check_calbet(const SetPairFamily& f);

/// sum_{i=2}^{a} 2^{i-2} C(a+b-2i, a-i), exactly.
mpz_class bound(int a, int b);

/// The extremal family on {1..a+b-2}: for c = 2..a, every a-set containing
/// {2c-3, 2c-2} and exactly one of {2d-3, 2d-2} for each d < c, with
/// B = complement + {2c-3, 2c-2}.
SetPairFamily calbet_construction(int a, int b);

/// All (A, [a+b] \ A) with |A| = a; the Bollobas equality case.
SetPairFamily partition_family(int a, int b);

struct BruteForceLimits {
    int max_a = 3;
    int max_b = 4;
    int max_ground = 8;
};

struct SearchResult {
    std::size_t maximum = 0;
    SetPairFamily witness;
    std::uint64_t nodes = 0;
    std::size_t candidates = 0;
};

/// Exact maximum family size over the ground set {1..ground}, by branch and
/// bound (greedy-colouring bound on the pairwise-compatibility graph).
SearchResult brute_force_max(int a, int b, int ground, Mode mode, const BruteForceLimits& lim = {});

nlohmann::json to_json(const SetPairFamily& f);
/// A list of [A, B] pairs; a and b are read off the first pair (or passed in for empty lists).
SetPairFamily family_from_json(const nlohmann::json& j, int a = 0, int b = 0);

}  // namespace cwb::setfam
