#pragma once

// Permutation patterns (classical and with one box), inversion statistics,
// Wilf-equivalence tables and shattering counts.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cwb/common.hpp"

namespace cwb::perms {

inline constexpr int kDefaultExhaustionLimit = 11;

/// One-line notation over 1..n.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> entries);

    static Permutation identity(int n);
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    std::span<const int> entries() const { return entries_; }
    Permutation reversed() const;
    std::string str() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> entries_;
};

/// A classical pattern, optionally with one box: sigma_1..sigma_t [] sigma_{t+1}..sigma_k.
/// The box requires the occurrence positions x_t and x_{t+1} to be non-adjacent.
class Pattern {
public:
    Pattern() = default;
    /// `box` is t (1 <= t < k), or 0 for a classical pattern.
    Pattern(std::vector<int> letters, int box);

    /// Tokens separated by spaces with "_" for the box ("4 _ 1 3 2"); a token-free
    /// string such as "4_132" is read one character per letter.
    static Pattern parse(std::string_view text);

    int size() const { return static_cast<int>(letters_.size()); }
    int box() const { return box_; }
    bool has_box() const { return box_ != 0; }
    std::span<const int> letters() const { return letters_; }
    Pattern classical() const { return Pattern(letters_, 0); }
    std::string str() const;

    friend bool operator==(const Pattern&, const Pattern&) = default;

private:
    friend class Matcher;
    std::vector<int> letters_;
    int box_ = 0;
};

/// Precomputed backtracking matcher for one pattern. Each new letter only needs
/// to be compared with its nearest already-placed value neighbours.
class Matcher {
public:
    explicit Matcher(const Pattern& q);
    bool operator()(std::span<const int> p) const;

private:
    bool extend(std::span<const int> p, int depth, int prev, std::array<int, 16>& pos) const;
    std::vector<int> letters_;
    std::vector<int> lower_;  // index of earlier letter just below, or -1
    std::vector<int> upper_;  // index of earlier letter just above, or -1
    int box_ = 0;
};

int inversions(std::span<const int> p);
inline int inversions(const Permutation& p) { return inversions(p.entries()); }

bool contains(std::span<const int> p, const Pattern& q);
inline bool contains(const Permutation& p, const Pattern& q) { return contains(p.entries(), q); }

struct ScanOptions {
    int exhaustion_limit = kDefaultExhaustionLimit;
    unsigned threads = 1;
};

/// av_n(q) by exhaustive scan of S_n.
std::uint64_t count_avoiders(int n, const Pattern& q, const ScanOptions& opt = {});

struct WilfTable {
    std::vector<Pattern> patterns;
    /// counts[i][n-1] = av_n(patterns[i]) for n = 1..n_max.
    std::vector<std::vector<std::uint64_t>> counts;
    /// equal[n-1]: all patterns share the same count at length n.
    std::vector<bool> equal;
    bool all_equal() const;
};

WilfTable wilf_check(int n_max, const std::vector<Pattern>& patterns, const ScanOptions& opt = {});

/// The three conjectured Wilf-equivalent triples (box after position 1, 2, 3).
std::vector<std::vector<Pattern>> boxed_triples();

struct InversionTable {
    int n_max = 0;
    int k_max = 0;
    /// b[n][k] for n = 0..n_max, k = 0..k_max (row 0 unused except b[0][0] = 1).
    std::vector<std::vector<std::uint64_t>> b;
    /// Total avoiders per n (all k, not truncated at k_max).
    std::vector<std::uint64_t> totals;
    /// First (n, k) with b[n+1][k] < b[n][k], if any.
    std::optional<std::pair<int, int>> monotonicity_violation;
};

/// b[n][k] = #{p in S_n avoiding 1324 with k inversions}, n <= n_max, k <= k_max.
InversionTable avoiders_by_inversions(int n_max, int k_max, const ScanOptions& opt = {});

/// av_n(1324)^(1/n) for n = 1..n_max. The conjectured limit e^{pi sqrt(2/3)} ~ 13.002
/// is far out of reach at these lengths.
std::vector<double> growth_estimate(int n_max, const ScanOptions& opt = {});

struct ShatterResult {
    std::vector<std::vector<int>> sets;  // ascending, 1-based
    std::size_t count() const { return sets.size(); }
};

/// k-subsets X of [n] such that every one of the k! relative orders of X occurs.
ShatterResult shattered_ksets(const std::vector<Permutation>& family, int k);

struct ShatterSearchResult {
    std::vector<Permutation> family;
    std::size_t count = 0;
    std::uint64_t evaluations = 0;
    int restarts = 0;
};

/// Seeded hill climbing with restarts over families of `family_size` permutations
/// of [n], maximising the number of shattered triples. The returned count is a
/// lower bound for the extremal value.
ShatterSearchResult shatter_search(int n, int family_size, std::uint64_t budget, std::uint64_t seed);

}  // namespace cwb::perms
