#pragma once

// Tournament inversion number inv(T) by breadth-first search over subset
// inversions, plus additivity probes for the join T1 -> T2.

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cwb/common.hpp"

namespace cwb::tournaments {

inline constexpr int kDefaultCap = 7;
inline constexpr int kHardCap = 8;

/// Orientation of K_n, n <= 8. Bit idx(i,j) (pairs i<j in lexicographic order)
/// is set iff the edge is directed i -> j.
class Tournament {
public:
    Tournament() = default;
    Tournament(int n, std::uint32_t bits);

    /// Transitive tournament in which order[0] beats everyone, order[1] everyone but order[0], ...
    static Tournament transitive(std::span<const int> order);
    /// Transitive tournament 0 -> 1 -> ... -> n-1.
    static Tournament transitive(int n);
    /// "n bits" with the bits in pair order, whitespace ignored ("3 101").
    static Tournament parse(std::string_view text);

    static int pair_index(int n, int i, int j) { return i * (2 * n - i - 1) / 2 + (j - i - 1); }
    static int pair_count(int n) { return n * (n - 1) / 2; }

    int size() const { return n_; }
    std::uint32_t bits() const { return bits_; }
    /// true iff u -> v.
    bool beats(int u, int v) const;
    bool is_transitive() const;
    Tournament reversed() const;
    /// Vertex v becomes perm[v].
    Tournament relabelled(std::span<const int> perm) const;
    std::string str() const;

    friend bool operator==(const Tournament&, const Tournament&) = default;

private:
    int n_ = 0;
    std::uint32_t bits_ = 0;
};

/// Bit mask of the pairs with both endpoints in the vertex set `subset`.
std::uint32_t internal_pairs(int n, std::uint32_t subset);

/// Reverses every edge with both endpoints in `subset`.
Tournament invert_subset(const Tournament& t, std::uint32_t subset);

/// Disjoint union with every edge directed from t1 to t2; t2's vertices are shifted by |t1|.
Tournament join(const Tournament& t1, const Tournament& t2);

/// inv for every labelled tournament on n vertices, indexed by bit encoding.
class InvTable {
public:
    int size() const { return n_; }
    int inv(const Tournament& t) const;
    int inv(std::uint32_t bits) const { return dist_[bits]; }
    int max_inv() const;
    /// histogram[d] = number of labelled tournaments with inv = d.
    std::vector<std::uint64_t> histogram() const;
    std::size_t state_count() const { return dist_.size(); }

private:
    friend InvTable inv_table(int n, int cap, unsigned threads);
    int n_ = 0;
    std::vector<std::uint8_t> dist_;
};

/// Multi-source BFS from all n! transitive tournaments with every subset of size >= 2
/// as a move. n above `cap` (default 7, at most 8) is refused.
InvTable inv_table(int n, int cap = kDefaultCap, unsigned threads = 1);

struct AdditivityReport {
    int n1 = 0, n2 = 0;
    std::uint64_t pairs = 0;
    /// defect = inv(t1 -> t2) - inv(t1) - inv(t2) -> number of pairs
    std::map<int, std::uint64_t> distribution;
    int min_defect = 0, max_defect = 0;
    Tournament min_witness_1, min_witness_2, max_witness_1, max_witness_2;
};

AdditivityReport additivity_probe(int n1, int n2, int cap = kDefaultCap, unsigned threads = 1);

}  // namespace cwb::tournaments
