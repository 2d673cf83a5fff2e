#pragma once

// Latin squares: cuboctahedron counts, Cayley tables, group-table
// recognition, the Jacobson-Matthews sampler and a minimisation search.

#include <cstdint>
#include <string>
#include <vector>

#include "cwb/common.hpp"

namespace cwb::latin {

class LatinSquare {
public:
    LatinSquare() = default;
    /// Row-major cells; throws InvalidInput unless every row and column is a permutation of 0..n-1.
    LatinSquare(int n, std::vector<int> cells);
    static LatinSquare cyclic(int n);
    /// n lines of n whitespace-separated symbols.
    static LatinSquare parse(const std::string& text);

    int order() const { return n_; }
    int at(int r, int c) const { return cells_[static_cast<std::size_t>(r * n_ + c)]; }
    const std::vector<int>& cells() const { return cells_; }
    std::vector<std::vector<int>> rows() const;
    std::string str() const;

    friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

private:
    int n_ = 0;
    std::vector<int> cells_;
};

bool is_latin(int n, const std::vector<int>& cells);

/// L'(r, c) = sym[L(row[r], col[c])].
LatinSquare isotope(const LatinSquare& l, const std::vector<int>& row, const std::vector<int>& col,
                    const std::vector<int>& sym);

struct GroupSpec {
    enum class Kind { Cyclic, Product, Table };
    Kind kind = Kind::Cyclic;
    std::vector<int> orders;  // one entry for Cyclic, factors for Product
    std::vector<int> table;   // row-major for Table

    static GroupSpec cyclic(int n) { return {Kind::Cyclic, {n}, {}}; }
    static GroupSpec product(std::vector<int> factors) { return {Kind::Product, std::move(factors), {}}; }
    static GroupSpec explicit_table(std::vector<int> t) { return {Kind::Table, {}, std::move(t)}; }
    /// "Z6", "Z2xZ2" or "Z2xZ3xZ4".
    static GroupSpec parse(const std::string& s);
};

/// Throws InvalidInput for an explicit table that is not Latin or not associative.
LatinSquare cayley_table(const GroupSpec& g);

/// Sum over 2x2 value keys of (ordered row pair, ordered column pair) of multiplicity squared.
/// O(n^4) time and memory; `threads` splits the first row index.
std::uint64_t count_cuboctahedra(const LatinSquare& l, unsigned threads = 1);

/// Normalises the first row and column to the identity ordering and checks associativity.
bool is_group_table(const LatinSquare& l);

/// Jacobson-Matthews walk from the cyclic square; `steps` proper squares are
/// visited after the start.
LatinSquare jm_sample(int n, std::uint64_t steps, std::uint64_t seed);

/// Independent chains with seeds derive_seed(seed, i); output is in chain order.
std::vector<LatinSquare> jm_samples(int n, std::size_t count, std::uint64_t steps, std::uint64_t seed,
                                    unsigned threads = 1);

/// n^3, the default chain length.
std::uint64_t default_steps(int n);

struct MinimizeResult {
    LatinSquare best;
    std::uint64_t count = 0;
    double ratio = 0;  // count / n^4
    std::uint64_t evaluations = 0;
    int restarts = 0;
};

/// Local search: each candidate is one proper JM step from the current square,
/// accepted when its count does not increase. `budget` bounds evaluations and
/// the search restarts from a fresh sample `restarts` times.
MinimizeResult minimize_cuboctahedra(int n, std::uint64_t budget, std::uint64_t seed, int restarts = 4);

}  // namespace cwb::latin
