#include "cwb/tournaments.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cctype>
#include <numeric>
#include <sstream>

namespace cwb::tournaments {

namespace {

constexpr std::uint8_t kUnseen = 0xFF;

std::uint32_t full_mask(int n) {
    const int m = Tournament::pair_count(n);
    return m == 32 ? ~0u : ((1u << m) - 1u);
}

void check_cap(int n, int cap) {
    require(n >= 1, "tournament needs at least one vertex");
    cap = std::min(cap, kHardCap);
    if (n > cap)
        throw LimitExceeded("tournament size " + std::to_string(n) + " exceeds the table cap " +
                            std::to_string(cap) + " (2^" + std::to_string(Tournament::pair_count(n)) +
                            " states); n = 8 needs an explicit cap of 8");
}

}  // namespace

Tournament::Tournament(int n, std::uint32_t bits) : n_(n), bits_(bits) {
    require(n >= 0 && n <= kHardCap, "tournament size must be 0..8");
    require((bits & ~full_mask(n)) == 0, "bits beyond the pair count");
}

Tournament Tournament::transitive(std::span<const int> order) {
    const int n = static_cast<int>(order.size());
    std::vector<int> rank(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) rank[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])] = r;
    std::uint32_t bits = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rank[static_cast<std::size_t>(i)] < rank[static_cast<std::size_t>(j)]) bits |= 1u << pair_index(n, i, j);
    return Tournament(n, bits);
}

Tournament Tournament::transitive(int n) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    return transitive(order);
}

Tournament Tournament::parse(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    int n = 0;
    bool any = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) n = n * 10 + (text[i++] - '0'), any = true;
    require(any && n <= kHardCap, "tournament text must start with n <= 8");
    std::uint32_t bits = 0;
    int pos = 0;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        require(c == '0' || c == '1', "tournament bits must be 0/1");
        require(pos < pair_count(n), "too many tournament bits");
        if (c == '1') bits |= 1u << pos;
        ++pos;
    }
    require(pos == pair_count(n), "expected n(n-1)/2 tournament bits");
    return Tournament(n, bits);
}

bool Tournament::beats(int u, int v) const {
    require(u != v && u >= 0 && v >= 0 && u < n_ && v < n_, "bad vertex pair");
    if (u < v) return (bits_ >> pair_index(n_, u, v)) & 1u;
    return !((bits_ >> pair_index(n_, v, u)) & 1u);
}

bool Tournament::is_transitive() const {
    // Transitive iff the out-degrees are exactly 0..n-1.
    std::vector<int> outdeg(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) ++outdeg[static_cast<std::size_t>(beats(i, j) ? i : j)];
    std::sort(outdeg.begin(), outdeg.end());
    for (int i = 0; i < n_; ++i)
        if (outdeg[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

Tournament Tournament::reversed() const { return Tournament(n_, ~bits_ & full_mask(n_)); }

Tournament Tournament::relabelled(std::span<const int> perm) const {
    require(static_cast<int>(perm.size()) == n_, "relabelling size mismatch");
    std::uint32_t bits = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) {
            int a = perm[static_cast<std::size_t>(i)], b = perm[static_cast<std::size_t>(j)];
            bool a_to_b = beats(i, j);
            if (a > b) std::swap(a, b), a_to_b = !a_to_b;
            if (a_to_b) bits |= 1u << pair_index(n_, a, b);
        }
    return Tournament(n_, bits);
}

std::string Tournament::str() const {
    std::ostringstream os;
    os << n_ << ' ';
    for (int p = 0; p < pair_count(n_); ++p) os << ((bits_ >> p) & 1u);
    return os.str();
}

std::uint32_t internal_pairs(int n, std::uint32_t subset) {
    std::uint32_t mask = 0;
    for (int i = 0; i < n; ++i)
        if ((subset >> i) & 1u)
            for (int j = i + 1; j < n; ++j)
                if ((subset >> j) & 1u) mask |= 1u << Tournament::pair_index(n, i, j);
    return mask;
}

Tournament invert_subset(const Tournament& t, std::uint32_t subset) {
    require(t.size() == 32 || (subset >> t.size()) == 0, "subset outside the vertex set");
    return Tournament(t.size(), t.bits() ^ internal_pairs(t.size(), subset));
}

Tournament join(const Tournament& t1, const Tournament& t2) {
    const int n1 = t1.size(), n2 = t2.size(), n = n1 + n2;
    require(n <= kHardCap, "joined tournament larger than 8 vertices");
    std::uint32_t bits = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool i_to_j;
            if (j < n1) i_to_j = t1.beats(i, j);
            else if (i >= n1) i_to_j = t2.beats(i - n1, j - n1);
            else i_to_j = true;
            if (i_to_j) bits |= 1u << Tournament::pair_index(n, i, j);
        }
    return Tournament(n, bits);
}

int InvTable::inv(const Tournament& t) const {
    require(t.size() == n_, "tournament size does not match the table");
    return dist_[t.bits()];
}

int InvTable::max_inv() const {
    return *std::max_element(dist_.begin(), dist_.end());
}

std::vector<std::uint64_t> InvTable::histogram() const {
    std::vector<std::uint64_t> h(static_cast<std::size_t>(max_inv()) + 1, 0);
    for (auto d : dist_) ++h[d];
    return h;
}

InvTable inv_table(int n, int cap, unsigned threads) {
    check_cap(n, cap);
    InvTable table;
    table.n_ = n;
    table.dist_.assign(std::size_t{1} << Tournament::pair_count(n), kUnseen);

    std::vector<std::uint32_t> moves;
    for (std::uint32_t s = 0; s < (1u << n); ++s)
        if (std::popcount(s) >= 2) moves.push_back(internal_pairs(n, s));

    std::vector<std::uint32_t> frontier;
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    do {
        const auto t = Tournament::transitive(order);
        if (table.dist_[t.bits()] == kUnseen) {
            table.dist_[t.bits()] = 0;
            frontier.push_back(t.bits());
        }
    } while (std::next_permutation(order.begin(), order.end()));

    // Each state is claimed exactly once, by the first layer that reaches it.
    std::uint8_t depth = 0;
    while (!frontier.empty()) {
        const std::uint8_t next_depth = static_cast<std::uint8_t>(depth + 1);
        const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(resolve_threads(threads) * 4, frontier.size() / 1024 + 1));
        auto parts = parallel_tasks(chunks, threads, [&](std::size_t c) {
            std::vector<std::uint32_t> found;
            const std::size_t lo = frontier.size() * c / chunks, hi = frontier.size() * (c + 1) / chunks;
            for (std::size_t i = lo; i < hi; ++i) {
                for (auto m : moves) {
                    const std::uint32_t nxt = frontier[i] ^ m;
                    std::atomic_ref<std::uint8_t> cell(table.dist_[nxt]);
                    std::uint8_t expected = kUnseen;
                    if (cell.load(std::memory_order_relaxed) == kUnseen &&
                        cell.compare_exchange_strong(expected, next_depth, std::memory_order_relaxed))
                        found.push_back(nxt);
                }
            }
            return found;
        });
        frontier.clear();
        for (auto& p : parts) frontier.insert(frontier.end(), p.begin(), p.end());
        depth = next_depth;
    }
    return table;
}

AdditivityReport additivity_probe(int n1, int n2, int cap, unsigned threads) {
    check_cap(n1 + n2, cap);
    const auto t1 = inv_table(n1, cap, threads);
    const auto t2 = inv_table(n2, cap, threads);
    const auto tj = inv_table(n1 + n2, cap, threads);
    AdditivityReport r;
    r.n1 = n1;
    r.n2 = n2;
    bool first = true;
    const std::uint32_t c1 = 1u << Tournament::pair_count(n1), c2 = 1u << Tournament::pair_count(n2);
    for (std::uint32_t a = 0; a < c1; ++a)
        for (std::uint32_t b = 0; b < c2; ++b) {
            const Tournament x(n1, a), y(n2, b);
            const int defect = tj.inv(join(x, y)) - t1.inv(a) - t2.inv(b);
            ++r.distribution[defect];
            ++r.pairs;
            if (first || defect < r.min_defect) r.min_defect = defect, r.min_witness_1 = x, r.min_witness_2 = y;
            if (first || defect > r.max_defect) r.max_defect = defect, r.max_witness_1 = x, r.max_witness_2 = y;
            first = false;
        }
    return r;
}

}  // namespace cwb::tournaments
