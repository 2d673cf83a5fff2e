#include "cwb/latin.hpp"

#include <numeric>
#include <sstream>

namespace cwb::latin {

bool is_latin(int n, const std::vector<int>& cells) {
    if (n < 1 || cells.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) return false;
    for (int i = 0; i < n; ++i) {
        std::vector<bool> row(static_cast<std::size_t>(n)), col(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            const int a = cells[static_cast<std::size_t>(i * n + j)], b = cells[static_cast<std::size_t>(j * n + i)];
            if (a < 0 || a >= n || b < 0 || b >= n || row[static_cast<std::size_t>(a)] || col[static_cast<std::size_t>(b)])
                return false;
            row[static_cast<std::size_t>(a)] = col[static_cast<std::size_t>(b)] = true;
        }
    }
    return true;
}

LatinSquare::LatinSquare(int n, std::vector<int> cells) : n_(n), cells_(std::move(cells)) {
    require(is_latin(n_, cells_), "not a Latin square of order " + std::to_string(n));
}

LatinSquare LatinSquare::cyclic(int n) {
    require(n >= 1, "order must be positive");
    std::vector<int> c(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(i * n + j)] = (i + j) % n;
    return {n, std::move(c)};
}

LatinSquare LatinSquare::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<int> cells;
    int n = -1, lines = 0;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> row;
        std::string tok;
        while (ls >> tok) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            require(used == tok.size(), "bad symbol '" + tok + "'");
            row.push_back(v);
        }
        if (row.empty()) continue;
        if (n < 0) n = static_cast<int>(row.size());
        require(static_cast<int>(row.size()) == n, "ragged square");
        cells.insert(cells.end(), row.begin(), row.end());
        ++lines;
    }
    require(n > 0 && lines == n, "expected n lines of n symbols");
    return {n, std::move(cells)};
}

std::vector<std::vector<int>> LatinSquare::rows() const {
    std::vector<std::vector<int>> out;
    for (int r = 0; r < n_; ++r) out.emplace_back(cells_.begin() + r * n_, cells_.begin() + (r + 1) * n_);
    return out;
}

std::string LatinSquare::str() const {
    std::string s;
    for (int r = 0; r < n_; ++r) {
        for (int c = 0; c < n_; ++c) {
            if (c) s += ' ';
            s += std::to_string(at(r, c));
        }
        s += '\n';
    }
    return s;
}

LatinSquare isotope(const LatinSquare& l, const std::vector<int>& row, const std::vector<int>& col,
                    const std::vector<int>& sym) {
    const int n = l.order();
    require(row.size() == static_cast<std::size_t>(n) && col.size() == row.size() && sym.size() == row.size(),
            "isotopy components must have length n");
    std::vector<int> c(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            c[static_cast<std::size_t>(i * n + j)] =
                sym[static_cast<std::size_t>(l.at(row[static_cast<std::size_t>(i)], col[static_cast<std::size_t>(j)]))];
    return {n, std::move(c)};
}

GroupSpec GroupSpec::parse(const std::string& s) {
    std::vector<int> orders;
    std::size_t pos = 0;
    while (pos < s.size()) {
        require(s[pos] == 'Z' || s[pos] == 'z', "group must look like Z6 or Z2xZ2");
        std::size_t used = 0;
        int k = 0;
        try {
            k = std::stoi(s.substr(pos + 1), &used);
        } catch (const std::exception&) {
            throw InvalidInput("bad group '" + s + "'");
        }
        require(k >= 1, "cyclic factor must have positive order");
        orders.push_back(k);
        pos += 1 + used;
        if (pos < s.size()) {
            require(s[pos] == 'x' || s[pos] == '*', "bad group '" + s + "'");
            ++pos;
            require(pos < s.size(), "bad group '" + s + "'");
        }
    }
    require(!orders.empty(), "empty group");
    if (orders.size() == 1) return cyclic(orders[0]);
    return product(orders);
}

LatinSquare cayley_table(const GroupSpec& g) {
    switch (g.kind) {
    case GroupSpec::Kind::Cyclic:
        require(g.orders.size() == 1, "cyclic group needs one order");
        return LatinSquare::cyclic(g.orders[0]);
    case GroupSpec::Kind::Product: {
        require(!g.orders.empty(), "empty product");
        int n = 1;
        for (int k : g.orders) {
            require(k >= 1 && n <= 4096 / k, "group order out of range");
            n *= k;
        }
        // mixed-radix encoding, first factor most significant
        auto digits = [&](int x) {
            std::vector<int> d(g.orders.size());
            for (std::size_t i = g.orders.size(); i-- > 0;) {
                d[i] = x % g.orders[i];
                x /= g.orders[i];
            }
            return d;
        };
        std::vector<int> c(static_cast<std::size_t>(n * n));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                const auto dx = digits(x), dy = digits(y);
                int z = 0;
                for (std::size_t i = 0; i < dx.size(); ++i) z = z * g.orders[i] + (dx[i] + dy[i]) % g.orders[i];
                c[static_cast<std::size_t>(x * n + y)] = z;
            }
        return {n, std::move(c)};
    }
    case GroupSpec::Kind::Table: {
        int n = 0;
        while (static_cast<std::size_t>(n * n) < g.table.size()) ++n;
        require(static_cast<std::size_t>(n * n) == g.table.size(), "table is not square");
        LatinSquare l(n, g.table);
        require(is_group_table(l), "table is not associative after normalisation");
        return l;
    }
    }
    throw InvalidInput("unknown group kind");
}

std::uint64_t count_cuboctahedra(const LatinSquare& l, unsigned threads) {
    const int n = l.order();
    if (n > 64) throw LimitExceeded("cuboctahedron counting is capped at n = 64");
    const std::size_t keys = static_cast<std::size_t>(n) * n * n * n;
    const std::size_t tasks = std::min<std::size_t>(static_cast<std::size_t>(n), std::max(1u, resolve_threads(threads)));
    auto histos = parallel_tasks(tasks, threads, [&](std::size_t t) {
        std::vector<std::uint32_t> h(keys);
        for (int r1 = static_cast<int>(t); r1 < n; r1 += static_cast<int>(tasks))
            for (int r2 = 0; r2 < n; ++r2)
                for (int c1 = 0; c1 < n; ++c1) {
                    const std::size_t hi = static_cast<std::size_t>(l.at(r1, c1)) * n;
                    const std::size_t lo = static_cast<std::size_t>(l.at(r2, c1));
                    for (int c2 = 0; c2 < n; ++c2)
                        ++h[((hi + static_cast<std::size_t>(l.at(r1, c2))) * n + lo) * n + static_cast<std::size_t>(l.at(r2, c2))];
                }
        return h;
    });
    std::uint64_t total = 0;
    for (std::size_t k = 0; k < keys; ++k) {
        std::uint64_t m = 0;
        for (const auto& h : histos) m += h[k];
        total += m * m;
    }
    return total;
}

bool is_group_table(const LatinSquare& l) {
    const int n = l.order();
    // columns reordered so row 0 reads 0..n-1, then rows so column 0 does
    std::vector<int> col(static_cast<std::size_t>(n)), row(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) col[static_cast<std::size_t>(l.at(0, j))] = j;
    for (int i = 0; i < n; ++i) row[static_cast<std::size_t>(l.at(i, col[0]))] = i;
    std::vector<int> m(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[static_cast<std::size_t>(i * n + j)] = l.at(row[static_cast<std::size_t>(i)], col[static_cast<std::size_t>(j)]);
    auto op = [&](int a, int b) { return m[static_cast<std::size_t>(a * n + b)]; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (op(op(a, b), c) != op(a, op(b, c))) return false;
    return true;
}

namespace {

/// Incidence cube with entries in {-1, 0, 1}; at most one entry is -1.
class JmWalk {
public:
    explicit JmWalk(const LatinSquare& start) : n_(start.order()), cube_(static_cast<std::size_t>(n_) * n_ * n_) {
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c) at(r, c, start.at(r, c)) = 1;
    }

    /// One proper-to-proper transition.
    void step(Rng& rng) {
        int r, c, s;
        do {
            r = rng.below(n_);
            c = rng.below(n_);
            s = rng.below(n_);
        } while (at(r, c, s) != 0);
        int rp = -1, cp = -1, sp = -1;
        for (int x = 0; x < n_; ++x) {
            if (at(x, c, s) == 1) rp = x;
            if (at(r, x, s) == 1) cp = x;
            if (at(r, c, x) == 1) sp = x;
        }
        bool improper = move(r, c, s, rp, cp, sp);
        while (improper) {
            r = rp, c = cp, s = sp;
            rp = pick(rng, [&](int x) { return at(x, c, s); });
            cp = pick(rng, [&](int x) { return at(r, x, s); });
            sp = pick(rng, [&](int x) { return at(r, c, x); });
            improper = move(r, c, s, rp, cp, sp);
        }
    }

    LatinSquare square() const {
        std::vector<int> cells(static_cast<std::size_t>(n_ * n_));
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c)
                for (int s = 0; s < n_; ++s)
                    if (cube_[idx(r, c, s)] == 1) cells[static_cast<std::size_t>(r * n_ + c)] = s;
        return {n_, std::move(cells)};
    }

private:
    std::size_t idx(int r, int c, int s) const { return (static_cast<std::size_t>(r) * n_ + c) * n_ + s; }
    std::int8_t& at(int r, int c, int s) { return cube_[idx(r, c, s)]; }
    std::int8_t at(int r, int c, int s) const { return cube_[idx(r, c, s)]; }

    /// One of the two indices x with line(x) == 1, uniformly.
    template <class Line>
    int pick(Rng& rng, Line line) const {
        int found[2] = {-1, -1}, k = 0;
        for (int x = 0; x < n_ && k < 2; ++x)
            if (line(x) == 1) found[k++] = x;
        return found[rng.below(2)];
    }

    /// The +-1 update around (r,c,s); true when (r',c',s') becomes -1.
    bool move(int r, int c, int s, int rp, int cp, int sp) {
        ++at(r, c, s), ++at(r, cp, sp), ++at(rp, c, sp), ++at(rp, cp, s);
        --at(r, c, sp), --at(r, cp, s), --at(rp, c, s), --at(rp, cp, sp);
        return at(rp, cp, sp) < 0;
    }

    int n_;
    std::vector<std::int8_t> cube_;
};

}  // namespace

std::uint64_t default_steps(int n) { return static_cast<std::uint64_t>(n) * n * n; }

LatinSquare jm_sample(int n, std::uint64_t steps, std::uint64_t seed) {
    require(n >= 2, "JM sampling needs n >= 2");
    JmWalk walk(LatinSquare::cyclic(n));
    Rng rng(seed);
    for (std::uint64_t i = 0; i < steps; ++i) walk.step(rng);
    return walk.square();
}

std::vector<LatinSquare> jm_samples(int n, std::size_t count, std::uint64_t steps, std::uint64_t seed,
                                    unsigned threads) {
    return parallel_tasks(count, threads, [&](std::size_t i) { return jm_sample(n, steps, derive_seed(seed, i)); });
}

MinimizeResult minimize_cuboctahedra(int n, std::uint64_t budget, std::uint64_t seed, int restarts) {
    require(n >= 2, "minimisation needs n >= 2");
    require(restarts >= 0, "restarts must be non-negative");
    MinimizeResult res;
    const double n4 = static_cast<double>(n) * n * n * n;
    const std::uint64_t rounds = static_cast<std::uint64_t>(restarts) + 1;
    const std::uint64_t per_round = std::max<std::uint64_t>(1, budget / rounds);
    bool have = false;
    for (std::uint64_t round = 0; round < rounds && res.evaluations < budget; ++round) {
        Rng rng(derive_seed(seed, round));
        JmWalk walk(LatinSquare::cyclic(n));
        for (std::uint64_t i = 0; i < default_steps(n); ++i) walk.step(rng);
        LatinSquare cur = walk.square();
        std::uint64_t cur_count = count_cuboctahedra(cur);
        ++res.evaluations;
        if (!have || cur_count < res.count) res.best = cur, res.count = cur_count, have = true;
        for (std::uint64_t e = 1; e < per_round && res.evaluations < budget; ++e) {
            JmWalk next = walk;
            next.step(rng);
            const LatinSquare cand = next.square();
            const std::uint64_t k = count_cuboctahedra(cand);
            ++res.evaluations;
            if (k <= cur_count) {
                walk = std::move(next);
                cur_count = k;
                if (k < res.count) res.best = cand, res.count = k;
            }
        }
        if (round > 0) ++res.restarts;
    }
    res.ratio = static_cast<double>(res.count) / n4;
    return res;
}

}  // namespace cwb::latin
