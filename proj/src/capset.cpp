#include "cwb/capset.hpp"

#include <atomic>
#include <bitset>
#include <sstream>
#include <unordered_set>

namespace cwb::capset {

Vec3 Vec3::zero(int n) {
    require(n >= 0 && n <= kMaxDim, "dimension must be 0.." + std::to_string(kMaxDim));
    return {n, 0};
}

void Vec3::set(int i, int v) {
    require(i >= 0 && i < n && v >= 0 && v <= 2, "trit out of range");
    bits = (bits & ~(std::uint64_t{3} << (2 * i))) | (static_cast<std::uint64_t>(v) << (2 * i));
}

Vec3 Vec3::from_trits(const std::vector<int>& t) {
    Vec3 v = zero(static_cast<int>(t.size()));
    for (std::size_t i = 0; i < t.size(); ++i) v.set(static_cast<int>(i), t[i]);
    return v;
}

Vec3 Vec3::parse(const std::string& s) {
    std::vector<int> t;
    for (char ch : s) {
        require(ch >= '0' && ch <= '2', "bad trit string '" + s + "'");
        t.push_back(ch - '0');
    }
    require(!t.empty(), "empty trit string");
    return from_trits(t);
}

Vec3 Vec3::from_index(int n, std::uint64_t index) {
    Vec3 v = zero(n);
    for (int i = 0; i < n; ++i, index /= 3) v.set(i, static_cast<int>(index % 3));
    return v;
}

std::uint64_t Vec3::index() const {
    std::uint64_t x = 0;
    for (int i = n; i-- > 0;) x = x * 3 + static_cast<std::uint64_t>(trit(i));
    return x;
}

std::string Vec3::str() const {
    std::string s;
    for (int i = 0; i < n; ++i) s += static_cast<char>('0' + trit(i));
    return s;
}

Vec3 operator+(const Vec3& a, const Vec3& b) {
    require(a.n == b.n, "dimension mismatch");
    Vec3 r = Vec3::zero(a.n);
    for (int i = 0; i < a.n; ++i) r.set(i, (a.trit(i) + b.trit(i)) % 3);
    return r;
}

Vec3 operator-(const Vec3& a) {
    Vec3 r = Vec3::zero(a.n);
    for (int i = 0; i < a.n; ++i) r.set(i, (3 - a.trit(i)) % 3);
    return r;
}

Vec3 concat(const Vec3& a, const Vec3& b) {
    require(a.n + b.n <= kMaxDim, "dimension too large");
    return {a.n + b.n, a.bits | (b.bits << (2 * a.n))};
}

CapSet CapSet::sorted() const {
    CapSet c = *this;
    std::sort(c.points.begin(), c.points.end(), [](const Vec3& x, const Vec3& y) { return x.str() < y.str(); });
    return c;
}

CapSet parse_cap(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    CapSet c;
    c.n = -1;
    while (in >> tok) {
        const Vec3 v = Vec3::parse(tok);
        if (c.n < 0) c.n = v.n;
        require(v.n == c.n, "dimension mismatch in cap file");
        c.points.push_back(v);
    }
    require(c.n >= 1, "empty cap file");
    return c;
}

std::string to_text(const CapSet& c) {
    std::string s;
    for (const auto& p : c.points) s += p.str() + '\n';
    return s;
}

CapCheck is_capset(int n, const std::vector<Vec3>& points) {
    std::unordered_set<std::uint64_t> set;
    for (const auto& p : points) {
        require(p.n == n, "dimension mismatch: expected " + std::to_string(n) + ", got " + std::to_string(p.n));
        require(set.insert(p.bits).second, "repeated point " + p.str());
    }
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const Vec3 z = -(points[i] + points[j]);
            if (set.count(z.bits)) return {false, std::array<Vec3, 3>{points[i], points[j], z}};
        }
    return {};
}

namespace {

constexpr int kHardCap = 4;
using Bits = std::bitset<81>;

/// Branch and bound over base-3 indices of F_3^n, n <= 4.
class MaxCapSearch {
public:
    MaxCapSearch(int n, int sub_max) : n_(n), sub_max_(sub_max) {
        size_ = 1;
        for (int i = 0; i < n; ++i) size_ *= 3;
        third_.resize(static_cast<std::size_t>(size_ * size_));
        for (int x = 0; x < size_; ++x)
            for (int y = 0; y < size_; ++y)
                third_[static_cast<std::size_t>(x * size_ + y)] = static_cast<std::uint8_t>(
                    (-(Vec3::from_index(n, static_cast<std::uint64_t>(x)) + Vec3::from_index(n, static_cast<std::uint64_t>(y))))
                        .index());
        // one hyperplane triple per direction up to sign
        for (int a = 1; a < size_; ++a) {
            const Vec3 av = Vec3::from_index(n, static_cast<std::uint64_t>(a));
            int lead = 0;
            while (av.trit(lead) == 0) ++lead;
            if (av.trit(lead) != 1) continue;
            std::array<Bits, 3> planes;
            for (int x = 0; x < size_; ++x) {
                const Vec3 xv = Vec3::from_index(n, static_cast<std::uint64_t>(x));
                int dot = 0;
                for (int i = 0; i < n; ++i) dot += av.trit(i) * xv.trit(i);
                planes[static_cast<std::size_t>(dot % 3)].set(static_cast<std::size_t>(x));
            }
            planes_.push_back(planes);
        }
    }

    int points() const { return size_; }
    int third(int x, int y) const { return third_[static_cast<std::size_t>(x * size_ + y)]; }

    Bits block(const std::vector<int>& cur, Bits allowed, int p) const {
        allowed.reset(static_cast<std::size_t>(p));
        for (int q : cur) allowed.reset(static_cast<std::size_t>(third(p, q)));
        return allowed;
    }

    int bound(const Bits& cur, const Bits& allowed) const {
        int best = static_cast<int>(cur.count() + allowed.count());
        for (const auto& planes : planes_) {
            int b = 0;
            for (const auto& h : planes) b += std::min<int>(sub_max_, static_cast<int>((cur & h).count() + (allowed & h).count()));
            best = std::min(best, b);
        }
        return best;
    }

    /// `shared` prunes only strictly, so each task's own optimum is found deterministically.
    void dfs(std::vector<int>& cur, Bits& cur_bits, Bits allowed, const std::atomic<int>& shared) {
        ++nodes;
        if (static_cast<int>(cur.size()) > best) best = static_cast<int>(cur.size()), witness = cur;
        for (std::size_t p = allowed._Find_first(); p < allowed.size(); p = allowed._Find_next(p)) {
            const int b = bound(cur_bits, allowed);
            if (b <= best || b < shared.load(std::memory_order_relaxed)) return;
            allowed.reset(p);
            Bits next = block(cur, allowed, static_cast<int>(p));
            cur.push_back(static_cast<int>(p));
            cur_bits.set(p);
            dfs(cur, cur_bits, next, shared);
            cur.pop_back();
            cur_bits.reset(p);
        }
    }

    int best = 0;
    std::vector<int> witness;
    std::uint64_t nodes = 0;

private:
    int n_, size_ = 1, sub_max_;
    std::vector<std::uint8_t> third_;
    std::vector<std::array<Bits, 3>> planes_;
};

}  // namespace

MaxCapResult max_capset(int n, unsigned threads, int cap) {
    require(n >= 0, "dimension must be non-negative");
    if (n > std::min(cap, kHardCap))
        throw LimitExceeded("exhaustive cap search is capped at n = " + std::to_string(std::min(cap, kHardCap)));
    MaxCapResult res;
    res.n = n;
    res.witness.n = n;
    if (n == 0) {
        res.size = 1;
        res.witness.points = {Vec3::zero(0)};
        return res;
    }
    const int sub = n == 1 ? 1 : static_cast<int>(max_capset(n - 1, threads, cap).size);
    MaxCapSearch proto(n, sub);

    // max_n >= 2 max_{n-1} > max_{n-1}, so a maximum cap lies in no hyperplane and
    // contains an affine basis; map it to 0, e1, ..., en.
    std::vector<int> fixed = {0};
    for (int i = 0, e = 1; i < n; ++i, e *= 3) fixed.push_back(e);
    Bits allowed;
    for (int x = 0; x < proto.points(); ++x) allowed.set(static_cast<std::size_t>(x));
    std::vector<int> cur;
    for (int p : fixed) {
        allowed = proto.block(cur, allowed, p);
        cur.push_back(p);
    }
    std::vector<int> firsts;
    for (std::size_t p = allowed._Find_first(); p < allowed.size(); p = allowed._Find_next(p)) firsts.push_back(static_cast<int>(p));

    std::atomic<int> shared{static_cast<int>(cur.size())};
    struct Out {
        int best = 0;
        std::vector<int> witness;
        std::uint64_t nodes = 0;
    };
    auto outs = parallel_tasks(firsts.size() + 1, threads, [&](std::size_t t) {
        MaxCapSearch s = proto;
        Out o;
        if (t == firsts.size()) {  // the fixed points alone
            o.best = static_cast<int>(cur.size());
            o.witness = cur;
            return o;
        }
        Bits a = allowed;
        for (std::size_t i = 0; i < t; ++i) a.reset(static_cast<std::size_t>(firsts[i]));
        const int p = firsts[t];
        a.reset(static_cast<std::size_t>(p));
        std::vector<int> c = cur;
        Bits next = s.block(c, a, p);
        c.push_back(p);
        Bits cb;
        for (int q : c) cb.set(static_cast<std::size_t>(q));
        s.best = static_cast<int>(c.size()) - 1;
        s.dfs(c, cb, next, shared);
        int seen = shared.load();
        while (s.best > seen && !shared.compare_exchange_weak(seen, s.best)) {
        }
        return Out{s.best, s.witness, s.nodes};
    });
    int best = -1;
    for (const auto& o : outs) {
        res.nodes += o.nodes;
        if (o.best > best) {
            best = o.best;
            res.witness.points.clear();
            auto w = o.witness;
            std::sort(w.begin(), w.end());
            for (int x : w) res.witness.points.push_back(Vec3::from_index(n, static_cast<std::uint64_t>(x)));
        }
    }
    res.size = static_cast<std::size_t>(best);
    return res;
}

CapSet product(const CapSet& a, const CapSet& b) {
    CapSet c;
    c.n = a.n + b.n;
    require(c.n <= kMaxDim, "product dimension too large");
    for (const auto& x : a.points)
        for (const auto& y : b.points) c.points.push_back(concat(x, y));
    return c;
}

Vec3 AffineMap::operator()(const Vec3& x) const {
    require(x.n == n, "dimension mismatch");
    Vec3 r = Vec3::zero(n);
    for (int i = 0; i < n; ++i) {
        int s = t.trit(i);
        for (int j = 0; j < n; ++j) s += m[static_cast<std::size_t>(i * n + j)] * x.trit(j);
        r.set(i, s % 3);
    }
    return r;
}

bool AffineMap::invertible() const {
    std::vector<int> a = m;
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (a[static_cast<std::size_t>(r * n + col)] % 3) piv = r;
        if (piv < 0) continue;
        for (int j = 0; j < n; ++j) std::swap(a[static_cast<std::size_t>(piv * n + j)], a[static_cast<std::size_t>(rank * n + j)]);
        const int inv = a[static_cast<std::size_t>(rank * n + col)] % 3;  // 1 and 2 are self-inverse mod 3
        for (int r = 0; r < n; ++r) {
            if (r == rank) continue;
            const int f = (a[static_cast<std::size_t>(r * n + col)] * inv) % 3;
            for (int j = 0; j < n; ++j)
                a[static_cast<std::size_t>(r * n + j)] = ((a[static_cast<std::size_t>(r * n + j)] - f * a[static_cast<std::size_t>(rank * n + j)]) % 3 + 3) % 3;
        }
        ++rank;
    }
    return rank == n;
}

AffineMap AffineMap::random_invertible(int n, Rng& rng) {
    AffineMap f;
    f.n = n;
    f.m.resize(static_cast<std::size_t>(n * n));
    do {
        for (auto& x : f.m) x = rng.below(3);
    } while (!f.invertible());
    f.t = Vec3::zero(n);
    for (int i = 0; i < n; ++i) f.t.set(i, rng.below(3));
    return f;
}

AffineMap AffineMap::translation(const Vec3& t) {
    AffineMap f;
    f.n = t.n;
    f.m.assign(static_cast<std::size_t>(t.n * t.n), 0);
    for (int i = 0; i < t.n; ++i) f.m[static_cast<std::size_t>(i * t.n + i)] = 1;
    f.t = t;
    return f;
}

CapSet image(const AffineMap& f, const CapSet& c) {
    CapSet r;
    r.n = c.n;
    for (const auto& p : c.points) r.points.push_back(f(p));
    return r;
}

namespace {

std::uint64_t space_size(int n) {
    if (n > 10) throw LimitExceeded("cap searches are limited to n <= 10");
    std::uint64_t s = 1;
    for (int i = 0; i < n; ++i) s *= 3;
    return s;
}

}  // namespace

std::optional<CapSet> random_cap(int n, std::size_t size, Rng& rng, int attempts) {
    require(n >= 1, "dimension must be positive");
    const std::uint64_t total = space_size(n);
    std::vector<Vec3> pts;
    for (std::uint64_t x = 0; x < total; ++x) pts.push_back(Vec3::from_index(n, x));
    for (int a = 0; a < attempts; ++a) {
        std::vector<std::uint64_t> order(total);
        for (std::uint64_t x = 0; x < total; ++x) order[x] = x;
        rng.shuffle(order);
        std::vector<int> blocked(total, 0);  // number of chosen pairs whose third point this is
        std::vector<bool> chosen(total, false);
        std::vector<std::uint64_t> cap;
        auto add = [&](std::uint64_t x) {
            for (auto y : cap) ++blocked[(-(pts[x] + pts[y])).index()];
            cap.push_back(x);
            chosen[x] = true;
        };
        auto remove = [&](std::size_t i) {
            const auto x = cap[i];
            cap.erase(cap.begin() + static_cast<std::ptrdiff_t>(i));
            chosen[x] = false;
            for (auto y : cap) --blocked[(-(pts[x] + pts[y])).index()];
        };
        auto greedy = [&] {
            for (auto x : order)
                if (!chosen[x] && !blocked[x] && cap.size() < size) add(x);
        };
        greedy();
        for (int repair = 0; repair < 4 * static_cast<int>(size) && cap.size() < size && !cap.empty(); ++repair) {
            remove(rng.below(std::uint64_t{cap.size()}));
            rng.shuffle(order);
            greedy();
        }
        if (cap.size() == size) {
            CapSet c;
            c.n = n;
            for (auto x : cap) c.points.push_back(pts[x]);
            return c.sorted();
        }
    }
    return std::nullopt;
}

DisjointResult find_disjoint_equal(int n, std::size_t size, std::uint64_t budget, std::uint64_t seed) {
    require(n >= 1 && size >= 1, "need n >= 1 and size >= 1");
    const std::uint64_t total = space_size(n);
    DisjointResult res;
    if (2 * size > total) {
        res.method = "counting";
        return res;
    }
    Rng rng(seed);
    auto first = random_cap(n, size, rng);
    if (!first) {
        res.method = "no-cap";
        return res;
    }
    res.first = *first;
    std::vector<bool> in_first(total, false);
    for (const auto& p : first->points) in_first[p.index()] = true;
    auto try_second = [&](const CapSet& c, const char* method) {
        ++res.tries;
        for (const auto& p : c.points)
            if (in_first[p.index()]) return false;
        res.found = true;
        res.second = c.sorted();
        res.method = method;
        return true;
    };
    for (std::uint64_t t = 1; t < total && res.tries < budget; ++t)
        if (try_second(image(AffineMap::translation(Vec3::from_index(n, t)), *first), "translate")) return res;
    const std::uint64_t affine_end = res.tries + (budget - std::min(budget, res.tries)) / 2;
    while (res.tries < affine_end)
        if (try_second(image(AffineMap::random_invertible(n, rng), *first), "affine")) return res;
    while (res.tries < budget) {
        auto c = random_cap(n, size, rng, 1);
        if (!c) {
            ++res.tries;
            continue;
        }
        if (try_second(*c, "independent")) return res;
    }
    res.method = "budget";
    return res;
}

}  // namespace cwb::capset
