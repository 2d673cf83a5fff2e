#include "cwb/setfam.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace cwb::setfam {

namespace {

using Mask = std::uint64_t;

Mask to_mask(const Set& s) {
    Mask m = 0;
    for (int x : s) {
        require(x >= 1 && x <= 64, "set elements must lie in 1..64");
        m |= Mask{1} << (x - 1);
    }
    return m;
}

Set to_set(Mask m) {
    Set s;
    for (; m; m &= m - 1) s.push_back(std::countr_zero(m) + 1);
    return s;
}

Set normalized(Set s) {
    std::sort(s.begin(), s.end());
    require(std::adjacent_find(s.begin(), s.end()) == s.end(), "repeated element in a set");
    return s;
}

struct Masks {
    std::vector<Mask> a, b;
};

Masks masks_of(const SetPairFamily& f, int inter) {
    Masks m;
    for (std::size_t i = 0; i < f.pairs.size(); ++i) {
        const auto& p = f.pairs[i];
        const Mask ma = to_mask(normalized(p.a)), mb = to_mask(normalized(p.b));
        const auto idx = std::to_string(i);
        require(static_cast<int>(p.a.size()) == f.a, "pair " + idx + ": |A| != a");
        require(static_cast<int>(p.b.size()) == f.b, "pair " + idx + ": |B| != b");
        require(std::popcount(ma & mb) == inter,
                "pair " + idx + ": |A n B| must be " + std::to_string(inter));
        m.a.push_back(ma);
        m.b.push_back(mb);
    }
    return m;
}

mpz_class binom(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// Every subset of every A_k n B_k (each has two elements, so at most 4 masks).
std::unordered_set<Mask> covered_sets(const std::vector<Mask>& diag) {
    std::unordered_set<Mask> covered;
    for (Mask d : diag)
        for (Mask s = d;; s = (s - 1) & d) {
            covered.insert(s);
            if (s == 0) break;
        }
    return covered;
}

}  // namespace

SetPairFamily SetPairFamily::canonical() const {
    SetPairFamily out = *this;
    for (auto& p : out.pairs) p.a = normalized(p.a), p.b = normalized(p.b);
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

mpz_class bound(int a, int b) {
    require(b >= a && a >= 2, "bound needs b >= a >= 2");
    mpz_class sum = 0;
    for (int i = 2; i <= a; ++i) {
        mpz_class pow2 = 1;
        pow2 <<= static_cast<mp_bitcnt_t>(i - 2);
        sum += pow2 * binom(a + b - 2 * i, a - i);
    }
    return sum;
}

Verdict check_bollobas(const SetPairFamily& f) {
    require(f.a >= 0 && f.b >= 0, "a, b must be nonnegative");
    const auto m = masks_of(f, 0);
    Verdict v;
    v.size = f.size();
    v.bound = binom(f.a + f.b, f.a);
    v.within_bound = mpz_class(static_cast<unsigned long>(v.size)) <= v.bound;
    for (std::size_t i = 0; i < m.a.size() && v.holds; ++i)
        for (std::size_t j = 0; j < m.a.size(); ++j) {
            if (i == j || (m.a[i] & m.b[j]) != 0) continue;
            v.holds = false;
            v.witness = std::array<int, 3>{static_cast<int>(i), static_cast<int>(j), -1};
            v.reason = "A_" + std::to_string(i) + " n B_" + std::to_string(j) + " is empty";
            break;
        }
    return v;
}

Verdict check_calbet(const SetPairFamily& f) {
    require(f.b >= f.a && f.a >= 2, "the conjectured bound needs b >= a >= 2");
    const auto m = masks_of(f, 2);
    Verdict v;
    v.size = f.size();
    v.bound = bound(f.a, f.b);
    v.within_bound = mpz_class(static_cast<unsigned long>(v.size)) <= v.bound;
    std::vector<Mask> diag;
    for (std::size_t k = 0; k < m.a.size(); ++k) diag.push_back(m.a[k] & m.b[k]);
    const auto covered = covered_sets(diag);
    for (std::size_t i = 0; i < m.a.size() && v.holds; ++i)
        for (std::size_t j = 0; j < m.a.size(); ++j) {
            if (i == j) continue;
            const Mask x = m.a[i] & m.b[j];
            if (std::popcount(x) > 2 || !covered.contains(x)) continue;
            // find the k for the report
            std::size_t k = 0;
            while ((x & ~diag[k]) != 0) ++k;
            v.holds = false;
            v.witness = std::array<int, 3>{static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)};
            v.reason = "A_" + std::to_string(i) + " n B_" + std::to_string(j) + " is contained in A_" +
                       std::to_string(k) + " n B_" + std::to_string(k);
            break;
        }
    return v;
}

SetPairFamily calbet_construction(int a, int b) {
    require(b >= a && a >= 2, "construction needs b >= a >= 2");
    const int g = a + b - 2;
    require(g <= 64, "ground set too large");
    SetPairFamily f;
    f.a = a;
    f.b = b;
    const Mask ground = g == 64 ? ~Mask{0} : ((Mask{1} << g) - 1);
    for (int c = 2; c <= a; ++c) {
        const Mask own = (Mask{1} << (2 * c - 4)) | (Mask{1} << (2 * c - 3));  // {2c-3, 2c-2}
        const int rest_lo = 2 * c - 2;  // 0-based index of element 2c-1
        const int rest_size = g - rest_lo;
        const int pick = a - c;
        // one element from each earlier pair {2d-3, 2d-2}, d < c
        for (Mask choice = 0; choice < (Mask{1} << (c - 2)); ++choice) {
            Mask base = own;
            for (int d = 2; d < c; ++d) base |= Mask{1} << (2 * d - 4 + ((choice >> (d - 2)) & 1));
            // pick-subsets of the tail, in increasing mask order
            if (pick > rest_size) continue;
            std::vector<bool> sel(static_cast<std::size_t>(rest_size), false);
            std::fill(sel.end() - pick, sel.end(), true);
            do {
                Mask am = base;
                for (int t = 0; t < rest_size; ++t)
                    if (sel[static_cast<std::size_t>(t)]) am |= Mask{1} << (rest_lo + t);
                const Mask bm = (ground & ~am) | own;
                f.pairs.push_back({to_set(am), to_set(bm)});
            } while (std::next_permutation(sel.begin(), sel.end()));
        }
    }
    return f;
}

SetPairFamily partition_family(int a, int b) {
    require(a >= 0 && b >= 0 && a + b <= 64, "bad partition sizes");
    SetPairFamily f;
    f.a = a;
    f.b = b;
    const int g = a + b;
    std::vector<bool> sel(static_cast<std::size_t>(g), false);
    std::fill(sel.end() - a, sel.end(), true);
    do {
        Set A, B;
        for (int t = 0; t < g; ++t) (sel[static_cast<std::size_t>(t)] ? A : B).push_back(t + 1);
        f.pairs.push_back({A, B});
    } while (std::next_permutation(sel.begin(), sel.end()));
    return f;
}

namespace {

class Bits {
public:
    explicit Bits(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
    void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { w_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1u; }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const {
        return std::all_of(w_.begin(), w_.end(), [](std::uint64_t w) { return w == 0; });
    }
    Bits operator&(const Bits& o) const {
        Bits r = *this;
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
        return r;
    }
    std::size_t first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(w_[i]));
        return w_.size() * 64;
    }
    void subtract(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    }
    template <class F>
    void for_each(F f) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            for (std::uint64_t w = w_[i]; w; w &= w - 1) f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    }

private:
    std::vector<std::uint64_t> w_;
};

class Search {
public:
    Search(std::vector<Mask> a, std::vector<Mask> b, Mode mode) : a_(std::move(a)), b_(std::move(b)), mode_(mode) {
        const std::size_t n = a_.size();
        adj_.assign(n, Bits(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (pair_ok(i, j)) adj_[i].set(j), adj_[j].set(i);
    }

    std::size_t run(std::size_t root) {
        family_ = {root};
        best_ = {root};
        expand(adj_[root]);
        return best_.size();
    }

    const std::vector<std::size_t>& best() const { return best_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    static bool inside(Mask x, Mask d) { return (x & ~d) == 0; }

    // Conditions involving only i and j (k in {i, j} for the conjectured variant).
    bool pair_ok(std::size_t i, std::size_t j) const {
        const Mask xij = a_[i] & b_[j], xji = a_[j] & b_[i];
        if (mode_ == Mode::Bollobas) return xij != 0 && xji != 0;
        const Mask di = a_[i] & b_[i], dj = a_[j] & b_[j];
        return !inside(xij, di) && !inside(xij, dj) && !inside(xji, di) && !inside(xji, dj);
    }

    // Conditions with a third index when adding v to the current family.
    bool triple_ok(std::size_t v) const {
        if (mode_ == Mode::Bollobas) return true;
        const Mask dv = a_[v] & b_[v];
        for (std::size_t i : family_) {
            const Mask xiv = a_[i] & b_[v], xvi = a_[v] & b_[i];
            for (std::size_t k : family_) {
                const Mask dk = a_[k] & b_[k];
                if (inside(xiv, dk) || inside(xvi, dk)) return false;
            }
            for (std::size_t j : family_)
                if (i != j && inside(a_[i] & b_[j], dv)) return false;
        }
        return true;
    }

    void expand(Bits cand) {
        ++nodes_;
        // greedy colouring: colour classes are independent sets, so a clique in
        // cand uses at most one vertex per class
        std::vector<std::size_t> order;
        std::vector<std::size_t> colour;
        Bits uncoloured = cand;
        std::size_t k = 0;
        while (!uncoloured.empty()) {
            ++k;
            Bits q = uncoloured;
            while (!q.empty()) {
                const std::size_t v = q.first();
                q.reset(v);
                uncoloured.reset(v);
                q.subtract(adj_[v]);
                order.push_back(v);
                colour.push_back(k);
            }
        }
        for (std::size_t idx = order.size(); idx-- > 0;) {
            if (family_.size() + colour[idx] <= best_.size()) return;
            const std::size_t v = order[idx];
            if (triple_ok(v)) {
                family_.push_back(v);
                const Bits next = cand & adj_[v];
                if (next.empty()) {
                    if (family_.size() > best_.size()) best_ = family_;
                } else {
                    expand(next);
                }
                family_.pop_back();
            }
            cand.reset(v);
        }
    }

    std::vector<Mask> a_, b_;
    Mode mode_;
    std::vector<Bits> adj_;
    std::vector<std::size_t> family_, best_;
    std::uint64_t nodes_ = 0;
};

std::vector<Mask> k_subsets(int ground, int k) {
    std::vector<Mask> out;
    if (k < 0 || k > ground) return out;
    std::vector<bool> sel(static_cast<std::size_t>(ground), false);
    std::fill(sel.begin(), sel.begin() + k, true);
    do {
        Mask m = 0;
        for (int t = 0; t < ground; ++t)
            if (sel[static_cast<std::size_t>(t)]) m |= Mask{1} << t;
        out.push_back(m);
    } while (std::prev_permutation(sel.begin(), sel.end()));
    return out;  // lexicographic order of the sorted sets
}

}  // namespace

SearchResult brute_force_max(int a, int b, int ground, Mode mode, const BruteForceLimits& lim) {
    require(a >= 0 && b >= 0 && ground >= 0, "sizes must be nonnegative");
    if (a > lim.max_a || b > lim.max_b || ground > lim.max_ground)
        throw LimitExceeded("brute-force search is capped at a <= " + std::to_string(lim.max_a) + ", b <= " +
                            std::to_string(lim.max_b) + ", ground <= " + std::to_string(lim.max_ground));
    if (mode == Mode::Calbet) require(a >= 2 && b >= 2, "the |A n B| = 2 variant needs a, b >= 2");
    const int inter = mode == Mode::Calbet ? 2 : 0;
    std::vector<Mask> ca, cb;
    for (Mask am : k_subsets(ground, a))
        for (Mask bm : k_subsets(ground, b))
            if (std::popcount(am & bm) == inter) ca.push_back(am), cb.push_back(bm);

    SearchResult res;
    res.candidates = ca.size();
    res.witness.a = a;
    res.witness.b = b;
    if (ca.empty()) return res;
    // Every candidate pair is a relabelling of every other, so some maximum
    // family contains the first candidate.
    Search search(ca, cb, mode);
    res.maximum = search.run(0);
    res.nodes = search.nodes();
    for (std::size_t i : search.best()) res.witness.pairs.push_back({to_set(ca[i]), to_set(cb[i])});
    res.witness = res.witness.canonical();
    return res;
}

nlohmann::json to_json(const SetPairFamily& f) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& p : f.pairs) out.push_back({p.a, p.b});
    return out;
}

SetPairFamily family_from_json(const nlohmann::json& j, int a, int b) {
    require(j.is_array(), "family JSON must be a list of [A, B] pairs");
    SetPairFamily f;
    for (const auto& item : j) {
        require(item.is_array() && item.size() == 2 && item[0].is_array() && item[1].is_array(),
                "each family entry must be [A, B] with integer arrays");
        f.pairs.push_back({item[0].get<Set>(), item[1].get<Set>()});
    }
    if (!f.pairs.empty() && a == 0 && b == 0) {
        a = static_cast<int>(f.pairs[0].a.size());
        b = static_cast<int>(f.pairs[0].b.size());
    }
    f.a = a;
    f.b = b;
    return f;
}

}  // namespace cwb::setfam
