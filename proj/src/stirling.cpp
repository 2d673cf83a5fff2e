#include "cwb/stirling.hpp"

#include <numeric>

namespace cwb::stirling {

namespace {

/// (m)(m-1)...(m-j+1)
mpz_class falling(long m, int j) {
    mpz_class f = 1;
    for (int i = 0; i < j; ++i) f *= m - i;
    return f;
}

}  // namespace

std::string StirlingTable::csv() const {
    std::string s;
    for (const auto& row : values) {
        for (std::size_t k = 0; k < row.size(); ++k) s += (k ? "," : "") + row[k].get_str();
        s += '\n';
    }
    return s;
}

StirlingTable assoc_table(int n_max, int r) {
    require(n_max >= 0 && r >= 0, "n and r must be non-negative");
    r = std::max(r, 1);  // length >= 0 is no restriction
    StirlingTable t;
    t.r = r;
    t.values.resize(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        auto& row = t.values[static_cast<std::size_t>(n)];
        row.assign(static_cast<std::size_t>(n) + 1, 0);
        if (n == 0) {
            row[0] = 1;
            continue;
        }
        const mpz_class close = falling(n - 1, r - 1);  // C(n-1, r-1) (r-1)!
        for (int k = 1; k <= n; ++k) {
            mpz_class v = 0;
            if (k <= n - 1) v += (n - 1) * t.at(n - 1, k);
            if (n - r >= 0 && k - 1 <= n - r) v += close * t.at(n - r, k - 1);
            row[static_cast<std::size_t>(k)] = v;
        }
    }
    return t;
}

mpz_class assoc_stirling(int n, int k, int r) {
    require(n >= 0 && k >= 0 && r >= 0, "n, k and r must be non-negative");
    if (k > n) return 0;
    return assoc_table(n, r).at(n, k);
}

std::vector<mpz_class> enumerate_row(int n, int r) {
    require(n >= 0 && r >= 0, "n and r must be non-negative");
    if (n > 10) throw LimitExceeded("direct enumeration of S_n is capped at n = 10");
    std::vector<mpz_class> row(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        int cycles = 0;
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            if (seen[static_cast<std::size_t>(i)]) continue;
            int len = 0;
            for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p[static_cast<std::size_t>(j)]) seen[static_cast<std::size_t>(j)] = true, ++len;
            ++cycles;
            ok = ok && len >= r;
        }
        if (ok) ++row[static_cast<std::size_t>(cycles)];
    } while (std::next_permutation(p.begin(), p.end()));
    return row;
}

mpz_class rth_order(int n, int k, int r) {
    require(n >= 0 && k >= 0 && r >= 1, "need n, k >= 0 and r >= 1");
    return assoc_stirling(n + (r - 1) * k, k, r);
}

std::vector<Poly> cycle_poly_rows(int r, int n_max) {
    require(r >= 1 && n_max >= 0, "need r >= 1 and n >= 0");
    std::vector<Poly> rows{Poly{1}};
    for (int n = 1; n <= n_max; ++n) {
        const Poly& prev = rows.back();
        Poly row(static_cast<std::size_t>(n) + 1, 0);
        for (int k = 1; k <= n; ++k) {
            const long big_n = n + static_cast<long>(r - 1) * k;
            mpz_class v = 0;
            if (k <= n - 1) v += (big_n - 1) * prev[static_cast<std::size_t>(k)];
            v += falling(big_n - 1, r - 1) * prev[static_cast<std::size_t>(k - 1)];
            row[static_cast<std::size_t>(k)] = v;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Poly cycle_poly(int r, int n) {
    require(r >= 1 && n >= 0, "need r >= 1 and n >= 0");
    return cycle_poly_rows(r, n).back();
}

LogConcavity is_log_concave(const Poly& a) {
    std::size_t lo = 0, hi = a.size();
    while (lo < a.size() && a[lo] == 0) ++lo;
    while (hi > lo && a[hi - 1] == 0) --hi;
    for (std::size_t k = lo; k < hi; ++k) {
        if (a[k] <= 0) return {false, static_cast<int>(k)};
        if (k > lo && k + 1 < hi && a[k] * a[k] < a[k - 1] * a[k + 1]) return {false, static_cast<int>(k)};
    }
    return {};
}

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

/// Divides by a positive constant so the coefficients are coprime integers; signs are kept.
void make_primitive(QPoly& p) {
    if (p.empty()) return;
    mpz_class l = 1, g = 0;
    for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    for (auto& c : p) {
        c *= l;
        c.canonicalize();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    }
    if (g != 0)
        for (auto& c : p) c /= g;
}

QPoly remainder(QPoly a, const QPoly& b) {
    trim(a);
    const int db = deg(b);
    while (deg(a) >= db) {
        const mpq_class f = a.back() / b.back();
        const int shift = deg(a) - db;
        for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(i + shift)] -= f * b[static_cast<std::size_t>(i)];
        a.pop_back();
        trim(a);
    }
    return a;
}

int sign(const mpq_class& x) { return sgn(x); }

int sign_changes(const std::vector<int>& s) {
    int changes = 0, last = 0;
    for (int x : s) {
        if (x == 0) continue;
        if (last != 0 && x != last) ++changes;
        last = x;
    }
    return changes;
}

}  // namespace

RealRoots real_roots(const Poly& p_in) {
    QPoly p(p_in.begin(), p_in.end());
    trim(p);
    require(!p.empty(), "the zero polynomial has no root count");
    RealRoots out;
    out.degree = deg(p);
    // powers of x contribute the real root 0
    std::size_t zeros = 0;
    while (p[zeros] == 0) ++zeros;
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(zeros));
    if (deg(p) == 0) {
        out.distinct_real = zeros ? 1 : 0;
        out.squarefree_degree = out.distinct_real;
        out.real_rooted = true;
        return out;
    }
    std::vector<QPoly> seq{p};
    QPoly d;
    for (int i = 1; i <= deg(p); ++i) d.push_back(p[static_cast<std::size_t>(i)] * i);
    make_primitive(d);
    seq.push_back(d);
    while (true) {
        QPoly r = remainder(seq[seq.size() - 2], seq.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        make_primitive(r);
        seq.push_back(std::move(r));
    }
    std::vector<int> at_pos, at_neg;
    for (const auto& q : seq) {
        at_pos.push_back(sign(q.back()));
        at_neg.push_back(deg(q) % 2 ? -sign(q.back()) : sign(q.back()));
    }
    const int distinct = sign_changes(at_neg) - sign_changes(at_pos);
    const int sqfree = deg(p) - deg(seq.back());
    out.distinct_real = distinct + (zeros ? 1 : 0);
    out.squarefree_degree = sqfree + (zeros ? 1 : 0);
    out.real_rooted = distinct == sqfree;
    return out;
}

SweepResult log_concavity_sweep(int r, int n_max, unsigned threads) {
    const auto rows = cycle_poly_rows(r, n_max);
    const auto verdicts = parallel_tasks(rows.size(), threads, [&](std::size_t n) { return is_log_concave(rows[n]); });
    SweepResult res{r, n_max, true, std::nullopt, -1};
    for (std::size_t n = 0; n < verdicts.size(); ++n)
        if (!verdicts[n].holds) {
            res.holds = false;
            res.first_failure = static_cast<int>(n);
            res.failure_index = verdicts[n].index;
            break;
        }
    return res;
}

SweepResult real_rootedness_sweep(int r, int n_max, unsigned threads) {
    const auto rows = cycle_poly_rows(r, n_max);
    const auto verdicts = parallel_tasks(rows.size(), threads, [&](std::size_t n) { return is_real_rooted(rows[n]); });
    SweepResult res{r, n_max, true, std::nullopt, -1};
    for (std::size_t n = 0; n < verdicts.size(); ++n)
        if (!verdicts[n]) {
            res.holds = false;
            res.first_failure = static_cast<int>(n);
            break;
        }
    return res;
}

std::string poly_str(const Poly& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + p[i].get_str();
    return s + "]";
}

}  // namespace cwb::stirling
