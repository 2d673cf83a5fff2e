#include "cwb/perms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

namespace cwb::perms {

namespace {

bool is_bijection(std::span<const int> v) {
    std::vector<bool> seen(v.size() + 1, false);
    for (int x : v) {
        if (x < 1 || x > static_cast<int>(v.size()) || seen[static_cast<std::size_t>(x)]) return false;
        seen[static_cast<std::size_t>(x)] = true;
    }
    return true;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string cur;
    bool spaced = false;
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == ',' || c == '\n') {
            spaced = true;
            if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    if (!spaced && tokens.size() == 1 && tokens[0].size() > 1) {
        std::vector<std::string> chars;
        for (char c : tokens[0]) chars.emplace_back(1, c);
        return chars;
    }
    return tokens;
}

int parse_int(const std::string& tok) {
    require(!tok.empty() && std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }),
            "not a positive integer: '" + tok + "'");
    return std::stoi(tok);
}

void check_limit(int n, const ScanOptions& opt) {
    if (n > opt.exhaustion_limit) {
        throw LimitExceeded("length " + std::to_string(n) + " is above the exhaustion limit " +
                            std::to_string(opt.exhaustion_limit) + " (" + std::to_string(n) +
                            "! permutations); raise the limit explicitly to scan it");
    }
}

/// Visits every permutation of S_n (0 < n), split into n independent tasks by
/// first entry. fn(task, perm) is called sequentially within a task.
template <class Acc, class Fn>
std::vector<Acc> scan_sn(int n, unsigned threads, Fn fn) {
    return parallel_tasks(static_cast<std::size_t>(n), threads, [&](std::size_t task) {
        Acc acc{};
        std::vector<int> p(static_cast<std::size_t>(n));
        p[0] = static_cast<int>(task) + 1;
        int fill = 1;
        for (int v = 1; v <= n; ++v)
            if (v != p[0]) p[static_cast<std::size_t>(fill++)] = v;
        do {
            fn(acc, std::span<const int>(p));
        } while (std::next_permutation(p.begin() + 1, p.end()));
        return acc;
    });
}

}  // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    require(is_bijection(entries_), "not a permutation of 1..n: " + str());
}

Permutation Permutation::identity(int n) {
    std::vector<int> e(static_cast<std::size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    return Permutation(std::move(e));
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> e;
    for (const auto& tok : tokenize(text)) e.push_back(parse_int(tok));
    return Permutation(std::move(e));
}

Permutation Permutation::reversed() const {
    std::vector<int> e(entries_.rbegin(), entries_.rend());
    return Permutation(std::move(e));
}

std::string Permutation::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? " " : "") << entries_[i];
    return os.str();
}

Pattern::Pattern(std::vector<int> letters, int box) : letters_(std::move(letters)), box_(box) {
    require(!letters_.empty() && letters_.size() <= 16, "pattern length must be 1..16");
    require(is_bijection(letters_), "pattern letters must be a permutation of 1..k");
    require(box_ == 0 || (box_ >= 1 && box_ < size()), "box must sit strictly between two letters");
}

Pattern Pattern::parse(std::string_view text) {
    std::vector<int> letters;
    int box = 0;
    for (const auto& tok : tokenize(text)) {
        if (tok == "_") {
            require(box == 0, "at most one box per pattern");
            box = static_cast<int>(letters.size());
            require(box > 0, "box cannot be the first token");
        } else {
            letters.push_back(parse_int(tok));
        }
    }
    require(box == 0 || box < static_cast<int>(letters.size()), "box cannot be the last token");
    return Pattern(std::move(letters), box);
}

std::string Pattern::str() const {
    std::ostringstream os;
    for (int i = 0; i < size(); ++i) {
        if (i) os << ' ';
        if (box_ != 0 && i == box_) os << "_ ";
        os << letters_[static_cast<std::size_t>(i)];
    }
    return os.str();
}

Matcher::Matcher(const Pattern& q) : letters_(q.letters_), box_(q.box_) {
    const int k = q.size();
    lower_.assign(static_cast<std::size_t>(k), -1);
    upper_.assign(static_cast<std::size_t>(k), -1);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < i; ++j) {
            const int lj = letters_[static_cast<std::size_t>(j)], li = letters_[static_cast<std::size_t>(i)];
            auto& lo = lower_[static_cast<std::size_t>(i)];
            auto& hi = upper_[static_cast<std::size_t>(i)];
            if (lj < li && (lo < 0 || lj > letters_[static_cast<std::size_t>(lo)])) lo = j;
            if (lj > li && (hi < 0 || lj < letters_[static_cast<std::size_t>(hi)])) hi = j;
        }
    }
}

bool Matcher::extend(std::span<const int> p, int depth, int prev, std::array<int, 16>& pos) const {
    const int k = static_cast<int>(letters_.size());
    if (depth == k) return true;
    const int n = static_cast<int>(p.size());
    const int start = prev + ((box_ != 0 && depth == box_) ? 2 : 1);
    const int stop = n - (k - depth);
    const int lo = lower_[static_cast<std::size_t>(depth)];
    const int hi = upper_[static_cast<std::size_t>(depth)];
    const int lo_val = lo < 0 ? std::numeric_limits<int>::min() : p[static_cast<std::size_t>(pos[static_cast<std::size_t>(lo)])];
    const int hi_val = hi < 0 ? std::numeric_limits<int>::max() : p[static_cast<std::size_t>(pos[static_cast<std::size_t>(hi)])];
    for (int x = start; x <= stop; ++x) {
        const int v = p[static_cast<std::size_t>(x)];
        if (v <= lo_val || v >= hi_val) continue;
        pos[static_cast<std::size_t>(depth)] = x;
        if (extend(p, depth + 1, x, pos)) return true;
    }
    return false;
}

bool Matcher::operator()(std::span<const int> p) const {
    if (p.size() < letters_.size() + (box_ ? 1u : 0u)) return false;
    std::array<int, 16> pos{};
    return extend(p, 0, -1, pos);
}

int inversions(std::span<const int> p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
    return inv;
}

bool contains(std::span<const int> p, const Pattern& q) { return Matcher(q)(p); }

std::uint64_t count_avoiders(int n, const Pattern& q, const ScanOptions& opt) {
    require(n >= 0, "length must be nonnegative");
    check_limit(n, opt);
    if (n == 0) return 1;
    const Matcher match(q);
    const auto parts = scan_sn<std::uint64_t>(n, opt.threads, [&](std::uint64_t& acc, std::span<const int> p) {
        acc += !match(p);
    });
    return std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
}

bool WilfTable::all_equal() const {
    return std::all_of(equal.begin(), equal.end(), [](bool b) { return b; });
}

WilfTable wilf_check(int n_max, const std::vector<Pattern>& patterns, const ScanOptions& opt) {
    require(n_max >= 1, "n_max must be at least 1");
    require(!patterns.empty(), "need at least one pattern");
    check_limit(n_max, opt);
    WilfTable t;
    t.patterns = patterns;
    t.counts.assign(patterns.size(), std::vector<std::uint64_t>(static_cast<std::size_t>(n_max), 0));
    std::vector<Matcher> matchers;
    for (const auto& q : patterns) matchers.emplace_back(q);
    for (int n = 1; n <= n_max; ++n) {
        using Acc = std::vector<std::uint64_t>;
        const auto parts = scan_sn<Acc>(n, opt.threads, [&](Acc& acc, std::span<const int> p) {
            if (acc.empty()) acc.assign(matchers.size(), 0);
            for (std::size_t i = 0; i < matchers.size(); ++i) acc[i] += !matchers[i](p);
        });
        for (const auto& part : parts)
            for (std::size_t i = 0; i < part.size(); ++i) t.counts[i][static_cast<std::size_t>(n - 1)] += part[i];
        bool eq = true;
        for (std::size_t i = 1; i < patterns.size(); ++i)
            eq = eq && t.counts[i][static_cast<std::size_t>(n - 1)] == t.counts[0][static_cast<std::size_t>(n - 1)];
        t.equal.push_back(eq);
    }
    return t;
}

std::vector<std::vector<Pattern>> boxed_triples() {
    const std::array<std::vector<int>, 3> base = {std::vector<int>{1, 2, 3, 4}, {1, 2, 4, 3}, {2, 1, 4, 3}};
    std::vector<std::vector<Pattern>> out;
    for (int box = 1; box <= 3; ++box) {
        std::vector<Pattern> triple;
        for (const auto& letters : base) triple.emplace_back(letters, box);
        out.push_back(std::move(triple));
    }
    return out;
}

InversionTable avoiders_by_inversions(int n_max, int k_max, const ScanOptions& opt) {
    require(n_max >= 1 && k_max >= 0, "need n_max >= 1 and k_max >= 0");
    check_limit(n_max, opt);
    const Matcher match(Pattern({1, 3, 2, 4}, 0));
    InversionTable t;
    t.n_max = n_max;
    t.k_max = k_max;
    t.b.assign(static_cast<std::size_t>(n_max + 1), std::vector<std::uint64_t>(static_cast<std::size_t>(k_max + 1), 0));
    t.totals.assign(static_cast<std::size_t>(n_max + 1), 0);
    t.b[0][0] = 1;
    t.totals[0] = 1;
    const int max_inv = n_max * (n_max - 1) / 2;
    for (int n = 1; n <= n_max; ++n) {
        using Acc = std::vector<std::uint64_t>;
        const auto parts = scan_sn<Acc>(n, opt.threads, [&](Acc& acc, std::span<const int> p) {
            if (acc.empty()) acc.assign(static_cast<std::size_t>(max_inv + 1), 0);
            if (!match(p)) ++acc[static_cast<std::size_t>(inversions(p))];
        });
        for (const auto& part : parts) {
            for (std::size_t k = 0; k < part.size(); ++k) {
                t.totals[static_cast<std::size_t>(n)] += part[k];
                if (k <= static_cast<std::size_t>(k_max)) t.b[static_cast<std::size_t>(n)][k] += part[k];
            }
        }
    }
    for (int n = 1; n < n_max && !t.monotonicity_violation; ++n)
        for (int k = 0; k <= k_max; ++k)
            if (t.b[static_cast<std::size_t>(n + 1)][static_cast<std::size_t>(k)] <
                t.b[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]) {
                t.monotonicity_violation = std::pair{n, k};
                break;
            }
    return t;
}

std::vector<double> growth_estimate(int n_max, const ScanOptions& opt) {
    check_limit(n_max, opt);
    const Pattern q({1, 3, 2, 4}, 0);
    std::vector<double> out;
    for (int n = 1; n <= n_max; ++n)
        out.push_back(std::pow(static_cast<double>(count_avoiders(n, q, opt)), 1.0 / n));
    return out;
}

ShatterResult shattered_ksets(const std::vector<Permutation>& family, int k) {
    ShatterResult res;
    if (family.empty()) return res;
    const int n = family.front().size();
    for (const auto& p : family) require(p.size() == n, "family members must share one length");
    require(k >= 1 && k <= n && k <= 12, "need 1 <= k <= n");
    std::vector<std::vector<int>> pos;
    for (const auto& p : family) {
        std::vector<int> where(static_cast<std::size_t>(n + 1));
        for (int i = 0; i < n; ++i) where[static_cast<std::size_t>(p[i])] = i;
        pos.push_back(std::move(where));
    }
    const std::uint64_t orders = factorial(k);
    if (family.size() < orders) return res;
    // Walk all k-subsets in lexicographic order.
    std::vector<int> x(static_cast<std::size_t>(k));
    std::iota(x.begin(), x.end(), 1);
    std::vector<int> idx(static_cast<std::size_t>(k));
    while (true) {
        std::set<std::vector<int>> seen;
        for (const auto& where : pos) {
            std::iota(idx.begin(), idx.end(), 0);
            std::sort(idx.begin(), idx.end(), [&](int a, int b) {
                return where[static_cast<std::size_t>(x[static_cast<std::size_t>(a)])] <
                       where[static_cast<std::size_t>(x[static_cast<std::size_t>(b)])];
            });
            seen.insert(idx);
        }
        if (seen.size() == orders) res.sets.push_back(x);
        int i = k - 1;
        while (i >= 0 && x[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) break;
        ++x[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) x[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j - 1)] + 1;
    }
    return res;
}

namespace {

/// Shattered-triple counter over position arrays.
class TripleCounter {
public:
    explicit TripleCounter(int n) : n_(n) {}

    std::size_t operator()(const std::vector<std::vector<int>>& family) const {
        std::vector<std::vector<int>> pos;
        pos.reserve(family.size());
        for (const auto& p : family) {
            std::vector<int> where(static_cast<std::size_t>(n_ + 1));
            for (int i = 0; i < n_; ++i) where[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] = i;
            pos.push_back(std::move(where));
        }
        std::size_t count = 0;
        for (int a = 1; a <= n_; ++a)
            for (int b = a + 1; b <= n_; ++b)
                for (int c = b + 1; c <= n_; ++c) {
                    unsigned mask = 0;
                    for (const auto& w : pos) {
                        const int pa = w[static_cast<std::size_t>(a)], pb = w[static_cast<std::size_t>(b)],
                                  pc = w[static_cast<std::size_t>(c)];
                        const unsigned code = (pa < pb ? 0u : 1u) | (pa < pc ? 0u : 2u) | (pb < pc ? 0u : 4u);
                        mask |= 1u << code;
                    }
                    // codes 2 and 5 are unrealisable; the six orders fill the rest
                    count += mask == 0xDBu;
                }
        return count;
    }

private:
    int n_;
};

std::vector<int> random_perm(int n, Rng& rng) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    rng.shuffle(p);
    return p;
}

}  // namespace

ShatterSearchResult shatter_search(int n, int family_size, std::uint64_t budget, std::uint64_t seed) {
    require(n >= 3, "need n >= 3");
    require(family_size >= 1 && static_cast<std::uint64_t>(family_size) <= (n <= 20 ? factorial(n) : ~0ULL),
            "family larger than S_n");
    Rng rng(seed);
    const TripleCounter count(n);
    ShatterSearchResult best;
    std::vector<std::vector<int>> best_family;
    const bool full_neighbourhood = n <= 7;
    const int samples_per_step = 256;

    while (best.evaluations < budget) {
        std::vector<std::vector<int>> fam;
        while (static_cast<int>(fam.size()) < family_size) {
            auto p = random_perm(n, rng);
            if (std::find(fam.begin(), fam.end(), p) == fam.end()) fam.push_back(std::move(p));
        }
        std::size_t cur = count(fam);
        ++best.evaluations;
        bool improved = true;
        while (improved && best.evaluations < budget) {
            improved = false;
            if (full_neighbourhood) {
                // First improving move in (member, replacement) lexicographic order.
                for (std::size_t i = 0; i < fam.size() && !improved && best.evaluations < budget; ++i) {
                    std::vector<int> q(static_cast<std::size_t>(n));
                    std::iota(q.begin(), q.end(), 1);
                    const auto old = fam[i];
                    do {
                        if (std::find(fam.begin(), fam.end(), q) != fam.end()) continue;
                        fam[i] = q;
                        const std::size_t c = count(fam);
                        ++best.evaluations;
                        if (c > cur) {
                            cur = c;
                            improved = true;
                            break;
                        }
                        fam[i] = old;
                    } while (best.evaluations < budget && std::next_permutation(q.begin(), q.end()));
                }
            } else {
                std::size_t best_c = cur;
                std::pair<std::size_t, std::vector<int>> best_move;
                for (int s = 0; s < samples_per_step && best.evaluations < budget; ++s) {
                    const std::size_t i = rng.below(fam.size());
                    auto q = random_perm(n, rng);
                    if (std::find(fam.begin(), fam.end(), q) != fam.end()) continue;
                    auto old = fam[i];
                    fam[i] = q;
                    const std::size_t c = count(fam);
                    ++best.evaluations;
                    fam[i] = std::move(old);
                    std::pair<std::size_t, std::vector<int>> move{i, std::move(q)};
                    if (c > best_c || (c == best_c && c > cur && move < best_move)) {
                        best_c = c;
                        best_move = std::move(move);
                    }
                }
                if (best_c > cur) {
                    fam[best_move.first] = best_move.second;
                    cur = best_c;
                    improved = true;
                }
            }
        }
        if (best_family.empty() || cur > best.count) {
            best.count = cur;
            best_family = fam;
        }
        ++best.restarts;
    }
    for (auto& p : best_family) best.family.emplace_back(std::move(p));
    return best;
}

}  // namespace cwb::perms
