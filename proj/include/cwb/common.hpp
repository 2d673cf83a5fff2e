#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace cwb {

inline constexpr const char* kToolVersion = "0.3.0";

/// Raised when a request exceeds a configured exhaustion or size cap.
/// The CLI maps this to exit code 3.
class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or invariant-violating input.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw InvalidInput(what);
}

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed for the chain/sample with the given index, derived from a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t s = master ^ (0xd1b54a32d192ed03ULL * (index + 1));
    splitmix64(s);
    return splitmix64(s);
}

/// Seeded generator with platform-independent bounded draws
/// (std distributions are implementation-defined, this is not).
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) {
        std::uint64_t s = seed;
        engine_.seed(splitmix64(s));
    }

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    int below(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

    /// Uniform double in [0, 1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(std::uint64_t{i})]);
    }

private:
    std::mt19937_64 engine_;
};

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs fn(task) for task in [0, tasks) on up to `threads` workers and returns
/// results in task order, so reductions over the result are independent of
/// the thread count.
template <class Fn>
auto parallel_tasks(std::size_t tasks, unsigned threads, Fn fn) {
    using R = decltype(fn(std::size_t{0}));
    std::vector<R> out(tasks);
    threads = std::max(1u, std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(tasks)));
    if (threads <= 1) {
        for (std::size_t t = 0; t < tasks; ++t) out[t] = fn(t);
        return out;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t t = w; t < tasks; t += threads) out[t] = fn(t);
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

inline std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

}  // namespace cwb
