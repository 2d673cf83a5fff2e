#pragma once

// r-associated and r-th order Stirling cycle numbers, the cycle polynomials
// c_{r,n}, and exact log-concavity / real-rootedness checks.

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cwb/common.hpp"

namespace cwb::stirling {

using Poly = std::vector<mpz_class>;  // coefficient of x^k at index k

/// values[n][k] = permutations of n with k cycles, all of length >= r; n <= n_max, k <= n.
struct StirlingTable {
    int r = 1;
    std::vector<std::vector<mpz_class>> values;
    const mpz_class& at(int n, int k) const { return values[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]; }
    /// One CSV row per n.
    std::string csv() const;
};

/// [n;k]_{>=r} = (n-1)[n-1;k] + C(n-1,r-1)(r-1)! [n-r;k-1], [0;0] = 1.
StirlingTable assoc_table(int n_max, int r);
mpz_class assoc_stirling(int n, int k, int r);

/// Row n of the table by walking S_n; LimitExceeded above n = 10.
std::vector<mpz_class> enumerate_row(int n, int r);

/// [n;k]^{(r)} = [n + (r-1)k; k]_{>=r}.
mpz_class rth_order(int n, int k, int r);

/// Coefficients of c_{r,n}(x) = sum_k [n;k]^{(r)} x^k.
Poly cycle_poly(int r, int n);
/// c_{r,0} .. c_{r,n_max}, built row by row with
/// T(n,k) = (N-1) T(n-1,k) + C(N-1,r-1)(r-1)! T(n-1,k-1), N = n + (r-1)k.
std::vector<Poly> cycle_poly_rows(int r, int n_max);

struct LogConcavity {
    bool holds = true;
    int index = -1;  // first k where the inequality or the no-internal-zero rule fails
};
LogConcavity is_log_concave(const Poly& a);

struct RealRoots {
    bool real_rooted = false;
    int degree = 0;
    int distinct_real = 0;      // Sturm count
    int squarefree_degree = 0;  // deg p - deg gcd(p, p')
};
/// Throws InvalidInput for the zero polynomial.
RealRoots real_roots(const Poly& p);
inline bool is_real_rooted(const Poly& p) { return real_roots(p).real_rooted; }

struct SweepResult {
    int r = 0, n_max = 0;
    bool holds = true;
    std::optional<int> first_failure;  // n
    int failure_index = -1;            // k for log-concavity
};

SweepResult log_concavity_sweep(int r, int n_max, unsigned threads = 1);
SweepResult real_rootedness_sweep(int r, int n_max, unsigned threads = 1);

std::string poly_str(const Poly& p);

}  // namespace cwb::stirling
