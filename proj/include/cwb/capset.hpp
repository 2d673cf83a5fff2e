#pragma once

// Cap sets in F_3^n: verification, exact maxima for n <= 4, products,
// affine images and a search for disjoint caps of equal size.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cwb/common.hpp"

namespace cwb::capset {

inline constexpr int kMaxDim = 32;

/// n trits, trit i in bits 2i..2i+1.
struct Vec3 {
    int n = 0;
    std::uint64_t bits = 0;

    static Vec3 zero(int n);
    static Vec3 from_trits(const std::vector<int>& t);
    /// "0211": one character per coordinate, coordinate 0 first.
    static Vec3 parse(const std::string& s);
    /// Base-3 index with coordinate 0 least significant.
    static Vec3 from_index(int n, std::uint64_t index);

    int trit(int i) const { return static_cast<int>((bits >> (2 * i)) & 3u); }
    void set(int i, int v);
    std::uint64_t index() const;
    std::string str() const;

    friend bool operator==(const Vec3&, const Vec3&) = default;
    friend auto operator<=>(const Vec3&, const Vec3&) = default;
};

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a);
Vec3 concat(const Vec3& a, const Vec3& b);

struct CapSet {
    int n = 0;
    std::vector<Vec3> points;
    std::size_t size() const { return points.size(); }
    /// Points sorted by trit string.
    CapSet sorted() const;
};

/// One point per line, blank lines ignored.
CapSet parse_cap(const std::string& text);
std::string to_text(const CapSet& c);

struct CapCheck {
    bool is_cap = true;
    std::optional<std::array<Vec3, 3>> triple;  // x, y, -x-y
};

/// Throws InvalidInput on dimension mismatch or repeated points.
CapCheck is_capset(int n, const std::vector<Vec3>& points);
inline CapCheck is_capset(const CapSet& c) { return is_capset(c.n, c.points); }

struct MaxCapResult {
    int n = 0;
    std::size_t size = 0;
    CapSet witness;  // lexicographically first maximum containing 0, e1, ..., en
    std::uint64_t nodes = 0;
};

/// Exact maximum by branch and bound; LimitExceeded above n = cap (hard limit 4).
MaxCapResult max_capset(int n, unsigned threads = 1, int cap = 4);

CapSet product(const CapSet& a, const CapSet& b);

/// x -> Mx + t over F_3, M row-major n x n.
struct AffineMap {
    int n = 0;
    std::vector<int> m;
    Vec3 t;
    Vec3 operator()(const Vec3& x) const;
    bool invertible() const;
    static AffineMap random_invertible(int n, Rng& rng);
    static AffineMap translation(const Vec3& t);
};

CapSet image(const AffineMap& f, const CapSet& c);

/// Greedy construction over a random point order with local repair; nullopt if
/// `attempts` runs do not reach `size`.
std::optional<CapSet> random_cap(int n, std::size_t size, Rng& rng, int attempts = 200);

struct DisjointResult {
    bool found = false;
    CapSet first, second;
    std::string method;  // translate, affine, independent, counting
    std::uint64_t tries = 0;
};

/// Translates first, then random affine images, then independent random caps.
DisjointResult find_disjoint_equal(int n, std::size_t size, std::uint64_t budget, std::uint64_t seed);

}  // namespace cwb::capset
