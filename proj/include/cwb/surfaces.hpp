#pragma once

// Orientable rotation systems, face tracing and genus; classification of the
// rotation systems of K5.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cwb/graphlab.hpp"

namespace cwb::surfaces {

using graphlab::Graph;
using Dart = std::pair<int, int>;

class RotationSystem {
public:
    RotationSystem() = default;
    /// rotation[v] is the cyclic order of v's neighbours; the graph is read off it.
    explicit RotationSystem(std::vector<std::vector<int>> rotation);
    /// One line per vertex: its cyclic neighbour list.
    static RotationSystem parse(const std::string& text);
    /// Code in [0, 7776): base-6 digit v picks the order of v's last three neighbours.
    static RotationSystem k5(int code);

    int vertices() const { return static_cast<int>(rot_.size()); }
    int edges() const;
    const std::vector<std::vector<int>>& rotation() const { return rot_; }
    Graph graph() const;

    RotationSystem reversed() const;
    /// Vertex v becomes perm[v].
    RotationSystem relabelled(const std::vector<int>& perm) const;
    /// Each cyclic list rotated to start at its least neighbour.
    RotationSystem normalised() const;
    std::string str() const;

    friend bool operator==(const RotationSystem& a, const RotationSystem& b) {
        return a.normalised().rot_ == b.normalised().rot_;
    }

private:
    std::vector<std::vector<int>> rot_;
};

/// Face boundary walks; throws InvalidInput for a disconnected graph.
std::vector<std::vector<Dart>> trace_faces(const RotationSystem& rs);
int genus(const RotationSystem& rs);

inline constexpr int kK5Systems = 7776;

/// genus -> number of K5 rotation systems.
std::map<int, int> k5_genus_distribution(unsigned threads = 1);

struct EmbeddingClass {
    RotationSystem representative;  // least code in the orbit
    int representative_code = 0;
    int genus = 0;
    int orbit_size = 0;
};

/// Orbits under vertex relabelling, combined with global reversal when `with_reversal`.
std::vector<EmbeddingClass> classify_k5(int target_genus, bool with_reversal = true, unsigned threads = 1);

}  // namespace cwb::surfaces
