#include "cwb/surfaces.hpp"

#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace cwb::surfaces {

RotationSystem::RotationSystem(std::vector<std::vector<int>> rotation) : rot_(std::move(rotation)) {
    const int n = vertices();
    std::set<Dart> darts;
    for (int v = 0; v < n; ++v) {
        std::set<int> seen;
        for (int u : rot_[static_cast<std::size_t>(v)]) {
            require(u >= 0 && u < n && u != v, "rotation at " + std::to_string(v) + " names a bad neighbour");
            require(seen.insert(u).second, "rotation at " + std::to_string(v) + " repeats a neighbour");
            darts.insert({v, u});
        }
    }
    for (auto [v, u] : darts) require(darts.count({u, v}), "rotation lists are not symmetric");
}

RotationSystem RotationSystem::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<int>> rot;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> row;
        int x;
        while (ls >> x) row.push_back(x);
        require(ls.eof(), "bad rotation line '" + line + "'");
        rot.push_back(row);
    }
    while (!rot.empty() && rot.back().empty()) rot.pop_back();
    return RotationSystem(std::move(rot));
}

RotationSystem RotationSystem::k5(int code) {
    require(code >= 0 && code < kK5Systems, "K5 code must lie in [0, 7776)");
    std::vector<std::vector<int>> rot;
    for (int v = 0; v < 5; ++v, code /= 6) {
        std::vector<int> others;
        for (int u = 0; u < 5; ++u)
            if (u != v) others.push_back(u);
        std::vector<int> tail(others.begin() + 1, others.end());
        for (int i = 0; i < code % 6; ++i) std::next_permutation(tail.begin(), tail.end());
        std::vector<int> r{others.front()};
        r.insert(r.end(), tail.begin(), tail.end());
        rot.push_back(r);
    }
    return RotationSystem(std::move(rot));
}

int RotationSystem::edges() const {
    std::size_t d = 0;
    for (const auto& r : rot_) d += r.size();
    return static_cast<int>(d / 2);
}

Graph RotationSystem::graph() const {
    std::vector<graphlab::Edge> e;
    for (int v = 0; v < vertices(); ++v)
        for (int u : rot_[static_cast<std::size_t>(v)])
            if (v < u) e.push_back({v, u});
    return Graph(vertices(), std::move(e));
}

RotationSystem RotationSystem::reversed() const {
    auto r = rot_;
    for (auto& row : r) std::reverse(row.begin(), row.end());
    return RotationSystem(std::move(r));
}

RotationSystem RotationSystem::relabelled(const std::vector<int>& perm) const {
    require(perm.size() == rot_.size(), "permutation size mismatch");
    std::vector<std::vector<int>> r(rot_.size());
    for (std::size_t v = 0; v < rot_.size(); ++v) {
        auto& row = r[static_cast<std::size_t>(perm[v])];
        for (int u : rot_[v]) row.push_back(perm[static_cast<std::size_t>(u)]);
    }
    return RotationSystem(std::move(r));
}

RotationSystem RotationSystem::normalised() const {
    RotationSystem out = *this;
    for (auto& row : out.rot_)
        if (!row.empty()) std::rotate(row.begin(), std::min_element(row.begin(), row.end()), row.end());
    return out;
}

std::string RotationSystem::str() const {
    std::string s;
    for (const auto& row : rot_) {
        for (std::size_t i = 0; i < row.size(); ++i) s += (i ? " " : "") + std::to_string(row[i]);
        s += '\n';
    }
    return s;
}

std::vector<std::vector<Dart>> trace_faces(const RotationSystem& rs) {
    const int n = rs.vertices();
    const auto& rot = rs.rotation();
    // connectivity over the vertices that carry edges; isolated vertices count as components too
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<int> stack{0};
    if (n > 0) comp[0] = 0;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : rot[static_cast<std::size_t>(v)])
            if (comp[static_cast<std::size_t>(u)] < 0) comp[static_cast<std::size_t>(u)] = 0, stack.push_back(u);
    }
    require(std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; }), "face tracing needs a connected graph");

    // position of u in rot[v]
    std::vector<std::unordered_map<int, std::size_t>> pos(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        for (std::size_t i = 0; i < rot[static_cast<std::size_t>(v)].size(); ++i)
            pos[static_cast<std::size_t>(v)][rot[static_cast<std::size_t>(v)][i]] = i;
    std::set<Dart> used;
    std::vector<std::vector<Dart>> faces;
    for (int u = 0; u < n; ++u)
        for (int v : rot[static_cast<std::size_t>(u)]) {
            if (used.count({u, v})) continue;
            std::vector<Dart> face;
            Dart d{u, v};
            while (!used.count(d)) {
                used.insert(d);
                face.push_back(d);
                const auto& r = rot[static_cast<std::size_t>(d.second)];
                const std::size_t i = pos[static_cast<std::size_t>(d.second)].at(d.first);
                d = {d.second, r[(i + 1) % r.size()]};
            }
            faces.push_back(std::move(face));
        }
    return faces;
}

int genus(const RotationSystem& rs) {
    const int v = rs.vertices(), e = rs.edges();
    const int f = e == 0 ? 1 : static_cast<int>(trace_faces(rs).size());
    if (e == 0) require(v == 1, "face tracing needs a connected graph");
    const int twice = 2 - v + e - f;
    if (twice < 0 || twice % 2 != 0) throw std::logic_error("Euler characteristic inconsistent with an orientable surface");
    return twice / 2;
}

namespace {

/// Index of a normalised K5 system, or -1.
int k5_code(const RotationSystem& rs) {
    const auto n = rs.normalised();
    int code = 0;
    for (int v = 4; v >= 0; --v) {
        const auto& row = n.rotation()[static_cast<std::size_t>(v)];
        std::vector<int> tail(row.begin() + 1, row.end());
        std::vector<int> start = tail;
        std::sort(start.begin(), start.end());
        int digit = 0;
        while (start != tail) {
            std::next_permutation(start.begin(), start.end());
            ++digit;
        }
        code = code * 6 + digit;
    }
    return code;
}

std::vector<int> k5_genera(unsigned threads) {
    return parallel_tasks(static_cast<std::size_t>(kK5Systems), threads,
                          [](std::size_t c) { return genus(RotationSystem::k5(static_cast<int>(c))); });
}

}  // namespace

std::map<int, int> k5_genus_distribution(unsigned threads) {
    std::map<int, int> d;
    for (int g : k5_genera(threads)) ++d[g];
    return d;
}

std::vector<EmbeddingClass> classify_k5(int target_genus, bool with_reversal, unsigned threads) {
    const auto genera = k5_genera(threads);
    std::vector<std::vector<int>> perms;
    std::vector<int> p(5);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    std::vector<bool> seen(kK5Systems, false);
    std::vector<EmbeddingClass> out;
    for (int code = 0; code < kK5Systems; ++code) {
        if (seen[static_cast<std::size_t>(code)] || genera[static_cast<std::size_t>(code)] != target_genus) continue;
        const auto rs = RotationSystem::k5(code);
        std::set<int> orbit;
        for (const auto& perm : perms) {
            const auto img = rs.relabelled(perm);
            orbit.insert(k5_code(img));
            if (with_reversal) orbit.insert(k5_code(img.reversed()));
        }
        for (int c : orbit) seen[static_cast<std::size_t>(c)] = true;
        out.push_back({rs, code, target_genus, static_cast<int>(orbit.size())});
    }
    return out;
}

}  // namespace cwb::surfaces
