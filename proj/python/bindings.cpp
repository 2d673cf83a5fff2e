#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cwb/battery.hpp"
#include "cwb/capset.hpp"
#include "cwb/cliquegame.hpp"
#include "cwb/graphlab.hpp"
#include "cwb/latin.hpp"
#include "cwb/perms.hpp"
#include "cwb/setfam.hpp"
#include "cwb/stirling.hpp"
#include "cwb/surfaces.hpp"
#include "cwb/tournaments.hpp"

namespace py = pybind11;

namespace {

py::object big(const mpz_class& x) { return py::module_::import("builtins").attr("int")(x.get_str()); }

py::object fraction(const mpq_class& q) {
    return py::module_::import("fractions").attr("Fraction")(big(q.get_num()), big(q.get_den()));
}

py::list big_list(const std::vector<mpz_class>& v) {
    py::list out;
    for (const auto& x : v) out.append(big(x));
    return out;
}

using Rows = std::vector<std::vector<int>>;

cwb::stirling::Poly poly(const py::iterable& coeffs) {
    cwb::stirling::Poly p;
    for (const auto& c : coeffs) p.emplace_back(py::str(c).cast<std::string>());
    return p;
}

cwb::latin::LatinSquare square(const Rows& rows) {
    std::vector<int> cells;
    for (const auto& r : rows) {
        cwb::require(r.size() == rows.size(), "square rows must have length n");
        cells.insert(cells.end(), r.begin(), r.end());
    }
    return cwb::latin::LatinSquare(static_cast<int>(rows.size()), std::move(cells));
}

cwb::capset::CapSet cap(const std::vector<std::string>& points) {
    cwb::require(!points.empty(), "empty cap");
    cwb::capset::CapSet c;
    for (const auto& p : points) c.points.push_back(cwb::capset::Vec3::parse(p));
    c.n = c.points.front().n;
    for (const auto& p : c.points) cwb::require(p.n == c.n, "dimension mismatch");
    return c;
}

std::vector<std::string> cap_points(const cwb::capset::CapSet& c) {
    std::vector<std::string> out;
    for (const auto& p : c.points) out.push_back(p.str());
    return out;
}

cwb::setfam::SetPairFamily family(const std::vector<std::pair<std::vector<int>, std::vector<int>>>& pairs, int a, int b) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [x, y] : pairs) j.push_back({x, y});
    return cwb::setfam::family_from_json(j, a, b);
}

py::dict verdict(const cwb::setfam::Verdict& v) {
    py::dict d;
    d["holds"] = v.holds;
    d["size"] = v.size;
    d["bound"] = big(v.bound);
    d["within_bound"] = v.within_bound;
    d["witness"] = v.witness ? py::cast(*v.witness) : py::none();
    d["reason"] = v.reason;
    return d;
}

}  // namespace

PYBIND11_MODULE(_cwb, m) {
    m.doc() = "exact enumeration and search kernels";
    m.attr("__version__") = cwb::kToolVersion;

    py::register_exception<cwb::LimitExceeded>(m, "LimitExceeded", PyExc_RuntimeError);
    py::register_exception<cwb::InvalidInput>(m, "InvalidInput", PyExc_ValueError);

    // perms
    m.def("count_avoiders", [](int n, const std::string& pattern, unsigned threads, int limit) {
        cwb::perms::ScanOptions o;
        o.threads = threads;
        o.exhaustion_limit = limit;
        py::gil_scoped_release release;
        return cwb::perms::count_avoiders(n, cwb::perms::Pattern::parse(pattern), o);
    }, py::arg("n"), py::arg("pattern"), py::arg("threads") = 1, py::arg("limit") = cwb::perms::kDefaultExhaustionLimit);
    m.def("contains", [](const std::vector<int>& p, const std::string& pattern) {
        return cwb::perms::contains(cwb::perms::Permutation(p), cwb::perms::Pattern::parse(pattern));
    });
    m.def("inversions", [](const std::vector<int>& p) { return cwb::perms::inversions(cwb::perms::Permutation(p)); });
    m.def("wilf_check", [](int n_max, const std::vector<std::string>& patterns) {
        std::vector<cwb::perms::Pattern> ps;
        for (const auto& s : patterns) ps.push_back(cwb::perms::Pattern::parse(s));
        const auto t = cwb::perms::wilf_check(n_max, ps);
        py::dict d;
        d["counts"] = t.counts;
        d["equal"] = std::vector<bool>(t.equal.begin(), t.equal.end());
        d["all_equal"] = t.all_equal();
        return d;
    });
    m.def("avoiders_by_inversions", [](int n_max, int k_max) {
        const auto t = cwb::perms::avoiders_by_inversions(n_max, k_max);
        py::dict d;
        d["b"] = t.b;
        d["totals"] = t.totals;
        d["violation"] = t.monotonicity_violation ? py::cast(*t.monotonicity_violation) : py::none();
        return d;
    });
    m.def("shattered_ksets", [](const Rows& fam, int k) {
        std::vector<cwb::perms::Permutation> f;
        for (const auto& p : fam) f.emplace_back(p);
        return cwb::perms::shattered_ksets(f, k).sets;
    });

    // tournaments
    m.def("tournament_inv", [](const std::string& text, int cap) {
        const auto t = cwb::tournaments::Tournament::parse(text);
        py::gil_scoped_release release;
        return cwb::tournaments::inv_table(t.size(), cap).inv(t);
    }, py::arg("tournament"), py::arg("cap") = cwb::tournaments::kDefaultCap);
    m.def("additivity_probe", [](int n1, int n2) {
        const auto r = cwb::tournaments::additivity_probe(n1, n2);
        py::dict d;
        d["pairs"] = r.pairs;
        d["distribution"] = r.distribution;
        d["min_defect"] = r.min_defect;
        d["max_defect"] = r.max_defect;
        return d;
    });

    // game
    m.def("solve_game", [](int n, unsigned threads) {
        cwb::cliquegame::SolveOptions o;
        o.threads = threads;
        cwb::cliquegame::Solution s;
        {
            py::gil_scoped_release release;
            s = cwb::cliquegame::solve(n, o);
        }
        py::dict d;
        d["winner"] = cwb::cliquegame::to_string(s.winner);
        py::list pv;
        for (const auto& [e, c] : s.principal_variation)
            pv.append(py::make_tuple(e.first, e.second, c == cwb::cliquegame::Colour::Red ? "RED" : "BLUE"));
        d["principal_variation"] = pv;
        return d;
    }, py::arg("n"), py::arg("threads") = 1);

    // setfam
    m.def("setfam_bound", [](int a, int b) { return big(cwb::setfam::bound(a, b)); });
    m.def("check_bollobas", [](const std::vector<std::pair<std::vector<int>, std::vector<int>>>& f, int a, int b) {
        return verdict(cwb::setfam::check_bollobas(family(f, a, b)));
    }, py::arg("family"), py::arg("a") = 0, py::arg("b") = 0);
    m.def("check_calbet", [](const std::vector<std::pair<std::vector<int>, std::vector<int>>>& f, int a, int b) {
        return verdict(cwb::setfam::check_calbet(family(f, a, b)));
    }, py::arg("family"), py::arg("a") = 0, py::arg("b") = 0);
    m.def("calbet_construction", [](int a, int b) {
        std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
        for (const auto& p : cwb::setfam::calbet_construction(a, b).pairs) out.emplace_back(p.a, p.b);
        return out;
    });
    m.def("brute_force_max", [](int a, int b, int ground, const std::string& mode) {
        cwb::require(mode == "calbet" || mode == "bollobas", "mode must be calbet or bollobas");
        return cwb::setfam::brute_force_max(a, b, ground, mode == "calbet" ? cwb::setfam::Mode::Calbet : cwb::setfam::Mode::Bollobas).maximum;
    }, py::arg("a"), py::arg("b"), py::arg("ground"), py::arg("mode") = "calbet");

    // latin
    m.def("count_cuboctahedra", [](const Rows& rows, unsigned threads) { return cwb::latin::count_cuboctahedra(square(rows), threads); },
          py::arg("square"), py::arg("threads") = 1);
    m.def("cayley_table", [](const std::string& spec) { return cwb::latin::cayley_table(cwb::latin::GroupSpec::parse(spec)).rows(); });
    m.def("is_group_table", [](const Rows& rows) { return cwb::latin::is_group_table(square(rows)); });
    m.def("jm_sample", [](int n, std::uint64_t steps, std::uint64_t seed) { return cwb::latin::jm_sample(n, steps, seed).rows(); });
    m.def("minimize_cuboctahedra", [](int n, std::uint64_t budget, std::uint64_t seed) {
        const auto r = cwb::latin::minimize_cuboctahedra(n, budget, seed);
        py::dict d;
        d["square"] = r.best.rows();
        d["count"] = r.count;
        d["ratio"] = r.ratio;
        return d;
    });

    // capset
    m.def("is_capset", [](const std::vector<std::string>& points) {
        const auto r = cwb::capset::is_capset(cap(points));
        py::dict d;
        d["is_cap"] = r.is_cap;
        if (r.triple)
            d["line"] = py::make_tuple((*r.triple)[0].str(), (*r.triple)[1].str(), (*r.triple)[2].str());
        else
            d["line"] = py::none();
        return d;
    });
    m.def("max_capset", [](int n, unsigned threads) {
        cwb::capset::MaxCapResult r;
        {
            py::gil_scoped_release release;
            r = cwb::capset::max_capset(n, threads);
        }
        py::dict d;
        d["size"] = r.size;
        d["witness"] = cap_points(r.witness);
        return d;
    }, py::arg("n"), py::arg("threads") = 1);
    m.def("cap_product", [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
        return cap_points(cwb::capset::product(cap(a), cap(b)));
    });
    m.def("find_disjoint_equal", [](int n, std::size_t size, std::uint64_t budget, std::uint64_t seed) {
        const auto r = cwb::capset::find_disjoint_equal(n, size, budget, seed);
        py::dict d;
        d["found"] = r.found;
        d["method"] = r.method;
        d["first"] = cap_points(r.first);
        d["second"] = cap_points(r.second);
        return d;
    }, py::arg("n"), py::arg("size"), py::arg("budget") = 10000, py::arg("seed") = 0);

    // graphs
    m.def("partial_sum", [](const std::vector<int>& s) { return fraction(cwb::graphlab::partial_sum(s)); });
    m.def("colours_Z", [](const std::vector<int>& s, std::uint64_t limit) {
        const auto r = cwb::graphlab::colours_Z(s, limit);
        py::dict d;
        d["colours"] = r.colours;
        d["certificate"] = r.certificate;
        return d;
    }, py::arg("s"), py::arg("state_limit") = 2'000'000);
    m.def("hall_condition", [](int n, const std::vector<std::pair<int, int>>& edges, const std::vector<int>& lambda) {
        const auto r = cwb::graphlab::hall_condition(cwb::graphlab::Graph(n, edges), lambda);
        return py::make_tuple(r.holds, r.violating);
    });
    m.def("orientation_exists", [](int n, const std::vector<std::pair<int, int>>& edges, const std::vector<int>& lambda) {
        const auto r = cwb::graphlab::orientation_exists(cwb::graphlab::Graph(n, edges), lambda);
        return py::make_tuple(r.exists, r.arcs);
    });
    m.def("bipartite_cycle_check", [](int na, int nb, const std::vector<std::pair<int, int>>& edges) {
        const auto r = cwb::graphlab::bipartite_cycle_check(cwb::graphlab::BipartiteGraph(na, nb, edges));
        py::dict d;
        d["outcome"] = cwb::graphlab::to_string(r.verdict);
        d["failing_set"] = r.failing_set;
        d["cycle"] = r.cycle;
        return d;
    });

    // surfaces
    m.def("genus", [](const Rows& rot) { return cwb::surfaces::genus(cwb::surfaces::RotationSystem(rot)); });
    m.def("trace_faces", [](const Rows& rot) { return cwb::surfaces::trace_faces(cwb::surfaces::RotationSystem(rot)); });
    m.def("k5_genus_distribution", [](unsigned threads) { return cwb::surfaces::k5_genus_distribution(threads); },
          py::arg("threads") = 1);
    m.def("classify_k5", [](int genus, bool with_reversal, unsigned threads) {
        py::list out;
        for (const auto& c : cwb::surfaces::classify_k5(genus, with_reversal, threads)) {
            py::dict d;
            d["code"] = c.representative_code;
            d["rotation"] = c.representative.rotation();
            d["orbit_size"] = c.orbit_size;
            out.append(d);
        }
        return out;
    }, py::arg("genus"), py::arg("with_reversal") = true, py::arg("threads") = 1);

    // stirling
    m.def("assoc_stirling", [](int n, int k, int r) { return big(cwb::stirling::assoc_stirling(n, k, r)); });
    m.def("rth_order", [](int n, int k, int r) { return big(cwb::stirling::rth_order(n, k, r)); });
    m.def("cycle_poly", [](int r, int n) { return big_list(cwb::stirling::cycle_poly(r, n)); });
    m.def("is_log_concave", [](const py::iterable& coeffs) {
        const auto r = cwb::stirling::is_log_concave(poly(coeffs));
        return py::make_tuple(r.holds, r.index);
    });
    m.def("is_real_rooted", [](const py::iterable& coeffs) { return cwb::stirling::is_real_rooted(poly(coeffs));
    });

    // batteries, returned as JSON text
    m.def("_suite", [](const std::string& name, unsigned threads) {
        cwb::require(name == "quick" || name == "acceptance", "suite is quick or acceptance");
        std::vector<cwb::battery::Check> checks;
        {
            py::gil_scoped_release release;
            checks = name == "quick" ? cwb::battery::quick(threads) : cwb::battery::acceptance(threads);
        }
        nlohmann::json j = nlohmann::json::array();
        for (const auto& c : checks) j.push_back(cwb::battery::to_json(c));
        return j.dump();
    }, py::arg("name"), py::arg("threads") = 1);
}
