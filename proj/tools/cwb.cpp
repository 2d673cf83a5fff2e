// cwb: command-line front end for the workbench modules.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
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
#include "report.hpp"

using json = nlohmann::json;
using cwb::cli::Outcome;

namespace {

struct Globals {
    std::uint64_t seed = 0;
    unsigned threads = 0;
    double timeout = 0;  // seconds, 0 = none
    std::string format = "json";
    std::string out;
    bool no_timing = false;
};

Globals g;

void progress(const std::string& msg) { std::cerr << "[cwb] " << msg << std::endl; }

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path);
    if (!in) throw cwb::InvalidInput("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

/// "1,2,3", "1 2 3" or "{1,2,3}".
std::vector<int> parse_ints(const std::string& text) {
    std::string t = text;
    for (char& c : t)
        if (c == ',' || c == '{' || c == '}' || c == '[' || c == ']' || c == ';') c = ' ';
    std::istringstream in(t);
    std::vector<int> v;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        int x = 0;
        try {
            x = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        cwb::require(used == tok.size() && used > 0, "not an integer: '" + tok + "'");
        v.push_back(x);
    }
    return v;
}

json edges_json(const std::vector<cwb::graphlab::Edge>& e) {
    json a = json::array();
    for (auto [u, v] : e) a.push_back({u, v});
    return a;
}

const char* holds(bool b) { return b ? "verified" : "refuted"; }
const char* instance(bool b) { return b ? "verified" : "refuted-instance"; }

using Action = std::function<Outcome()>;
std::vector<std::pair<CLI::App*, Action>> actions;

CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& desc) { return parent->add_subcommand(name, desc); }

// ---------------------------------------------------------------- perms

void register_perms(CLI::App& app) {
    namespace P = cwb::perms;
    auto* cmd = app.add_subcommand("perms", "permutation patterns, inversions, shattering");
    cmd->require_subcommand(1);

    static int n = 0, n_max = 0, k_max = 0, k = 3, size = 6, limit = P::kDefaultExhaustionLimit;
    static std::string pattern, perm, file;
    static std::vector<std::string> patterns, perm_list;
    static std::uint64_t budget = 2000;
    static bool triples = false;

    auto scan = [] {
        P::ScanOptions o;
        o.exhaustion_limit = limit;
        o.threads = cwb::resolve_threads(g.threads);
        return o;
    };

    auto* count = leaf(cmd, "count", "av_n(q) by exhaustive scan");
    count->add_option("--n", n, "length")->required();
    count->add_option("--pattern", pattern, "pattern, '_' marks the box")->required();
    count->add_option("--limit", limit, "refuse n above this")->capture_default_str();
    actions.emplace_back(count, [=] {
        const auto q = P::Pattern::parse(pattern);
        Outcome o{"perms.count", {{"n", n}, {"pattern", q.str()}}};
        o.result = {{"count", P::count_avoiders(n, q, scan())}};
        return o;
    });

    auto* contains = leaf(cmd, "contains", "does a permutation contain a pattern");
    contains->add_option("--perm", perm, "one-line notation")->required();
    contains->add_option("--pattern", pattern)->required();
    actions.emplace_back(contains, [=] {
        const auto p = P::Permutation::parse(perm);
        const auto q = P::Pattern::parse(pattern);
        Outcome o{"perms.contains", {{"perm", p.str()}, {"pattern", q.str()}}};
        o.result = {{"contains", P::contains(p, q)}, {"inversions", P::inversions(p)}};
        return o;
    });

    auto* wilf = leaf(cmd, "wilf", "compare av_n across patterns");
    wilf->add_option("--n-max", n_max)->required();
    wilf->add_option("--pattern", patterns, "repeatable");
    wilf->add_flag("--triples", triples, "the three boxed triples");
    wilf->add_option("--limit", limit)->capture_default_str();
    actions.emplace_back(wilf, [=] {
        std::vector<std::vector<P::Pattern>> groups;
        if (triples) groups = P::boxed_triples();
        if (!patterns.empty()) {
            std::vector<P::Pattern> ps;
            for (const auto& s : patterns) ps.push_back(P::Pattern::parse(s));
            groups.push_back(ps);
        }
        cwb::require(!groups.empty(), "give --pattern or --triples");
        Outcome o{"perms.wilf", {{"n_max", n_max}}};
        json rows = json::array(), names = json::array();
        bool all = true;
        for (const auto& grp : groups) {
            progress("wilf check on " + std::to_string(grp.size()) + " patterns");
            const auto t = P::wilf_check(n_max, grp, scan());
            json ps = json::array();
            for (const auto& p : grp) ps.push_back(p.str());
            names.push_back(ps);
            json certificate = nullptr;
            for (std::size_t i = 0; i < t.equal.size(); ++i)
                if (!t.equal[i]) {
                    json c = json::object();
                    for (std::size_t j = 0; j < grp.size(); ++j) c[grp[j].str()] = t.counts[j][i];
                    certificate = {{"n", i + 1}, {"counts", c}};
                    break;
                }
            rows.push_back({{"patterns", ps}, {"counts", t.counts}, {"equal", t.all_equal()}, {"certificate", certificate}});
            all = all && t.all_equal();
        }
        o.parameters["patterns"] = names;
        o.result = {{"groups", rows}, {"all_equal", all}};
        o.verdict = holds(all);
        return o;
    });

    auto* inv = leaf(cmd, "inversions", "b[n][k] for av(1324) and the monotonicity check");
    inv->add_option("--n-max", n_max)->required();
    inv->add_option("--k-max", k_max)->required();
    inv->add_option("--limit", limit)->capture_default_str();
    actions.emplace_back(inv, [=] {
        const auto t = P::avoiders_by_inversions(n_max, k_max, scan());
        Outcome o{"perms.inversions", {{"n_max", n_max}, {"k_max", k_max}, {"pattern", "1324"}}};
        json viol = nullptr;
        if (t.monotonicity_violation) viol = {{"n", t.monotonicity_violation->first}, {"k", t.monotonicity_violation->second}};
        o.result = {{"b", t.b}, {"totals", t.totals}, {"monotone", !t.monotonicity_violation}, {"violation", viol}};
        o.verdict = holds(!t.monotonicity_violation);
        std::string csv = "n";
        for (int kk = 0; kk <= k_max; ++kk) csv += ",k" + std::to_string(kk);
        csv += "\n";
        for (int nn = 1; nn <= n_max; ++nn) {
            csv += std::to_string(nn);
            for (auto x : t.b[static_cast<std::size_t>(nn)]) csv += "," + std::to_string(x);
            csv += "\n";
        }
        o.csv = csv;
        o.text = csv;
        return o;
    });

    auto* growth = leaf(cmd, "growth", "av_n(1324)^(1/n)");
    growth->add_option("--n-max", n_max)->required();
    growth->add_option("--limit", limit)->capture_default_str();
    actions.emplace_back(growth, [=] {
        Outcome o{"perms.growth", {{"n_max", n_max}, {"pattern", "1324"}}};
        o.result = {{"estimates", P::growth_estimate(n_max, scan())}};
        return o;
    });

    auto* shatter = leaf(cmd, "shatter", "k-subsets shattered by a family");
    shatter->add_option("--perm", perm_list, "repeatable");
    shatter->add_option("--file", file, "one permutation per line");
    shatter->add_option("--k", k)->capture_default_str();
    actions.emplace_back(shatter, [=] {
        std::vector<std::string> lines = perm_list;
        if (!file.empty()) {
            std::istringstream in(read_input(file));
            for (std::string line; std::getline(in, line);)
                if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
        }
        cwb::require(!lines.empty(), "give --perm or --file");
        std::vector<P::Permutation> fam;
        json fj = json::array();
        for (const auto& s : lines) fam.push_back(P::Permutation::parse(s)), fj.push_back(fam.back().str());
        const auto r = P::shattered_ksets(fam, k);
        Outcome o{"perms.shatter", {{"family", fj}, {"k", k}}};
        o.result = {{"count", r.count()}, {"sets", r.sets}};
        return o;
    });

    auto* search = leaf(cmd, "shatter-search", "hill climbing for many shattered triples");
    search->add_option("--n", n)->required();
    search->add_option("--size", size, "family size")->capture_default_str();
    search->add_option("--budget", budget)->capture_default_str();
    actions.emplace_back(search, [=] {
        const auto r = P::shatter_search(n, size, budget, g.seed);
        Outcome o{"perms.shatter-search", {{"n", n}, {"size", size}, {"budget", budget}}};
        json fj = json::array();
        for (const auto& p : r.family) fj.push_back(p.str());
        o.result = {{"count", r.count}, {"family", fj}, {"evaluations", r.evaluations}, {"restarts", r.restarts}};
        o.verdict = "found";
        return o;
    });
}

// ---------------------------------------------------------------- tournaments

void register_tournaments(CLI::App& app) {
    namespace T = cwb::tournaments;
    auto* cmd = app.add_subcommand("tournaments", "inversion number of tournaments");
    cmd->require_subcommand(1);
    static std::string tournament, subset;
    static int n = 0, n1 = 0, n2 = 0, cap = T::kDefaultCap;

    auto* inv = leaf(cmd, "inv", "inv(T) for one tournament");
    inv->add_option("--tournament", tournament, "\"n bits\" in pair order")->required();
    inv->add_option("--cap", cap)->capture_default_str();
    actions.emplace_back(inv, [=] {
        const auto t = T::Tournament::parse(tournament);
        const auto table = T::inv_table(t.size(), cap, cwb::resolve_threads(g.threads));
        Outcome o{"tournaments.inv", {{"tournament", t.str()}}};
        o.result = {{"inv", table.inv(t)}, {"transitive", t.is_transitive()}};
        return o;
    });

    auto* invert = leaf(cmd, "invert", "reverse the edges inside a vertex set");
    invert->add_option("--tournament", tournament)->required();
    invert->add_option("--subset", subset, "vertices, 0-based")->required();
    actions.emplace_back(invert, [=] {
        const auto t = T::Tournament::parse(tournament);
        std::uint32_t mask = 0;
        for (int v : parse_ints(subset)) {
            cwb::require(v >= 0 && v < t.size(), "vertex out of range");
            mask |= 1u << v;
        }
        Outcome o{"tournaments.invert", {{"tournament", t.str()}, {"subset", parse_ints(subset)}}};
        o.result = {{"tournament", T::invert_subset(t, mask).str()}};
        return o;
    });

    auto* table = leaf(cmd, "table", "BFS table over all tournaments on n vertices");
    table->add_option("--n", n)->required();
    table->add_option("--cap", cap)->capture_default_str();
    actions.emplace_back(table, [=] {
        progress("breadth-first search over tournaments on " + std::to_string(n) + " vertices");
        const auto t = T::inv_table(n, cap, cwb::resolve_threads(g.threads));
        Outcome o{"tournaments.table", {{"n", n}}};
        o.result = {{"states", t.state_count()}, {"max_inv", t.max_inv()}, {"histogram", t.histogram()}};
        return o;
    });

    auto* add = leaf(cmd, "additivity", "inv(T1 -> T2) - inv(T1) - inv(T2) over all pairs");
    add->add_option("--n1", n1)->required();
    add->add_option("--n2", n2)->required();
    add->add_option("--cap", cap)->capture_default_str();
    actions.emplace_back(add, [=] {
        const auto r = T::additivity_probe(n1, n2, cap, cwb::resolve_threads(g.threads));
        Outcome o{"tournaments.additivity", {{"n1", n1}, {"n2", n2}}};
        json dist = json::object();
        for (auto [d, c] : r.distribution) dist[std::to_string(d)] = c;
        o.result = {{"pairs", r.pairs},
                    {"distribution", dist},
                    {"min_defect", r.min_defect},
                    {"max_defect", r.max_defect},
                    {"min_witness", {r.min_witness_1.str(), r.min_witness_2.str()}},
                    {"max_witness", {r.max_witness_1.str(), r.max_witness_2.str()}}};
        return o;
    });
}

// ---------------------------------------------------------------- game

void register_game(CLI::App& app) {
    namespace G = cwb::cliquegame;
    auto* cmd = app.add_subcommand("game", "the Red/Blue clique game on K_n");
    cmd->require_subcommand(1);
    static int n = 0, cap = G::kDefaultCap;
    static bool no_memo = false, no_canon = false;

    auto* solve = leaf(cmd, "solve", "exact minimax solve");
    solve->add_option("--n", n)->required();
    solve->add_option("--cap", cap)->capture_default_str();
    solve->add_flag("--no-memo", no_memo, "plain search");
    solve->add_flag("--no-canon", no_canon, "memoize without relabelling");
    actions.emplace_back(solve, [=] {
        G::SolveOptions opt;
        opt.cap = cap;
        opt.memoize = !no_memo;
        opt.canonicalize = !no_canon;
        opt.threads = cwb::resolve_threads(g.threads);
        const auto s = G::solve(n, opt);
        Outcome o{"game.solve", {{"n", n}, {"memoize", opt.memoize}, {"canonicalize", opt.canonicalize}}};
        json pv = json::array();
        for (const auto& [e, c] : s.principal_variation)
            pv.push_back({e.first, e.second, c == G::Colour::Red ? "RED" : "BLUE"});
        o.result = {{"winner", G::to_string(s.winner)}, {"principal_variation", pv}};
        o.diagnostics = {{"nodes", s.nodes}, {"memo_entries", s.memo_entries}};
        // conjecture: BLUE wins for every n >= 3
        o.verdict = n >= 3 ? holds(s.winner == G::Player::Blue) : "report-only";
        return o;
    });
}

// ---------------------------------------------------------------- setfam

cwb::setfam::Mode parse_mode(const std::string& m) {
    if (m == "bollobas") return cwb::setfam::Mode::Bollobas;
    if (m == "calbet") return cwb::setfam::Mode::Calbet;
    throw cwb::InvalidInput("mode must be bollobas or calbet");
}

json verdict_json(const cwb::setfam::Verdict& v) {
    json w = nullptr;
    if (v.witness) w = *v.witness;
    return {{"holds", v.holds}, {"size", v.size}, {"bound", v.bound.get_str()}, {"within_bound", v.within_bound},
            {"witness", w}, {"reason", v.reason}};
}

void register_setfam(CLI::App& app) {
    namespace S = cwb::setfam;
    auto* cmd = app.add_subcommand("setfam", "set-pair families");
    cmd->require_subcommand(1);
    static int a = 0, b = 0, ground = 0;
    static std::string file, mode = "calbet";

    auto* check = leaf(cmd, "check", "verify a family given as JSON pairs");
    check->add_option("--file", file, "JSON list of [A, B] pairs, '-' for stdin")->required();
    check->add_option("--mode", mode, "bollobas|calbet")->capture_default_str();
    check->add_option("--a", a, "|A_i|, inferred if omitted");
    check->add_option("--b", b, "|B_i|, inferred if omitted");
    actions.emplace_back(check, [=] {
        const auto f = S::family_from_json(json::parse(read_input(file)), a, b);
        const auto v = parse_mode(mode) == S::Mode::Calbet ? S::check_calbet(f) : S::check_bollobas(f);
        Outcome o{"setfam.check", {{"mode", mode}, {"family", S::to_json(f)}, {"a", f.a}, {"b", f.b}}};
        o.result = verdict_json(v);
        o.verdict = instance(v.holds);
        return o;
    });

    auto* bound = leaf(cmd, "bound", "conjectured maximum size");
    bound->add_option("--a", a)->required();
    bound->add_option("--b", b)->required();
    actions.emplace_back(bound, [=] {
        Outcome o{"setfam.bound", {{"a", a}, {"b", b}}};
        o.result = {{"bound", S::bound(a, b).get_str()}};
        return o;
    });

    auto* construct = leaf(cmd, "construct", "family meeting the conjectured bound");
    construct->add_option("--a", a)->required();
    construct->add_option("--b", b)->required();
    actions.emplace_back(construct, [=] {
        const auto f = S::calbet_construction(a, b);
        const auto v = S::check_calbet(f);
        Outcome o{"setfam.construct", {{"a", a}, {"b", b}}};
        o.result = {{"family", S::to_json(f)}, {"check", verdict_json(v)}};
        o.verdict = holds(v.holds && v.bound == f.size());
        return o;
    });

    auto* brute = leaf(cmd, "brute-force", "largest valid family over a small ground set");
    brute->add_option("--a", a)->required();
    brute->add_option("--b", b)->required();
    brute->add_option("--ground", ground)->required();
    brute->add_option("--mode", mode)->capture_default_str();
    actions.emplace_back(brute, [=] {
        const auto m = parse_mode(mode);
        const auto r = S::brute_force_max(a, b, ground, m);
        Outcome o{"setfam.brute-force", {{"a", a}, {"b", b}, {"ground", ground}, {"mode", mode}}};
        const mpz_class bd = m == S::Mode::Calbet ? S::bound(a, b) : mpz_class(static_cast<unsigned long>(cwb::binomial(a + b, a)));
        o.result = {{"maximum", r.maximum}, {"bound", bd.get_str()}, {"witness", S::to_json(r.witness)}, {"nodes", r.nodes},
                    {"candidates", r.candidates}};
        o.verdict = holds(mpz_class(static_cast<unsigned long>(r.maximum)) <= bd);
        return o;
    });
}

// ---------------------------------------------------------------- latin

cwb::latin::LatinSquare square_from(const std::string& file, const std::string& group) {
    cwb::require(file.empty() != group.empty(), "give exactly one of --file and --group");
    if (!group.empty()) return cwb::latin::cayley_table(cwb::latin::GroupSpec::parse(group));
    return cwb::latin::LatinSquare::parse(read_input(file));
}

void register_latin(CLI::App& app) {
    namespace L = cwb::latin;
    auto* cmd = app.add_subcommand("latin", "cuboctahedra in Latin squares");
    cmd->require_subcommand(1);
    static std::string file, group;
    static int n = 0, restarts = 4;
    static std::uint64_t steps = 0, budget = 20000;
    static std::size_t count = 1;

    auto* cnt = leaf(cmd, "count", "cuboctahedron count");
    cnt->add_option("--file", file, "square text, '-' for stdin");
    cnt->add_option("--group", group, "Z5, Z2xZ2, ...");
    actions.emplace_back(cnt, [=] {
        const auto l = square_from(file, group);
        const auto c = L::count_cuboctahedra(l, cwb::resolve_threads(g.threads));
        const double n4 = std::pow(static_cast<double>(l.order()), 4);
        Outcome o{"latin.count", {{"square", l.rows()}}};
        if (!group.empty()) o.parameters["group"] = group;
        o.result = {{"order", l.order()}, {"count", c}, {"ratio", static_cast<double>(c) / n4},
                    {"group_table", L::is_group_table(l)}};
        return o;
    });

    auto* cay = leaf(cmd, "cayley", "Cayley table of a group");
    cay->add_option("--group", group)->required();
    actions.emplace_back(cay, [=] {
        const auto l = L::cayley_table(L::GroupSpec::parse(group));
        Outcome o{"latin.cayley", {{"group", group}}};
        o.result = {{"square", l.rows()}};
        o.text = l.str();
        return o;
    });

    auto* grp = leaf(cmd, "is-group", "is the square isotopic to a group table");
    grp->add_option("--file", file)->required();
    actions.emplace_back(grp, [=] {
        const auto l = L::LatinSquare::parse(read_input(file));
        Outcome o{"latin.is-group", {{"square", l.rows()}}};
        o.result = {{"group_table", L::is_group_table(l)}};
        return o;
    });

    auto* sample = leaf(cmd, "sample", "Jacobson-Matthews samples with their counts");
    sample->add_option("--n", n)->required();
    sample->add_option("--steps", steps, "default n^3");
    sample->add_option("--count", count)->capture_default_str();
    actions.emplace_back(sample, [=] {
        const std::uint64_t st = steps ? steps : L::default_steps(n);
        const unsigned th = cwb::resolve_threads(g.threads);
        progress("sampling " + std::to_string(count) + " squares of order " + std::to_string(n));
        const auto sq = L::jm_samples(n, count, st, g.seed, th);
        const auto counts = cwb::parallel_tasks(sq.size(), th, [&](std::size_t i) { return L::count_cuboctahedra(sq[i]); });
        double mean = 0;
        for (auto c : counts) mean += static_cast<double>(c);
        mean /= static_cast<double>(counts.size()) * std::pow(static_cast<double>(n), 4);
        json squares = json::array();
        std::string text;
        for (const auto& s : sq) squares.push_back(s.rows()), text += s.str() + "\n";
        Outcome o{"latin.sample", {{"n", n}, {"steps", st}, {"count", count}}};
        o.result = {{"counts", counts}, {"mean_ratio", mean}, {"squares", squares}};
        o.text = text;
        return o;
    });

    auto* mini = leaf(cmd, "minimize", "search for squares with few cuboctahedra");
    mini->add_option("--n", n)->required();
    mini->add_option("--budget", budget)->capture_default_str();
    mini->add_option("--restarts", restarts)->capture_default_str();
    actions.emplace_back(mini, [=] {
        const auto r = L::minimize_cuboctahedra(n, budget, g.seed, restarts);
        Outcome o{"latin.minimize", {{"n", n}, {"budget", budget}, {"restarts", restarts}}};
        o.result = {{"count", r.count}, {"ratio", r.ratio}, {"square", r.best.rows()}, {"evaluations", r.evaluations}};
        o.text = r.best.str();
        o.verdict = "found";
        return o;
    });
}

// ---------------------------------------------------------------- capset

json points_json(const cwb::capset::CapSet& c) {
    json a = json::array();
    for (const auto& p : c.points) a.push_back(p.str());
    return a;
}

void register_capset(CLI::App& app) {
    namespace C = cwb::capset;
    auto* cmd = app.add_subcommand("capset", "cap sets in F_3^n");
    cmd->require_subcommand(1);
    static std::string file, file_b;
    static int n = 0, cap = 4;
    static std::size_t size = 0;
    static std::uint64_t budget = 10000;

    auto* check = leaf(cmd, "check", "is the point set a cap");
    check->add_option("--file", file, "one trit string per line")->required();
    actions.emplace_back(check, [=] {
        const auto c = C::parse_cap(read_input(file));
        const auto r = C::is_capset(c);
        json t = nullptr;
        if (r.triple) t = {(*r.triple)[0].str(), (*r.triple)[1].str(), (*r.triple)[2].str()};
        Outcome o{"capset.check", {{"n", c.n}, {"points", points_json(c)}}};
        o.result = {{"is_cap", r.is_cap}, {"size", c.size()}, {"line", t}};
        o.verdict = instance(r.is_cap);
        return o;
    });

    auto* mx = leaf(cmd, "max", "largest cap by exhaustive search");
    mx->add_option("--n", n)->required();
    mx->add_option("--cap", cap, "refuse n above this")->capture_default_str();
    actions.emplace_back(mx, [=] {
        progress("exhaustive cap search in F_3^" + std::to_string(n));
        const auto r = C::max_capset(n, cwb::resolve_threads(g.threads), cap);
        Outcome o{"capset.max", {{"n", n}}};
        o.result = {{"size", r.size}, {"witness", points_json(r.witness)}};
        o.diagnostics = {{"nodes", r.nodes}};
        o.text = C::to_text(r.witness);
        return o;
    });

    auto* prod = leaf(cmd, "product", "A x B");
    prod->add_option("--a", file)->required();
    prod->add_option("--b", file_b)->required();
    actions.emplace_back(prod, [=] {
        const auto a = C::parse_cap(read_input(file)), b = C::parse_cap(read_input(file_b));
        const auto p = C::product(a, b);
        Outcome o{"capset.product", {{"a", points_json(a)}, {"b", points_json(b)}}};
        const bool ok = C::is_capset(p).is_cap;
        o.result = {{"product", points_json(p)}, {"size", p.size()}, {"is_cap", ok}};
        o.text = C::to_text(p);
        o.verdict = C::is_capset(a).is_cap && C::is_capset(b).is_cap ? holds(ok) : "report-only";
        return o;
    });

    auto* dis = leaf(cmd, "disjoint", "two disjoint caps of equal size");
    dis->add_option("--n", n)->required();
    dis->add_option("--size", size)->required();
    dis->add_option("--budget", budget)->capture_default_str();
    actions.emplace_back(dis, [=] {
        const auto r = C::find_disjoint_equal(n, size, budget, g.seed);
        Outcome o{"capset.disjoint", {{"n", n}, {"size", size}, {"budget", budget}}};
        o.result = {{"found", r.found}, {"method", r.method}, {"tries", r.tries}};
        if (r.found) o.result["first"] = points_json(r.first), o.result["second"] = points_json(r.second);
        o.verdict = r.found ? "found" : "not-found";
        return o;
    });
}

// ---------------------------------------------------------------- graphs

cwb::graphlab::FlipMode parse_flip_mode(const std::string& m) {
    if (m == "induced") return cwb::graphlab::FlipMode::Induced;
    if (m == "incident") return cwb::graphlab::FlipMode::Incident;
    throw cwb::InvalidInput("mode must be induced or incident");
}

void register_graphs(CLI::App& app) {
    namespace G = cwb::graphlab;
    auto* cmd = app.add_subcommand("graphs", "package colouring, orientations, bipartite cycles, flip colourings");
    cmd->require_subcommand(1);
    static std::string set, file, lambda, subset, colours, a, mode = "induced";
    static std::uint64_t limit = 2'000'000, budget = 100, moves = 20000;

    auto* cz = leaf(cmd, "colours-z", "can the budget S colour the integers");
    cz->add_option("--set", set, "e.g. 1,2,3")->required();
    cz->add_option("--limit", limit, "reachable-state cap")->capture_default_str();
    actions.emplace_back(cz, [=] {
        const auto s = parse_ints(set);
        const auto r = G::colours_Z(s, limit);
        Outcome o{"graphs.colours-z", {{"set", s}, {"state_limit", limit}}};
        o.result = {{"colours", r.colours}, {"partial_sum", G::partial_sum(s).get_str()}, {"states", r.states}};
        if (r.colours)
            o.result["certificate"] = r.certificate;
        else
            o.result["reason"] = "the cooldown-state graph has no cycle, so every colouring attempt dead-ends (" +
                                 std::to_string(r.states) + " reachable states)";
        o.verdict = instance(r.colours);
        return o;
    });

    auto* ps = leaf(cmd, "partial-sum", "sum of 1/(s+1)");
    ps->add_option("--set", set)->required();
    actions.emplace_back(ps, [=] {
        const auto s = parse_ints(set);
        Outcome o{"graphs.partial-sum", {{"set", s}}};
        const auto q = G::partial_sum(s);
        o.result = {{"partial_sum", q.get_str()}, {"value", q.get_d()}};
        return o;
    });

    auto* inf = leaf(cmd, "infimum", "random probe of the colouring threshold");
    inf->add_option("--budget", budget)->capture_default_str();
    inf->add_option("--limit", limit)->capture_default_str();
    actions.emplace_back(inf, [=] {
        const auto r = G::infimum_probe(budget, g.seed, limit);
        Outcome o{"graphs.infimum", {{"budget", budget}, {"state_limit", limit}}};
        o.result = {{"samples", r.samples}, {"refused", r.refused}, {"lower_bound", r.lower_bound.get_str()},
                    {"largest_non_colouring", r.largest_non_colouring ? json(*r.largest_non_colouring) : json(nullptr)},
                    {"smallest_colouring", r.smallest_colouring ? json(*r.smallest_colouring) : json(nullptr)},
                    {"smallest_colouring_sum", r.smallest_colouring_sum.get_str()}};
        return o;
    });

    auto graph_lambda = [](const G::Graph& gr) {
        auto lam = parse_ints(lambda);
        cwb::require(static_cast<int>(lam.size()) == gr.n, "lambda needs one value per vertex");
        return lam;
    };

    auto* hall = leaf(cmd, "hall", "Hall-type subset condition");
    hall->add_option("--file", file, "edge list")->required();
    hall->add_option("--lambda", lambda, "per-vertex bounds")->required();
    actions.emplace_back(hall, [=] {
        const auto gr = G::Graph::parse(read_input(file));
        const auto lam = graph_lambda(gr);
        const auto h = G::hall_condition(gr, lam);
        Outcome o{"graphs.hall", {{"n", gr.n}, {"edges", edges_json(gr.edges)}, {"lambda", lam}}};
        o.result = {{"holds", h.holds}, {"violating", h.violating}};
        o.verdict = instance(h.holds);
        return o;
    });

    auto* orient = leaf(cmd, "orient", "orientation with In(v) <= lambda(v)");
    orient->add_option("--file", file)->required();
    orient->add_option("--lambda", lambda)->required();
    actions.emplace_back(orient, [=] {
        const auto gr = G::Graph::parse(read_input(file));
        const auto lam = graph_lambda(gr);
        const auto r = G::orientation_exists(gr, lam);
        Outcome o{"graphs.orient", {{"n", gr.n}, {"edges", edges_json(gr.edges)}, {"lambda", lam}}};
        o.result = {{"exists", r.exists}, {"arcs", edges_json(r.arcs)}};
        if (r.exists) o.result["in_degrees"] = G::in_degrees(gr, r.arcs);
        o.verdict = r.exists ? "found" : "not-found";
        return o;
    });

    auto* hatn = leaf(cmd, "hatn", "B-vertices with at least two neighbours in D");
    hatn->add_option("--file", file, "bipartite edge list")->required();
    hatn->add_option("--subset", subset, "D, vertices of A")->required();
    actions.emplace_back(hatn, [=] {
        const auto b = G::BipartiteGraph::parse(read_input(file));
        const auto d = parse_ints(subset);
        Outcome o{"graphs.hatn", {{"na", b.na}, {"nb", b.nb}, {"edges", edges_json(b.edges)}, {"subset", d}}};
        o.result = {{"hatN", G::hatN(b, d)}};
        return o;
    });

    auto* cyc = leaf(cmd, "cycle-check", "Hall-type hypothesis and the spanning-cycle conclusion");
    cyc->add_option("--file", file)->required();
    actions.emplace_back(cyc, [=] {
        const auto b = G::BipartiteGraph::parse(read_input(file));
        const auto r = G::bipartite_cycle_check(b);
        Outcome o{"graphs.cycle-check", {{"na", b.na}, {"nb", b.nb}, {"edges", edges_json(b.edges)}}};
        o.result = {{"outcome", G::to_string(r.verdict)}, {"failing_set", r.failing_set}, {"cycle", edges_json(r.cycle)}};
        o.verdict = r.verdict == G::CycleVerdict::Counterexample ? "refuted"
                    : r.verdict == G::CycleVerdict::ConjectureHolds ? "verified"
                                                                     : "report-only";
        return o;
    });

    auto* fv = leaf(cmd, "flip-verify", "check a flip colouring");
    fv->add_option("--file", file)->required();
    fv->add_option("--colours", colours, "colour per edge, in file order")->required();
    fv->add_option("--a", a, "increasing a_1..a_k")->required();
    fv->add_option("--mode", mode, "induced|incident")->capture_default_str();
    actions.emplace_back(fv, [=] {
        G::FlipColouring fc{G::Graph::parse(read_input(file)), parse_ints(colours), parse_ints(a)};
        const auto r = G::flip_verify(fc, parse_flip_mode(mode));
        Outcome o{"graphs.flip-verify", {{"n", fc.g.n}, {"edges", edges_json(fc.g.edges)}, {"colours", fc.colour}, {"a", fc.a}, {"mode", mode}}};
        o.result = {{"holds", r.holds}, {"condition", r.condition}, {"vertex", r.vertex}, {"colour", r.colour},
                    {"e", r.e}, {"reason", r.reason}};
        o.verdict = instance(r.holds);
        return o;
    });

    auto* fs = leaf(cmd, "flip-search", "randomized search for a flip colouring");
    fs->add_option("--file", file)->required();
    fs->add_option("--a", a)->required();
    fs->add_option("--budget", moves)->capture_default_str();
    fs->add_option("--mode", mode)->capture_default_str();
    actions.emplace_back(fs, [=] {
        const auto gr = G::Graph::parse(read_input(file));
        const auto r = G::flip_search(gr, parse_ints(a), moves, g.seed, parse_flip_mode(mode));
        Outcome o{"graphs.flip-search", {{"n", gr.n}, {"edges", edges_json(gr.edges)}, {"a", parse_ints(a)}, {"budget", moves}, {"mode", mode}}};
        o.result = {{"found", r.found}, {"score", r.score}, {"colours", r.best.colour}, {"moves", r.moves}};
        o.verdict = r.found ? "found" : "not-found";
        return o;
    });
}

// ---------------------------------------------------------------- surfaces

void register_surfaces(CLI::App& app) {
    namespace S = cwb::surfaces;
    auto* cmd = app.add_subcommand("surfaces", "rotation systems and genus");
    cmd->require_subcommand(1);
    static std::string file;
    static int genus = 0, code = -1;
    static bool no_reversal = false;

    auto* gen = leaf(cmd, "genus", "faces and genus of a rotation system");
    gen->add_option("--file", file, "one cyclic neighbour list per line");
    gen->add_option("--k5", code, "K5 system by code 0..7775");
    actions.emplace_back(gen, [=] {
        cwb::require(file.empty() != (code < 0), "give exactly one of --file and --k5");
        const auto rs = file.empty() ? S::RotationSystem::k5(code) : S::RotationSystem::parse(read_input(file));
        json faces = json::array();
        for (const auto& f : S::trace_faces(rs)) {
            json w = json::array();
            for (auto [u, v] : f) w.push_back(u);
            faces.push_back(w);
        }
        Outcome o{"surfaces.genus", {{"rotation", rs.rotation()}}};
        o.result = {{"genus", S::genus(rs)}, {"vertices", rs.vertices()}, {"edges", rs.edges()}, {"faces", faces}};
        return o;
    });

    auto* dist = leaf(cmd, "distribution", "genus distribution of all K5 rotation systems");
    actions.emplace_back(dist, [=] {
        const auto d = S::k5_genus_distribution(cwb::resolve_threads(g.threads));
        Outcome o{"surfaces.distribution", {{"graph", "K5"}}};
        json dj = json::object();
        std::string table = "genus,systems\n";
        int total = 0;
        for (auto [gg, c] : d) dj[std::to_string(gg)] = c, table += std::to_string(gg) + "," + std::to_string(c) + "\n", total += c;
        o.result = {{"distribution", dj}, {"total", total}, {"min_genus", d.begin()->first}};
        o.csv = table;
        o.text = table;
        return o;
    });

    auto* cls = leaf(cmd, "classify-k5", "K5 rotation systems of one genus up to symmetry");
    cls->add_option("--genus", genus)->required();
    cls->add_flag("--no-reversal", no_reversal, "identify under relabelling only");
    actions.emplace_back(cls, [=] {
        const unsigned th = cwb::resolve_threads(g.threads);
        const auto main = S::classify_k5(genus, !no_reversal, th);
        const auto other = S::classify_k5(genus, no_reversal, th);
        json reps = json::array();
        for (const auto& c : main)
            reps.push_back({{"code", c.representative_code}, {"orbit_size", c.orbit_size}, {"rotation", c.representative.rotation()}});
        Outcome o{"surfaces.classify-k5", {{"genus", genus}, {"reversal", !no_reversal}}};
        o.result = {{"classes", main.size()},
                    {no_reversal ? "classes_with_reversal" : "classes_without_reversal", other.size()},
                    {"representatives", reps}};
        return o;
    });
}

// ---------------------------------------------------------------- stirling

void register_stirling(CLI::App& app) {
    namespace S = cwb::stirling;
    auto* cmd = app.add_subcommand("stirling", "associated Stirling numbers and cycle polynomials");
    cmd->require_subcommand(1);
    static int n = 0, k = 0, r = 1, n_max = 0;
    static bool order = false;

    auto* table = leaf(cmd, "table", "triangle of r-associated numbers");
    table->add_option("--n-max", n_max)->required();
    table->add_option("--r", r)->capture_default_str();
    actions.emplace_back(table, [=] {
        const auto t = S::assoc_table(n_max, r);
        json rows = json::array();
        for (const auto& row : t.values) {
            json jr = json::array();
            for (const auto& x : row) jr.push_back(x.get_str());
            rows.push_back(jr);
        }
        Outcome o{"stirling.table", {{"n_max", n_max}, {"r", r}}};
        o.result = {{"rows", rows}};
        o.csv = t.csv();
        o.text = t.csv();
        return o;
    });

    auto* num = leaf(cmd, "number", "one associated (or r-th order) number");
    num->add_option("--n", n)->required();
    num->add_option("--k", k)->required();
    num->add_option("--r", r)->capture_default_str();
    num->add_flag("--order", order, "r-th order instead of r-associated");
    actions.emplace_back(num, [=] {
        Outcome o{"stirling.number", {{"n", n}, {"k", k}, {"r", r}, {"kind", order ? "order" : "associated"}}};
        o.result = {{"value", (order ? S::rth_order(n, k, r) : S::assoc_stirling(n, k, r)).get_str()}};
        return o;
    });

    auto* poly = leaf(cmd, "poly", "c_{r,n} with its log-concavity and real-rootedness");
    poly->add_option("--n", n)->required();
    poly->add_option("--r", r)->capture_default_str();
    actions.emplace_back(poly, [=] {
        const auto c = S::cycle_poly(r, n);
        json coeffs = json::array();
        for (const auto& x : c) coeffs.push_back(x.get_str());
        const auto rr = S::real_roots(c);
        const auto lc = S::is_log_concave(c);
        Outcome o{"stirling.poly", {{"n", n}, {"r", r}}};
        o.result = {{"coefficients", coeffs}, {"log_concave", lc.holds}, {"log_concave_violation", lc.index},
                    {"real_rooted", rr.real_rooted}, {"distinct_real_roots", rr.distinct_real}, {"degree", rr.degree}};
        o.csv = S::poly_str(c) + "\n";
        return o;
    });

    auto sweep = [](const std::string& name, bool real) {
        return [=] {
            progress(name + " sweep r = " + std::to_string(r) + " up to n = " + std::to_string(n_max));
            const unsigned th = cwb::resolve_threads(g.threads);
            const auto s = real ? S::real_rootedness_sweep(r, n_max, th) : S::log_concavity_sweep(r, n_max, th);
            Outcome o{"stirling." + name, {{"r", r}, {"n_max", n_max}}};
            o.result = {{"holds", s.holds}, {"first_failure", s.first_failure ? json(*s.first_failure) : json(nullptr)}};
            if (!real) o.result["failure_index"] = s.failure_index;
            if (s.first_failure) {
                json coeffs = json::array();
                for (const auto& x : S::cycle_poly(r, *s.first_failure)) coeffs.push_back(x.get_str());
                o.result["certificate"] = coeffs;
            }
            o.verdict = holds(s.holds);
            return o;
        };
    };
    auto* lc = leaf(cmd, "log-concave", "log-concavity of c_{r,n} for n <= n-max");
    lc->add_option("--r", r)->required();
    lc->add_option("--n-max", n_max)->required();
    actions.emplace_back(lc, sweep("log-concave", false));
    auto* rr = leaf(cmd, "real-rooted", "real-rootedness of c_{r,n} for n <= n-max");
    rr->add_option("--r", r)->required();
    rr->add_option("--n-max", n_max)->required();
    actions.emplace_back(rr, sweep("real-rooted", true));
}

// ---------------------------------------------------------------- suite

void register_suite(CLI::App& app) {
    auto* cmd = app.add_subcommand("suite", "anchored check batteries");
    static std::string name;
    cmd->add_option("name", name, "quick|acceptance")->required()->check(CLI::IsMember({"quick", "acceptance"}));
    actions.emplace_back(cmd, [] {
        const unsigned th = cwb::resolve_threads(g.threads);
        const auto checks = name == "quick" ? cwb::battery::quick(th, progress) : cwb::battery::acceptance(th, progress);
        json arr = json::array();
        json diff = json::array();
        std::size_t passed = 0;
        std::string text;
        for (const auto& c : checks) {
            arr.push_back(cwb::battery::to_json(c, !g.no_timing));
            passed += c.passed;
            text += std::string(c.passed ? "PASS " : "FAIL ") + c.id + "  " + c.title + "\n";
            for (const auto& d : c.diff) diff.push_back(c.id + ": " + d), text += "     " + d + "\n";
        }
        Outcome o{"suite." + name, {{"name", name}}};
        o.result = {{"checks", arr}, {"passed", passed}, {"failed", checks.size() - passed}, {"diff", diff}};
        o.verdict = passed == checks.size() ? "verified" : "refuted";
        o.text = text;
        o.text_only = true;
        if (passed != checks.size()) {
            for (const auto& d : diff) std::cerr << "[cwb] mismatch " << d.get<std::string>() << "\n";
            o.exit_code = 1;
        }
        return o;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cwb: exact enumeration and search for a collection of combinatorial problems"};
    app.set_version_flag("--version", std::string(cwb::kToolVersion));
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", g.seed, "master seed")->capture_default_str();
    app.add_option("--threads", g.threads, "worker threads, 0 = all cores")->capture_default_str();
    app.add_option("--timeout", g.timeout, "seconds, 0 = none")->capture_default_str();
    app.add_option("--format", g.format, "json|csv|text")->capture_default_str()->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", g.out, "write the report here instead of stdout");
    app.add_flag("--no-timing", g.no_timing, "report runtime_ms as 0 for byte-identical reports");

    register_perms(app);
    register_tournaments(app);
    register_game(app);
    register_setfam(app);
    register_latin(app);
    register_capset(app);
    register_graphs(app);
    register_surfaces(app);
    register_stirling(app);
    register_suite(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Action action;
    for (const auto& [sub, act] : actions)
        if (sub->parsed()) action = act;
    if (!action) {
        std::cerr << app.help();
        return 2;
    }

    const auto t0 = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        auto fut = std::async(std::launch::async, action);
        if (g.timeout > 0 && fut.wait_for(std::chrono::duration<double>(g.timeout)) == std::future_status::timeout) {
            std::cerr << "cwb: timed out after " << g.timeout << " s\n";
            std::fflush(nullptr);
            std::_Exit(3);
        }
        outcome = fut.get();
    } catch (const cwb::LimitExceeded& e) {
        std::cerr << "cwb: refused: " << e.what() << "\n";
        return 3;
    } catch (const cwb::InvalidInput& e) {
        std::cerr << "cwb: invalid input: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "cwb: invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "cwb: error: " << e.what() << "\n";
        return 1;
    }
    const double ms = g.no_timing ? -1.0 : std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    const auto fmt = g.format == "csv" ? cwb::cli::Format::Csv : g.format == "text" ? cwb::cli::Format::Text : cwb::cli::Format::Json;
    const auto report = cwb::cli::make_report(outcome, g.seed, ms);
    const auto body = cwb::cli::render(outcome, report, fmt);
    if (g.out.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(g.out);
        if (!f) {
            std::cerr << "cwb: cannot write '" << g.out << "'\n";
            return 1;
        }
        f << body;
        progress("report written to " + g.out);
    }
    return outcome.exit_code;
}
