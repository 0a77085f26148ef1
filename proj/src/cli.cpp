#include "hamc/cli.hpp"

#include <chrono>
#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hamc/errors.hpp"
#include "hamc/families.hpp"
#include "hamc/io.hpp"
#include "hamc/spectrum.hpp"

namespace hamc {
namespace {

using nlohmann::json;

// Mutable state shared between the subcommand handlers and dispatch().
struct RunState {
    std::string command;
    json parameters = json::object();
    json result;
    std::vector<std::string> artifacts;
    int exit_code = 0;
    std::string error;
};

void write_artifact(RunState& st, const std::string& path, const std::string& content) {
    write_text_file(path, content);
    st.artifacts.push_back(path);
}

std::string json_file(const json& j) { return j.dump(2) + "\n"; }

// ---- construct ------------------------------------------------------------

void run_construct(RunState& st, const std::string& family, int n, const std::string& out) {
    st.command = "construct";
    st.parameters = {{"family", family}, {"n", n}, {"out", out}};
    if (family == "reversing") {
        const std::vector<PartialWord> words = base_reversing_family(n);
        write_artifact(st, out, words_to_text(words));
        st.result = {{"family", family}, {"n", n}, {"count", words.size()}};
        return;
    }
    PathFamily f;
    if (family == "cfk")
        f = cfk_family(n);
    else if (family == "recursive")
        f = recursive_c4_family(n);
    else if (family == "tricolor")
        f = tricolor_family(n);
    else if (family == "k24")
        f = k24_paths_from_reversing(base_reversing_family(n));
    else if (family == "tripartite")
        f = tripartite_family(n);
    else
        throw precondition_error("unknown family: " + family);
    write_artifact(st, out, family_to_text(f));
    st.result = {{"family", family},
                 {"n", f.n()},
                 {"count", f.size()},
                 {"directed", f.directed()}};
}

// ---- verify ---------------------------------------------------------------

VerifyMode parse_mode(const std::string& mode) {
    if (mode == "all-create") return VerifyMode::AllCreate;
    if (mode == "none-create") return VerifyMode::NoneCreate;
    throw precondition_error("mode must be all-create or none-create, got " + mode);
}

SharedEdgeRule parse_rule(const std::string& rule);

void run_verify(RunState& st, const std::string& in, const std::string& pattern,
                const std::string& mode, const std::string& ways, const std::string& rule,
                int jobs) {
    st.command = "verify";
    st.parameters = {{"in", in}, {"pattern", pattern}, {"mode", mode}, {"jobs", jobs}};
    if (!ways.empty()) {
        st.parameters["ways"] = ways;
        st.parameters["rule"] = rule;
    }

    const VerifyMode vm = parse_mode(mode);
    VerifyReport report;
    if (pattern == "reverse") {
        if (!ways.empty()) throw precondition_error("--ways only applies to the c4 pattern");
        report = verify_words_reversing(words_from_text(read_text_file(in)), vm, jobs);
    } else if (pattern == "good-k24") {
        if (!ways.empty()) throw precondition_error("--ways only applies to the c4 pattern");
        report = verify_family_good_k24(family_from_text(read_text_file(in)), vm, jobs);
    } else {
        std::optional<WaySet> ws;
        if (!ways.empty()) ws = WaySet::parse(ways);
        report = verify_family(family_from_text(read_text_file(in)), Pattern::parse(pattern), vm,
                               ws, jobs, parse_rule(rule));
    }
    st.result = to_json(report);
    if (!report.ok) {
        st.exit_code = 1;
        st.error = "verification failed at pair (" + std::to_string(report.violation_i) + ", " +
                   std::to_string(report.violation_j) + ")";
    }
}

// ---- certify --------------------------------------------------------------

void run_certify_gp(RunState& st, std::uint64_t p, bool numeric, const std::string& out) {
    st.command = "certify gp";
    st.parameters = {{"p", p}, {"numeric", numeric}};
    if (!out.empty()) st.parameters["out"] = out;

    const SpectralCertificate cert = spectral_certificate(p, numeric);
    st.result = to_json(cert);
    if (!out.empty()) write_artifact(st, out, json_file(st.result));

    bool ok = cert.blocks_ok && cert.c4_free && cert.inf_norm == cert.lambda_sq_bound;
    if (cert.numeric_lambda2 &&
        *cert.numeric_lambda2 > std::sqrt(static_cast<double>(cert.lambda_sq_bound)) + 1e-8)
        ok = false;
    if (!ok) {
        st.exit_code = 1;
        st.error = "certificate checks failed";
    }
}

void run_certify_lps(RunState& st, std::uint64_t p, std::uint64_t q, bool with_girth,
                     bool with_spectrum, const std::string& out, const std::string& graph_out) {
    st.command = "certify lps";
    st.parameters = {{"p", p}, {"q", q}, {"girth", with_girth}, {"spectrum", with_spectrum}};
    if (!out.empty()) st.parameters["out"] = out;
    if (!graph_out.empty()) st.parameters["graph-out"] = graph_out;

    const LpsGraph lps = build_lps(p, q);
    const bool inverse_closed = lps_generators_inverse_closed(lps);
    json r{{"p", p},
           {"q", q},
           {"n_vertices", lps.graph.n()},
           {"degree", p + 1},
           {"connected", lps.graph.connected()},
           {"generators", lps.generators.size()},
           {"inverse_closed", inverse_closed},
           {"girth_lower_bound", lps.girth_lower_bound}};
    bool ok = inverse_closed && lps.graph.connected();

    if (with_girth) {
        const std::optional<int> g = girth(lps.graph);
        const int needed = static_cast<int>(std::ceil(lps.girth_lower_bound));
        r["girth"] = g ? json(*g) : json(nullptr);
        r["girth_ok"] = g.has_value() && *g >= needed;
        if (!g.has_value() || *g < needed) ok = false;
    }
    if (with_spectrum) {
        const std::vector<double> spec = dense_spectrum(lps.graph);
        const double top = max_nontrivial_magnitude(spec, static_cast<double>(p) + 1.0);
        const double bound = 2.0 * std::sqrt(static_cast<double>(p)) + 1e-6;
        r["max_nontrivial_magnitude"] = top;
        r["ramanujan_bound"] = bound;
        r["spectrum_ok"] = top <= bound;
        if (top > bound) ok = false;
    }

    st.result = r;
    if (!out.empty()) write_artifact(st, out, json_file(r));
    if (!graph_out.empty()) write_artifact(st, graph_out, graph_to_text(lps.graph));
    if (!ok) {
        st.exit_code = 1;
        st.error = "certificate checks failed";
    }
}

// ---- primes ---------------------------------------------------------------

void run_primes_next_square(RunState& st, std::uint64_t n) {
    st.command = "primes next-square";
    st.parameters = {{"n", n}};
    const PrimeSquare ps = next_prime_square(n);
    st.result = {{"p", ps.p}, {"p_squared", ps.p_squared}, {"gap_exponent", ps.gap_exponent}};
}

void run_primes_scan(RunState& st, std::uint64_t lo, std::uint64_t hi, double exponent) {
    st.command = "primes scan";
    st.parameters = {{"lo", lo}, {"hi", hi}, {"exponent", exponent}};
    st.result = to_json(prime_square_gap_scan(lo, hi, exponent));
}

void run_primes_good(RunState& st, double eps, double k, std::uint64_t x) {
    st.command = "primes good";
    st.parameters = {{"eps", eps}, {"k", k}, {"x", x}};
    const std::optional<GoodPair> gp = find_good_prime(eps, k, x);
    st.result = gp ? to_json(*gp) : json(nullptr);
}

void run_primes_lps_params(RunState& st, std::uint64_t n, double eps, double k) {
    st.command = "primes lps-params";
    st.parameters = {{"n", n}, {"eps", eps}, {"k", k}};
    const std::optional<GoodPair> gp = lps_params(n, eps, k);
    st.result = gp ? to_json(*gp) : json(nullptr);
}

// ---- oracle ---------------------------------------------------------------

SharedEdgeRule parse_rule(const std::string& rule) {
    if (rule == "both") return SharedEdgeRule::CountsForBoth;
    if (rule == "neither") return SharedEdgeRule::CountsForNeither;
    throw precondition_error("rule must be both or neither, got " + rule);
}

void run_oracle(RunState& st, const std::string& objects, int n, const std::string& relation,
                const std::string& mode, const std::string& ways, const std::string& rule,
                std::uint64_t budget) {
    st.command = "oracle";
    st.parameters = {{"objects", objects}, {"n", n},       {"relation", relation},
                     {"mode", mode},       {"rule", rule}, {"budget", budget}};
    if (!ways.empty()) st.parameters["ways"] = ways;

    ExtremalMode em;
    if (mode == "clique")
        em = ExtremalMode::Clique;
    else if (mode == "independent")
        em = ExtremalMode::Independent;
    else
        throw precondition_error("mode must be clique or independent, got " + mode);

    OracleResult res;
    if (objects == "paths") {
        const PathFamily paths = enumerate_ham_paths(n);
        if (relation == "good-k24") {
            if (!ways.empty()) throw precondition_error("--ways only applies to the c4 relation");
            auto rel = [&](int i, int j) {
                return is_good_k24(paths[static_cast<std::size_t>(i)],
                                   paths[static_cast<std::size_t>(j)])
                    .has_value();
            };
            res = exact_extremal(static_cast<int>(paths.size()), rel, em, budget);
        } else if (!ways.empty()) {
            if (relation != "c4")
                throw precondition_error("--ways only applies to the c4 relation");
            const WaySet ws = WaySet::parse(ways);
            const SharedEdgeRule sr = parse_rule(rule);
            auto rel = [&](int i, int j) {
                return creates_c4_with_way(paths[static_cast<std::size_t>(i)],
                                           paths[static_cast<std::size_t>(j)], ws, sr);
            };
            res = exact_extremal(static_cast<int>(paths.size()), rel, em, budget);
        } else {
            const Pattern pat = Pattern::parse(relation);
            auto rel = [&](int i, int j) {
                return creates(paths[static_cast<std::size_t>(i)],
                               paths[static_cast<std::size_t>(j)], pat)
                    .has_value();
            };
            res = exact_extremal(static_cast<int>(paths.size()), rel, em, budget);
        }
    } else if (objects == "matchings") {
        if (!ways.empty()) throw precondition_error("--ways only applies to path objects");
        const std::vector<Matching> ms = enumerate_matchings(n);
        const Pattern pat = Pattern::parse(relation);
        std::vector<Graph> graphs;
        graphs.reserve(ms.size());
        for (const Matching& m : ms) graphs.push_back(matching_graph(m, n));
        auto rel = [&](int i, int j) {
            return find_pattern(union_graph(graphs[static_cast<std::size_t>(i)],
                                            graphs[static_cast<std::size_t>(j)]),
                                pat)
                .has_value();
        };
        res = exact_extremal(static_cast<int>(ms.size()), rel, em, budget);
    } else if (objects == "perms") {
        if (relation != "reverse")
            throw precondition_error("permutation objects support only the reverse relation");
        if (n < 1 || n > 7) throw precondition_error("permutation objects support 1 <= n <= 7");
        std::vector<PartialWord> perms;
        std::vector<int> entries(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) entries[static_cast<std::size_t>(i)] = i;
        do {
            perms.emplace_back(entries, n);
        } while (std::next_permutation(entries.begin(), entries.end()));
        auto rel = [&](int i, int j) {
            return is_reversing(perms[static_cast<std::size_t>(i)],
                                perms[static_cast<std::size_t>(j)]);
        };
        res = exact_extremal(static_cast<int>(perms.size()), rel, em, budget);
    } else {
        throw precondition_error("objects must be paths, matchings or perms, got " + objects);
    }
    st.result = to_json(res, relation, mode);
}

// ---- count / estimate / filter ---------------------------------------------

void run_count(RunState& st, const std::string& graph_path, const std::string& kind,
               std::uint64_t budget) {
    st.command = "count";
    st.parameters = {{"graph", graph_path}, {"kind", kind}, {"budget", budget}};
    HamKind hk;
    if (kind == "cycles")
        hk = HamKind::Cycles;
    else if (kind == "paths")
        hk = HamKind::Paths;
    else
        throw precondition_error("kind must be cycles or paths, got " + kind);
    const Graph g = graph_from_text(read_text_file(graph_path));
    st.result = {{"kind", kind}, {"n", g.n()}, {"m", g.m()}, {"count", count_ham(g, hk, budget)}};
}

void run_estimate(RunState& st, int n, int d) {
    st.command = "estimate";
    st.parameters = {{"n", n}, {"d", d}};
    st.result = {{"n", n}, {"d", d}, {"log_estimate", kriv_estimate(n, d)}};
}

void run_filter(RunState& st, const std::string& target, const std::string& relabel, int trials,
                std::uint64_t seed, const std::string& out) {
    st.command = "filter";
    st.parameters = {
        {"target", target}, {"relabel", relabel}, {"trials", trials}, {"seed", seed}, {"out", out}};
    const PathFamily x = family_from_text(read_text_file(target));
    const PathFamily i = family_from_text(read_text_file(relabel));
    const PathFamily kept = relabel_filter(x, i, trials, seed);
    write_artifact(st, out, family_to_text(kept));
    st.result = {{"kept", kept.size()},
                 {"target_size", x.size()},
                 {"relabel_size", i.size()},
                 {"trials", trials},
                 {"seed", seed}};
}

} // namespace

int dispatch(int argc, const char* const* argv) {
    const auto t0 = std::chrono::steady_clock::now();
    RunState st;

    CLI::App app{"Extremal Hamiltonian path family toolkit"};
    app.set_version_flag("--version", std::string("hamc ") + kToolkitVersion + " (formats: " +
                                          kFormatVersions + ")");
    app.require_subcommand(0, 1);

    // construct
    auto* construct = app.add_subcommand("construct", "Generate a path or word family");
    std::string c_family, c_out;
    int c_n = 0;
    construct->add_option("--family", c_family, "cfk|recursive|tricolor|reversing|k24|tripartite")
        ->required();
    construct->add_option("--n", c_n, "ground set size")->required();
    construct->add_option("--out", c_out, "output file")->required();
    construct->callback([&] { run_construct(st, c_family, c_n, c_out); });

    // verify
    auto* verify = app.add_subcommand("verify", "Check a pairwise relation over a family file");
    std::string v_in, v_pattern, v_mode = "all-create", v_ways, v_rule = "both";
    int v_jobs = 0;
    verify->add_option("--in", v_in, "family or word file")->required();
    verify->add_option("--pattern", v_pattern, "c3|c4|c2k:<k>|k24|k33|odd|even|good-k24|reverse")
        ->required();
    verify->add_option("--mode", v_mode, "all-create|none-create");
    verify->add_option("--ways", v_ways, "way restriction for c4, e.g. h2 or h1,h3");
    verify->add_option("--rule", v_rule, "shared-edge rule for ways: both|neither");
    verify->add_option("--jobs", v_jobs, "worker threads (0 = auto)");
    verify->callback([&] { run_verify(st, v_in, v_pattern, v_mode, v_ways, v_rule, v_jobs); });

    // certify
    auto* certify = app.add_subcommand("certify", "Build integer or numeric certificates");
    certify->require_subcommand(1);
    auto* gp = certify->add_subcommand("gp", "Spectral certificate for the quadratic graph");
    std::uint64_t gp_p = 0;
    bool gp_numeric = false;
    std::string gp_out;
    gp->add_option("--p", gp_p, "odd prime")->required();
    gp->add_flag("--numeric", gp_numeric, "also estimate the second eigenvalue");
    gp->add_option("--out", gp_out, "certificate JSON file");
    gp->callback([&] { run_certify_gp(st, gp_p, gp_numeric, gp_out); });

    auto* lps = certify->add_subcommand("lps", "Cayley graph build and checks");
    std::uint64_t lps_p = 0, lps_q = 0;
    bool lps_girth = false, lps_spectrum = false;
    std::string lps_out, lps_graph_out;
    lps->add_option("--p", lps_p, "prime, 1 mod 4")->required();
    lps->add_option("--q", lps_q, "prime, 1 mod 4, with p a residue mod q")->required();
    lps->add_flag("--girth", lps_girth, "compute the exact girth");
    lps->add_flag("--spectrum", lps_spectrum, "dense spectrum check");
    lps->add_option("--out", lps_out, "report JSON file");
    lps->add_option("--graph-out", lps_graph_out, "edge list export");
    lps->callback(
        [&] { run_certify_lps(st, lps_p, lps_q, lps_girth, lps_spectrum, lps_out, lps_graph_out); });

    // primes
    auto* primes = app.add_subcommand("primes", "Prime searches and scans");
    primes->require_subcommand(1);
    auto* nsq = primes->add_subcommand("next-square", "Least prime square at or above n");
    std::uint64_t nsq_n = 0;
    nsq->add_option("--n", nsq_n, "threshold")->required();
    nsq->callback([&] { run_primes_next_square(st, nsq_n); });

    auto* scan = primes->add_subcommand("scan", "Prime-square gap violations over a range");
    std::uint64_t scan_lo = 0, scan_hi = 0;
    double scan_exp = 0;
    scan->add_option("--lo", scan_lo, "range start")->required();
    scan->add_option("--hi", scan_hi, "range end (inclusive)")->required();
    scan->add_option("--exponent", scan_exp, "gap exponent")->required();
    scan->callback([&] { run_primes_scan(st, scan_lo, scan_hi, scan_exp); });

    auto* good = primes->add_subcommand("good", "Prime pair search in a multiplicative window");
    double good_eps = 0, good_k = 0;
    std::uint64_t good_x = 0;
    good->add_option("--eps", good_eps, "window width")->required();
    good->add_option("--k", good_k, "exponent")->required();
    good->add_option("--x", good_x, "window start")->required();
    good->callback([&] { run_primes_good(st, good_eps, good_k, good_x); });

    auto* lpp = primes->add_subcommand("lps-params", "Prime pair search by target vertex count");
    std::uint64_t lpp_n = 0;
    double lpp_eps = 0, lpp_k = 0;
    lpp->add_option("--n", lpp_n, "target vertex count")->required();
    lpp->add_option("--eps", lpp_eps, "window width")->required();
    lpp->add_option("--k", lpp_k, "exponent")->required();
    lpp->callback([&] { run_primes_lps_params(st, lpp_n, lpp_eps, lpp_k); });

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Exact extremal search over enumerated objects");
    std::string o_objects, o_relation, o_mode, o_ways, o_rule = "both";
    int o_n = 0;
    std::uint64_t o_budget = kDefaultExtremalBudget;
    oracle->add_option("--objects", o_objects, "paths|matchings|perms")->required();
    oracle->add_option("--n", o_n, "ground set size")->required();
    oracle->add_option("--relation", o_relation, "pattern token, good-k24 or reverse")->required();
    oracle->add_option("--mode", o_mode, "clique|independent")->required();
    oracle->add_option("--ways", o_ways, "way restriction for c4");
    oracle->add_option("--rule", o_rule, "shared-edge rule for ways: both|neither");
    oracle->add_option("--budget", o_budget, "search node budget");
    oracle->callback(
        [&] { run_oracle(st, o_objects, o_n, o_relation, o_mode, o_ways, o_rule, o_budget); });

    // count
    auto* count = app.add_subcommand("count", "Exact Hamiltonian cycle/path count of a graph");
    std::string ct_graph, ct_kind;
    std::uint64_t ct_budget = kDefaultHamBudget;
    count->add_option("--graph", ct_graph, "graph file")->required();
    count->add_option("--kind", ct_kind, "cycles|paths")->required();
    count->add_option("--budget", ct_budget, "search node budget");
    count->callback([&] { run_count(st, ct_graph, ct_kind, ct_budget); });

    // estimate
    auto* estimate = app.add_subcommand("estimate", "First-order Hamiltonian cycle count estimate");
    int e_n = 0, e_d = 0;
    estimate->add_option("--n", e_n, "vertex count")->required();
    estimate->add_option("--d", e_d, "degree")->required();
    estimate->callback([&] { run_estimate(st, e_n, e_d); });

    // filter
    auto* filter = app.add_subcommand("filter", "Best random-relabeling intersection");
    std::string f_target, f_relabel, f_out;
    int f_trials = 0;
    std::uint64_t f_seed = 0;
    filter->add_option("--target", f_target, "family searched for hits")->required();
    filter->add_option("--relabel", f_relabel, "family being relabeled")->required();
    filter->add_option("--trials", f_trials, "number of relabelings")->required();
    filter->add_option("--seed", f_seed, "random seed")->required();
    filter->add_option("--out", f_out, "output family file")->required();
    filter->callback([&] { run_filter(st, f_target, f_relabel, f_trials, f_seed, f_out); });

    try {
        app.parse(argc, argv);
        if (app.get_subcommands().empty())
            throw CLI::CallForHelp();
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help / --version
        st.exit_code = 2;
        st.error = e.what();
        if (st.command.empty()) st.command = "(parse)";
    } catch (const resource_limit_error& e) {
        st.exit_code = 3;
        st.error = e.what();
    } catch (const precondition_error& e) {
        st.exit_code = 2;
        st.error = e.what();
    } catch (const std::exception& e) {
        st.exit_code = 2;
        st.error = e.what();
    }

    const auto wall =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();
    json report{{"command", st.command},
                {"parameters", st.parameters},
                {"outcome", st.exit_code == 0 ? "success" : "failure"},
                {"artifacts", st.artifacts},
                {"wall_time_ms", wall}};
    if (!st.result.is_null()) report["result"] = st.result;
    if (!st.error.empty()) report["error"] = st.error;
    std::cout << report.dump(2) << std::endl;
    return st.exit_code;
}

} // namespace hamc
