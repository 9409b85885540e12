// splitham: split-graph Hamilton-connectivity toolkit.
//
// Verbs expose each pipeline stage for scripting and debugging:
//   check      hypothesis screen (split / connectivity / star-freeness / order)
//   partition  split partition (S, I)
//   icover     alternating path covers (pseudo, plain, length-bounded)
//   hampath    Hamiltonian (u,v)-path certificate
//   oracle     exact Hamilton-connectivity ground truth
//   verify     single-graph verdict
//   campaign   bulk verification with a JSON-lines report
//   gen        graph generators (graph6 lines on stdout)
//
// Structured output is JSON on stdout; --verbose adds human-readable summaries
// on stderr.  Exit codes: 0 ok, 1 counterexample found, 2 input/usage error,
// 3 all inputs failed the hypotheses.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "splitham/config_patterns.hpp"
#include "splitham/errors.hpp"
#include "splitham/verify.hpp"

using namespace splitham;
using nlohmann::json;

namespace {

std::string read_source(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(arg);
    if (f.good()) {
        std::ostringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }
    return arg;  // inline graph6 or JSON
}

Graph load_graph(const std::string& arg) {
    std::string text = read_source(arg);
    size_t start = text.find_first_not_of(" \t\r\n");
    if (start == std::string::npos) throw InvalidSpec("empty graph input");
    if (text[start] == '{') return parse_json_graph(text);
    size_t end = text.find('\n', start);
    return parse_graph6(text.substr(start, end == std::string::npos ? end : end - start));
}

std::vector<std::string> load_graph6_lines(const std::string& arg) {
    std::istringstream in(read_source(arg));
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

json cover_to_json(const ICover& c) {
    json elements = json::array();
    for (const auto& p : c.paths) elements.push_back({{"kind", "path"}, {"vertices", p.seq}});
    return elements;
}

json cover_to_json(const PseudoICover& q) {
    json elements = json::array();
    for (const auto& p : q.paths) elements.push_back({{"kind", "path"}, {"vertices", p.seq}});
    for (const auto& c : q.cycles) elements.push_back({{"kind", "cycle"}, {"vertices", c.seq}});
    return elements;
}

SplitPartition require_partition(const Graph& g) {
    auto p = split_partition(g);
    if (!p) throw InvalidSpec("graph is not a split graph");
    return *p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"split-graph Hamilton-connectivity toolkit"};
    app.require_subcommand(1);
    bool verbose = false;
    app.add_flag("--verbose", verbose, "human-readable summaries on stderr");

    std::string graph_arg;
    int r = 3;
    int oracle_cap = kDefaultOracleCap;
    std::uint64_t budget = kDefaultSearchBudget;

    auto* check = app.add_subcommand("check", "hypothesis screen");
    check->add_option("graph", graph_arg, "file, '-', inline graph6 or JSON")->required();
    check->add_option("--r", r, "connectivity / star parameter");

    auto* partition = app.add_subcommand("partition", "split partition (S, I)");
    partition->add_option("graph", graph_arg)->required();

    auto* icover = app.add_subcommand("icover", "alternating path cover");
    bool want_pseudo = false, want_bound = false, want_min_cycles = false;
    icover->add_option("graph", graph_arg)->required();
    icover->add_flag("--pseudo", want_pseudo, "stop at the pseudo cover (paths + cycles)");
    icover->add_flag("--min-cycles", want_min_cycles, "pseudo cover minimizing the cycle count");
    icover->add_flag("--bound-lengths", want_bound, "bound path lengths to at most 6");
    icover->add_option("--budget", budget, "search node budget");

    auto* hampath = app.add_subcommand("hampath", "Hamiltonian (u,v)-path certificate");
    int u = 0, v = 0;
    hampath->add_option("graph", graph_arg)->required();
    hampath->add_option("--u", u, "start vertex")->required();
    hampath->add_option("--v", v, "end vertex")->required();
    hampath->add_option("--budget", budget, "search node budget");

    auto* oracle = app.add_subcommand("oracle", "exact Hamilton-connectivity check");
    oracle->add_option("graph", graph_arg)->required();
    oracle->add_option("--oracle-cap", oracle_cap, "maximum order for the subset DP");

    auto* verify = app.add_subcommand("verify", "single-graph verdict");
    std::string pairs_mode = "all";
    verify->add_option("graph", graph_arg)->required();
    verify->add_option("--r", r, "connectivity / star parameter (r > 3: oracle only)");
    verify->add_option("--oracle-cap", oracle_cap);
    verify->add_option("--pairs", pairs_mode, "all | sample")->check(CLI::IsMember({"all", "sample"}));
    verify->add_option("--budget", budget);

    auto* camp = app.add_subcommand("campaign", "bulk verification");
    std::string mode = "random", report_path, input_path, check_name = "theorem";
    GenSpec spec;
    int jobs = 0;
    std::uint64_t count = 1000;
    std::uint64_t seed = 1;
    int n_min = 13, n_max = 16, s_min = 0, s_max = 0;
    double prob = 0.5;
    camp->add_option("--mode", mode, "random | exhaustive | family")
        ->check(CLI::IsMember({"random", "exhaustive", "family"}));
    camp->add_option("--input", input_path, "graph6 file (one per line) overrides --mode");
    camp->add_option("--check", check_name, "theorem | icover | lengths")
        ->check(CLI::IsMember({"theorem", "icover", "lengths"}));
    camp->add_option("--seed", seed);
    camp->add_option("--count", count, "graphs to generate (random mode)");
    camp->add_option("--n", n_min, "single order (sets both ends of the range)");
    camp->add_option("--n-min", n_min);
    camp->add_option("--n-max", n_max);
    camp->add_option("--s-min", s_min, "clique-side range (0 = derived)");
    camp->add_option("--s-max", s_max);
    camp->add_option("--p", prob, "I-to-S edge probability");
    camp->add_option("--r", r);
    camp->add_option("--oracle-cap", oracle_cap);
    camp->add_option("--pairs", pairs_mode, "all | sample")->check(CLI::IsMember({"all", "sample"}));
    camp->add_option("--report", report_path, "JSON-lines report file");
    camp->add_option("--jobs", jobs, "worker threads (default: available parallelism)");
    camp->add_option("--budget", budget);

    auto* gen = app.add_subcommand("gen", "emit graph6 lines");
    std::string gen_mode = "random";
    int fam_s = 10, fam_i = 3;
    gen->add_option("--mode", gen_mode, "random | exhaustive | family")
        ->check(CLI::IsMember({"random", "exhaustive", "family"}));
    gen->add_option("--seed", seed);
    gen->add_option("--count", count);
    gen->add_option("--n", n_min, "single order");
    gen->add_option("--n-min", n_min);
    gen->add_option("--n-max", n_max);
    gen->add_option("--s-min", s_min);
    gen->add_option("--s-max", s_max);
    gen->add_option("--p", prob);
    gen->add_option("--r", r, "top-up minimum degree");
    gen->add_option("--s", fam_s, "family: clique size");
    gen->add_option("--i-count", fam_i, "family: joined independent vertices");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*check) {
            Graph g = load_graph(graph_arg);
            Hypotheses h = check_hypotheses(g, r, 2 * r + 7);
            json out;
            out["order"] = g.order();
            out["split"] = h.split;
            out["connectivity" + std::to_string(r)] = h.k_connected;
            out["k1" + std::to_string(r + 1) + "_free"] = h.star_free;
            out["k1" + std::to_string(r + 1) + "e_free"] = h.star_plus_e_free;
            out["min_order"] = h.min_order;
            std::cout << out.dump() << '\n';
            if (verbose) std::cerr << (h.all() ? "all hypotheses met\n" : "hypotheses unmet\n");
        } else if (*partition) {
            Graph g = load_graph(graph_arg);
            auto p = split_partition(g);
            json out;
            out["split"] = p.has_value();
            if (p) {
                out["S"] = p->clique;
                out["I"] = p->independent;
            }
            std::cout << out.dump() << '\n';
        } else if (*icover) {
            Graph g = load_graph(graph_arg);
            SplitPartition p = require_partition(g);
            json out;
            if (want_min_cycles) {
                PseudoICover q = build_pseudo_icover_min_cycles(g, p, budget);
                out["elements"] = cover_to_json(q);
                out["h1"] = q.paths.size();
                out["h2"] = q.cycles.size();
            } else if (want_pseudo) {
                PseudoICover q = build_pseudo_icover(g, p, budget);
                out["elements"] = cover_to_json(q);
                out["h1"] = q.paths.size();
                out["h2"] = q.cycles.size();
            } else {
                ICover c = build_icover(g, p, budget);
                if (want_bound) c = bound_lengths(g, p, c, budget);
                out["elements"] = cover_to_json(c);
                out["h"] = c.paths.size();
                CoverStats st = cover_stats(c);
                out["lengths"] = st.lengths;
                out["end"] = st.end_vertices;
                out["inn"] = st.inner_clique;
            }
            std::cout << out.dump() << '\n';
        } else if (*hampath) {
            Graph g = load_graph(graph_arg);
            SplitPartition p = require_partition(g);
            ICover c = build_icover_avoiding(g, p, u, v, budget);
            HamPathCertificate cert = ham_path_from_icover(g, p, c, u, v);
            if (!verify_certificate(g, cert, u, v))
                throw ConstructionFailure("certificate failed the final gate");
            json out;
            out["certificate"] = cert.seq;
            std::cout << out.dump() << '\n';
        } else if (*oracle) {
            Graph g = load_graph(graph_arg);
            auto rep = hamilton_connected_oracle(g, oracle_cap);
            json out;
            out["connected"] = rep.connected;
            out["failing_pairs"] = json::array();
            for (auto [a, b] : rep.failing_pairs) out["failing_pairs"].push_back({a, b});
            std::cout << out.dump() << '\n';
        } else if (*verify) {
            Graph g = load_graph(graph_arg);
            VerifyOptions opts;
            opts.r = r;
            opts.oracle_cap = oracle_cap;
            opts.budget = budget;
            if (pairs_mode == "all") {
                opts.oracle_rate_small = 1.0;
                opts.oracle_small_threshold = oracle_cap;
            }
            VerificationReport rep = verify_theorem(g, opts);
            std::cout << rep.to_json().dump() << '\n';
            if (verbose) std::cerr << verdict_name(rep.verdict) << '\n';
            if (rep.verdict == Verdict::Counterexample) return 1;
            if (rep.verdict == Verdict::HypothesisUnmet) return 3;
        } else if (*camp) {
            CampaignOptions opts;
            opts.verify.r = r;
            opts.verify.oracle_cap = oracle_cap;
            opts.verify.budget = budget;
            if (pairs_mode == "all") {
                opts.verify.oracle_rate_small = 1.0;
                opts.verify.oracle_small_threshold = oracle_cap;
            }
            opts.jobs = jobs;
            if (check_name == "icover") opts.check = CampaignCheck::ICover;
            if (check_name == "lengths") opts.check = CampaignCheck::Lengths;
            if (!input_path.empty()) {
                opts.input_graph6 = load_graph6_lines(input_path);
            } else {
                opts.spec.mode = mode == "random"     ? GenMode::Random
                                 : mode == "family"   ? GenMode::Family
                                                      : GenMode::Exhaustive;
                opts.spec.seed = seed;
                opts.spec.count = count;
                if (camp->count("--n")) n_max = n_min;
                opts.spec.n_min = n_min;
                opts.spec.n_max = n_max;
                opts.spec.s_min = s_min;
                opts.spec.s_max = s_max;
                opts.spec.edge_probability = prob;
                opts.spec.r = r;
            }
            std::ofstream report_file;
            std::ostream* report_stream = nullptr;
            if (!report_path.empty()) {
                report_file.open(report_path);
                if (!report_file) {
                    std::cerr << "cannot open report file: " << report_path << '\n';
                    return 2;
                }
                report_stream = &report_file;
            }
            CampaignSummary summary = campaign(opts, report_stream);
            std::cout << summary.to_json(check_name).dump() << '\n';
            if (verbose)
                std::cerr << summary.total << " graphs, " << summary.verified << " verified, "
                          << summary.counterexample << " counterexamples\n";
            return summary.exit_code();
        } else if (*gen) {
            if (gen->count("--n")) n_max = n_min;
            if (gen_mode == "family") {
                std::cout << to_graph6(gen_family_complete_split(fam_s, fam_i)) << '\n';
            } else if (gen_mode == "exhaustive") {
                for (int n = n_min; n <= n_max; ++n)
                    for (int s = 1; s <= n; ++s)
                        enumerate_split_labeled(n, s, {}, [](const Graph& g) {
                            std::cout << to_graph6(g) << '\n';
                            return true;
                        });
            } else {
                GenSpec rspec;
                rspec.seed = seed;
                rspec.n_min = n_min;
                rspec.n_max = n_max;
                rspec.s_min = s_min;
                rspec.s_max = s_max;
                rspec.edge_probability = prob;
                rspec.r = r;
                Rng rng(seed);
                for (std::uint64_t i = 0; i < count; ++i)
                    std::cout << to_graph6(gen_random_split(rspec, rng)) << '\n';
            }
        }
    } catch (const Graph6Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidSpec& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
