// Command-line front end: analytical bounds and gap reports, rate curves,
// encode/decode verification runs, and a standalone digraph solver.

#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "groupcast/bounds.hpp"
#include "groupcast/codec.hpp"
#include "groupcast/coloring.hpp"
#include "groupcast/conflict_graph.hpp"

using namespace groupcast;

namespace {

constexpr int kExitBadInput = 2;
constexpr int kExitGuard = 3;
constexpr int kExitVerifyFailed = 4;

struct CommonOpts {
    int n = 0, m = 0, L = 1;
    std::string M = "0";
    bool exact = false;
    std::string demands;
    uint64_t seed = 1;
    int q = 8;
    std::string format = "json";
    std::string out;
    int max_vertices = 0;
    int threads = 0;

    SystemParams params() const { return SystemParams(n, m, Rational::parse(M), L); }

    SweepOptions sweep() const {
        SweepOptions o;
        o.threads = threads;
        if (max_vertices > 0) {
            o.limits.max_exact_vertices = max_vertices;
            o.limits.max_lp_vertices = max_vertices;
        }
        return o;
    }
};

void add_param_flags(CLI::App* cmd, CommonOpts& o, bool need_params) {
    auto* n = cmd->add_option("--n", o.n, "number of users");
    auto* m = cmd->add_option("--m", o.m, "library size in files");
    cmd->add_option("--M", o.M, "cache size in file units (integer, p/q or decimal)");
    cmd->add_option("--L", o.L, "requests per user");
    if (need_params) {
        n->required();
        m->required();
    }
    cmd->add_option("--q", o.q, "field degree for GF(2^q)");
    cmd->add_option("--seed", o.seed, "seed for randomized steps");
    cmd->add_option("--format", o.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", o.out, "output path (default stdout)");
    cmd->add_option("--max-vertices", o.max_vertices, "override the solver size guards");
    cmd->add_option("--threads", o.threads, "sweep worker cap (also CODED_GROUPCAST_THREADS)");
}

void write_output(const CommonOpts& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + o.out);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

RateReport report_for(const CommonOpts& o) {
    SystemParams params = o.params();
    if (!o.demands.empty()) {
        // single-demand rate: the cut-set bound only constrains the worst case,
        // so the gap column keeps its formula meaning
        RequestMatrix F = RequestMatrix::load_file(o.demands, params.m);
        RateReport r = gap_report(params, false, o.sweep());
        ExactRateResult er = achievable_rate_exact(params, F, o.sweep());
        r.r_exact = er.rate;
        r.r_exact_placement = er.placement_rate;
        r.worst_demands = F;
        return r;
    }
    return gap_report(params, o.exact, o.sweep());
}

int cmd_bounds(const CommonOpts& o) {
    RateReport r = report_for(o);
    if (o.format == "csv") {
        std::ostringstream os;
        os << rate_csv_header() << '\n' << rate_csv_row(r) << '\n';
        write_output(o, os.str());
    } else {
        write_output(o, r.to_json());
    }
    return 0;
}

int run_curve(const CommonOpts& o, const std::string& vary, const std::string& from,
              const std::string& to, const std::string& step) {
    std::ostringstream os;
    std::vector<RateReport> rows;
    if (vary == "L") {
        int lo = std::stoi(from), hi = std::stoi(to), st = step.empty() ? 1 : std::stoi(step);
        if (st <= 0 || lo > hi) throw std::invalid_argument("bad L range");
        for (int L = lo; L <= hi; L += st) {
            CommonOpts p = o;
            p.L = L;
            rows.push_back(report_for(p));
        }
    } else if (vary == "M") {
        Rational lo = Rational::parse(from), hi = Rational::parse(to);
        Rational st = step.empty() ? Rational(1) : Rational::parse(step);
        if (!(st > Rational(0)) || lo > hi) throw std::invalid_argument("bad M range");
        for (Rational M = lo; M <= hi; M += st) {
            CommonOpts p = o;
            p.M = M.str();
            rows.push_back(report_for(p));
        }
    } else {
        throw std::invalid_argument("--vary must be L or M");
    }
    if (o.format == "json") {
        std::ostringstream js;
        js << "[\n";
        for (size_t i = 0; i < rows.size(); ++i) js << rows[i].to_json() << (i + 1 < rows.size() ? ",\n" : "\n");
        js << "]";
        write_output(o, js.str());
        return 0;
    }
    os << rate_csv_header() << '\n';
    for (const auto& r : rows) os << rate_csv_row(r) << '\n';
    write_output(o, os.str());
    return 0;
}

RequestMatrix random_demands(const SystemParams& params, std::mt19937_64& rng) {
    RequestMatrix F;
    F.n = params.n;
    F.m = params.m;
    F.L = params.L;
    std::vector<int> files(params.m);
    for (int f = 1; f <= params.m; ++f) files[f - 1] = f;
    for (int u = 0; u < params.n; ++u) {
        std::vector<int> pool = files;
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<int> row(pool.begin(), pool.begin() + params.L);
        std::sort(row.begin(), row.end());
        F.rows.push_back(std::move(row));
    }
    return F;
}

int run_verify(const CommonOpts& o, int max_exhaustive, int samples) {
    SystemParams params = o.params();
    CachePlacement placement = place_caches(params);

    std::vector<RequestMatrix> demand_list;
    bool exhaustive = false;
    if (!o.demands.empty()) {
        demand_list.push_back(RequestMatrix::load_file(o.demands, params.m));
    } else {
        try {
            auto all = canonical_request_matrices(params);
            if ((int)all.size() <= max_exhaustive) {
                demand_list = std::move(all);
                exhaustive = true;
            }
        } catch (const SolverGuardError&) {
        }
        if (!exhaustive) {
            std::mt19937_64 rng(o.seed);
            for (int i = 0; i < samples; ++i) demand_list.push_back(random_demands(params, rng));
        }
    }

    std::mt19937_64 rng(o.seed ^ 0x9e3779b97f4a7c15ULL);
    long long checked = 0, failures = 0;
    for (const auto& F : demand_list) {
        ConflictGraph g = build_conflict_graph(placement, F);
        LocalColoringResult col;
        try {
            col = exact_local_chromatic(g, true, o.sweep().limits);
        } catch (const SolverGuardError&) {
            col = greedy_local_coloring(g);  // any proper packet-consistent coloring decodes
        }
        int qeff = auto_field_degree(std::max(1, col.coloring.palette), o.q);
        GeneratorMatrix gen = build_mds_generator(col.chi_l, std::max(1, col.coloring.palette), qeff);

        Field f(qeff);
        std::uniform_int_distribution<uint32_t> dist(0, f.size() - 1);
        SymbolMap all_symbols;
        for (int file = 1; file <= params.m; ++file) {
            for (uint32_t s : subsets_of_size(params.n, placement.t)) {
                all_symbols[PacketLabel{file, s}] = dist(rng);
            }
        }
        std::vector<uint32_t> X = encode(g, col, gen, all_symbols);
        for (int u = 1; u <= params.n; ++u) {
            SymbolMap cached;
            for (const auto& label : placement.cached[u - 1]) cached[label] = all_symbols[label];
            try {
                SymbolMap got = decode_user(g, col, gen, u, X, cached);
                for (const auto& [label, value] : got) {
                    ++checked;
                    if (value != all_symbols[label]) ++failures;
                }
                std::set<PacketLabel> want;
                for (int v = 0; v < g.vertex_count(); ++v) {
                    if (g.vertices[v].mu == u) want.insert(g.vertices[v].rho);
                }
                if (want.size() != got.size()) ++failures;
            } catch (const DecodeError& e) {
                std::cerr << "decode failure: " << e.what() << "\n";
                ++failures;
            }
        }
    }

    const char* source = !o.demands.empty() ? "given" : exhaustive ? "exhaustive" : "sampled";
    std::ostringstream os;
    os << "verify n=" << params.n << " m=" << params.m << " M=" << params.M.str()
       << " L=" << params.L << ": " << source << " over " << demand_list.size()
       << " demand matrices, " << checked << " packet symbols checked, " << failures
       << " failures (seed=" << o.seed << ")";
    std::cout << os.str() << "\n";
    return failures == 0 ? 0 : kExitVerifyFailed;
}

int run_solve_graph(const CommonOpts& o, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    ConflictGraph g = graph_from_edge_list(buf.str());
    SolverLimits limits = o.sweep().limits;
    auto exact = exact_local_chromatic(g, false, limits);
    std::ostringstream os;
    os << "vertices = " << g.vertex_count() << "\n";
    os << "chi_l = " << exact.chi_l << " (palette " << exact.coloring.palette << ")\n";
    auto frac = fractional_local_chromatic(g, limits);
    os << "fractional = " << frac.value.str() << "\n";
    write_output(o, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiple-groupcast coded caching: bounds, curves, verification"};
    app.require_subcommand(1);

    CommonOpts bo, co, vo, so;
    std::string vary = "L", from, to, step;
    std::string graph_path;
    int max_exhaustive = 4096, samples = 32;

    auto* bounds_cmd = app.add_subcommand("bounds", "rate bounds and gap report for one point");
    add_param_flags(bounds_cmd, bo, true);
    bounds_cmd->add_flag("--exact", bo.exact, "run the worst-case demand sweep");
    bounds_cmd->add_option("--demands", bo.demands, "request matrix file (JSON or CSV)");

    auto* curve_cmd = app.add_subcommand("curve", "rate curve over a range of L or M");
    add_param_flags(curve_cmd, co, true);
    curve_cmd->add_flag("--exact", co.exact, "run the worst-case demand sweep per point");
    curve_cmd->add_option("--vary", vary, "grid variable: L or M")->required();
    curve_cmd->add_option("--from", from, "range start")->required();
    curve_cmd->add_option("--to", to, "range end")->required();
    curve_cmd->add_option("--step", step, "range step (default 1)");
    co.format = "csv";

    auto* verify_cmd = app.add_subcommand("verify", "encode/decode round-trip verification");
    add_param_flags(verify_cmd, vo, true);
    verify_cmd->add_option("--demands", vo.demands, "request matrix file (JSON or CSV)");
    verify_cmd->add_option("--max-exhaustive", max_exhaustive,
                           "exhaustive sweep limit before sampling kicks in");
    verify_cmd->add_option("--samples", samples, "sampled demand matrices when not exhaustive");

    auto* solve_cmd = app.add_subcommand("solve-graph", "local chromatic numbers of a digraph");
    add_param_flags(solve_cmd, so, false);
    solve_cmd->add_option("file", graph_path, "edge-list file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitBadInput;
    }

    try {
        if (bounds_cmd->parsed()) return cmd_bounds(bo);
        if (curve_cmd->parsed()) return run_curve(co, vary, from, to, step);
        if (verify_cmd->parsed()) return run_verify(vo, max_exhaustive, samples);
        if (solve_cmd->parsed()) return run_solve_graph(so, graph_path);
    } catch (const SolverGuardError& e) {
        std::cerr << "solver guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
