// Command-line front door for the ricci library: curvature reports,
// flatness checks, edge classification, atlas export, verification and
// search orchestration. All machine output is JSON with exact rationals
// rendered as "p/q" strings; decimals are opt-in.

#include <csignal>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ricci/atlas.hpp"
#include "ricci/canonical.hpp"
#include "ricci/curvature.hpp"
#include "ricci/graph_io.hpp"
#include "ricci/local_structure.hpp"
#include "ricci/search.hpp"

using nlohmann::json;
using namespace ricci;

namespace {

constexpr const char* kToolVersion = "1.0.0";

// Exit codes shared by every subcommand.
constexpr int kExitOk = 0;
constexpr int kExitNotFlat = 1;   // verified not flat / verification mismatch
constexpr int kExitInput = 2;     // unreadable or unparseable input
constexpr int kExitUsage = 3;     // hypothesis or usage failure

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << "0x" << std::hex << v;
    return os.str();
}

std::string utc_timestamp() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

struct ReportOptions {
    bool no_timestamp = false;
    bool decimal = false;
};

json base_report(const std::string& subcommand, const std::string& input_bytes,
                 const ReportOptions& opt) {
    json j;
    j["tool"] = "ricci";
    j["version"] = kToolVersion;
    j["subcommand"] = subcommand;
    j["input_hash"] = hex64(fnv1a(input_bytes));
    if (!opt.no_timestamp) j["timestamp"] = utc_timestamp();
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

GraphFormat input_format(const std::string& path, const std::string& override_name) {
    if (override_name == "edgelist") return GraphFormat::Edgelist;
    if (override_name == "graph6") return GraphFormat::Graph6;
    if (!override_name.empty())
        throw InputError("unknown input format: " + override_name);
    return format_from_path(path);
}

struct LoadedGraph {
    Graph graph;
    std::string bytes;  // raw input, for the report hash
};

LoadedGraph load_graph(const std::string& path, const std::string& format_override) {
    LoadedGraph lg;
    lg.bytes = read_file(path);
    lg.graph = parse_graph(lg.bytes, input_format(path, format_override));
    return lg;
}

json rational_json(const Rational& r, bool decimal) {
    if (!decimal) return rat_str(r);
    json j;
    j["exact"] = rat_str(r);
    j["decimal"] = rat_double(r);
    return j;
}

json edge_json(const Edge& e) { return json::array({e.first, e.second}); }

json plan_json(const TransportPlan& plan, bool decimal) {
    json moves = json::array();
    for (const auto& m : plan.moves)
        moves.push_back({{"from", m.from}, {"to", m.to},
                         {"amount", rational_json(m.amount, decimal)}});
    return {{"moves", moves}, {"cost", rational_json(plan.cost, decimal)}};
}

json certificate_json(const DualCertificate& cert, bool decimal) {
    json pot = json::array();
    for (const auto& [v, f] : cert.potential)
        pot.push_back({{"vertex", v}, {"value", rational_json(f, decimal)}});
    return {{"potential", pot}, {"objective", rational_json(cert.objective, decimal)}};
}

json edge_report_json(const EdgeCurvatureReport& r, bool decimal, bool full) {
    json j;
    j["edge"] = edge_json(r.edge);
    j["kappa"] = rational_json(r.kappa, decimal);
    j["flat"] = r.flat;
    if (full) {
        json probes = json::array();
        for (const auto& p : r.probes)
            probes.push_back({{"alpha", rat_str(p.alpha)},
                              {"wasserstein", rational_json(p.wasserstein, decimal)}});
        j["probes"] = probes;
        j["plan"] = plan_json(r.plan, decimal);
        j["certificate"] = certificate_json(r.certificate, decimal);
    }
    return j;
}

Edge checked_edge(const Graph& g, int u, int v) {
    if (!g.has_vertex(u) || !g.has_vertex(v) || !g.adjacent(u, v))
        throw CLI::RuntimeError(
            "edge (" + std::to_string(u) + "," + std::to_string(v) +
                ") is not an edge of the graph",
            kExitUsage);
    return make_edge(u, v);
}

// ------------------------------------------------------------------
// curvature
// ------------------------------------------------------------------

int run_curvature(const std::string& path, const std::string& format_override,
                  const std::vector<int>& edge_flag,
                  const std::vector<std::string>& alpha_flags, int jobs,
                  const ReportOptions& opt) {
    auto lg = load_graph(path, format_override);
    json j = base_report("curvature", lg.bytes, opt);
    j["graph"] = {{"vertices", lg.graph.vertex_count()},
                  {"edges", lg.graph.edge_count()}};

    if (!alpha_flags.empty()) {
        if (edge_flag.empty())
            throw CLI::RuntimeError("--alpha requires --edge", kExitUsage);
        Edge e = checked_edge(lg.graph, edge_flag[0], edge_flag[1]);
        std::vector<Rational> alphas;
        for (const auto& s : alpha_flags) {
            Rational a = parse_rational(s);
            if (a < 0 || a > 1)
                throw CLI::RuntimeError("alpha must lie in [0,1]: " + s, kExitUsage);
            alphas.push_back(a);
        }
        json rows = json::array();
        for (const auto& row : curvature_profile(lg.graph, e.first, e.second, alphas)) {
            json r;
            r["alpha"] = rat_str(row.alpha);
            r["wasserstein"] = rational_json(row.wasserstein, opt.decimal);
            if (row.quotient_defined)
                r["quotient"] = rational_json(row.quotient, opt.decimal);
            rows.push_back(r);
        }
        j["edge"] = edge_json(e);
        j["profile"] = rows;
        emit(j);
        return kExitOk;
    }

    if (!edge_flag.empty()) {
        Edge e = checked_edge(lg.graph, edge_flag[0], edge_flag[1]);
        auto report = ricci_curvature(lg.graph, e.first, e.second);
        j["result"] = edge_report_json(report, opt.decimal, /*full=*/true);
        emit(j);
        return kExitOk;
    }

    auto report = is_ricci_flat(lg.graph, jobs);
    json rows = json::array();
    for (const auto& er : report.edges)
        rows.push_back(edge_report_json(er, opt.decimal, /*full=*/false));
    j["edges"] = rows;
    j["is_ricci_flat"] = report.is_ricci_flat;
    j["min_kappa"] = rational_json(report.min_kappa, opt.decimal);
    j["max_kappa"] = rational_json(report.max_kappa, opt.decimal);
    j["flat_edge_count"] = report.flat_edge_count;
    emit(j);
    return kExitOk;
}

// ------------------------------------------------------------------
// check-flat
// ------------------------------------------------------------------

int run_check_flat(const std::string& path, const std::string& format_override,
                   int jobs, const ReportOptions& opt) {
    auto lg = load_graph(path, format_override);
    for (Vertex v = 0; v < lg.graph.vertex_count(); ++v)
        if (lg.graph.degree(v) == 0)
            throw InputError("graph has an isolated vertex: " + std::to_string(v));
    auto report = is_ricci_flat(lg.graph, jobs);
    json j = base_report("check-flat", lg.bytes, opt);
    j["is_ricci_flat"] = report.is_ricci_flat;
    j["flat_edge_count"] = report.flat_edge_count;
    j["edge_count"] = lg.graph.edge_count();
    json offenders = json::array();
    for (const auto& er : report.edges)
        if (!er.flat)
            offenders.push_back({{"edge", edge_json(er.edge)},
                                 {"kappa", rational_json(er.kappa, opt.decimal)}});
    j["non_flat_edges"] = offenders;
    emit(j);
    return report.is_ricci_flat ? kExitOk : kExitNotFlat;
}

// ------------------------------------------------------------------
// classify
// ------------------------------------------------------------------

int run_classify(const std::string& path, const std::string& format_override,
                 const std::vector<int>& edge_flag, const ReportOptions& opt) {
    auto lg = load_graph(path, format_override);
    if (edge_flag.empty())
        throw CLI::RuntimeError("classify requires --edge U V", kExitUsage);
    Edge e = checked_edge(lg.graph, edge_flag[0], edge_flag[1]);

    json j = base_report("classify", lg.bytes, opt);
    j["edge"] = edge_json(e);
    auto prof = edge_cycle_profile(lg.graph, e);
    j["triangles"] = prof.triangles;
    j["four_cycles"] = prof.four_cycles;
    j["five_cycles"] = prof.five_cycles;

    if (prof.triangles > 0) {
        j["error"] = "edge lies in a triangle; no classification applies";
        emit(j);
        return kExitUsage;
    }
    if (prof.four_cycles == 0) {
        auto c = check_lemma2(lg.graph, e);
        j["classification"] = to_string(c.kind);
        j["detail"] = c.detail;
        emit(j);
        return kExitOk;
    }
    if (prof.four_cycles > 1) {
        j["error"] = "edge lies in more than one 4-cycle; no classification applies";
        emit(j);
        return kExitUsage;
    }
    if (!four_cycles_vertex_disjoint(lg.graph)) {
        j["error"] = "the graph's 4-cycles are not vertex-disjoint";
        emit(j);
        return kExitUsage;
    }
    auto c = classify_four_cycle_edge(lg.graph, e);
    j["classification"] = to_string(c.kind);
    j["detail"] = c.detail;
    j["upper_bound"] = rational_json(curvature_upper_bound(lg.graph, e), opt.decimal);
    emit(j);
    return kExitOk;
}

// ------------------------------------------------------------------
// atlas
// ------------------------------------------------------------------

int run_atlas(const std::string& name, std::optional<int> parameter,
              const std::string& format, const ReportOptions& opt) {
    AtlasEntry entry;
    try {
        entry = named_graph(name, parameter);
    } catch (const std::invalid_argument& ex) {
        throw CLI::RuntimeError(ex.what(), kExitUsage);
    }
    if (format == "dot") {
        std::cout << to_dot(entry.graph);
    } else if (format == "edgelist") {
        std::cout << to_edgelist(entry.graph);
    } else if (format == "graph6") {
        std::cout << to_graph6(entry.graph) << "\n";
    } else if (format == "json") {
        std::string key = name + (parameter ? "/" + std::to_string(*parameter) : "");
        json j = base_report("atlas", key, opt);
        j["name"] = entry.name;
        if (entry.parameter) j["parameter"] = *entry.parameter;
        j["expected"] = to_string(entry.expected_flat);
        j["note"] = entry.note;
        j["vertices"] = entry.graph.vertex_count();
        json edges = json::array();
        for (const Edge& e : entry.graph.edges()) edges.push_back(edge_json(e));
        j["edges"] = edges;
        j["graph6"] = to_graph6(entry.graph);
        emit(j);
    } else {
        throw CLI::RuntimeError("unknown atlas format: " + format, kExitUsage);
    }
    return kExitOk;
}

// ------------------------------------------------------------------
// verify
// ------------------------------------------------------------------

int run_verify(const std::string& what, int jobs, const ReportOptions& opt) {
    json j = base_report("verify", what, opt);
    bool all_pass = false;
    if (what == "tables") {
        auto report = verify_tables();
        all_pass = report.all_pass;
        json rows = json::array();
        for (const auto& r : report.rows)
            rows.push_back({{"table", r.spec.table},
                            {"row", r.spec.row},
                            {"degrees", json::array({r.spec.dx, r.spec.dy})},
                            {"pattern", r.spec.label},
                            {"expected_kappa", rat_str(r.spec.expected_kappa)},
                            {"computed_kappa",
                             rational_json(r.computed_kappa, opt.decimal)},
                            {"pass", r.pass}});
        j["rows"] = rows;
    } else if (what == "atlas") {
        auto report = verify_atlas(jobs);
        all_pass = report.all_pass;
        json rows = json::array();
        for (const auto& r : report.rows) {
            json row;
            row["name"] = r.entry.name;
            if (r.entry.parameter) row["parameter"] = *r.entry.parameter;
            row["expected"] = to_string(r.entry.expected_flat);
            row["computed"] = to_string(r.computed);
            row["detail"] = r.detail;
            row["pass"] = r.pass;
            rows.push_back(row);
        }
        j["rows"] = rows;
    } else {
        throw CLI::RuntimeError("verify expects 'tables' or 'atlas'", kExitUsage);
    }
    j["all_pass"] = all_pass;
    emit(j);
    return all_pass ? kExitOk : kExitNotFlat;
}

// ------------------------------------------------------------------
// search
// ------------------------------------------------------------------

volatile std::sig_atomic_t g_interrupted = 0;
void on_sigint(int) { g_interrupted = 1; }

json counters_json(const SearchCounters& k) {
    return {{"generated", k.generated},
            {"canonical_rejections", k.canonical_rejections},
            {"hereditary_rejections", k.hereditary_rejections},
            {"candidates", k.candidates},
            {"structure_rejections", k.structure_rejections},
            {"lemma_rejections", k.lemma_rejections},
            {"curvature_evaluations", k.curvature_evaluations},
            {"guided_states", k.guided_states},
            {"guard_hits", k.guard_hits}};
}

int run_search(const std::string& mode_name, std::optional<int> max_vertices,
               int jobs, const std::string& checkpoint_path,
               const ReportOptions& opt) {
    SearchConstraints c;
    // Brute mode defaults to the 12-vertex bound (first extremal graph);
    // the guided engine's branch guard defaults to 16, enough to complete
    // both known graphs.
    c.max_vertices = max_vertices ? *max_vertices
                                  : (mode_name == "guided" ? 16 : 12);
    c.jobs = jobs;
    if (mode_name == "brute")
        c.mode = SearchMode::Brute;
    else if (mode_name == "guided")
        c.mode = SearchMode::Guided;
    else
        throw CLI::RuntimeError("unknown mode: " + mode_name, kExitUsage);

    std::optional<Checkpoint> resume;
    if (!checkpoint_path.empty()) {
        std::ifstream probe(checkpoint_path);
        if (probe) {
            std::ostringstream os;
            os << probe.rdbuf();
            try {
                resume = parse_checkpoint(os.str());
            } catch (const std::exception& ex) {
                throw InputError(std::string("bad checkpoint: ") + ex.what());
            }
        }
    }

    std::signal(SIGINT, on_sigint);
    SearchResult result;
    try {
        result = enumerate_flat_graphs(c, [] { return g_interrupted != 0; },
                                       resume ? &*resume : nullptr);
    } catch (const std::invalid_argument& ex) {
        throw CLI::RuntimeError(ex.what(), kExitUsage);
    } catch (const std::runtime_error& ex) {
        throw InputError(ex.what());  // constraint-hash mismatch on resume
    }

    if (!result.completed && result.checkpoint) {
        if (checkpoint_path.empty())
            throw CLI::RuntimeError(
                "interrupted with no --checkpoint path to save to", kExitUsage);
        std::ofstream out(checkpoint_path, std::ios::trunc);
        out << serialize_checkpoint(*result.checkpoint);
        if (!out) throw InputError("cannot write checkpoint " + checkpoint_path);
    }

    json j = base_report("search", hex64(constraint_hash(c)), opt);
    j["mode"] = to_string(c.mode);
    j["max_vertices"] = c.max_vertices;
    j["jobs"] = c.jobs;
    j["completed"] = result.completed;
    if (!result.note.empty()) j["note"] = result.note;
    json found = json::array();
    for (const auto& f : result.found)
        found.push_back({{"graph6", to_graph6(f.graph)},
                         {"canonical_form", f.form.bytes},
                         {"vertices", f.graph.vertex_count()},
                         {"edges", f.graph.edge_count()}});
    j["found"] = found;
    j["counters"] = counters_json(result.counters);
    j["elapsed_seconds"] = result.elapsed_seconds;
    if (!result.cases.empty()) {
        json cases = json::array();
        for (const auto& cs : result.cases)
            cases.push_back({{"label", cs.label},
                             {"found", cs.found.size()},
                             {"states", cs.states},
                             {"guard_hits", cs.guard_hits}});
        j["cases"] = cases;
    }
    if (!result.completed && !checkpoint_path.empty())
        j["checkpoint"] = checkpoint_path;
    emit(j);
    return result.completed ? kExitOk : kExitNotFlat;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Lin-Lu-Yau Ricci curvature toolkit"};
    app.require_subcommand(1);

    ReportOptions opt;
    app.add_flag("--no-timestamp", opt.no_timestamp,
                 "omit the timestamp field (byte-identical reruns)");
    app.add_flag("--decimal", opt.decimal,
                 "add decimal approximations next to exact rationals");

    std::string path, format_override;
    std::vector<int> edge_flag;
    std::vector<std::string> alpha_flags;
    int jobs = 1;

    auto add_graph_opts = [&](CLI::App* sub, bool with_edge, bool with_alpha,
                              bool with_jobs) {
        sub->add_option("graph", path, "graph file (.g6 -> graph6, else edgelist)")
            ->required();
        sub->add_option("--format", format_override,
                        "input format override: edgelist | graph6");
        if (with_edge)
            sub->add_option("--edge", edge_flag, "edge endpoints U V")
                ->expected(2);
        if (with_alpha)
            sub->add_option("--alpha", alpha_flags,
                            "idleness value P/Q (repeatable; needs --edge)");
        if (with_jobs) sub->add_option("--jobs", jobs, "worker threads");
    };

    auto* curvature = app.add_subcommand("curvature", "exact edge curvature report");
    add_graph_opts(curvature, true, true, true);

    auto* check = app.add_subcommand("check-flat", "is every edge curvature zero?");
    add_graph_opts(check, false, false, true);

    auto* classify = app.add_subcommand("classify", "local structure of an edge");
    add_graph_opts(classify, true, false, false);

    std::string atlas_name, atlas_format = "edgelist";
    int atlas_parameter = -1;
    auto* atlas = app.add_subcommand("atlas", "export a named graph");
    atlas->add_option("name", atlas_name, "atlas entry name")->required();
    atlas->add_option("parameter", atlas_parameter, "size parameter (when applicable)");
    atlas->add_option("--format", atlas_format,
                      "output format: edgelist | graph6 | dot | json");

    std::string verify_what;
    auto* verify = app.add_subcommand("verify", "re-verify published structures");
    verify->add_option("what", verify_what, "tables | atlas")->required();
    verify->add_option("--jobs", jobs, "worker threads");

    std::string mode_name = "brute", checkpoint_path;
    int max_vertices = 0;
    auto* search = app.add_subcommand("search", "enumerate Ricci-flat graphs");
    search->add_option("--mode", mode_name, "brute | guided");
    auto* mv_opt = search->add_option("--max-vertices", max_vertices,
                                      "size bound (default: 12 brute, 16 guided)");
    search->add_option("--jobs", jobs, "worker threads");
    search->add_option("--checkpoint", checkpoint_path,
                       "resume from / save an interrupted run to this file");

    // Let the global report flags (--no-timestamp, --decimal) appear after
    // the subcommand name as well.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
        if (curvature->parsed())
            return run_curvature(path, format_override, edge_flag, alpha_flags,
                                 jobs, opt);
        if (check->parsed())
            return run_check_flat(path, format_override, jobs, opt);
        if (classify->parsed())
            return run_classify(path, format_override, edge_flag, opt);
        if (atlas->parsed())
            return run_atlas(atlas_name,
                             atlas_parameter >= 0
                                 ? std::optional<int>(atlas_parameter)
                                 : std::nullopt,
                             atlas_format, opt);
        if (verify->parsed()) return run_verify(verify_what, jobs, opt);
        if (search->parsed())
            return run_search(mode_name,
                              mv_opt->count() ? std::optional<int>(max_vertices)
                                              : std::nullopt,
                              jobs, checkpoint_path, opt);
    } catch (const CLI::RuntimeError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return ex.get_exit_code();
    } catch (const CLI::ParseError& ex) {
        int code = app.exit(ex);
        return code == 0 ? 0 : kExitUsage;
    } catch (const InputError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInput;
    } catch (const ParseError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInput;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
