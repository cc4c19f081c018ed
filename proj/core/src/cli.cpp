#include "dinrep/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "dinrep/analysis.hpp"
#include "dinrep/construct.hpp"
#include "dinrep/instance.hpp"
#include "dinrep/matching.hpp"
#include "dinrep/oracle.hpp"
#include "dinrep/poset.hpp"
#include "dinrep/representation.hpp"

namespace dinrep {

namespace {

using nlohmann::json;

int exit_code_for(const Error& e) {
    return e.kind() == ErrorKind::guard_exceeded ? 3 : 2;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::invalid_input, path + ": cannot open for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::invalid_input, path + ": cannot open for writing");
    out << contents;
    if (!out) fail(ErrorKind::invalid_input, path + ": write failed");
}

InstanceFile load_instance(const std::string& path) {
    return parse_instance(read_file(path));
}

VertexFunction demands_for(const InstanceFile& instance,
                           const std::optional<std::string>& path) {
    if (path) return VertexFunction(parse_vertex_values(read_file(*path), instance.n));
    if (instance.demands) return VertexFunction(*instance.demands);
    fail(ErrorKind::invalid_input,
         "no demands given: add a \"demands\" row to the instance or pass --demands");
}

VertexFunction capacities_for(const InstanceFile& instance,
                              const std::optional<std::string>& path) {
    if (path) return VertexFunction(parse_vertex_values(read_file(*path), instance.n));
    if (instance.capacities) return VertexFunction(*instance.capacities);
    fail(ErrorKind::invalid_input,
         "no capacities given: add a \"capacities\" row to the instance or pass --capacities");
}

// One batch task's buffered output; printed strictly in input order.
struct CommandOutput {
    int code = 0;
    std::string out;
    std::string err;
};

template <typename Fn>
CommandOutput guarded(Fn&& fn) {
    CommandOutput result;
    std::ostringstream out;
    try {
        result.code = fn(out);
    } catch (const Error& e) {
        result.code = exit_code_for(e);
        result.err = std::string("error [") + to_string(e.kind()) + "]: " + e.what() + "\n";
    }
    result.out = out.str();
    return result;
}

struct Style {
    bool color = false;
    std::string good(const std::string& s) const {
        return color ? "\x1b[32m" + s + "\x1b[0m" : s;
    }
    std::string bad(const std::string& s) const {
        return color ? "\x1b[31m" + s + "\x1b[0m" : s;
    }
};

Style style_for(const std::ostream& out) {
    Style style;
    style.color = (&out == &std::cout) && isatty(fileno(stdout)) != 0 &&
                  std::getenv("NO_COLOR") == nullptr;
    return style;
}

json violation_json(const Violation& violation) {
    json j;
    j["kind"] = to_string(violation.kind);
    j["vertices"] = violation.vertices;
    return j;
}

// Shared options for the subcommands that run the solver pipelines.
struct PipelineOptions {
    std::vector<std::string> files;
    std::optional<std::string> emit_rep;
    std::optional<std::string> demands;
    std::optional<std::string> capacities;
    bool certificate = false;
    bool quiet = false;
};

int analyze_one(const std::string& path, bool quiet, std::ostream& out) {
    InstanceFile instance = load_instance(path);
    json j;
    j["command"] = "analyze";
    j["file"] = path;
    j["n"] = instance.n;
    j["directed"] = instance.directed;
    j["pair_count"] = static_cast<int>(instance.pairs.size());
    Graph g = instance.directed ? underlying_graph(Digraph(instance.n, instance.pairs))
                                : Graph(instance.n, instance.pairs);
    j["triangle_free"] = is_triangle_free(g);
    j["diamond_free"] = is_diamond_free(g);
    j["bipartite"] = is_bipartite(g);
    if (instance.directed) {
        Digraph d(instance.n, instance.pairs);
        auto order = topological_order(d);
        j["dag"] = order.has_value();
        j["hamiltonian"] = order.has_value() && hamiltonian_path(d).has_value();
        j["scc_count"] = static_cast<int>(scc_decomposition(d).components.size());
    } else {
        j["dag"] = nullptr;
        j["hamiltonian"] = nullptr;
        j["scc_count"] = nullptr;
    }
    out << j.dump() << "\n";
    if (!quiet) {
        out << path << ": n=" << instance.n << " pairs=" << instance.pairs.size()
            << (instance.directed ? " directed" : " undirected") << "\n";
    }
    return 0;
}

int din_one(const std::string& path, const PipelineOptions& options, std::ostream& out) {
    InstanceFile instance = load_instance(path);
    Digraph d = to_digraph(instance);
    DinResult result = din_hamiltonian_triangle_free(d);
    json j;
    j["command"] = "din";
    j["file"] = path;
    j["value"] = result.value;
    j["arc_count"] = d.arc_count();
    j["b"] = result.capacity.values();
    j["b_total"] = result.capacity.total();
    j["nu"] = result.matching.weight();
    out << j.dump() << "\n";
    if (options.certificate) {
        out << emit_certificate("din", underlying_graph(d), result.value, result.capacity,
                                result.matching)
            << "\n";
    }
    if (!options.quiet) {
        out << "din = " << result.value << "  (" << d.arc_count()
            << " arcs, b(V) = " << result.capacity.total()
            << ", nu = " << result.matching.weight() << ")\n";
    }
    if (options.emit_rep) {
        write_file(*options.emit_rep, emit_representation(result.representation) + "\n");
    }
    return 0;
}

int poset_in_one(const std::string& path, const PipelineOptions& options, std::ostream& out) {
    InstanceFile instance = load_instance(path);
    PosetGraph p = to_poset(instance);
    PosetInResult result = poset_in_triangle_free(p);
    json j;
    j["command"] = "poset-in";
    j["file"] = path;
    j["value"] = result.value;
    j["edge_count"] = p.graph().edge_count();
    j["b"] = result.capacity.values();
    j["b_total"] = result.capacity.total();
    j["nu"] = result.matching.weight();
    out << j.dump() << "\n";
    if (options.certificate) {
        out << emit_certificate("poset-in", p.graph(), result.value, result.capacity,
                                result.matching)
            << "\n";
    }
    if (!options.quiet) {
        out << "in(G,order) = " << result.value << "  (" << p.graph().edge_count()
            << " edges, b(V) = " << result.capacity.total()
            << ", nu = " << result.matching.weight() << ")\n";
    }
    if (options.emit_rep) {
        write_file(*options.emit_rep, emit_representation(result.representation) + "\n");
    }
    return 0;
}

int ell_in_one(const std::string& path, const PipelineOptions& options, std::ostream& out) {
    InstanceFile instance = load_instance(path);
    Graph g = to_graph(instance);
    VertexFunction ell = demands_for(instance, options.demands);
    EllConstrainedResult result = ell_constrained_in_triangle_free(g, ell);
    json j;
    j["command"] = "ell-in";
    j["file"] = path;
    j["value"] = result.value;
    j["edge_count"] = g.edge_count();
    j["b"] = result.capacity.values();
    j["b_total"] = result.capacity.total();
    j["nu"] = result.matching.weight();
    out << j.dump() << "\n";
    if (options.certificate) {
        out << emit_certificate("ell-in", g, result.value, result.capacity, result.matching)
            << "\n";
    }
    if (!options.quiet) {
        out << "in(G,ell) = " << result.value << "  (" << g.edge_count()
            << " edges, b(V) = " << result.capacity.total()
            << ", nu = " << result.matching.weight() << ")\n";
    }
    if (options.emit_rep) {
        write_file(*options.emit_rep, emit_representation(result.representation) + "\n");
    }
    return 0;
}

int wdin_one(const std::string& path, const PipelineOptions& options, std::ostream& out) {
    InstanceFile instance = load_instance(path);
    Digraph d = to_digraph(instance);
    Representation rep = construct_wdin(d);
    json j;
    j["command"] = "wdin";
    j["file"] = path;
    j["colors"] = rep.universe_size();
    j["optimal"] = false;
    out << j.dump() << "\n";
    if (!options.quiet) {
        out << "weak representation with " << rep.universe_size()
            << " colors (upper bound only, not necessarily optimal)\n";
    }
    if (options.emit_rep) {
        write_file(*options.emit_rep, emit_representation(rep) + "\n");
    }
    return 0;
}

int bmatch_one(const std::string& path, const PipelineOptions& options, std::ostream& out) {
    InstanceFile instance = load_instance(path);
    Graph g = to_graph(instance);
    VertexFunction b = capacities_for(instance, options.capacities);
    BMatching matching = max_weight_b_matching(g, b);
    json j;
    j["command"] = "bmatch";
    j["file"] = path;
    j["nu"] = matching.weight();
    json rows = json::array();
    for (int e = 0; e < g.edge_count(); ++e) {
        int x = matching.multiplicities()[static_cast<std::size_t>(e)];
        if (x == 0) continue;
        const Edge& edge = g.edges()[static_cast<std::size_t>(e)];
        rows.push_back(json::array({edge.u, edge.v, x}));
    }
    j["matching"] = std::move(rows);
    out << j.dump() << "\n";
    if (options.certificate) {
        out << emit_certificate("bmatch", g, matching.weight(), b, matching) << "\n";
    }
    if (!options.quiet) {
        out << "nu(G,b) = " << matching.weight() << "\n";
    }
    return 0;
}

int verify_one(const std::string& path, const std::string& rep_path, const std::string& kind,
               const std::optional<std::string>& demands_path, bool quiet, const Style& style,
               std::ostream& out) {
    InstanceFile instance = load_instance(path);
    Representation rep = parse_representation(read_file(rep_path));
    VerifyResult verdict;
    if (kind == "in") {
        verdict = verify_in(to_graph(instance), rep);
    } else if (kind == "ell") {
        Graph g = to_graph(instance);
        verdict = verify_ell_in(g, demands_for(instance, demands_path), rep);
    } else if (kind == "poset") {
        verdict = verify_poset_in(to_poset(instance), rep);
    } else if (kind == "din") {
        verdict = verify_din(to_digraph(instance), rep);
    } else if (kind == "wdin") {
        verdict = verify_wdin(to_digraph(instance), rep);
    } else if (kind == "uin") {
        verdict = verify_uin(to_graph(instance), rep);
    } else {
        fail(ErrorKind::invalid_input, "unknown verification kind \"" + kind + "\"");
    }
    json j;
    j["command"] = "verify";
    j["file"] = path;
    j["kind"] = kind;
    j["ok"] = !verdict.has_value();
    if (verdict) j["violation"] = violation_json(*verdict);
    out << j.dump() << "\n";
    if (!quiet) {
        if (verdict) {
            out << style.bad("FAIL") << " " << to_string(verdict->kind) << " at vertices [";
            for (std::size_t i = 0; i < verdict->vertices.size(); ++i) {
                if (i > 0) out << ",";
                out << verdict->vertices[i];
            }
            out << "]\n";
        } else {
            out << style.good("ok") << " valid " << kind << " representation\n";
        }
    }
    return verdict ? 1 : 0;
}

int oracle_one(const std::string& kind, const std::string& path,
               const PipelineOptions& options, std::ostream& out) {
    InstanceFile instance = load_instance(path);
    long long value = 0;
    if (kind == "din") {
        value = oracle_din_tiny(to_digraph(instance));
    } else if (kind == "din-ham") {
        value = oracle_din_hamiltonian_tf(to_digraph(instance));
    } else if (kind == "in") {
        Graph g = to_graph(instance);
        value = oracle_in_tiny(g, demands_for(instance, options.demands));
    } else if (kind == "ecc") {
        value = oracle_ecc(to_graph(instance));
    } else if (kind == "nu") {
        Graph g = to_graph(instance);
        value = brute_force_nu(g, capacities_for(instance, options.capacities));
    } else {
        fail(ErrorKind::invalid_input, "unknown oracle \"" + kind + "\"");
    }
    json j;
    j["command"] = "oracle";
    j["file"] = path;
    j["kind"] = kind;
    j["value"] = value;
    out << j.dump() << "\n";
    if (!options.quiet) {
        out << "oracle " << kind << " = " << value << "\n";
    }
    return 0;
}

int bound_one(const std::string& path, bool quiet, std::ostream& out) {
    InstanceFile instance = load_instance(path);
    Digraph d = to_digraph(instance);
    auto chains = min_chain_cover(d);
    Coloring coloring = greedy_coloring(underlying_graph(d));
    long long lower = din_lower_bound(d, chains, coloring);
    long long upper = generic_din_construction(d).universe_size();
    json j;
    j["command"] = "bound";
    j["file"] = path;
    j["lower"] = lower;
    j["upper"] = upper;
    j["chain_count"] = static_cast<int>(chains.size());
    j["class_count"] = coloring.num_classes;
    out << j.dump() << "\n";
    if (!quiet) {
        out << lower << " <= din <= " << upper << "  (" << chains.size() << " chains, "
            << coloring.num_classes << " classes)\n";
    }
    return 0;
}

int export_dot_one(const std::string& path, bool condensation, bool underlying,
                   const std::optional<std::string>& out_path, std::ostream& out) {
    InstanceFile instance = load_instance(path);
    std::string dot;
    if (condensation) {
        dot = export_dot_condensation(to_digraph(instance));
    } else if (underlying) {
        dot = export_dot(underlying_graph(to_digraph(instance)));
    } else if (instance.directed) {
        dot = export_dot(to_digraph(instance));
    } else {
        dot = export_dot(to_graph(instance));
    }
    if (out_path) {
        write_file(*out_path, dot);
    } else {
        out << dot;
    }
    return 0;
}

// Batch runner: every file is handled by an isolated worker task; outputs
// are flushed strictly in input order, whatever the completion order.
template <typename Fn>
int run_batch(const std::vector<std::string>& files, std::ostream& out, std::ostream& err,
              Fn&& one) {
    std::vector<std::future<CommandOutput>> tasks;
    tasks.reserve(files.size());
    for (const std::string& file : files) {
        tasks.push_back(std::async(std::launch::async, [&one, file] {
            return guarded([&](std::ostream& stream) { return one(file, stream); });
        }));
    }
    int code = 0;
    for (auto& task : tasks) {
        CommandOutput result = task.get();
        out << result.out;
        err << result.err;
        if (code == 0) code = result.code;
    }
    return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact constrained intersection representations of graphs and digraphs",
                 "dinrep"};
    app.require_subcommand(1);
    Style style = style_for(out);

    PipelineOptions options;
    std::string rep_path, verify_kind, oracle_kind;
    std::optional<std::string> dot_out;
    bool condensation = false, underlying = false;

    auto add_quiet = [&](CLI::App* cmd) {
        cmd->add_flag("-q,--quiet", options.quiet, "suppress the human summary");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "structural facts about instances");
    analyze->add_option("files", options.files, "instance files")->required()->expected(-1);
    add_quiet(analyze);

    CLI::App* din = app.add_subcommand(
        "din", "exact directed intersection number of triangle-free Hamiltonian DAGs");
    din->add_option("files", options.files, "instance files")->required()->expected(-1);
    din->add_option("--emit-rep", options.emit_rep, "write the optimal representation here");
    din->add_flag("--certificate", options.certificate, "print the value certificate");
    add_quiet(din);

    CLI::App* poset_in = app.add_subcommand(
        "poset-in", "intersection number of a partially ordered triangle-free graph");
    poset_in->add_option("file", options.files, "instance file")->required()->expected(1);
    poset_in->add_option("--emit-rep", options.emit_rep, "write the representation here");
    poset_in->add_flag("--certificate", options.certificate, "print the value certificate");
    add_quiet(poset_in);

    CLI::App* ell_in = app.add_subcommand(
        "ell-in", "demand-constrained intersection number of a triangle-free graph");
    ell_in->add_option("file", options.files, "instance file")->required()->expected(1);
    ell_in->add_option("--demands", options.demands, "JSON array with one demand per vertex");
    ell_in->add_option("--emit-rep", options.emit_rep, "write the representation here");
    ell_in->add_flag("--certificate", options.certificate, "print the value certificate");
    add_quiet(ell_in);

    CLI::App* wdin = app.add_subcommand(
        "wdin", "weak directed representation of an admissible digraph (upper bound)");
    wdin->add_option("file", options.files, "instance file")->required()->expected(1);
    wdin->add_option("--emit-rep", options.emit_rep, "write the representation here");
    add_quiet(wdin);

    CLI::App* bmatch = app.add_subcommand("bmatch", "maximum-weight b-matching");
    bmatch->add_option("file", options.files, "instance file")->required()->expected(1);
    bmatch->add_option("--capacities", options.capacities,
                       "JSON array with one capacity per vertex");
    bmatch->add_flag("--certificate", options.certificate, "print the value certificate");
    add_quiet(bmatch);

    CLI::App* verify = app.add_subcommand("verify", "check a representation against an instance");
    verify->add_option("file", options.files, "instance file")->required()->expected(1);
    verify->add_option("--rep", rep_path, "representation file")->required();
    verify->add_option("--kind", verify_kind, "one of in, ell, poset, din, wdin, uin")
        ->required();
    verify->add_option("--demands", options.demands, "demands for --kind ell");
    add_quiet(verify);

    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive desk-scale reference solvers");
    oracle->add_option("kind", oracle_kind, "one of din, din-ham, in, ecc, nu")->required();
    oracle->add_option("file", options.files, "instance file")->required()->expected(1);
    oracle->add_option("--demands", options.demands, "demands for the in oracle");
    oracle->add_option("--capacities", options.capacities, "capacities for the nu oracle");
    add_quiet(oracle);

    CLI::App* bound = app.add_subcommand(
        "bound", "certified lower and generic upper bound on the DIN of a DAG");
    bound->add_option("file", options.files, "instance file")->required()->expected(1);
    add_quiet(bound);

    CLI::App* export_dot_cmd = app.add_subcommand("export-dot", "DOT rendering of an instance");
    export_dot_cmd->add_option("file", options.files, "instance file")->required()->expected(1);
    export_dot_cmd->add_flag("--condensation", condensation,
                             "render the condensation of a digraph");
    export_dot_cmd->add_flag("--underlying", underlying,
                             "render the underlying graph of a digraph");
    export_dot_cmd->add_option("-o,--out", dot_out, "write the DOT text here");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    if (analyze->parsed()) {
        bool quiet = options.quiet;
        return run_batch(options.files, out, err, [quiet](const std::string& file, std::ostream& o) {
            return analyze_one(file, quiet, o);
        });
    }
    if (din->parsed()) {
        if (options.files.size() > 1 && options.emit_rep) {
            err << "error: --emit-rep needs exactly one input file\n";
            return 2;
        }
        return run_batch(options.files, out, err,
                         [&options](const std::string& file, std::ostream& o) {
                             return din_one(file, options, o);
                         });
    }
    CommandOutput result = guarded([&](std::ostream& o) -> int {
        if (poset_in->parsed()) return poset_in_one(options.files.front(), options, o);
        if (ell_in->parsed()) return ell_in_one(options.files.front(), options, o);
        if (wdin->parsed()) return wdin_one(options.files.front(), options, o);
        if (bmatch->parsed()) return bmatch_one(options.files.front(), options, o);
        if (verify->parsed()) {
            return verify_one(options.files.front(), rep_path, verify_kind, options.demands,
                              options.quiet, style, o);
        }
        if (oracle->parsed()) return oracle_one(oracle_kind, options.files.front(), options, o);
        if (bound->parsed()) return bound_one(options.files.front(), options.quiet, o);
        if (export_dot_cmd->parsed()) {
            return export_dot_one(options.files.front(), condensation, underlying, dot_out, o);
        }
        fail(ErrorKind::invalid_input, "no subcommand selected");
    });
    out << result.out;
    err << result.err;
    return result.code;
}

}  // namespace dinrep
