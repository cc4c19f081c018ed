#include "dinrep/instance.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "dinrep/analysis.hpp"

namespace dinrep {

namespace {

using nlohmann::json;

// generous desk-scale ceilings; they exist to reject nonsense before it
// turns into allocations or silent integer wrap
constexpr long long kMaxVertices = 1'000'000;
constexpr long long kMaxValue = 1'000'000'000;

json parse_json(std::string_view text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::invalid_input,
             std::string(what) + ": syntax error at byte " + std::to_string(e.byte) + ": " +
                 e.what());
    } catch (const json::exception& e) {
        fail(ErrorKind::invalid_input, std::string(what) + ": " + e.what());
    }
}

int read_count(const json& j, const char* field) {
    if (!j.contains(field)) {
        fail(ErrorKind::invalid_input, std::string("missing field \"") + field + "\"");
    }
    const json& value = j.at(field);
    if (!value.is_number_integer() || value.get<long long>() < 0 ||
        value.get<long long>() > kMaxVertices) {
        fail(ErrorKind::invalid_input,
             std::string(field) + ": expected an integer in [0, " +
                 std::to_string(kMaxVertices) + "]");
    }
    return value.get<int>();
}

std::vector<std::pair<int, int>> read_pairs(const json& j, const char* field, int n) {
    const json& list = j.at(field);
    if (!list.is_array()) {
        fail(ErrorKind::invalid_input, std::string(field) + ": expected an array of pairs");
    }
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
        const json& entry = list[i];
        std::string locus = std::string(field) + "[" + std::to_string(i) + "]";
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer()) {
            fail(ErrorKind::invalid_input, locus + ": expected a pair of integers");
        }
        long long a = entry[0].get<long long>();
        long long b = entry[1].get<long long>();
        if (a < 0 || a >= n || b < 0 || b >= n) {
            fail(ErrorKind::invalid_input,
                 locus + ": endpoint out of range (n=" + std::to_string(n) + ")");
        }
        if (a == b) {
            fail(ErrorKind::invalid_input, locus + ": loop at vertex " + std::to_string(a));
        }
        pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    return pairs;
}

std::vector<int> read_values(const json& list, const std::string& field, int n) {
    if (!list.is_array() || static_cast<int>(list.size()) != n) {
        fail(ErrorKind::invalid_input,
             field + ": expected an array of length " + std::to_string(n));
    }
    std::vector<int> values;
    values.reserve(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (!list[i].is_number_integer() || list[i].get<long long>() < 0 ||
            list[i].get<long long>() > kMaxValue) {
            fail(ErrorKind::invalid_input,
                 field + "[" + std::to_string(i) + "]: expected an integer in [0, " +
                     std::to_string(kMaxValue) + "]");
        }
        values.push_back(list[i].get<int>());
    }
    return values;
}

void reject_duplicates(const std::vector<std::pair<int, int>>& pairs, const char* field,
                       bool directed) {
    std::vector<std::pair<int, int>> seen;
    seen.reserve(pairs.size());
    for (auto [a, b] : pairs) {
        seen.emplace_back(directed ? a : std::min(a, b), directed ? b : std::max(a, b));
    }
    std::sort(seen.begin(), seen.end());
    auto dup = std::adjacent_find(seen.begin(), seen.end());
    if (dup != seen.end()) {
        fail(ErrorKind::invalid_input,
             std::string(field) + ": duplicate pair [" + std::to_string(dup->first) + "," +
                 std::to_string(dup->second) + "]");
    }
}

InstanceFile parse_instance_json(std::string_view text) {
    json j = parse_json(text, "instance");
    if (!j.is_object()) {
        fail(ErrorKind::invalid_input, "instance: expected a JSON object");
    }
    InstanceFile instance;
    instance.n = read_count(j, "n");
    bool has_arcs = j.contains("arcs");
    bool has_edges = j.contains("edges");
    if (has_arcs == has_edges) {
        fail(ErrorKind::invalid_input, "instance needs exactly one of \"arcs\" or \"edges\"");
    }
    instance.directed = has_arcs;
    if (j.contains("directed")) {
        if (!j.at("directed").is_boolean()) {
            fail(ErrorKind::invalid_input, "directed: expected a boolean");
        }
        if (j.at("directed").get<bool>() != instance.directed) {
            fail(ErrorKind::invalid_input,
                 "directed flag contradicts the pair list key");
        }
    }
    const char* pair_field = instance.directed ? "arcs" : "edges";
    instance.pairs = read_pairs(j, pair_field, instance.n);
    reject_duplicates(instance.pairs, pair_field, instance.directed);
    if (j.contains("demands")) {
        instance.demands = read_values(j.at("demands"), "demands", instance.n);
    }
    if (j.contains("capacities")) {
        instance.capacities = read_values(j.at("capacities"), "capacities", instance.n);
    }
    if (j.contains("order_arcs")) {
        if (instance.directed) {
            fail(ErrorKind::invalid_input,
                 "order_arcs: only undirected instances carry an explicit order");
        }
        instance.order_arcs = read_pairs(j, "order_arcs", instance.n);
        reject_duplicates(*instance.order_arcs, "order_arcs", /*directed=*/true);
    }
    static const char* known[] = {"n", "arcs", "edges", "directed", "demands", "capacities",
                                  "order_arcs"};
    for (const auto& [key, value] : j.items()) {
        if (std::find_if(std::begin(known), std::end(known),
                         [&](const char* k) { return key == k; }) == std::end(known)) {
            fail(ErrorKind::invalid_input, "unknown field \"" + key + "\"");
        }
    }
    return instance;
}

InstanceFile parse_instance_text(std::string_view text) {
    InstanceFile instance;
    std::istringstream stream{std::string(text)};
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(stream, line)) {
        ++line_no;
        std::string locus = "line " + std::to_string(line_no);
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        if (!header_seen) {
            std::string kind;
            if (!(fields >> kind)) continue;  // blank or comment line
            long long n = -1;
            if ((kind != "graph" && kind != "digraph") || !(fields >> n) || n < 0 ||
                n > kMaxVertices) {
                fail(ErrorKind::invalid_input,
                     locus + ": expected header \"graph N\" or \"digraph N\"");
            }
            std::string extra;
            if (fields >> extra) {
                fail(ErrorKind::invalid_input, locus + ": trailing tokens after the header");
            }
            instance.directed = kind == "digraph";
            instance.n = static_cast<int>(n);
            header_seen = true;
            continue;
        }
        long long a, b;
        if (!(fields >> a)) continue;  // blank or comment line
        if (!(fields >> b)) {
            fail(ErrorKind::invalid_input, locus + ": expected two endpoints");
        }
        std::string extra;
        if (fields >> extra) {
            fail(ErrorKind::invalid_input, locus + ": trailing tokens after the pair");
        }
        if (a < 0 || a >= instance.n || b < 0 || b >= instance.n) {
            fail(ErrorKind::invalid_input,
                 locus + ": endpoint out of range (n=" + std::to_string(instance.n) + ")");
        }
        if (a == b) {
            fail(ErrorKind::invalid_input, locus + ": loop at vertex " + std::to_string(a));
        }
        instance.pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    if (!header_seen) {
        fail(ErrorKind::invalid_input, "line 1: expected header \"graph N\" or \"digraph N\"");
    }
    reject_duplicates(instance.pairs, instance.directed ? "arcs" : "edges", instance.directed);
    return instance;
}

json pairs_to_json(std::vector<std::pair<int, int>> pairs, bool directed) {
    if (!directed) {
        for (auto& [a, b] : pairs) {
            if (a > b) std::swap(a, b);
        }
    }
    std::sort(pairs.begin(), pairs.end());
    json list = json::array();
    for (auto [a, b] : pairs) list.push_back(json::array({a, b}));
    return list;
}

}  // namespace

InstanceFile parse_instance(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        return parse_instance_json(text);
    }
    return parse_instance_text(text);
}

std::string emit_instance(const InstanceFile& instance) {
    json j;
    j["n"] = instance.n;
    j["directed"] = instance.directed;
    j[instance.directed ? "arcs" : "edges"] = pairs_to_json(instance.pairs, instance.directed);
    if (instance.demands) j["demands"] = *instance.demands;
    if (instance.capacities) j["capacities"] = *instance.capacities;
    if (instance.order_arcs) j["order_arcs"] = pairs_to_json(*instance.order_arcs, true);
    return j.dump();
}

Graph to_graph(const InstanceFile& instance) {
    if (instance.directed) {
        fail(ErrorKind::invalid_input, "expected an undirected instance");
    }
    return Graph(instance.n, instance.pairs);
}

Digraph to_digraph(const InstanceFile& instance) {
    if (!instance.directed) {
        fail(ErrorKind::invalid_input, "expected a directed instance");
    }
    return Digraph(instance.n, instance.pairs);
}

PosetGraph to_poset(const InstanceFile& instance) {
    if (instance.directed) {
        Digraph d(instance.n, instance.pairs);
        return PosetGraph(underlying_graph(d), d);
    }
    Digraph order(instance.n,
                  instance.order_arcs ? *instance.order_arcs
                                      : std::vector<std::pair<int, int>>{});
    return PosetGraph(Graph(instance.n, instance.pairs), order);
}

Representation parse_representation(std::string_view text) {
    json j = parse_json(text, "representation");
    if (!j.is_object() || !j.contains("colors") || !j.contains("assignment")) {
        fail(ErrorKind::invalid_input,
             "representation: expected an object with \"colors\" and \"assignment\"");
    }
    if (!j.at("colors").is_number_integer() || j.at("colors").get<long long>() < 0 ||
        j.at("colors").get<long long>() > kMaxValue) {
        fail(ErrorKind::invalid_input, "colors: expected an integer in [0, " +
                                           std::to_string(kMaxValue) + "]");
    }
    int universe = j.at("colors").get<int>();
    const json& rows = j.at("assignment");
    if (!rows.is_array()) {
        fail(ErrorKind::invalid_input, "assignment: expected an array of color arrays");
    }
    std::vector<std::vector<int>> assignment;
    assignment.reserve(rows.size());
    for (std::size_t v = 0; v < rows.size(); ++v) {
        std::string locus = "assignment[" + std::to_string(v) + "]";
        if (!rows[v].is_array()) {
            fail(ErrorKind::invalid_input, locus + ": expected an array of colors");
        }
        std::vector<int> set;
        set.reserve(rows[v].size());
        for (std::size_t i = 0; i < rows[v].size(); ++i) {
            if (!rows[v][i].is_number_integer()) {
                fail(ErrorKind::invalid_input,
                     locus + "[" + std::to_string(i) + "]: expected an integer color");
            }
            long long c = rows[v][i].get<long long>();
            if (c < 0 || c >= universe) {
                fail(ErrorKind::invalid_input,
                     locus + "[" + std::to_string(i) + "]: color out of range");
            }
            set.push_back(static_cast<int>(c));
        }
        std::sort(set.begin(), set.end());
        if (std::adjacent_find(set.begin(), set.end()) != set.end()) {
            fail(ErrorKind::invalid_input, locus + ": duplicate color");
        }
        assignment.push_back(std::move(set));
    }
    return Representation(universe, std::move(assignment));
}

std::string emit_representation(const Representation& r) {
    json j;
    j["colors"] = r.universe_size();
    json rows = json::array();
    for (Vertex v = 0; v < r.vertex_count(); ++v) rows.push_back(r.colors(v));
    j["assignment"] = std::move(rows);
    return j.dump();
}

std::vector<int> parse_vertex_values(std::string_view text, int expected_size) {
    json j = parse_json(text, "values");
    return read_values(j, "values", expected_size);
}

std::string emit_certificate(const std::string& kind, const Graph& g, long long value,
                             const VertexFunction& capacity, const BMatching& matching) {
    json j;
    j["kind"] = kind;
    j["value"] = value;
    j["pair_count"] = g.edge_count();
    j["capacities"] = capacity.values();
    j["capacity_total"] = capacity.total();
    j["matching_weight"] = matching.weight();
    json rows = json::array();
    for (int e = 0; e < g.edge_count(); ++e) {
        int x = matching.multiplicities()[static_cast<std::size_t>(e)];
        if (x == 0) continue;
        const Edge& edge = g.edges()[static_cast<std::size_t>(e)];
        rows.push_back(json::array({edge.u, edge.v, x}));
    }
    j["matching"] = std::move(rows);
    if (is_bipartite(g)) {
        j["cover"] = bipartite_cover_certificate(g, capacity, matching);
    }
    return j.dump();
}

std::string export_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

std::string export_dot(const Digraph& d) {
    std::ostringstream out;
    out << "digraph G {\n";
    for (Vertex v = 0; v < d.vertex_count(); ++v) out << "  " << v << ";\n";
    for (const Arc& a : d.arcs()) out << "  " << a.from << " -> " << a.to << ";\n";
    out << "}\n";
    return out.str();
}

std::string export_dot_condensation(const Digraph& d) {
    auto scc = scc_decomposition(d);
    std::ostringstream out;
    out << "digraph condensation {\n";
    for (std::size_t c = 0; c < scc.components.size(); ++c) {
        out << "  " << c << " [label=\"{";
        for (std::size_t i = 0; i < scc.components[c].size(); ++i) {
            if (i > 0) out << ",";
            out << scc.components[c][i];
        }
        out << "}\"];\n";
    }
    std::vector<std::pair<int, int>> links;
    for (const Arc& a : d.arcs()) {
        int cu = scc.component_of[static_cast<std::size_t>(a.from)];
        int cv = scc.component_of[static_cast<std::size_t>(a.to)];
        if (cu != cv) links.emplace_back(cu, cv);
    }
    std::sort(links.begin(), links.end());
    links.erase(std::unique(links.begin(), links.end()), links.end());
    for (auto [cu, cv] : links) out << "  " << cu << " -> " << cv << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace dinrep
