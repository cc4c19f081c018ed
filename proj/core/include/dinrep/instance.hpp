#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dinrep/construct.hpp"
#include "dinrep/graph.hpp"
#include "dinrep/matching.hpp"
#include "dinrep/poset.hpp"
#include "dinrep/representation.hpp"

namespace dinrep {

// On-disk instance: a graph or digraph plus optional demand/capacity rows
// and an optional order DAG (undirected instances only). Parsing is total:
// every violation raises invalid_input with a field or line locus.
struct InstanceFile {
    bool directed = false;
    int n = 0;
    std::vector<std::pair<int, int>> pairs;  // arcs when directed, edges otherwise
    std::optional<std::vector<int>> demands;
    std::optional<std::vector<int>> capacities;
    std::optional<std::vector<std::pair<int, int>>> order_arcs;

    friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

// Accepts the canonical JSON object or, for quick entry, a plain edge list:
//   # comment
//   digraph 3     (or: graph 3)
//   0 1
//   1 2
InstanceFile parse_instance(std::string_view text);

// Canonical single-line JSON: keys sorted, pair lists ascending. Emission
// is idempotent and emit/parse round-trips the canonical form byte for byte.
std::string emit_instance(const InstanceFile& instance);

Graph to_graph(const InstanceFile& instance);
Digraph to_digraph(const InstanceFile& instance);
// Undirected instance + order_arcs (or an empty order when absent); a
// directed instance is interpreted as its underlying graph ordered by
// reachability.
PosetGraph to_poset(const InstanceFile& instance);

Representation parse_representation(std::string_view text);
std::string emit_representation(const Representation& r);

// Plain JSON integer array, e.g. "[0,1,2]"; used for demand/capacity rows
// passed on the command line.
std::vector<int> parse_vertex_values(std::string_view text, int expected_size);

// Everything a third party needs to re-check the value arithmetic without
// the solver: capacities, matching multiplicities, the value, and the dual
// cover when the graph is bipartite.
std::string emit_certificate(const std::string& kind, const Graph& g, long long value,
                             const VertexFunction& capacity, const BMatching& matching);

std::string export_dot(const Graph& g);
std::string export_dot(const Digraph& d);
std::string export_dot_condensation(const Digraph& d);

}  // namespace dinrep
