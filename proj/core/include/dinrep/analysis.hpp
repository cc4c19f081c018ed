#pragma once

#include <optional>
#include <vector>

#include "dinrep/graph.hpp"

namespace dinrep {

// Topological order, smallest available id first; nullopt when d has a cycle.
std::optional<std::vector<Vertex>> topological_order(const Digraph& d);

// Strongly connected components. components are listed in a topological
// order of the condensation (ties broken by smallest member id), each with
// its members ascending; component_of[v] indexes into components.
struct SccDecomposition {
    std::vector<int> component_of;
    std::vector<std::vector<Vertex>> components;
};
SccDecomposition scc_decomposition(const Digraph& d);

// The unique Hamiltonian path of a DAG, or nullopt when none exists. A DAG
// has a Hamiltonian path exactly when consecutive vertices of its (then
// unique) topological order are joined by arcs. Throws not_a_dag on cyclic
// input so callers can tell the two negative answers apart.
std::optional<std::vector<Vertex>> hamiltonian_path(const Digraph& d);

struct Triangle {
    Vertex a, b, c;
};

// First triangle in (edge id, third vertex) scan order, nullopt if none.
std::optional<Triangle> find_triangle(const Graph& g);
bool is_triangle_free(const Graph& g);

// True when every neighborhood induces a disjoint union of complete graphs.
bool is_diamond_free(const Graph& g);

// All maximal cliques of a diamond-free graph, sorted lexicographically.
// Every edge lies in exactly one clique of size >= 2; isolated vertices
// appear as singletons. Throws not_diamond_free.
std::vector<std::vector<Vertex>> maximal_cliques_diamond_free(const Graph& g);

// Number of connected components of the subgraph induced by N(v). For a
// diamond-free graph this is the largest independent set inside the
// neighborhood. Throws not_diamond_free.
int alpha_degree(const Graph& g, Vertex v);

// All independence degrees at once; validates diamond-freeness only once.
std::vector<int> alpha_degrees(const Graph& g);

// Minimum partition of a DAG's vertices into chains of its reachability
// order (minimum path cover on the transitive closure, via bipartite
// matching). Chains are listed source-to-sink. Throws not_a_dag.
std::vector<std::vector<Vertex>> min_chain_cover(const Digraph& d);

struct Coloring {
    int num_classes = 0;
    std::vector<int> class_of;
};

// Proper coloring: vertices in id order, smallest feasible class. Uses at
// most max-degree + 1 classes.
Coloring greedy_coloring(const Graph& g);

// Side assignment of a bipartition (0/1 per vertex, BFS from the smallest
// vertex of each component), or nullopt when g has an odd cycle.
std::optional<std::vector<int>> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

// reach[u][v] is true iff v is reachable from u (trivially true for u == v).
std::vector<std::vector<bool>> reachability(const Digraph& d);

}  // namespace dinrep
