#pragma once

#include <vector>

#include "dinrep/graph.hpp"

namespace dinrep {

// An undirected graph paired with a DAG over the same vertices. The DAG's
// reachability defines the partial order: u precedes v iff there is a
// directed u,v-path. The transitive closure is computed once at
// construction and the value is immutable afterwards.
class PosetGraph {
public:
    PosetGraph(Graph graph, Digraph order_dag);

    const Graph& graph() const { return graph_; }
    const Digraph& order_dag() const { return order_; }
    int vertex_count() const { return graph_.vertex_count(); }

    // Strict order: u != v and a directed u,v-path exists.
    bool precedes(Vertex u, Vertex v) const;

    // Vertices with no strict predecessor, ascending.
    std::vector<Vertex> minimal_elements() const;

private:
    Graph graph_;
    Digraph order_;
    std::vector<std::vector<bool>> reach_;
};

}  // namespace dinrep
