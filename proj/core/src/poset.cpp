#include "dinrep/poset.hpp"

#include <utility>

#include "dinrep/analysis.hpp"

namespace dinrep {

PosetGraph::PosetGraph(Graph graph, Digraph order_dag)
    : graph_(std::move(graph)), order_(std::move(order_dag)) {
    if (graph_.vertex_count() != order_.vertex_count()) {
        fail(ErrorKind::dimension_mismatch, "graph and order DAG disagree on the vertex count");
    }
    if (!topological_order(order_)) {
        fail(ErrorKind::not_a_dag, "order digraph has a cycle");
    }
    reach_ = reachability(order_);
}

bool PosetGraph::precedes(Vertex u, Vertex v) const {
    if (u == v) return false;
    return reach_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
}

std::vector<Vertex> PosetGraph::minimal_elements() const {
    std::vector<Vertex> minimal;
    for (Vertex v = 0; v < vertex_count(); ++v) {
        if (order_.in_neighbors(v).empty()) minimal.push_back(v);
    }
    return minimal;
}

}  // namespace dinrep
