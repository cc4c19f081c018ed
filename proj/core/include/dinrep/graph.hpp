#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "dinrep/error.hpp"

namespace dinrep {

using Vertex = int;

// Undirected edge, normalized to u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Arc {
    Vertex from = 0;
    Vertex to = 0;
    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Simple undirected graph over dense vertex ids 0..n-1. Immutable after
// construction. Edges are stored sorted, so the position of an edge in
// edges() is a stable id used everywhere multiplicities or colors are
// attached to edges.
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edge_pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<Vertex>& neighbors(Vertex v) const;
    int degree(Vertex v) const;
    bool has_edge(Vertex u, Vertex v) const;

    // Position of {u,v} in edges(), or -1 when absent.
    int edge_id(Vertex u, Vertex v) const;
    // Ids of the edges incident with v, ascending.
    const std::vector<int>& incident_edges(Vertex v) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::vector<int>> incident_;
};

// Simple digraph: no loops, no duplicate arcs; a pair of opposite arcs is
// allowed. Arcs are stored sorted.
class Digraph {
public:
    Digraph() = default;
    Digraph(int vertex_count, const std::vector<std::pair<Vertex, Vertex>>& arc_pairs);

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }

    const std::vector<Vertex>& out_neighbors(Vertex v) const;
    const std::vector<Vertex>& in_neighbors(Vertex v) const;
    bool has_arc(Vertex from, Vertex to) const;

    // Adjacency in either direction.
    bool adjacent(Vertex u, Vertex v) const;
    // Number of vertices adjacent to v (degree in the underlying graph).
    int degree(Vertex v) const;

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<Vertex>> out_, in_;
    std::vector<std::vector<Vertex>> und_;  // merged, deduplicated
};

// Two distinct vertices are adjacent in the result iff they are adjacent in
// d in either direction.
Graph underlying_graph(const Digraph& d);

// Dense nonnegative integer labelling of the vertices. Serves as demand,
// capacity and weight function.
class VertexFunction {
public:
    VertexFunction() = default;
    explicit VertexFunction(std::vector<int> values);

    static VertexFunction zeros(int n);
    static VertexFunction constant(int n, int value);

    int size() const { return static_cast<int>(values_.size()); }
    int operator[](Vertex v) const { return values_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& values() const { return values_; }
    long long total() const;

    friend bool operator==(const VertexFunction&, const VertexFunction&) = default;

private:
    std::vector<int> values_;
};

}  // namespace dinrep
