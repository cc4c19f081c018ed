#include "dinrep/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace dinrep {

namespace {

void check_endpoint(Vertex x, int n, const char* what) {
    if (x < 0 || x >= n) {
        fail(ErrorKind::invalid_input,
             std::string(what) + " endpoint " + std::to_string(x) +
                 " out of range (n=" + std::to_string(n) + ")");
    }
}

}  // namespace

Graph::Graph(int vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edge_pairs)
    : n_(vertex_count) {
    if (n_ < 0) fail(ErrorKind::invalid_input, "negative vertex count");
    edges_.reserve(edge_pairs.size());
    for (auto [a, b] : edge_pairs) {
        check_endpoint(a, n_, "edge");
        check_endpoint(b, n_, "edge");
        if (a == b) {
            fail(ErrorKind::invalid_input, "loop at vertex " + std::to_string(a));
        }
        edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i] == edges_[i - 1]) {
            fail(ErrorKind::invalid_input,
                 "duplicate edge {" + std::to_string(edges_[i].u) + "," +
                     std::to_string(edges_[i].v) + "}");
        }
    }
    adj_.resize(static_cast<std::size_t>(n_));
    incident_.resize(static_cast<std::size_t>(n_));
    for (int e = 0; e < edge_count(); ++e) {
        adj_[static_cast<std::size_t>(edges_[e].u)].push_back(edges_[e].v);
        adj_[static_cast<std::size_t>(edges_[e].v)].push_back(edges_[e].u);
        incident_[static_cast<std::size_t>(edges_[e].u)].push_back(e);
        incident_[static_cast<std::size_t>(edges_[e].v)].push_back(e);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(Vertex v) const {
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u == v) return false;
    const auto& list = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

int Graph::edge_id(Vertex u, Vertex v) const {
    Edge e{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || !(*it == e)) return -1;
    return static_cast<int>(it - edges_.begin());
}

const std::vector<int>& Graph::incident_edges(Vertex v) const {
    return incident_[static_cast<std::size_t>(v)];
}

Digraph::Digraph(int vertex_count, const std::vector<std::pair<Vertex, Vertex>>& arc_pairs)
    : n_(vertex_count) {
    if (n_ < 0) fail(ErrorKind::invalid_input, "negative vertex count");
    arcs_.reserve(arc_pairs.size());
    for (auto [a, b] : arc_pairs) {
        check_endpoint(a, n_, "arc");
        check_endpoint(b, n_, "arc");
        if (a == b) {
            fail(ErrorKind::invalid_input, "loop at vertex " + std::to_string(a));
        }
        arcs_.push_back(Arc{a, b});
    }
    std::sort(arcs_.begin(), arcs_.end());
    for (std::size_t i = 1; i < arcs_.size(); ++i) {
        if (arcs_[i] == arcs_[i - 1]) {
            fail(ErrorKind::invalid_input,
                 "duplicate arc (" + std::to_string(arcs_[i].from) + "," +
                     std::to_string(arcs_[i].to) + ")");
        }
    }
    out_.resize(static_cast<std::size_t>(n_));
    in_.resize(static_cast<std::size_t>(n_));
    und_.resize(static_cast<std::size_t>(n_));
    for (const Arc& a : arcs_) {
        out_[static_cast<std::size_t>(a.from)].push_back(a.to);
        in_[static_cast<std::size_t>(a.to)].push_back(a.from);
        und_[static_cast<std::size_t>(a.from)].push_back(a.to);
        und_[static_cast<std::size_t>(a.to)].push_back(a.from);
    }
    for (auto& list : out_) std::sort(list.begin(), list.end());
    for (auto& list : in_) std::sort(list.begin(), list.end());
    for (auto& list : und_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
}

const std::vector<Vertex>& Digraph::out_neighbors(Vertex v) const {
    return out_[static_cast<std::size_t>(v)];
}

const std::vector<Vertex>& Digraph::in_neighbors(Vertex v) const {
    return in_[static_cast<std::size_t>(v)];
}

bool Digraph::has_arc(Vertex from, Vertex to) const {
    const auto& list = out_[static_cast<std::size_t>(from)];
    return std::binary_search(list.begin(), list.end(), to);
}

bool Digraph::adjacent(Vertex u, Vertex v) const {
    if (u == v) return false;
    const auto& list = und_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

int Digraph::degree(Vertex v) const {
    return static_cast<int>(und_[static_cast<std::size_t>(v)].size());
}

Graph underlying_graph(const Digraph& d) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(d.arcs().size());
    for (const Arc& a : d.arcs()) {
        if (a.from < a.to || !d.has_arc(a.to, a.from)) {
            pairs.emplace_back(a.from, a.to);
        }
        // the symmetric partner of a digon is emitted once, from its (u,v)
        // orientation with u < v
    }
    return Graph(d.vertex_count(), pairs);
}

VertexFunction::VertexFunction(std::vector<int> values) : values_(std::move(values)) {
    for (std::size_t v = 0; v < values_.size(); ++v) {
        if (values_[v] < 0) {
            fail(ErrorKind::invalid_input, "negative value at vertex " + std::to_string(v));
        }
    }
}

VertexFunction VertexFunction::zeros(int n) {
    return VertexFunction(std::vector<int>(static_cast<std::size_t>(n), 0));
}

VertexFunction VertexFunction::constant(int n, int value) {
    return VertexFunction(std::vector<int>(static_cast<std::size_t>(n), value));
}

long long VertexFunction::total() const {
    return std::accumulate(values_.begin(), values_.end(), 0LL);
}

}  // namespace dinrep
