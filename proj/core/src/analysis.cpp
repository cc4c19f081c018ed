#include "dinrep/analysis.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

namespace dinrep {

std::optional<std::vector<Vertex>> topological_order(const Digraph& d) {
    const int n = d.vertex_count();
    std::vector<int> indegree(static_cast<std::size_t>(n), 0);
    for (const Arc& a : d.arcs()) ++indegree[static_cast<std::size_t>(a.to)];
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
    for (Vertex v = 0; v < n; ++v) {
        if (indegree[static_cast<std::size_t>(v)] == 0) ready.push(v);
    }
    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(n));
    while (!ready.empty()) {
        Vertex v = ready.top();
        ready.pop();
        order.push_back(v);
        for (Vertex w : d.out_neighbors(v)) {
            if (--indegree[static_cast<std::size_t>(w)] == 0) ready.push(w);
        }
    }
    if (static_cast<int>(order.size()) != n) return std::nullopt;
    return order;
}

SccDecomposition scc_decomposition(const Digraph& d) {
    const int n = d.vertex_count();
    // Tarjan
    std::vector<int> index(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
    std::vector<Vertex> stack;
    std::vector<int> raw_comp(static_cast<std::size_t>(n), -1);
    int next_index = 0;
    int raw_count = 0;

    std::function<void(Vertex)> strongconnect = [&](Vertex v) {
        index[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = next_index++;
        stack.push_back(v);
        on_stack[static_cast<std::size_t>(v)] = true;
        for (Vertex w : d.out_neighbors(v)) {
            if (index[static_cast<std::size_t>(w)] == -1) {
                strongconnect(w);
                low[static_cast<std::size_t>(v)] =
                    std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
            } else if (on_stack[static_cast<std::size_t>(w)]) {
                low[static_cast<std::size_t>(v)] =
                    std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
            }
        }
        if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
            while (true) {
                Vertex w = stack.back();
                stack.pop_back();
                on_stack[static_cast<std::size_t>(w)] = false;
                raw_comp[static_cast<std::size_t>(w)] = raw_count;
                if (w == v) break;
            }
            ++raw_count;
        }
    };
    for (Vertex v = 0; v < n; ++v) {
        if (index[static_cast<std::size_t>(v)] == -1) strongconnect(v);
    }

    // order the components topologically over the condensation, smallest
    // member id first among the available ones
    std::vector<std::vector<int>> cond_out(static_cast<std::size_t>(raw_count));
    std::vector<int> cond_indegree(static_cast<std::size_t>(raw_count), 0);
    for (const Arc& a : d.arcs()) {
        int cu = raw_comp[static_cast<std::size_t>(a.from)];
        int cv = raw_comp[static_cast<std::size_t>(a.to)];
        if (cu != cv) cond_out[static_cast<std::size_t>(cu)].push_back(cv);
    }
    for (auto& list : cond_out) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        for (int c : list) ++cond_indegree[static_cast<std::size_t>(c)];
    }
    std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(raw_count));
    for (Vertex v = 0; v < n; ++v) {
        members[static_cast<std::size_t>(raw_comp[static_cast<std::size_t>(v)])].push_back(v);
    }
    // key by smallest member id; members are collected in ascending order
    using Key = std::pair<Vertex, int>;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> ready;
    for (int c = 0; c < raw_count; ++c) {
        if (cond_indegree[static_cast<std::size_t>(c)] == 0) {
            ready.emplace(members[static_cast<std::size_t>(c)].front(), c);
        }
    }
    SccDecomposition result;
    result.component_of.assign(static_cast<std::size_t>(n), -1);
    result.components.reserve(static_cast<std::size_t>(raw_count));
    while (!ready.empty()) {
        auto [key, c] = ready.top();
        ready.pop();
        int pos = static_cast<int>(result.components.size());
        for (Vertex v : members[static_cast<std::size_t>(c)]) {
            result.component_of[static_cast<std::size_t>(v)] = pos;
        }
        result.components.push_back(std::move(members[static_cast<std::size_t>(c)]));
        for (int next : cond_out[static_cast<std::size_t>(c)]) {
            if (--cond_indegree[static_cast<std::size_t>(next)] == 0) {
                ready.emplace(members[static_cast<std::size_t>(next)].front(), next);
            }
        }
    }
    return result;
}

std::optional<std::vector<Vertex>> hamiltonian_path(const Digraph& d) {
    auto order = topological_order(d);
    if (!order) fail(ErrorKind::not_a_dag, "hamiltonian_path requires an acyclic digraph");
    for (std::size_t i = 0; i + 1 < order->size(); ++i) {
        if (!d.has_arc((*order)[i], (*order)[i + 1])) return std::nullopt;
    }
    return order;
}

std::optional<Triangle> find_triangle(const Graph& g) {
    for (const Edge& e : g.edges()) {
        const auto& nu = g.neighbors(e.u);
        const auto& nv = g.neighbors(e.v);
        // sorted-list intersection
        std::size_t i = 0, j = 0;
        while (i < nu.size() && j < nv.size()) {
            if (nu[i] < nv[j]) {
                ++i;
            } else if (nu[i] > nv[j]) {
                ++j;
            } else {
                Vertex w = nu[i];
                Vertex a = std::min({e.u, e.v, w});
                Vertex c = std::max({e.u, e.v, w});
                Vertex b = e.u + e.v + w - a - c;
                return Triangle{a, b, c};
            }
        }
    }
    return std::nullopt;
}

bool is_triangle_free(const Graph& g) { return !find_triangle(g).has_value(); }

namespace {

// Connected components of the subgraph induced by N(v), with a flag telling
// whether every component is complete.
struct NeighborhoodShape {
    int component_count = 0;
    bool all_complete = true;
};

NeighborhoodShape neighborhood_shape(const Graph& g, Vertex v) {
    const auto& nbrs = g.neighbors(v);
    const int k = static_cast<int>(nbrs.size());
    std::vector<int> parent(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) parent[static_cast<std::size_t>(i)] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    int induced_edges = 0;
    int components = k;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (!g.has_edge(nbrs[static_cast<std::size_t>(i)], nbrs[static_cast<std::size_t>(j)]))
                continue;
            ++induced_edges;
            int ri = find(i), rj = find(j);
            if (ri != rj) {
                parent[static_cast<std::size_t>(ri)] = rj;
                --components;
            }
        }
    }
    NeighborhoodShape shape;
    shape.component_count = components;
    // a disjoint union of complete graphs has sum over components of
    // size*(size-1)/2 induced edges
    std::vector<int> size(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i) ++size[static_cast<std::size_t>(find(i))];
    long long expected = 0;
    for (int s : size) expected += static_cast<long long>(s) * (s - 1) / 2;
    shape.all_complete = (expected == induced_edges);
    return shape;
}

void require_diamond_free(const Graph& g, const char* op) {
    if (!is_diamond_free(g)) {
        fail(ErrorKind::not_diamond_free, std::string(op) + " requires a diamond-free graph");
    }
}

}  // namespace

bool is_diamond_free(const Graph& g) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!neighborhood_shape(g, v).all_complete) return false;
    }
    return true;
}

std::vector<std::vector<Vertex>> maximal_cliques_diamond_free(const Graph& g) {
    require_diamond_free(g, "maximal_cliques_diamond_free");
    std::vector<std::vector<Vertex>> cliques;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto& nbrs = g.neighbors(v);
        if (nbrs.empty()) {
            cliques.push_back({v});
            continue;
        }
        // every maximal clique containing v is v plus one complete component
        // of its neighborhood
        std::vector<bool> used(nbrs.size(), false);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            if (used[i]) continue;
            std::vector<Vertex> clique{v};
            for (std::size_t j = i; j < nbrs.size(); ++j) {
                if (j == i || g.has_edge(nbrs[i], nbrs[j])) {
                    used[j] = true;
                    clique.push_back(nbrs[j]);
                }
            }
            std::sort(clique.begin(), clique.end());
            cliques.push_back(std::move(clique));
        }
    }
    std::sort(cliques.begin(), cliques.end());
    cliques.erase(std::unique(cliques.begin(), cliques.end()), cliques.end());
    return cliques;
}

int alpha_degree(const Graph& g, Vertex v) {
    require_diamond_free(g, "alpha_degree");
    return neighborhood_shape(g, v).component_count;
}

std::vector<int> alpha_degrees(const Graph& g) {
    require_diamond_free(g, "alpha_degrees");
    std::vector<int> degrees(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        degrees[static_cast<std::size_t>(v)] = neighborhood_shape(g, v).component_count;
    }
    return degrees;
}

std::vector<std::vector<bool>> reachability(const Digraph& d) {
    const int n = d.vertex_count();
    std::vector<std::vector<bool>> reach(
        static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (Vertex s = 0; s < n; ++s) {
        std::vector<Vertex> stack{s};
        reach[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)] = true;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : d.out_neighbors(v)) {
                if (!reach[static_cast<std::size_t>(s)][static_cast<std::size_t>(w)]) {
                    reach[static_cast<std::size_t>(s)][static_cast<std::size_t>(w)] = true;
                    stack.push_back(w);
                }
            }
        }
    }
    return reach;
}

std::vector<std::vector<Vertex>> min_chain_cover(const Digraph& d) {
    if (!topological_order(d)) {
        fail(ErrorKind::not_a_dag, "min_chain_cover requires an acyclic digraph");
    }
    const int n = d.vertex_count();
    auto reach = reachability(d);
    // minimum path cover of the closure: match each vertex to a strict
    // successor; unmatched-as-target vertices start the chains
    std::vector<int> match_to(static_cast<std::size_t>(n), -1);    // successor chosen for u
    std::vector<int> match_from(static_cast<std::size_t>(n), -1);  // predecessor matched to v
    std::vector<bool> visited;
    std::function<bool(Vertex)> augment = [&](Vertex u) {
        for (Vertex v = 0; v < n; ++v) {
            if (u == v || !reach[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)])
                continue;
            if (visited[static_cast<std::size_t>(v)]) continue;
            visited[static_cast<std::size_t>(v)] = true;
            if (match_from[static_cast<std::size_t>(v)] == -1 ||
                augment(match_from[static_cast<std::size_t>(v)])) {
                match_to[static_cast<std::size_t>(u)] = v;
                match_from[static_cast<std::size_t>(v)] = u;
                return true;
            }
        }
        return false;
    };
    for (Vertex u = 0; u < n; ++u) {
        visited.assign(static_cast<std::size_t>(n), false);
        augment(u);
    }
    std::vector<std::vector<Vertex>> chains;
    for (Vertex v = 0; v < n; ++v) {
        if (match_from[static_cast<std::size_t>(v)] != -1) continue;
        std::vector<Vertex> chain;
        for (Vertex w = v; w != -1; w = match_to[static_cast<std::size_t>(w)]) {
            chain.push_back(w);
        }
        chains.push_back(std::move(chain));
    }
    return chains;
}

Coloring greedy_coloring(const Graph& g) {
    const int n = g.vertex_count();
    Coloring coloring;
    coloring.class_of.assign(static_cast<std::size_t>(n), -1);
    for (Vertex v = 0; v < n; ++v) {
        std::vector<bool> taken(static_cast<std::size_t>(g.degree(v)) + 1, false);
        for (Vertex w : g.neighbors(v)) {
            int c = coloring.class_of[static_cast<std::size_t>(w)];
            if (c >= 0 && c < static_cast<int>(taken.size())) taken[static_cast<std::size_t>(c)] = true;
        }
        int c = 0;
        while (taken[static_cast<std::size_t>(c)]) ++c;
        coloring.class_of[static_cast<std::size_t>(v)] = c;
        coloring.num_classes = std::max(coloring.num_classes, c + 1);
    }
    return coloring;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    for (Vertex s = 0; s < n; ++s) {
        if (side[static_cast<std::size_t>(s)] != -1) continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::queue<Vertex> queue;
        queue.push(s);
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop();
            for (Vertex w : g.neighbors(v)) {
                if (side[static_cast<std::size_t>(w)] == -1) {
                    side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(v)];
                    queue.push(w);
                } else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

}  // namespace dinrep
