#include "dinrep/construct.hpp"

#include <algorithm>
#include <string>

namespace dinrep {

bool weak_rep_admissible(const Digraph& d) {
    auto scc = scc_decomposition(d);
    for (const Arc& a : d.arcs()) {
        if (scc.component_of[static_cast<std::size_t>(a.from)] ==
                scc.component_of[static_cast<std::size_t>(a.to)] &&
            !d.has_arc(a.to, a.from)) {
            return false;
        }
    }
    return true;
}

Representation construct_wdin(const Digraph& d) {
    if (!weak_rep_admissible(d)) {
        fail(ErrorKind::not_admissible,
             "some strongly connected component is not symmetric");
    }
    auto scc = scc_decomposition(d);
    const int n = d.vertex_count();
    std::vector<std::vector<int>> phi(static_cast<std::size_t>(n));
    int next_color = 0;

    // edge-color intersection representation inside each component,
    // components use disjoint palettes
    for (const auto& component : scc.components) {
        for (std::size_t i = 0; i < component.size(); ++i) {
            for (std::size_t j = i + 1; j < component.size(); ++j) {
                if (!d.adjacent(component[i], component[j])) continue;
                phi[static_cast<std::size_t>(component[i])].push_back(next_color);
                phi[static_cast<std::size_t>(component[j])].push_back(next_color);
                ++next_color;
            }
        }
    }
    // a fresh color per cross-component arc
    for (const Arc& a : d.arcs()) {
        if (scc.component_of[static_cast<std::size_t>(a.from)] ==
            scc.component_of[static_cast<std::size_t>(a.to)]) {
            continue;
        }
        phi[static_cast<std::size_t>(a.from)].push_back(next_color);
        phi[static_cast<std::size_t>(a.to)].push_back(next_color);
        ++next_color;
    }
    // pad to strictly increasing per-component levels
    long long level = -1;
    bool first = true;
    for (const auto& component : scc.components) {
        long long largest = 0;
        for (Vertex v : component) {
            largest = std::max(largest,
                               static_cast<long long>(phi[static_cast<std::size_t>(v)].size()));
        }
        level = first ? largest : std::max(level + 1, largest);
        first = false;
        for (Vertex v : component) {
            while (static_cast<long long>(phi[static_cast<std::size_t>(v)].size()) < level) {
                phi[static_cast<std::size_t>(v)].push_back(next_color++);
            }
        }
    }
    return Representation(next_color, std::move(phi));
}

namespace {

void check_demand_size(const Graph& g, const VertexFunction& ell) {
    if (ell.size() != g.vertex_count()) {
        fail(ErrorKind::dimension_mismatch, "demand function does not fit the graph");
    }
}

void require_triangle_free(const Graph& g, const char* op) {
    if (auto t = find_triangle(g)) {
        fail(ErrorKind::not_triangle_free,
             std::string(op) + " requires a triangle-free graph; found {" +
                 std::to_string(t->a) + "," + std::to_string(t->b) + "," + std::to_string(t->c) +
                 "}");
    }
}

}  // namespace

VertexFunction alpha_ranking(const PosetGraph& p) {
    const Graph& g = p.graph();
    if (!is_diamond_free(g)) {
        fail(ErrorKind::not_diamond_free, "alpha_ranking requires a diamond-free graph");
    }
    const int n = g.vertex_count();
    std::vector<int> adeg = alpha_degrees(g);
    std::vector<int> rank(static_cast<std::size_t>(n), 0);
    auto order = topological_order(p.order_dag());
    for (Vertex v : *order) {
        int value = adeg[static_cast<std::size_t>(v)];
        for (Vertex u : p.order_dag().in_neighbors(v)) {
            value = std::max(value, rank[static_cast<std::size_t>(u)] + 1);
        }
        rank[static_cast<std::size_t>(v)] = value;
    }
    return VertexFunction(std::move(rank));
}

VertexFunction capacity_from_demand(const Graph& g, const VertexFunction& ell) {
    check_demand_size(g, ell);
    std::vector<int> b(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        b[static_cast<std::size_t>(v)] = std::max(ell[v] - g.degree(v), 0);
    }
    return VertexFunction(std::move(b));
}

EllConstrainedResult ell_constrained_in_triangle_free(const Graph& g, const VertexFunction& ell) {
    check_demand_size(g, ell);
    require_triangle_free(g, "ell_constrained_in_triangle_free");
    const int n = g.vertex_count();
    const int m = g.edge_count();
    VertexFunction b = capacity_from_demand(g, ell);
    BMatching matching = max_weight_b_matching(g, b);
    const long long value = m + b.total() - matching.weight();

    std::vector<std::vector<int>> phi(static_cast<std::size_t>(n));
    // colors 0..m-1 are the edge colors
    for (Vertex v = 0; v < n; ++v) {
        phi[static_cast<std::size_t>(v)] = g.incident_edges(v);
    }
    int next_color = m;
    // shared extras: x(e) fresh colors on both endpoints of e
    for (int e = 0; e < m; ++e) {
        const Edge& edge = g.edges()[static_cast<std::size_t>(e)];
        for (int k = 0; k < matching.multiplicities()[static_cast<std::size_t>(e)]; ++k) {
            phi[static_cast<std::size_t>(edge.u)].push_back(next_color);
            phi[static_cast<std::size_t>(edge.v)].push_back(next_color);
            ++next_color;
        }
    }
    // private colors fill the rest of each vertex's capacity
    for (Vertex v = 0; v < n; ++v) {
        long long used = 0;
        for (int e : g.incident_edges(v)) {
            used += matching.multiplicities()[static_cast<std::size_t>(e)];
        }
        for (long long k = used; k < b[v]; ++k) {
            phi[static_cast<std::size_t>(v)].push_back(next_color++);
        }
    }
    if (next_color != value) {
        fail(ErrorKind::invalid_input, "internal error: universe size disagrees with the value");
    }
    EllConstrainedResult result;
    result.value = value;
    result.representation = Representation(next_color, std::move(phi));
    result.matching = std::move(matching);
    result.capacity = std::move(b);
    return result;
}

Representation normalize_to_poset_rep(const PosetGraph& p, const VertexFunction& ell,
                                      const Representation& r) {
    const Graph& g = p.graph();
    if (!is_diamond_free(g)) {
        fail(ErrorKind::not_diamond_free, "normalization requires a diamond-free graph");
    }
    if (!(ell == alpha_ranking(p))) {
        fail(ErrorKind::invalid_input, "demands are not the alpha-ranking of the ordered graph");
    }
    if (auto violation = verify_ell_in(g, ell, r)) {
        fail(ErrorKind::invalid_input,
             "input is not a valid demand-constrained representation (" +
                 to_string(violation->kind) + ")");
    }
    std::vector<std::vector<int>> phi = r.assignment();

    // saturation: one designated color per maximal clique, added to every
    // member that lacks it. Diamond-freeness keeps the color inside the
    // clique, so validity is preserved.
    std::vector<bool> clique_color(static_cast<std::size_t>(r.universe_size()), false);
    for (const auto& clique : maximal_cliques_diamond_free(g)) {
        if (clique.size() < 2) continue;
        const auto& set_u = phi[static_cast<std::size_t>(clique[0])];
        const auto& set_v = phi[static_cast<std::size_t>(clique[1])];
        int designated = -1;
        for (std::size_t i = 0, j = 0; i < set_u.size() && j < set_v.size();) {
            if (set_u[i] < set_v[j]) {
                ++i;
            } else if (set_u[i] > set_v[j]) {
                ++j;
            } else {
                designated = set_u[i];
                break;
            }
        }
        if (designated < 0 || clique_color[static_cast<std::size_t>(designated)]) {
            fail(ErrorKind::invalid_input, "internal error: no fresh shared clique color");
        }
        clique_color[static_cast<std::size_t>(designated)] = true;
        for (Vertex w : clique) {
            auto& set = phi[static_cast<std::size_t>(w)];
            auto it = std::lower_bound(set.begin(), set.end(), designated);
            if (it == set.end() || *it != designated) set.insert(it, designated);
        }
    }

    // trim every oversized vertex down to exactly ell(v) colors: all of its
    // clique colors plus the lowest-indexed extras
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto& set = phi[static_cast<std::size_t>(v)];
        if (static_cast<int>(set.size()) <= ell[v]) continue;
        std::vector<int> kept, extras;
        for (int c : set) {
            (clique_color[static_cast<std::size_t>(c)] ? kept : extras).push_back(c);
        }
        int wanted = ell[v] - static_cast<int>(kept.size());
        if (wanted < 0) {
            fail(ErrorKind::invalid_input, "internal error: more clique colors than demand");
        }
        kept.insert(kept.end(), extras.begin(), extras.begin() + wanted);
        std::sort(kept.begin(), kept.end());
        set = std::move(kept);
    }
    return Representation(r.universe_size(), std::move(phi));
}

namespace {

// Order-derived capacity: zero on minimal elements, otherwise
// max{1 - deg(v) + max over predecessors u of (b(u) + deg(u)), 0}. The sum
// b(u) + deg(u) strictly grows along the order, so the maximum over all
// strict predecessors is attained on an immediate one.
VertexFunction order_capacity(const PosetGraph& p) {
    const Graph& g = p.graph();
    std::vector<int> b(static_cast<std::size_t>(g.vertex_count()), 0);
    auto order = topological_order(p.order_dag());
    for (Vertex v : *order) {
        const auto& preds = p.order_dag().in_neighbors(v);
        if (preds.empty()) continue;
        int best = 0;
        for (Vertex u : preds) {
            best = std::max(best, b[static_cast<std::size_t>(u)] + g.degree(u));
        }
        b[static_cast<std::size_t>(v)] = std::max(1 - g.degree(v) + best, 0);
    }
    return VertexFunction(std::move(b));
}

}  // namespace

PosetInResult poset_in_triangle_free(const PosetGraph& p) {
    const Graph& g = p.graph();
    require_triangle_free(g, "poset_in_triangle_free");
    VertexFunction b = order_capacity(p);
    VertexFunction ell = alpha_ranking(p);
    if (!(capacity_from_demand(g, ell) == b)) {
        fail(ErrorKind::invalid_input, "internal error: capacity routes disagree");
    }
    auto constrained = ell_constrained_in_triangle_free(g, ell);
    PosetInResult result;
    result.value = constrained.value;
    result.representation = normalize_to_poset_rep(p, ell, constrained.representation);
    result.capacity = std::move(b);
    result.matching = std::move(constrained.matching);
    return result;
}

DinResult din_hamiltonian_triangle_free(const Digraph& d) {
    auto path = hamiltonian_path(d);  // throws not_a_dag on cycles
    if (!path) {
        fail(ErrorKind::no_hamiltonian_path, "digraph has no Hamiltonian path");
    }
    Graph g = underlying_graph(d);
    require_triangle_free(g, "din_hamiltonian_triangle_free");

    // capacity along the Hamiltonian path
    const int n = d.vertex_count();
    std::vector<int> b(static_cast<std::size_t>(n), 0);
    for (int i = 1; i < n; ++i) {
        Vertex prev = (*path)[static_cast<std::size_t>(i - 1)];
        Vertex here = (*path)[static_cast<std::size_t>(i)];
        b[static_cast<std::size_t>(here)] =
            std::max(b[static_cast<std::size_t>(prev)] + g.degree(prev) - g.degree(here) + 1, 0);
    }
    VertexFunction capacity(std::move(b));

    PosetGraph poset(g, d);
    VertexFunction ell = alpha_ranking(poset);
    if (!(capacity_from_demand(g, ell) == capacity)) {
        fail(ErrorKind::invalid_input, "internal error: path recurrence disagrees with the order");
    }
    auto constrained = ell_constrained_in_triangle_free(g, ell);
    DinResult result;
    result.value = d.arc_count() + capacity.total() - constrained.matching.weight();
    if (result.value != constrained.value) {
        fail(ErrorKind::invalid_input, "internal error: value mismatch across routes");
    }
    result.representation = normalize_to_poset_rep(poset, ell, constrained.representation);
    result.capacity = std::move(capacity);
    result.matching = std::move(constrained.matching);
    return result;
}

BipartiteDinResult bipartite_din(const Digraph& d) {
    auto path = hamiltonian_path(d);  // throws not_a_dag on cycles
    if (!path) {
        fail(ErrorKind::no_hamiltonian_path, "digraph has no Hamiltonian path");
    }
    Graph g = underlying_graph(d);
    if (!is_bipartite(g)) {
        fail(ErrorKind::not_bipartite, "bipartite_din requires a bipartite underlying graph");
    }
    const int n = d.vertex_count();
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        Vertex here = (*path)[static_cast<std::size_t>(i)];
        if (i == 0) {
            w[static_cast<std::size_t>(here)] = g.degree(here);
        } else {
            Vertex prev = (*path)[static_cast<std::size_t>(i - 1)];
            w[static_cast<std::size_t>(here)] =
                std::max(w[static_cast<std::size_t>(prev)] + 1, g.degree(here));
        }
    }
    std::vector<int> b(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        b[static_cast<std::size_t>(v)] = w[static_cast<std::size_t>(v)] - g.degree(v);
    }
    auto independent = max_weight_independent_set(g, VertexFunction(b));
    BipartiteDinResult result;
    result.value = d.arc_count() + independent.value;
    result.weight = VertexFunction(std::move(w));
    result.independent_set = std::move(independent.vertices);
    return result;
}

Representation generic_din_construction(const Digraph& d) {
    auto order = topological_order(d);
    if (!order) fail(ErrorKind::not_a_dag, "generic construction requires a DAG");
    const int n = d.vertex_count();
    std::vector<std::vector<int>> phi(static_cast<std::size_t>(n));
    for (int a = 0; a < d.arc_count(); ++a) {
        phi[static_cast<std::size_t>(d.arcs()[static_cast<std::size_t>(a)].from)].push_back(a);
        phi[static_cast<std::size_t>(d.arcs()[static_cast<std::size_t>(a)].to)].push_back(a);
    }
    int next_color = d.arc_count();
    int previous = 0;
    bool first = true;
    for (Vertex v : *order) {
        int target = std::max(d.degree(v), first ? 1 : previous + 1);
        first = false;
        while (static_cast<int>(phi[static_cast<std::size_t>(v)].size()) < target) {
            phi[static_cast<std::size_t>(v)].push_back(next_color++);
        }
        previous = target;
    }
    return Representation(next_color, std::move(phi));
}

long long din_lower_bound(const Digraph& d, const std::vector<std::vector<Vertex>>& chains,
                          const Coloring& coloring) {
    const int n = d.vertex_count();
    if (!topological_order(d)) {
        fail(ErrorKind::not_a_dag, "lower bound requires a DAG");
    }
    auto reach = reachability(d);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (const auto& chain : chains) {
        for (std::size_t i = 0; i < chain.size(); ++i) {
            Vertex v = chain[i];
            if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
                fail(ErrorKind::invalid_input, "chain cover is not a partition of the vertices");
            }
            seen[static_cast<std::size_t>(v)] = true;
            if (i > 0 && (chain[i - 1] == v ||
                          !reach[static_cast<std::size_t>(chain[i - 1])][static_cast<std::size_t>(v)])) {
                fail(ErrorKind::invalid_input, "chain breaks the reachability order");
            }
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (!seen[static_cast<std::size_t>(v)]) {
            fail(ErrorKind::invalid_input, "chain cover misses vertex " + std::to_string(v));
        }
    }
    if (static_cast<int>(coloring.class_of.size()) != n) {
        fail(ErrorKind::dimension_mismatch, "coloring does not fit the digraph");
    }
    for (Vertex v = 0; v < n; ++v) {
        int c = coloring.class_of[static_cast<std::size_t>(v)];
        if (c < 0 || c >= coloring.num_classes) {
            fail(ErrorKind::invalid_input, "coloring class out of range");
        }
    }
    for (const Arc& a : d.arcs()) {
        if (coloring.class_of[static_cast<std::size_t>(a.from)] ==
            coloring.class_of[static_cast<std::size_t>(a.to)]) {
            fail(ErrorKind::invalid_input, "coloring is not proper on the underlying graph");
        }
    }
    const std::vector<Vertex>* longest = nullptr;
    for (const auto& chain : chains) {
        if (!longest || chain.size() > longest->size()) longest = &chain;
    }
    if (!longest) return 0;
    // a lone vertex without arcs may carry the empty color set
    if (longest->size() == 1 && d.degree(longest->front()) == 0) return 0;
    std::vector<long long> count(static_cast<std::size_t>(coloring.num_classes), 0);
    for (Vertex v : *longest) {
        ++count[static_cast<std::size_t>(coloring.class_of[static_cast<std::size_t>(v)])];
    }
    long long largest_class = 0;
    for (long long c : count) largest_class = std::max(largest_class, c);
    // pairwise distinct, pairwise disjoint, nonempty color sets on the
    // largest class restricted to the chain
    return largest_class * (largest_class + 1) / 2;
}

}  // namespace dinrep
