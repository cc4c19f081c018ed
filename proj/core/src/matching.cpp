#include "dinrep/matching.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "dinrep/analysis.hpp"

namespace dinrep {

namespace {

// Maximum cardinality matching in a general graph, Edmonds' blossom
// algorithm in its O(V^3) form. Adjacency lists must be sorted; all scans
// run in ascending id order, so the matching is deterministic.
class BlossomMatcher {
public:
    explicit BlossomMatcher(std::vector<std::vector<int>> adj)
        : n_(static_cast<int>(adj.size())),
          adj_(std::move(adj)),
          match_(static_cast<std::size_t>(n_), -1),
          parent_(static_cast<std::size_t>(n_), -1),
          base_(static_cast<std::size_t>(n_)),
          used_(static_cast<std::size_t>(n_)),
          blossom_(static_cast<std::size_t>(n_)) {}

    int solve() {
        greedy_seed();
        int matched = 0;
        for (int v = 0; v < n_; ++v) matched += match_[static_cast<std::size_t>(v)] != -1;
        matched /= 2;
        for (int root = 0; root < n_; ++root) {
            if (match_[static_cast<std::size_t>(root)] != -1) continue;
            int leaf = find_augmenting_path(root);
            if (leaf == -1) continue;
            ++matched;
            while (leaf != -1) {
                int prev = parent_[static_cast<std::size_t>(leaf)];
                int next = match_[static_cast<std::size_t>(prev)];
                match_[static_cast<std::size_t>(leaf)] = prev;
                match_[static_cast<std::size_t>(prev)] = leaf;
                leaf = next;
            }
        }
        return matched;
    }

private:
    void greedy_seed() {
        for (int v = 0; v < n_; ++v) {
            if (match_[static_cast<std::size_t>(v)] != -1) continue;
            for (int to : adj_[static_cast<std::size_t>(v)]) {
                if (match_[static_cast<std::size_t>(to)] == -1) {
                    match_[static_cast<std::size_t>(v)] = to;
                    match_[static_cast<std::size_t>(to)] = v;
                    break;
                }
            }
        }
    }

    int lowest_common_base(int a, int b) {
        std::vector<bool> seen(static_cast<std::size_t>(n_), false);
        for (int v = a;;) {
            v = base_[static_cast<std::size_t>(v)];
            seen[static_cast<std::size_t>(v)] = true;
            if (match_[static_cast<std::size_t>(v)] == -1) break;
            v = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(v)])];
        }
        for (int v = b;;) {
            v = base_[static_cast<std::size_t>(v)];
            if (seen[static_cast<std::size_t>(v)]) return v;
            v = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(v)])];
        }
    }

    void mark_path(int v, int stem, int child) {
        while (base_[static_cast<std::size_t>(v)] != stem) {
            int mv = match_[static_cast<std::size_t>(v)];
            blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = true;
            blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(mv)])] = true;
            parent_[static_cast<std::size_t>(v)] = child;
            child = mv;
            v = parent_[static_cast<std::size_t>(mv)];
        }
    }

    int find_augmenting_path(int root) {
        std::fill(used_.begin(), used_.end(), false);
        std::fill(parent_.begin(), parent_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        used_[static_cast<std::size_t>(root)] = true;
        std::vector<int> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int to : adj_[static_cast<std::size_t>(v)]) {
                if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)] ||
                    match_[static_cast<std::size_t>(v)] == to) {
                    continue;
                }
                if (to == root ||
                    (match_[static_cast<std::size_t>(to)] != -1 &&
                     parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(to)])] != -1)) {
                    // odd cycle found: contract the blossom to its stem
                    int stem = lowest_common_base(v, to);
                    std::fill(blossom_.begin(), blossom_.end(), false);
                    mark_path(v, stem, to);
                    mark_path(to, stem, v);
                    for (int i = 0; i < n_; ++i) {
                        if (!blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])])
                            continue;
                        base_[static_cast<std::size_t>(i)] = stem;
                        if (!used_[static_cast<std::size_t>(i)]) {
                            used_[static_cast<std::size_t>(i)] = true;
                            queue.push_back(i);
                        }
                    }
                } else if (parent_[static_cast<std::size_t>(to)] == -1) {
                    parent_[static_cast<std::size_t>(to)] = v;
                    if (match_[static_cast<std::size_t>(to)] == -1) return to;
                    used_[static_cast<std::size_t>(match_[static_cast<std::size_t>(to)])] = true;
                    queue.push_back(match_[static_cast<std::size_t>(to)]);
                }
            }
        }
        return -1;
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<bool> used_, blossom_;
};

// nu of the subproblem formed by the edges with id >= first_edge under the
// given capacities, via the vertex-splitting reduction.
long long split_matching_value(const Graph& g, const std::vector<int>& caps, int first_edge) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    // cap each vertex at what its surviving edges can absorb
    std::vector<long long> limit(static_cast<std::size_t>(n), 0);
    for (int e = first_edge; e < m; ++e) {
        const Edge& edge = g.edges()[static_cast<std::size_t>(e)];
        int bound = std::min(caps[static_cast<std::size_t>(edge.u)],
                             caps[static_cast<std::size_t>(edge.v)]);
        limit[static_cast<std::size_t>(edge.u)] += bound;
        limit[static_cast<std::size_t>(edge.v)] += bound;
    }
    std::vector<int> copies(static_cast<std::size_t>(n));
    std::vector<int> offset(static_cast<std::size_t>(n), 0);
    long long total = 0;
    for (int v = 0; v < n; ++v) {
        copies[static_cast<std::size_t>(v)] = static_cast<int>(
            std::min<long long>(caps[static_cast<std::size_t>(v)], limit[static_cast<std::size_t>(v)]));
        offset[static_cast<std::size_t>(v)] = static_cast<int>(total);
        total += copies[static_cast<std::size_t>(v)];
    }
    long long pairs = 0;
    for (int e = first_edge; e < m; ++e) {
        const Edge& edge = g.edges()[static_cast<std::size_t>(e)];
        pairs += static_cast<long long>(copies[static_cast<std::size_t>(edge.u)]) *
                 copies[static_cast<std::size_t>(edge.v)];
    }
    if (total > (1 << 21) || pairs > (1 << 24)) {
        fail(ErrorKind::guard_exceeded,
             "capacities too large for the splitting reduction (needs " + std::to_string(total) +
                 " copies and " + std::to_string(pairs) + " pair edges)");
    }
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(total));
    for (int e = first_edge; e < m; ++e) {
        const Edge& edge = g.edges()[static_cast<std::size_t>(e)];
        for (int i = 0; i < copies[static_cast<std::size_t>(edge.u)]; ++i) {
            for (int j = 0; j < copies[static_cast<std::size_t>(edge.v)]; ++j) {
                int a = offset[static_cast<std::size_t>(edge.u)] + i;
                int b = offset[static_cast<std::size_t>(edge.v)] + j;
                adj[static_cast<std::size_t>(a)].push_back(b);
                adj[static_cast<std::size_t>(b)].push_back(a);
            }
        }
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    return BlossomMatcher(std::move(adj)).solve();
}

void check_function_size(const Graph& g, const VertexFunction& f, const char* what) {
    if (f.size() != g.vertex_count()) {
        fail(ErrorKind::dimension_mismatch,
             std::string(what) + " has " + std::to_string(f.size()) + " entries for " +
                 std::to_string(g.vertex_count()) + " vertices");
    }
}

// Plain Dinic max-flow, used for the bipartite duals.
class Dinic {
public:
    explicit Dinic(int nodes) : adj_(static_cast<std::size_t>(nodes)) {}

    int add_edge(int from, int to, long long cap) {
        int id = static_cast<int>(to_.size());
        adj_[static_cast<std::size_t>(from)].push_back(id);
        to_.push_back(to);
        cap_.push_back(cap);
        adj_[static_cast<std::size_t>(to)].push_back(id + 1);
        to_.push_back(from);
        cap_.push_back(0);
        return id;
    }

    // Shifts preexisting flow onto edge id (reducing its residual and
    // increasing the reverse residual).
    void preload(int id, long long flow) {
        cap_[static_cast<std::size_t>(id)] -= flow;
        cap_[static_cast<std::size_t>(id) ^ 1] += flow;
    }

    long long max_flow(int s, int t) {
        long long flow = 0;
        while (bfs(s, t)) {
            it_.assign(adj_.size(), 0);
            while (long long pushed = dfs(s, t, std::numeric_limits<long long>::max())) {
                flow += pushed;
            }
        }
        return flow;
    }

    std::vector<bool> residual_reachable(int s) const {
        std::vector<bool> seen(adj_.size(), false);
        std::vector<int> stack{s};
        seen[static_cast<std::size_t>(s)] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int id : adj_[static_cast<std::size_t>(v)]) {
                if (cap_[static_cast<std::size_t>(id)] <= 0) continue;
                int w = to_[static_cast<std::size_t>(id)];
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    stack.push_back(w);
                }
            }
        }
        return seen;
    }

private:
    bool bfs(int s, int t) {
        level_.assign(adj_.size(), -1);
        std::queue<int> queue;
        level_[static_cast<std::size_t>(s)] = 0;
        queue.push(s);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (int id : adj_[static_cast<std::size_t>(v)]) {
                if (cap_[static_cast<std::size_t>(id)] <= 0) continue;
                int w = to_[static_cast<std::size_t>(id)];
                if (level_[static_cast<std::size_t>(w)] == -1) {
                    level_[static_cast<std::size_t>(w)] = level_[static_cast<std::size_t>(v)] + 1;
                    queue.push(w);
                }
            }
        }
        return level_[static_cast<std::size_t>(t)] != -1;
    }

    long long dfs(int v, int t, long long limit) {
        if (v == t || limit == 0) return limit;
        for (std::size_t& i = it_[static_cast<std::size_t>(v)];
             i < adj_[static_cast<std::size_t>(v)].size(); ++i) {
            int id = adj_[static_cast<std::size_t>(v)][i];
            int w = to_[static_cast<std::size_t>(id)];
            if (cap_[static_cast<std::size_t>(id)] <= 0 ||
                level_[static_cast<std::size_t>(w)] != level_[static_cast<std::size_t>(v)] + 1) {
                continue;
            }
            long long pushed =
                dfs(w, t, std::min(limit, cap_[static_cast<std::size_t>(id)]));
            if (pushed > 0) {
                cap_[static_cast<std::size_t>(id)] -= pushed;
                cap_[static_cast<std::size_t>(id) ^ 1] += pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<std::vector<int>> adj_;
    std::vector<int> to_;
    std::vector<long long> cap_;
    std::vector<int> level_;
    std::vector<std::size_t> it_;
};

// Bipartite flow network: source -> side-0 vertices -> side-1 vertices ->
// sink, with the vertex weights as source/sink capacities and effectively
// unbounded middle edges (so minimum cuts always correspond to covers).
struct BipartiteNetwork {
    Dinic dinic;
    std::vector<int> side;
    std::vector<int> boundary_edge;  // per vertex: its source or sink edge id
    std::vector<int> middle_edge;    // per graph edge id
    int source, sink;

    BipartiteNetwork(const Graph& g, const VertexFunction& w, std::vector<int> sides)
        : dinic(g.vertex_count() + 2),
          side(std::move(sides)),
          boundary_edge(static_cast<std::size_t>(g.vertex_count()), -1),
          middle_edge(static_cast<std::size_t>(g.edge_count()), -1),
          source(g.vertex_count()),
          sink(g.vertex_count() + 1) {
        const long long inf = w.total() + 1;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            boundary_edge[static_cast<std::size_t>(v)] =
                side[static_cast<std::size_t>(v)] == 0 ? dinic.add_edge(source, v, w[v])
                                                       : dinic.add_edge(v, sink, w[v]);
        }
        for (int e = 0; e < g.edge_count(); ++e) {
            const Edge& edge = g.edges()[static_cast<std::size_t>(e)];
            Vertex a = side[static_cast<std::size_t>(edge.u)] == 0 ? edge.u : edge.v;
            Vertex b = a == edge.u ? edge.v : edge.u;
            middle_edge[static_cast<std::size_t>(e)] = dinic.add_edge(a, b, inf);
        }
    }

    // Cover induced by the minimum cut: unreachable side-0 vertices plus
    // reachable side-1 vertices.
    std::vector<Vertex> cover() const {
        auto seen = dinic.residual_reachable(source);
        std::vector<Vertex> result;
        for (Vertex v = 0; v < static_cast<Vertex>(side.size()); ++v) {
            bool reachable = seen[static_cast<std::size_t>(v)];
            if ((side[static_cast<std::size_t>(v)] == 0 && !reachable) ||
                (side[static_cast<std::size_t>(v)] == 1 && reachable)) {
                result.push_back(v);
            }
        }
        return result;
    }
};

}  // namespace

BMatching::BMatching(std::vector<int> multiplicities) : mult_(std::move(multiplicities)) {
    for (std::size_t e = 0; e < mult_.size(); ++e) {
        if (mult_[e] < 0) {
            fail(ErrorKind::invalid_input, "negative multiplicity at edge " + std::to_string(e));
        }
        weight_ += mult_[e];
    }
}

bool is_feasible(const Graph& g, const VertexFunction& b, const BMatching& m) {
    if (b.size() != g.vertex_count()) return false;
    if (static_cast<int>(m.multiplicities().size()) != g.edge_count()) return false;
    std::vector<long long> load(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edges()[static_cast<std::size_t>(e)];
        load[static_cast<std::size_t>(edge.u)] += m.multiplicities()[static_cast<std::size_t>(e)];
        load[static_cast<std::size_t>(edge.v)] += m.multiplicities()[static_cast<std::size_t>(e)];
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (load[static_cast<std::size_t>(v)] > b[v]) return false;
    }
    return true;
}

BMatching max_weight_b_matching(const Graph& g, const VertexFunction& b) {
    check_function_size(g, b, "capacity function");
    const int m = g.edge_count();
    std::vector<int> remaining = b.values();
    long long total_left = split_matching_value(g, remaining, 0);
    std::vector<int> mult(static_cast<std::size_t>(m), 0);
    for (int e = 0; e < m && total_left > 0; ++e) {
        const Edge& edge = g.edges()[static_cast<std::size_t>(e)];
        int tmax = std::min(remaining[static_cast<std::size_t>(edge.u)],
                            remaining[static_cast<std::size_t>(edge.v)]);
        int chosen = -1;
        for (int t = 0; t <= tmax; ++t) {
            std::vector<int> reduced = remaining;
            reduced[static_cast<std::size_t>(edge.u)] -= t;
            reduced[static_cast<std::size_t>(edge.v)] -= t;
            if (split_matching_value(g, reduced, e + 1) == total_left - t) {
                chosen = t;
                break;
            }
        }
        if (chosen < 0) {
            // cannot happen: some optimum extends the earlier choices
            fail(ErrorKind::invalid_input, "internal error: no consistent multiplicity");
        }
        mult[static_cast<std::size_t>(e)] = chosen;
        remaining[static_cast<std::size_t>(edge.u)] -= chosen;
        remaining[static_cast<std::size_t>(edge.v)] -= chosen;
        total_left -= chosen;
    }
    return BMatching(std::move(mult));
}

long long brute_force_nu(const Graph& g, const VertexFunction& b) {
    check_function_size(g, b, "capacity function");
    const int m = g.edge_count();
    if (m > 12) {
        fail(ErrorKind::guard_exceeded,
             "brute_force_nu handles at most 12 edges, got " + std::to_string(m));
    }
    int bmax = 0;
    for (int value : b.values()) bmax = std::max(bmax, value);
    if (bmax > 4) {
        fail(ErrorKind::guard_exceeded,
             "brute_force_nu handles capacities up to 4, got " + std::to_string(bmax));
    }
    std::vector<int> remaining = b.values();
    long long best = 0;
    // descend multiplicities from their bound so the optimistic prune bites
    std::function<void(int, long long)> search = [&](int e, long long current) {
        if (e == m) {
            best = std::max(best, current);
            return;
        }
        long long optimistic = current;
        for (int k = e; k < m; ++k) {
            const Edge& edge = g.edges()[static_cast<std::size_t>(k)];
            optimistic += std::min(remaining[static_cast<std::size_t>(edge.u)],
                                   remaining[static_cast<std::size_t>(edge.v)]);
        }
        if (optimistic <= best) return;  // the empty matching is recorded up front
        const Edge& edge = g.edges()[static_cast<std::size_t>(e)];
        int cap = std::min(remaining[static_cast<std::size_t>(edge.u)],
                           remaining[static_cast<std::size_t>(edge.v)]);
        for (int t = cap; t >= 0; --t) {
            remaining[static_cast<std::size_t>(edge.u)] -= t;
            remaining[static_cast<std::size_t>(edge.v)] -= t;
            search(e + 1, current + t);
            remaining[static_cast<std::size_t>(edge.u)] += t;
            remaining[static_cast<std::size_t>(edge.v)] += t;
        }
    };
    search(0, 0);
    return best;
}

std::vector<Vertex> bipartite_cover_certificate(const Graph& g, const VertexFunction& b,
                                                const BMatching& m) {
    check_function_size(g, b, "capacity function");
    auto sides = bipartition(g);
    if (!sides) {
        fail(ErrorKind::not_bipartite, "cover certificate requires a bipartite graph");
    }
    if (!is_feasible(g, b, m)) {
        fail(ErrorKind::invalid_input, "matching violates the capacities");
    }
    BipartiteNetwork net(g, b, std::move(*sides));
    for (int e = 0; e < g.edge_count(); ++e) {
        long long x = m.multiplicities()[static_cast<std::size_t>(e)];
        if (x == 0) continue;
        const Edge& edge = g.edges()[static_cast<std::size_t>(e)];
        net.dinic.preload(net.middle_edge[static_cast<std::size_t>(e)], x);
        net.dinic.preload(net.boundary_edge[static_cast<std::size_t>(edge.u)], x);
        net.dinic.preload(net.boundary_edge[static_cast<std::size_t>(edge.v)], x);
    }
    if (net.dinic.max_flow(net.source, net.sink) > 0) {
        fail(ErrorKind::invalid_input, "matching is not optimal, no tight cover exists");
    }
    return net.cover();
}

WeightedIndependentSet max_weight_independent_set(const Graph& g, const VertexFunction& f) {
    check_function_size(g, f, "weight function");
    const int n = g.vertex_count();
    if (auto sides = bipartition(g)) {
        BipartiteNetwork net(g, f, std::move(*sides));
        long long nu = net.dinic.max_flow(net.source, net.sink);
        auto cover = net.cover();
        std::vector<bool> covered(static_cast<std::size_t>(n), false);
        long long cover_weight = 0;
        for (Vertex v : cover) {
            covered[static_cast<std::size_t>(v)] = true;
            cover_weight += f[v];
        }
        if (cover_weight != nu) {
            fail(ErrorKind::invalid_input, "internal error: cut does not match the flow");
        }
        WeightedIndependentSet result;
        result.value = f.total() - nu;
        for (Vertex v = 0; v < n; ++v) {
            if (!covered[static_cast<std::size_t>(v)]) result.vertices.push_back(v);
        }
        return result;
    }
    if (n > 20) {
        fail(ErrorKind::guard_exceeded,
             "exhaustive independent set limited to 20 vertices, got " + std::to_string(n));
    }
    std::vector<unsigned> nbr_mask(static_cast<std::size_t>(n), 0);
    for (const Edge& e : g.edges()) {
        nbr_mask[static_cast<std::size_t>(e.u)] |= 1u << e.v;
        nbr_mask[static_cast<std::size_t>(e.v)] |= 1u << e.u;
    }
    long long best = -1;
    unsigned best_mask = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        long long value = 0;
        bool independent = true;
        for (int v = 0; v < n && independent; ++v) {
            if (!(mask >> v & 1u)) continue;
            if (nbr_mask[static_cast<std::size_t>(v)] & mask) {
                independent = false;
            } else {
                value += f[v];
            }
        }
        if (independent && value > best) {
            best = value;
            best_mask = mask;
        }
    }
    WeightedIndependentSet result;
    result.value = best;
    for (int v = 0; v < n; ++v) {
        if (best_mask >> v & 1u) result.vertices.push_back(v);
    }
    return result;
}

}  // namespace dinrep
