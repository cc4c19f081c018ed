#include "support/generators.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace dinrep::testing {

int pick(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool chance(Rng& rng, double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

Graph random_graph(Rng& rng, int n, double density, int max_edges) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (chance(rng, density)) pairs.emplace_back(u, v);
        }
    }
    if (max_edges >= 0 && static_cast<int>(pairs.size()) > max_edges) {
        std::shuffle(pairs.begin(), pairs.end(), rng);
        pairs.resize(static_cast<std::size_t>(max_edges));
    }
    return Graph(n, pairs);
}

Digraph random_dag(Rng& rng, int n, double density) {
    std::vector<Vertex> perm = random_permutation(rng, n);
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (chance(rng, density)) arcs.emplace_back(perm[i], perm[j]);
        }
    }
    return Digraph(n, arcs);
}

namespace {

Digraph forward_ham_dag(Rng& rng, int n, double density, bool bipartite_only) {
    std::vector<std::pair<int, int>> arcs;
    std::vector<std::vector<bool>> adjacent(static_cast<std::size_t>(n),
                                            std::vector<bool>(static_cast<std::size_t>(n), false));
    auto link = [&](int u, int v) {
        arcs.emplace_back(u, v);
        adjacent[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
        adjacent[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
    };
    for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
    std::vector<std::pair<int, int>> candidates;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 2; j < n; ++j) {
            if (bipartite_only && (j - i) % 2 == 0) continue;
            candidates.emplace_back(i, j);
        }
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);
    for (auto [i, j] : candidates) {
        if (!chance(rng, density)) continue;
        bool closes_triangle = false;
        for (int w = 0; w < n && !closes_triangle; ++w) {
            if (adjacent[static_cast<std::size_t>(i)][static_cast<std::size_t>(w)] &&
                adjacent[static_cast<std::size_t>(j)][static_cast<std::size_t>(w)]) {
                closes_triangle = true;
            }
        }
        if (!closes_triangle) link(i, j);
    }
    return Digraph(n, arcs);
}

}  // namespace

Digraph random_tf_ham_dag(Rng& rng, int n, double density) {
    return forward_ham_dag(rng, n, density, /*bipartite_only=*/false);
}

Digraph random_bipartite_tf_ham_dag(Rng& rng, int n, double density) {
    return forward_ham_dag(rng, n, density, /*bipartite_only=*/true);
}

Digraph random_admissible_digraph(Rng& rng, int n, double block_density,
                                  double cross_density) {
    // chop 0..n-1 into consecutive blocks
    std::vector<int> block_of(static_cast<std::size_t>(n), 0);
    int block = 0;
    for (int v = 1; v < n; ++v) {
        if (chance(rng, 0.4)) ++block;
        block_of[static_cast<std::size_t>(v)] = block;
    }
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (block_of[static_cast<std::size_t>(u)] == block_of[static_cast<std::size_t>(v)]) {
                if (chance(rng, block_density)) {
                    arcs.emplace_back(u, v);
                    arcs.emplace_back(v, u);
                }
            } else if (chance(rng, cross_density)) {
                arcs.emplace_back(u, v);
            }
        }
    }
    return Digraph(n, arcs);
}

Representation random_representation(Rng& rng, int n, int k, double keep) {
    std::vector<std::vector<int>> assignment(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        for (int c = 0; c < k; ++c) {
            if (chance(rng, keep)) assignment[static_cast<std::size_t>(v)].push_back(c);
        }
    }
    return Representation(k, std::move(assignment));
}

VertexFunction random_vertex_function(Rng& rng, int n, int max_value) {
    std::vector<int> values(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) values[static_cast<std::size_t>(v)] = pick(rng, 0, max_value);
    return VertexFunction(std::move(values));
}

Graph permuted_graph(const Graph& g, const std::vector<Vertex>& perm) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        pairs.emplace_back(perm[static_cast<std::size_t>(e.u)],
                           perm[static_cast<std::size_t>(e.v)]);
    }
    return Graph(g.vertex_count(), pairs);
}

Digraph permuted_digraph(const Digraph& d, const std::vector<Vertex>& perm) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(d.arcs().size());
    for (const Arc& a : d.arcs()) {
        pairs.emplace_back(perm[static_cast<std::size_t>(a.from)],
                           perm[static_cast<std::size_t>(a.to)]);
    }
    return Digraph(d.vertex_count(), pairs);
}

std::vector<Vertex> random_permutation(Rng& rng, int n) {
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

long long count_hamiltonian_paths(const Digraph& d) {
    const int n = d.vertex_count();
    if (n == 0) return 1;
    long long count = 0;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::function<void(Vertex, int)> extend = [&](Vertex v, int depth) {
        if (depth == n) {
            ++count;
            return;
        }
        for (Vertex w : d.out_neighbors(v)) {
            if (used[static_cast<std::size_t>(w)]) continue;
            used[static_cast<std::size_t>(w)] = true;
            extend(w, depth + 1);
            used[static_cast<std::size_t>(w)] = false;
        }
    };
    for (Vertex s = 0; s < n; ++s) {
        used[static_cast<std::size_t>(s)] = true;
        extend(s, 1);
        used[static_cast<std::size_t>(s)] = false;
    }
    return count;
}

Digraph fig2_digraph() {
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i + 1 < 12; ++i) arcs.emplace_back(i, i + 1);
    for (auto [u, v] : {std::pair{0, 3}, {0, 5}, {0, 7}, {0, 9}, {0, 11},
                        {2, 8}, {2, 10}, {4, 8}, {4, 10}, {6, 10}}) {
        arcs.emplace_back(u, v);
    }
    return Digraph(12, arcs);
}

Graph cocktail_party_graph(int parts) {
    const int n = 2 * parts;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (u / 2 != v / 2) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

Representation sperner_representation() {
    // vertex 2i carries the i-th three-element subset of {0..5} containing
    // color 0 (lexicographic), vertex 2i+1 its complement
    std::vector<std::vector<int>> assignment;
    for (int a = 1; a <= 5; ++a) {
        for (int b = a + 1; b <= 5; ++b) {
            std::vector<int> set{0, a, b};
            std::vector<int> complement;
            for (int c = 1; c <= 5; ++c) {
                if (c != a && c != b) complement.push_back(c);
            }
            assignment.push_back(std::move(set));
            assignment.push_back(std::move(complement));
        }
    }
    return Representation(6, std::move(assignment));
}

int max_antichain_size(const Digraph& d) {
    const int n = d.vertex_count();
    auto reach = reachability(d);
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool antichain = true;
        int size = 0;
        for (int u = 0; u < n && antichain; ++u) {
            if (!(mask >> u & 1u)) continue;
            ++size;
            for (int v = u + 1; v < n && antichain; ++v) {
                if (!(mask >> v & 1u)) continue;
                if (reach[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] ||
                    reach[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) {
                    antichain = false;
                }
            }
        }
        if (antichain) best = std::max(best, size);
    }
    return best;
}

}  // namespace dinrep::testing
