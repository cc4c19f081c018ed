#include "dinrep/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "dinrep/analysis.hpp"
#include "dinrep/construct.hpp"

namespace dinrep {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

int lowest_bit_index(unsigned mask) { return __builtin_ctz(mask); }

// --- tiny DIN search -------------------------------------------------------
//
// A representation is, up to renaming colors, a multiset of supports (the
// set of vertices carrying a color). Fixing the per-vertex set sizes first
// leaves a covering problem: every arc pair must share a support, supports
// may only join adjacent vertices or nonadjacent ones of equal size, and
// the per-vertex multiplicities must land exactly on the chosen sizes.

struct TinyDinSearch {
    int n;
    std::vector<unsigned> arc_pair_mask;    // one 2-bit mask per arc
    std::vector<unsigned> arc_inside;       // per vertex-set mask: arcs it covers
    std::vector<bool> und_adjacent;         // n*n
    const CancellationToken& token;
    std::vector<int> cnt;
    std::vector<bool> compatible;           // per vertex-set mask
    std::unordered_map<std::uint32_t, int> memo;
    unsigned long long polls = 0;

    TinyDinSearch(const Digraph& d, const CancellationToken& tok)
        : n(d.vertex_count()), token(tok) {
        und_adjacent.assign(static_cast<std::size_t>(n * n), false);
        for (const Arc& a : d.arcs()) {
            und_adjacent[static_cast<std::size_t>(a.from * n + a.to)] = true;
            und_adjacent[static_cast<std::size_t>(a.to * n + a.from)] = true;
            arc_pair_mask.push_back((1u << a.from) | (1u << a.to));
        }
        arc_inside.assign(1u << n, 0);
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            for (std::size_t a = 0; a < arc_pair_mask.size(); ++a) {
                if ((mask & arc_pair_mask[a]) == arc_pair_mask[a]) {
                    arc_inside[mask] |= 1u << a;
                }
            }
        }
    }

    bool adjacent(int u, int v) const {
        return und_adjacent[static_cast<std::size_t>(u * n + v)];
    }

    void rebuild_compatibility() {
        compatible.assign(1u << n, true);
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            for (int u = 0; u < n && compatible[mask]; ++u) {
                if (!(mask >> u & 1u)) continue;
                for (int v = u + 1; v < n; ++v) {
                    if (!(mask >> v & 1u)) continue;
                    if (!adjacent(u, v) &&
                        cnt[static_cast<std::size_t>(u)] != cnt[static_cast<std::size_t>(v)]) {
                        compatible[mask] = false;
                        break;
                    }
                }
            }
        }
    }

    std::uint32_t key(unsigned uncovered, const std::vector<int>& rem) const {
        std::uint32_t k = uncovered;
        for (int v = 0; v < n; ++v) {
            k = (k << 5) | static_cast<std::uint32_t>(rem[static_cast<std::size_t>(v)]);
        }
        return k;
    }

    // minimum number of extra supports finishing off the state
    int solve(unsigned uncovered, std::vector<int>& rem) {
        if ((++polls & 0xfffu) == 0) token.check();
        for (std::size_t a = 0; a < arc_pair_mask.size(); ++a) {
            if (!(uncovered >> a & 1u)) continue;
            unsigned pair = arc_pair_mask[a];
            while (pair) {
                int v = lowest_bit_index(pair);
                pair &= pair - 1;
                if (rem[static_cast<std::size_t>(v)] == 0) return kInf;
            }
        }
        unsigned positive = 0;
        int first_positive = -1;
        for (int v = 0; v < n; ++v) {
            if (rem[static_cast<std::size_t>(v)] > 0) {
                positive |= 1u << v;
                if (first_positive < 0) first_positive = v;
            }
        }
        if (uncovered == 0 && first_positive < 0) return 0;
        std::uint32_t k = key(uncovered, rem);
        if (auto it = memo.find(k); it != memo.end()) return it->second;

        unsigned required;  // the next support must contain these vertices
        if (uncovered != 0) {
            required = arc_pair_mask[static_cast<std::size_t>(lowest_bit_index(uncovered))];
        } else {
            required = 1u << first_positive;
        }
        int best = kInf;
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            if ((mask & required) != required) continue;
            if ((mask & ~positive) != 0) continue;
            if (!compatible[mask]) continue;
            for (unsigned bits = mask; bits;) {
                int v = lowest_bit_index(bits);
                bits &= bits - 1;
                --rem[static_cast<std::size_t>(v)];
            }
            int rest = solve(uncovered & ~arc_inside[mask], rem);
            for (unsigned bits = mask; bits;) {
                int v = lowest_bit_index(bits);
                bits &= bits - 1;
                ++rem[static_cast<std::size_t>(v)];
            }
            if (rest < kInf) best = std::min(best, rest + 1);
        }
        memo[k] = best;
        return best;
    }

    // largest total count over an independent set with pairwise distinct
    // counts; such sets force pairwise disjoint color sets
    long long disjointness_bound() const {
        long long best = 0;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            long long sum = 0;
            bool ok = true;
            for (int u = 0; u < n && ok; ++u) {
                if (!(mask >> u & 1u)) continue;
                sum += cnt[static_cast<std::size_t>(u)];
                for (int v = u + 1; v < n && ok; ++v) {
                    if (!(mask >> v & 1u)) continue;
                    if (adjacent(u, v) ||
                        cnt[static_cast<std::size_t>(u)] == cnt[static_cast<std::size_t>(v)]) {
                        ok = false;
                    }
                }
            }
            if (ok) best = std::max(best, sum);
        }
        return best;
    }
};

// --- exhaustive edge packing ------------------------------------------------
//
// max sum of y(e) >= 0 subject to per-vertex budgets, by descending search
// with an optimistic bound. Small instances only.

struct EdgePacking {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> budget;
    const CancellationToken& token;
    long long best = 0;
    unsigned long long polls = 0;
    std::vector<unsigned> suffix_mask;  // vertices appearing at or after each edge

    void prepare() {
        // consuming the tightly budgeted early vertices first makes the
        // bounds bite sooner
        std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
            return std::pair(std::max(a.first, a.second), std::min(a.first, a.second)) <
                   std::pair(std::max(b.first, b.second), std::min(b.first, b.second));
        });
        suffix_mask.assign(edges.size() + 1, 0u);
        for (std::size_t e = edges.size(); e-- > 0;) {
            suffix_mask[e] = suffix_mask[e + 1] | (1u << edges[e].first) |
                             (1u << edges[e].second);
        }
    }

    void run(std::size_t e, long long current) {
        if ((++polls & 0xfffu) == 0) token.check();
        best = std::max(best, current);
        if (e == edges.size()) return;
        // every extra unit eats one budget unit at both endpoints
        long long per_edge = 0;
        for (std::size_t k = e; k < edges.size(); ++k) {
            per_edge += std::min(budget[static_cast<std::size_t>(edges[k].first)],
                                 budget[static_cast<std::size_t>(edges[k].second)]);
        }
        long long half_sum = 0;
        for (unsigned bits = suffix_mask[e]; bits;) {
            int v = lowest_bit_index(bits);
            bits &= bits - 1;
            half_sum += budget[static_cast<std::size_t>(v)];
        }
        if (current + std::min(per_edge, half_sum / 2) <= best) return;
        auto [u, v] = edges[e];
        int cap = std::min(budget[static_cast<std::size_t>(u)], budget[static_cast<std::size_t>(v)]);
        for (int t = cap; t >= 0; --t) {
            budget[static_cast<std::size_t>(u)] -= t;
            budget[static_cast<std::size_t>(v)] -= t;
            run(e + 1, current + t);
            budget[static_cast<std::size_t>(u)] += t;
            budget[static_cast<std::size_t>(v)] += t;
        }
    }
};

// all maximal cliques of a small graph, as sorted vertex masks
std::vector<unsigned> maximal_clique_masks(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<unsigned> nbr(static_cast<std::size_t>(n), 0);
    for (const Edge& e : g.edges()) {
        nbr[static_cast<std::size_t>(e.u)] |= 1u << e.v;
        nbr[static_cast<std::size_t>(e.v)] |= 1u << e.u;
    }
    std::vector<unsigned> cliques;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        bool clique = true;
        for (int v = 0; v < n && clique; ++v) {
            if (!(mask >> v & 1u)) continue;
            unsigned rest = mask & ~(1u << v);
            if ((rest & ~nbr[static_cast<std::size_t>(v)]) != 0) clique = false;
        }
        if (!clique) continue;
        bool maximal = true;
        for (int w = 0; w < n && maximal; ++w) {
            if (mask >> w & 1u) continue;
            if ((mask & ~nbr[static_cast<std::size_t>(w)]) == 0) maximal = false;
        }
        if (maximal) cliques.push_back(mask);
    }
    return cliques;
}

}  // namespace

long long oracle_din_tiny(const Digraph& d, const CancellationToken& token) {
    token.check();
    if (!topological_order(d)) {
        fail(ErrorKind::not_a_dag, "oracle_din_tiny requires a DAG");
    }
    const int n = d.vertex_count();
    if (n > 4) {
        fail(ErrorKind::guard_exceeded,
             "oracle_din_tiny handles at most 4 vertices, got " + std::to_string(n));
    }
    if (n == 0) return 0;
    long long best = generic_din_construction(d).universe_size();

    TinyDinSearch search(d, token);
    search.cnt.assign(static_cast<std::size_t>(n), 0);
    std::function<void(int)> enumerate = [&](int v) {
        if (v == n) {
            if (search.disjointness_bound() >= best) return;
            search.rebuild_compatibility();
            search.memo.clear();
            unsigned all_arcs =
                search.arc_pair_mask.empty()
                    ? 0u
                    : (1u << search.arc_pair_mask.size()) - 1u;
            std::vector<int> rem = search.cnt;
            int colors = search.solve(all_arcs, rem);
            if (colors < kInf) best = std::min(best, static_cast<long long>(colors));
            return;
        }
        // counts never exceed the total number of colors
        for (int c = 0; c < best; ++c) {
            bool consistent = true;
            for (int u = 0; u < v && consistent; ++u) {
                if (d.has_arc(u, v) && !(search.cnt[static_cast<std::size_t>(u)] < c)) {
                    consistent = false;
                }
                if (d.has_arc(v, u) && !(c < search.cnt[static_cast<std::size_t>(u)])) {
                    consistent = false;
                }
            }
            if (!consistent) continue;
            search.cnt[static_cast<std::size_t>(v)] = c;
            enumerate(v + 1);
        }
        search.cnt[static_cast<std::size_t>(v)] = 0;
    };
    enumerate(0);
    return best;
}

long long oracle_din_hamiltonian_tf(const Digraph& d, const CancellationToken& token) {
    token.check();
    auto path = hamiltonian_path(d);  // throws not_a_dag on cycles
    if (!path) {
        fail(ErrorKind::no_hamiltonian_path, "oracle requires a Hamiltonian path");
    }
    Graph g = underlying_graph(d);
    if (!is_triangle_free(g)) {
        fail(ErrorKind::not_triangle_free, "oracle requires a triangle-free digraph");
    }
    const int n = d.vertex_count();
    if (n > 8) {
        fail(ErrorKind::guard_exceeded,
             "oracle_din_hamiltonian_tf handles at most 8 vertices, got " + std::to_string(n));
    }
    if (n == 0) return 0;

    std::vector<int> position(static_cast<std::size_t>(n));
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        position[static_cast<std::size_t>((*path)[static_cast<std::size_t>(i)])] = i;
        deg[static_cast<std::size_t>(i)] = g.degree((*path)[static_cast<std::size_t>(i)]);
    }
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : g.edges()) {
        edges.emplace_back(position[static_cast<std::size_t>(e.u)],
                           position[static_cast<std::size_t>(e.v)]);
    }

    // Sizes must strictly increase along the path and dominate the degrees.
    // Shaving one unit off any feasible size costs the packing at most one
    // shared pair, so the pointwise floor is never worse than larger sizes;
    // the +1 window re-checks that on every instance.
    long long best = std::numeric_limits<long long>::max();
    std::vector<int> size(static_cast<std::size_t>(n));
    std::function<void(int, long long)> choose = [&](int i, long long size_sum) {
        if (i == n) {
            EdgePacking packing{edges, {}, token, 0, 0};
            packing.budget.resize(static_cast<std::size_t>(n));
            long long budget_sum = 0, pair_bound = 0;
            for (int j = 0; j < n; ++j) {
                packing.budget[static_cast<std::size_t>(j)] =
                    size[static_cast<std::size_t>(j)] - deg[static_cast<std::size_t>(j)];
                budget_sum += packing.budget[static_cast<std::size_t>(j)];
            }
            for (auto [u, v] : edges) {
                pair_bound += std::min(packing.budget[static_cast<std::size_t>(u)],
                                       packing.budget[static_cast<std::size_t>(v)]);
            }
            // no packing can push the total below this
            if (budget_sum + static_cast<long long>(edges.size()) - pair_bound >= best) return;
            packing.prepare();
            packing.run(0, 0);
            long long shared = static_cast<long long>(edges.size()) + packing.best;
            best = std::min(best, size_sum - shared);
            return;
        }
        int floor = std::max(deg[static_cast<std::size_t>(i)],
                             i == 0 ? 0 : size[static_cast<std::size_t>(i - 1)] + 1);
        for (int s = floor; s <= floor + 1; ++s) {
            size[static_cast<std::size_t>(i)] = s;
            choose(i + 1, size_sum + s);
        }
    };
    choose(0, 0);
    return best;
}

long long oracle_ecc(const Graph& g, const CancellationToken& token) {
    token.check();
    const int m = g.edge_count();
    if (m > 12) {
        fail(ErrorKind::guard_exceeded,
             "oracle_ecc handles at most 12 edges, got " + std::to_string(m));
    }
    if (m == 0) return 0;

    // per edge: the maximal cliques containing it, with the edges each one
    // covers (covers only need maximal cliques: supersets never hurt)
    std::vector<std::vector<unsigned>> options(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e) {
        const Edge& edge = g.edges()[static_cast<std::size_t>(e)];
        std::vector<Vertex> common;
        for (Vertex w : g.neighbors(edge.u)) {
            if (w != edge.v && g.has_edge(edge.v, w)) common.push_back(w);
        }
        const int k = static_cast<int>(common.size());
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            bool clique = true;
            for (int i = 0; i < k && clique; ++i) {
                if (!(mask >> i & 1u)) continue;
                for (int j = i + 1; j < k && clique; ++j) {
                    if ((mask >> j & 1u) &&
                        !g.has_edge(common[static_cast<std::size_t>(i)],
                                    common[static_cast<std::size_t>(j)])) {
                        clique = false;
                    }
                }
            }
            if (!clique) continue;
            bool maximal = true;
            for (int w = 0; w < k && maximal; ++w) {
                if (mask >> w & 1u) continue;
                bool joins_all = true;
                for (int i = 0; i < k && joins_all; ++i) {
                    if ((mask >> i & 1u) &&
                        !g.has_edge(common[static_cast<std::size_t>(w)],
                                    common[static_cast<std::size_t>(i)])) {
                        joins_all = false;
                    }
                }
                if (joins_all) maximal = false;
            }
            if (!maximal) continue;
            // edges covered by {u, v} + selected common neighbors
            std::vector<Vertex> members{edge.u, edge.v};
            for (int i = 0; i < k; ++i) {
                if (mask >> i & 1u) members.push_back(common[static_cast<std::size_t>(i)]);
            }
            unsigned covered = 0;
            for (std::size_t i = 0; i < members.size(); ++i) {
                for (std::size_t j = i + 1; j < members.size(); ++j) {
                    covered |= 1u << g.edge_id(members[i], members[j]);
                }
            }
            options[static_cast<std::size_t>(e)].push_back(covered);
        }
    }

    std::vector<int> memo(1u << m, -1);
    unsigned long long polls = 0;
    std::function<int(unsigned)> cover = [&](unsigned uncovered) -> int {
        if (uncovered == 0) return 0;
        if ((++polls & 0xfffu) == 0) token.check();
        if (memo[uncovered] >= 0) return memo[uncovered];
        int e = lowest_bit_index(uncovered);
        int best = kInf;
        for (unsigned covered : options[static_cast<std::size_t>(e)]) {
            best = std::min(best, 1 + cover(uncovered & ~covered));
        }
        memo[uncovered] = best;
        return best;
    };
    return cover((1u << m) - 1u);
}

long long oracle_in_tiny(const Graph& g, const VertexFunction& ell,
                         const CancellationToken& token) {
    token.check();
    if (ell.size() != g.vertex_count()) {
        fail(ErrorKind::dimension_mismatch, "demand function does not fit the graph");
    }
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (n > 5) {
        fail(ErrorKind::guard_exceeded,
             "oracle_in_tiny handles at most 5 vertices, got " + std::to_string(n));
    }
    for (Vertex v = 0; v < n; ++v) {
        if (ell[v] > 3) {
            fail(ErrorKind::guard_exceeded, "oracle_in_tiny handles demands up to 3");
        }
    }
    auto cliques = maximal_clique_masks(g);
    // per edge / per vertex: which maximal cliques contain it
    std::vector<std::vector<std::size_t>> on_edge(static_cast<std::size_t>(m));
    std::vector<std::vector<std::size_t>> on_vertex(static_cast<std::size_t>(n));
    std::vector<unsigned> covers(cliques.size(), 0);
    for (std::size_t c = 0; c < cliques.size(); ++c) {
        for (int e = 0; e < m; ++e) {
            const Edge& edge = g.edges()[static_cast<std::size_t>(e)];
            unsigned pair = (1u << edge.u) | (1u << edge.v);
            if ((cliques[c] & pair) == pair) {
                on_edge[static_cast<std::size_t>(e)].push_back(c);
                covers[c] |= 1u << e;
            }
        }
        for (int v = 0; v < n; ++v) {
            if (cliques[c] >> v & 1u) on_vertex[static_cast<std::size_t>(v)].push_back(c);
        }
    }

    auto pack = [&](unsigned uncovered, const std::vector<int>& deficit) {
        std::uint32_t k = uncovered;
        for (int v = 0; v < n; ++v) {
            k = (k << 2) | static_cast<std::uint32_t>(deficit[static_cast<std::size_t>(v)]);
        }
        return k;
    };
    std::unordered_map<std::uint32_t, int> memo;
    unsigned long long polls = 0;
    std::vector<int> deficit = ell.values();
    std::function<int(unsigned)> solve = [&](unsigned uncovered) -> int {
        if ((++polls & 0xfffu) == 0) token.check();
        int needy = -1;
        for (int v = 0; v < n; ++v) {
            if (deficit[static_cast<std::size_t>(v)] > 0) {
                needy = v;
                break;
            }
        }
        if (uncovered == 0 && needy < 0) return 0;
        std::uint32_t k = pack(uncovered, deficit);
        if (auto it = memo.find(k); it != memo.end()) return it->second;
        const std::vector<std::size_t>& branch =
            uncovered != 0 ? on_edge[static_cast<std::size_t>(lowest_bit_index(uncovered))]
                           : on_vertex[static_cast<std::size_t>(needy)];
        int best = kInf;
        for (std::size_t c : branch) {
            std::vector<int> saved = deficit;
            for (int v = 0; v < n; ++v) {
                if (cliques[c] >> v & 1u) {
                    deficit[static_cast<std::size_t>(v)] =
                        std::max(deficit[static_cast<std::size_t>(v)] - 1, 0);
                }
            }
            best = std::min(best, 1 + solve(uncovered & ~covers[c]));
            deficit = std::move(saved);
        }
        memo[k] = best;
        return best;
    };
    long long result = solve(m == 0 ? 0u : (1u << m) - 1u);
    return result >= kInf ? 0 : result;
}

}  // namespace dinrep
