#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>

#include "dinrep/analysis.hpp"
#include "dinrep/construct.hpp"
#include "dinrep/oracle.hpp"
#include "dinrep/representation.hpp"
#include "support/checks.hpp"
#include "support/generators.hpp"

using namespace dinrep;
namespace t = dinrep::testing;

namespace {

Digraph symmetric_digraph(const Graph& g) {
    std::vector<std::pair<int, int>> arcs;
    for (const Edge& e : g.edges()) {
        arcs.emplace_back(e.u, e.v);
        arcs.emplace_back(e.v, e.u);
    }
    return Digraph(g.vertex_count(), arcs);
}

bool connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return std::count(seen.begin(), seen.end(), false) == 0;
}

// every representation, up to renaming colors, is a multiset of supports;
// enumerate all multisets over the given support list with at most
// max_colors colors
void for_each_support_multiset(const std::vector<unsigned>& supports, int n, int max_colors,
                               const std::function<void(const Representation&)>& visit) {
    std::vector<std::vector<int>> assignment(n);
    std::function<void(std::size_t, int)> extend = [&](std::size_t first, int used) {
        {
            std::vector<std::vector<int>> copy = assignment;
            visit(Representation(used, std::move(copy)));
        }
        if (used == max_colors) return;
        for (std::size_t s = first; s < supports.size(); ++s) {
            for (int v = 0; v < n; ++v) {
                if (supports[s] >> v & 1u) assignment[v].push_back(used);
            }
            extend(s, used + 1);
            for (int v = 0; v < n; ++v) {
                if (supports[s] >> v & 1u) assignment[v].pop_back();
            }
        }
    };
    extend(0, 0);
}

std::vector<unsigned> all_nonempty_supports(int n) {
    std::vector<unsigned> result;
    for (unsigned mask = 1; mask < (1u << n); ++mask) result.push_back(mask);
    return result;
}

std::vector<unsigned> clique_supports(const Graph& g) {
    std::vector<unsigned> result;
    const int n = g.vertex_count();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        bool clique = true;
        for (int u = 0; u < n && clique; ++u) {
            if (!(mask >> u & 1u)) continue;
            for (int v = u + 1; v < n && clique; ++v) {
                if ((mask >> v & 1u) && !g.has_edge(u, v)) clique = false;
            }
        }
        if (clique) result.push_back(mask);
    }
    return result;
}

}  // namespace

TEST_CASE("representation construction") {
    CHECK_FAILS(ErrorKind::invalid_input, Representation(2, {{0, 0}}));
    CHECK_FAILS(ErrorKind::invalid_input, Representation(2, {{2}}));
    CHECK_FAILS(ErrorKind::invalid_input, Representation(-1, {}));
    Representation r(3, {{2, 0}});
    CHECK(r.colors(0) == std::vector<int>{0, 2});  // sets are sorted
}

TEST_CASE("verify_in") {
    Graph edgeless(3, {});
    CHECK(!verify_in(edgeless, Representation(0, {{}, {}, {}})));
    Graph edge(2, {{0, 1}});
    CHECK(!verify_in(edge, Representation(1, {{0}, {0}})));
    Graph p3(3, {{0, 1}, {1, 2}});
    auto violation = verify_in(p3, Representation(2, {{0, 1}, {0}, {1}}));
    REQUIRE(violation);
    CHECK(violation->kind == ViolationKind::spurious_intersection);
    CHECK(violation->vertices == std::vector<Vertex>{0, 2});
    auto missing = verify_in(p3, Representation(2, {{0}, {}, {1}}));
    REQUIRE(missing);
    CHECK(missing->kind == ViolationKind::missing_intersection);
    CHECK(missing->vertices == std::vector<Vertex>{0, 1});
    CHECK_FAILS(ErrorKind::dimension_mismatch, verify_in(p3, Representation(1, {{0}})));
}

TEST_CASE("verify_ell_in") {
    Graph edge(2, {{0, 1}});
    Representation r(1, {{0}, {0}});
    CHECK(!verify_ell_in(edge, VertexFunction::zeros(2), r));
    Graph isolated(1, {});
    CHECK(!verify_ell_in(isolated, VertexFunction({2}), Representation(2, {{0, 1}})));
    auto violation = verify_ell_in(edge, VertexFunction({1, 2}), r);
    REQUIRE(violation);
    CHECK(violation->kind == ViolationKind::demand);
    CHECK(violation->vertices == std::vector<Vertex>{1});
}

TEST_CASE("the cocktail-party instance and its six colors") {
    Graph g = t::cocktail_party_graph(10);
    Representation r = t::sperner_representation();
    std::vector<int> demands(20, 2);
    demands[7] = 3;  // one bumped vertex, as the order below forces
    CHECK(!verify_ell_in(g, VertexFunction(demands), r));
    CHECK(!verify_uin(g, r));

    // with any single relation x before y, the equal sizes break the order
    for (Vertex x = 0; x < 20; ++x) {
        for (Vertex y = 0; y < 20; ++y) {
            if (x == y) continue;
            PosetGraph p(g, Digraph(20, {{x, y}}));
            auto violation = verify_poset_in(p, r);
            REQUIRE(violation);
            CHECK(violation->kind == ViolationKind::size_order);
            CHECK(violation->vertices == std::vector<Vertex>{x, y});
        }
    }
}

TEST_CASE("verify_poset_in") {
    Graph p3(3, {{0, 1}, {1, 2}});
    Representation r(4, {{0}, {0, 1}, {1, 2, 3}});
    SUBCASE("empty order reduces to verify_in") {
        PosetGraph p(p3, Digraph(3, {}));
        CHECK(!verify_poset_in(p, r));
    }
    SUBCASE("chain with growing sizes passes") {
        PosetGraph p(p3, Digraph(3, {{0, 1}, {1, 2}}));
        CHECK(!verify_poset_in(p, r));
    }
    SUBCASE("equal sizes along the order fail") {
        PosetGraph p(Graph(2, {{0, 1}}), Digraph(2, {{0, 1}}));
        auto violation = verify_poset_in(p, Representation(1, {{0}, {0}}));
        REQUIRE(violation);
        CHECK(violation->kind == ViolationKind::size_order);
    }
}

TEST_CASE("verify_din and verify_wdin") {
    Digraph arc(2, {{0, 1}});
    CHECK(!verify_din(arc, Representation(2, {{0}, {0, 1}})));
    auto violation = verify_din(arc, Representation(1, {{0}, {0}}));
    REQUIRE(violation);
    CHECK(violation->kind == ViolationKind::size_order);

    Digraph digon(2, {{0, 1}, {1, 0}});
    CHECK(!verify_wdin(digon, Representation(1, {{0}, {0}})));
    auto reverse = verify_wdin(arc, Representation(1, {{0}, {0}}));
    REQUIRE(reverse);
    CHECK(reverse->kind == ViolationKind::spurious_intersection);
    CHECK(reverse->vertices == std::vector<Vertex>{1, 0});

    // a cyclic digraph can never pass the strict check
    Digraph cycle(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(verify_din(cycle, Representation(3, {{0}, {0, 1}, {1, 2}})));
}

TEST_CASE("verify_uin") {
    Graph k2(2, {{0, 1}});
    CHECK(!verify_uin(k2, Representation(1, {{0}, {0}})));
    auto violation = verify_uin(k2, Representation(2, {{0}, {0, 1}}));
    REQUIRE(violation);
    CHECK(violation->kind == ViolationKind::uniformity);
}

TEST_CASE("compact") {
    Representation sparse(5, {{0, 4}, {4}});
    Representation dense = compact(sparse);
    CHECK(dense.universe_size() == 2);
    CHECK(dense.colors(0) == std::vector<int>{0, 1});
    CHECK(dense.colors(1) == std::vector<int>{1});
    CHECK(compact(dense) == dense);
    CHECK(compact(Representation(3, {{}, {}})).universe_size() == 0);

    SUBCASE("verdicts survive compaction") {
        t::Rng rng(9001);
        for (int trial = 0; trial < 200; ++trial) {
            int n = t::pick(rng, 1, 5);
            Graph g = t::random_graph(rng, n, 0.4);
            Digraph d = t::random_dag(rng, n, 0.4);
            Representation r = t::random_representation(rng, n, t::pick(rng, 1, 5), 0.4);
            Representation c = compact(r);
            CHECK(verify_in(g, r).has_value() == verify_in(g, c).has_value());
            CHECK(verify_din(d, r).has_value() == verify_din(d, c).has_value());
            CHECK(verify_wdin(d, r).has_value() == verify_wdin(d, c).has_value());
            CHECK(verify_uin(g, r).has_value() == verify_uin(g, c).has_value());
        }
    }
}

TEST_CASE("verdicts are invariant under relabelling") {
    t::Rng rng(9002);
    for (int trial = 0; trial < 150; ++trial) {
        int n = t::pick(rng, 1, 5);
        Graph g = t::random_graph(rng, n, 0.4);
        Representation r = t::random_representation(rng, n, 3, 0.4);
        auto perm = t::random_permutation(rng, n);
        std::vector<std::vector<int>> relabelled(n);
        for (Vertex v = 0; v < n; ++v) relabelled[perm[v]] = r.colors(v);
        Representation rp(3, std::move(relabelled));
        CHECK(verify_in(g, r).has_value() ==
              verify_in(t::permuted_graph(g, perm), rp).has_value());
    }
}

TEST_CASE("weak validity implies strict validity on DAGs") {
    t::Rng rng(9003);
    int found = 0;
    for (int trial = 0; trial < 4000 && found < 300; ++trial) {
        int n = t::pick(rng, 1, 3);
        Digraph d = t::random_dag(rng, n, 0.5);
        Representation r = t::random_representation(rng, n, t::pick(rng, 1, 3), 0.5);
        if (verify_wdin(d, r)) continue;
        ++found;
        CHECK(!verify_din(d, r));
    }
    CHECK(found == 300);
}

TEST_CASE("on Hamiltonian DAGs every strict representation is weak") {
    // exhaustive over all support multisets for the small instances, then
    // clique supports at n = 5 (on a Hamiltonian DAG all set sizes are
    // distinct, so valid supports are cliques of the underlying graph)
    auto check_all = [](const Digraph& d, const std::vector<unsigned>& supports,
                        long long value) {
        int valid = 0;
        for_each_support_multiset(supports, d.vertex_count(), static_cast<int>(value) + 1,
                                  [&](const Representation& r) {
                                      if (verify_din(d, r)) return;
                                      ++valid;
                                      CHECK(!verify_wdin(d, r));
                                      CHECK(r.universe_size() >= value);
                                  });
        CHECK(valid > 0);
    };

    Digraph arc(2, {{0, 1}});
    check_all(arc, all_nonempty_supports(2), oracle_din_tiny(arc));
    Digraph p3(3, {{0, 1}, {1, 2}});
    check_all(p3, all_nonempty_supports(3), oracle_din_tiny(p3));
    Digraph t3(3, {{0, 1}, {1, 2}, {0, 2}});
    check_all(t3, all_nonempty_supports(3), oracle_din_tiny(t3));
    Digraph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    check_all(p4, all_nonempty_supports(4), oracle_din_tiny(p4));

    Digraph p5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 3}});
    check_all(p5, clique_supports(underlying_graph(p5)),
              din_hamiltonian_triangle_free(p5).value);
}

TEST_CASE("uniform and weak-symmetric validity coincide on connected graphs") {
    t::Rng rng(9004);
    int checked = 0;
    for (int trial = 0; trial < 2000 && checked < 200; ++trial) {
        int n = t::pick(rng, 1, 5);
        Graph g = t::random_graph(rng, n, 0.6);
        if (!connected(g)) continue;
        ++checked;
        Digraph d = symmetric_digraph(g);
        Representation r = t::random_representation(rng, n, t::pick(rng, 1, 4), 0.5);
        CHECK(verify_uin(g, r).has_value() == verify_wdin(d, r).has_value());
    }
    CHECK(checked == 200);
}
