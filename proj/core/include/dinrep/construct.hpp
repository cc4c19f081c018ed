#pragma once

#include <vector>

#include "dinrep/analysis.hpp"
#include "dinrep/graph.hpp"
#include "dinrep/matching.hpp"
#include "dinrep/poset.hpp"
#include "dinrep/representation.hpp"

namespace dinrep {

// True iff every strongly connected component of d is symmetric, i.e. both
// arc directions are present for every adjacent pair inside the component.
// Exactly these digraphs admit a weak directed representation.
bool weak_rep_admissible(const Digraph& d);

// Valid (not necessarily optimal) weak directed intersection representation:
// a per-component edge-color representation with disjoint palettes, a fresh
// color per cross-component arc, then padding every component to strictly
// increasing levels. Throws not_admissible.
Representation construct_wdin(const Digraph& d);

// Demand function combining independence degrees with order depth:
// ell(v) = alpha-deg(v) for minimal v, otherwise
// max{alpha-deg(v), 1 + max over strict predecessors u of ell(u)}.
// Strictly monotone along the order and bounded by 2n. Requires a
// diamond-free graph.
VertexFunction alpha_ranking(const PosetGraph& p);

// b(v) = max{ell(v) - deg(v), 0}, pointwise.
VertexFunction capacity_from_demand(const Graph& g, const VertexFunction& ell);

struct EllConstrainedResult {
    long long value = 0;
    Representation representation;
    BMatching matching;
    VertexFunction capacity;
};

// Optimal demand-constrained intersection representation of a triangle-free
// graph: value = |E| + b(V) - nu(G,b) with b = capacity_from_demand. The
// universe is laid out deterministically: one color per edge (edge-id
// order), x(e) shared extras per edge, then private colors per vertex.
// Every vertex ends up with exactly deg(v) + b(v) colors.
EllConstrainedResult ell_constrained_in_triangle_free(const Graph& g, const VertexFunction& ell);

// Turns an optimal ell-constrained representation of a diamond-free graph
// into one that also respects the order, for ell = alpha_ranking(p): first
// saturate a designated color across each maximal clique, then trim every
// vertex to exactly ell(v) colors, keeping all clique colors plus the
// lowest-indexed extras. The universe size is unchanged.
Representation normalize_to_poset_rep(const PosetGraph& p, const VertexFunction& ell,
                                      const Representation& r);

struct PosetInResult {
    long long value = 0;
    Representation representation;
    VertexFunction capacity;
    BMatching matching;
};

// Optimal representation of a partially ordered triangle-free graph:
// alpha-ranking, the constrained construction, then normalization.
// value = |E| + b(V) - nu(G,b) with the order-derived capacity
// b(v) = max{1 - deg(v) + max over u < v of (b(u) + deg(u)), 0}.
PosetInResult poset_in_triangle_free(const PosetGraph& p);

// Certificate triple for an exact directed intersection number: the value,
// an optimal representation (universe size equals the value), the capacity
// row used, and the witness matching with value = |A| + b(V) - weight.
struct DinResult {
    long long value = 0;
    Representation representation;
    VertexFunction capacity;
    BMatching matching;
};

// Exact directed intersection number of a triangle-free Hamiltonian DAG.
// The capacity comes from the path recurrence b(v_1) = 0,
// b(v_i) = max{b(v_{i-1}) + deg(v_{i-1}) - deg(v_i) + 1, 0}. Distinct
// errors for cyclic, non-Hamiltonian and triangle-containing inputs.
DinResult din_hamiltonian_triangle_free(const Digraph& d);

struct BipartiteDinResult {
    long long value = 0;
    VertexFunction weight;
    std::vector<Vertex> independent_set;
};

// Alternative expression for bipartite instances: value = |A| + alpha(D,b)
// where w(v_1) = deg(v_1), w(v_i) = max{w(v_{i-1}) + 1, deg(v_i)} and
// b = w - deg. Agrees with din_hamiltonian_triangle_free.
BipartiteDinResult bipartite_din(const Digraph& d);

// Valid directed representation of any DAG, used as an upper bound: one
// color per arc plus private padding to sizes that strictly increase along
// a topological order. Deliberately simple and possibly wasteful.
Representation generic_din_construction(const Digraph& d);

// Certified lower bound: with a chain cover and a proper coloring in hand,
// the largest color class I restricted to a longest chain forces
// binom(|I|+1, 2) colors. The witnesses are validated against d.
long long din_lower_bound(const Digraph& d, const std::vector<std::vector<Vertex>>& chains,
                          const Coloring& coloring);

}  // namespace dinrep
