#pragma once

#include <vector>

#include "dinrep/graph.hpp"

namespace dinrep {

// Integer edge multiplicities, indexed like Graph::edges(), together with
// their total weight.
class BMatching {
public:
    BMatching() = default;
    explicit BMatching(std::vector<int> multiplicities);

    const std::vector<int>& multiplicities() const { return mult_; }
    long long weight() const { return weight_; }

private:
    std::vector<int> mult_;
    long long weight_ = 0;
};

// True when m fits g and respects every vertex capacity of b.
bool is_feasible(const Graph& g, const VertexFunction& b, const BMatching& m);

// Maximum-weight b-matching of g. Solved by splitting every vertex into
// b(v) copies (capped at the sum of per-edge bounds min(b(u),b(v)), which
// never changes the feasible set) and joining the copy sets of adjacent
// vertices completely; a maximum cardinality matching of the split graph
// has the same weight. Among the optima, the lexicographically smallest
// multiplicity vector in edge-id order is returned, so the output is a
// deterministic function of the input. Capacity magnitudes that would blow
// the split graph past a few million nodes raise guard_exceeded instead of
// exhausting memory.
BMatching max_weight_b_matching(const Graph& g, const VertexFunction& b);

// Exhaustive reference value for nu(G,b). Guarded: |E| <= 12 and
// max b <= 4, otherwise guard_exceeded is thrown.
long long brute_force_nu(const Graph& g, const VertexFunction& b);

// Vertex cover C with b(C) == m.weight(), certifying optimality of m on a
// bipartite graph. Throws not_bipartite on odd cycles and invalid_input when
// m is infeasible or not optimal.
std::vector<Vertex> bipartite_cover_certificate(const Graph& g, const VertexFunction& b,
                                                const BMatching& m);

struct WeightedIndependentSet {
    long long value = 0;
    std::vector<Vertex> vertices;
};

// Maximum f-weight independent set. Bipartite inputs are solved exactly at
// any size through the complement of a minimum-weight cover; other inputs
// fall back to an exhaustive scan and are guarded at n <= 20.
WeightedIndependentSet max_weight_independent_set(const Graph& g, const VertexFunction& f);

}  // namespace dinrep
