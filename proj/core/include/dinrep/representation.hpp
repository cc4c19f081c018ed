#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dinrep/graph.hpp"
#include "dinrep/poset.hpp"

namespace dinrep {

// A color universe of size k (colors 0..k-1) plus one duplicate-free color
// set per vertex. Sets are kept sorted, so intersections are computed by
// merging and every verdict trace is stable across runs.
class Representation {
public:
    Representation() = default;
    Representation(int universe_size, std::vector<std::vector<int>> assignment);

    int universe_size() const { return universe_; }
    int vertex_count() const { return static_cast<int>(assignment_.size()); }
    const std::vector<std::vector<int>>& assignment() const { return assignment_; }
    const std::vector<int>& colors(Vertex v) const {
        return assignment_[static_cast<std::size_t>(v)];
    }
    int set_size(Vertex v) const {
        return static_cast<int>(assignment_[static_cast<std::size_t>(v)].size());
    }

    friend bool operator==(const Representation&, const Representation&) = default;

private:
    int universe_ = 0;
    std::vector<std::vector<int>> assignment_;
};

enum class ViolationKind {
    missing_intersection,
    spurious_intersection,
    size_order,
    demand,
    uniformity,
};

std::string to_string(ViolationKind kind);

// One concrete failed clause: the kind plus the offending vertex or pair.
struct Violation {
    ViolationKind kind;
    std::vector<Vertex> vertices;
};

// nullopt means the representation is valid. Violations report the first
// failure found: pair clauses are scanned in lexicographic (u,v) order,
// per-vertex clauses afterwards in vertex order.
using VerifyResult = std::optional<Violation>;

// Plain intersection representation: adjacency iff intersecting sets.
VerifyResult verify_in(const Graph& g, const Representation& r);

// verify_in plus the per-vertex lower bounds |colors(v)| >= ell(v).
VerifyResult verify_ell_in(const Graph& g, const VertexFunction& ell, const Representation& r);

// verify_in on the graph plus strictly growing set sizes along the order.
VerifyResult verify_poset_in(const PosetGraph& p, const Representation& r);

// Arc (u,v) iff sets intersect and |colors(u)| < |colors(v)|. A digraph with
// a cycle can never pass.
VerifyResult verify_din(const Digraph& d, const Representation& r);

// Same with weak inequality; digons are representable here.
VerifyResult verify_wdin(const Digraph& d, const Representation& r);

// verify_in plus all set sizes equal.
VerifyResult verify_uin(const Graph& g, const Representation& r);

// Drops unused colors and renumbers the rest densely, preserving relative
// order. Verifier verdicts are unaffected.
Representation compact(const Representation& r);

}  // namespace dinrep
