#pragma once

#include <atomic>

#include "dinrep/graph.hpp"

namespace dinrep {

// Cooperative cancellation for the long-running searches. The token holds a
// caller-owned flag; polled searches throw ErrorKind::cancelled once the
// flag is set. A default-constructed token never cancels.
class CancellationToken {
public:
    CancellationToken() = default;
    explicit CancellationToken(const std::atomic<bool>* flag) : flag_(flag) {}

    bool cancelled() const { return flag_ != nullptr && flag_->load(std::memory_order_relaxed); }
    void check() const {
        if (cancelled()) fail(ErrorKind::cancelled, "search cancelled");
    }

private:
    const std::atomic<bool>* flag_ = nullptr;
};

// Exact directed intersection number by complete search over color support
// multisets (colors are interchangeable, so only per-color vertex sets
// matter). Guarded at n <= 4; the guard is a hard error, never a silent
// truncation. Throws not_a_dag on cyclic input.
long long oracle_din_tiny(const Digraph& d, const CancellationToken& token = {});

// Exact directed intersection number of a triangle-free Hamiltonian DAG,
// n <= 8. With a Hamiltonian path all set sizes are distinct, so every
// color's support is a clique of the underlying graph and triangle-freeness
// caps supports at two vertices; the minimum is then an exhaustive search
// over bounded per-vertex sizes and per-edge share counts. This derivation
// is itself cross-validated against oracle_din_tiny in the test suite.
long long oracle_din_hamiltonian_tf(const Digraph& d, const CancellationToken& token = {});

// Exact minimum edge clique cover size (the intersection number of g),
// |E| <= 12.
long long oracle_ecc(const Graph& g, const CancellationToken& token = {});

// Exact demand-constrained intersection number, n <= 5 and max demand <= 3.
// Color supports of a plain intersection representation are cliques, and
// replacing any support by a maximal superset never hurts, so the search
// branches over maximal cliques only.
long long oracle_in_tiny(const Graph& g, const VertexFunction& ell,
                         const CancellationToken& token = {});

}  // namespace dinrep
