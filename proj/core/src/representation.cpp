#include "dinrep/representation.hpp"

#include <algorithm>

namespace dinrep {

namespace {

bool intersects(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (a[i] > b[j]) {
            ++j;
        } else {
            return true;
        }
    }
    return false;
}

void check_host(int host_vertices, const Representation& r) {
    if (r.vertex_count() != host_vertices) {
        fail(ErrorKind::dimension_mismatch,
             "representation covers " + std::to_string(r.vertex_count()) + " vertices, host has " +
                 std::to_string(host_vertices));
    }
}

}  // namespace

Representation::Representation(int universe_size, std::vector<std::vector<int>> assignment)
    : universe_(universe_size), assignment_(std::move(assignment)) {
    if (universe_ < 0) fail(ErrorKind::invalid_input, "negative universe size");
    for (std::size_t v = 0; v < assignment_.size(); ++v) {
        auto& set = assignment_[v];
        std::sort(set.begin(), set.end());
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (set[i] < 0 || set[i] >= universe_) {
                fail(ErrorKind::invalid_input,
                     "vertex " + std::to_string(v) + ": color " + std::to_string(set[i]) +
                         " outside universe of size " + std::to_string(universe_));
            }
            if (i > 0 && set[i] == set[i - 1]) {
                fail(ErrorKind::invalid_input,
                     "vertex " + std::to_string(v) + ": duplicate color " + std::to_string(set[i]));
            }
        }
    }
}

std::string to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::missing_intersection: return "missing-intersection";
        case ViolationKind::spurious_intersection: return "spurious-intersection";
        case ViolationKind::size_order: return "size-order";
        case ViolationKind::demand: return "demand";
        case ViolationKind::uniformity: return "uniformity";
    }
    return "unknown";
}

VerifyResult verify_in(const Graph& g, const Representation& r) {
    check_host(g.vertex_count(), r);
    const int n = g.vertex_count();
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            bool shared = intersects(r.colors(u), r.colors(v));
            bool adjacent = g.has_edge(u, v);
            if (adjacent && !shared) {
                return Violation{ViolationKind::missing_intersection, {u, v}};
            }
            if (!adjacent && shared) {
                return Violation{ViolationKind::spurious_intersection, {u, v}};
            }
        }
    }
    return std::nullopt;
}

VerifyResult verify_ell_in(const Graph& g, const VertexFunction& ell, const Representation& r) {
    check_host(g.vertex_count(), r);
    if (ell.size() != g.vertex_count()) {
        fail(ErrorKind::dimension_mismatch, "demand function does not fit the graph");
    }
    if (auto violation = verify_in(g, r)) return violation;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (r.set_size(v) < ell[v]) {
            return Violation{ViolationKind::demand, {v}};
        }
    }
    return std::nullopt;
}

VerifyResult verify_poset_in(const PosetGraph& p, const Representation& r) {
    check_host(p.vertex_count(), r);
    if (auto violation = verify_in(p.graph(), r)) return violation;
    const int n = p.vertex_count();
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (u == v || !p.precedes(u, v)) continue;
            if (!(r.set_size(u) < r.set_size(v))) {
                return Violation{ViolationKind::size_order, {u, v}};
            }
        }
    }
    return std::nullopt;
}

namespace {

// The strict and weak directed checks differ only in the size comparison.
VerifyResult verify_directed(const Digraph& d, const Representation& r, bool strict) {
    check_host(d.vertex_count(), r);
    const int n = d.vertex_count();
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (u == v) continue;
            bool shared = intersects(r.colors(u), r.colors(v));
            bool ordered = strict ? r.set_size(u) < r.set_size(v)
                                  : r.set_size(u) <= r.set_size(v);
            bool modelled = shared && ordered;
            bool arc = d.has_arc(u, v);
            if (arc && !modelled) {
                if (!shared) return Violation{ViolationKind::missing_intersection, {u, v}};
                return Violation{ViolationKind::size_order, {u, v}};
            }
            if (!arc && modelled) {
                return Violation{ViolationKind::spurious_intersection, {u, v}};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

VerifyResult verify_din(const Digraph& d, const Representation& r) {
    return verify_directed(d, r, /*strict=*/true);
}

VerifyResult verify_wdin(const Digraph& d, const Representation& r) {
    return verify_directed(d, r, /*strict=*/false);
}

VerifyResult verify_uin(const Graph& g, const Representation& r) {
    check_host(g.vertex_count(), r);
    if (auto violation = verify_in(g, r)) return violation;
    const int n = g.vertex_count();
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (r.set_size(u) != r.set_size(v)) {
                return Violation{ViolationKind::uniformity, {u, v}};
            }
        }
    }
    return std::nullopt;
}

Representation compact(const Representation& r) {
    std::vector<bool> used(static_cast<std::size_t>(r.universe_size()), false);
    for (const auto& set : r.assignment()) {
        for (int c : set) used[static_cast<std::size_t>(c)] = true;
    }
    std::vector<int> remap(static_cast<std::size_t>(r.universe_size()), -1);
    int next = 0;
    for (int c = 0; c < r.universe_size(); ++c) {
        if (used[static_cast<std::size_t>(c)]) remap[static_cast<std::size_t>(c)] = next++;
    }
    std::vector<std::vector<int>> assignment(r.assignment());
    for (auto& set : assignment) {
        for (int& c : set) c = remap[static_cast<std::size_t>(c)];
    }
    return Representation(next, std::move(assignment));
}

}  // namespace dinrep
