#pragma once

#include <stdexcept>
#include <string>

namespace dinrep {

// Failure categories surfaced by the library. The CLI maps these onto its
// exit codes, so add new kinds deliberately.
enum class ErrorKind {
    invalid_input,       // malformed data: bad ids, duplicates, length mismatch
    dimension_mismatch,  // representation or vertex function does not fit the host
    not_a_dag,
    no_hamiltonian_path,
    not_triangle_free,
    not_diamond_free,
    not_bipartite,
    not_admissible,  // a strongly connected component is not symmetric
    guard_exceeded,  // instance too large for an exhaustive routine
    cancelled,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_input: return "invalid-input";
        case ErrorKind::dimension_mismatch: return "dimension-mismatch";
        case ErrorKind::not_a_dag: return "not-a-dag";
        case ErrorKind::no_hamiltonian_path: return "no-hamiltonian-path";
        case ErrorKind::not_triangle_free: return "not-triangle-free";
        case ErrorKind::not_diamond_free: return "not-diamond-free";
        case ErrorKind::not_bipartite: return "not-bipartite";
        case ErrorKind::not_admissible: return "not-admissible";
        case ErrorKind::guard_exceeded: return "guard-exceeded";
        case ErrorKind::cancelled: return "cancelled";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace dinrep
