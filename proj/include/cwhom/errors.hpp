#ifndef CWHOM_ERRORS_HPP
#define CWHOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cwhom {

// Base class for all contract violations raised by the library.
struct TopologyError : std::runtime_error {
    explicit TopologyError(const std::string& msg) : std::runtime_error(msg) {}
};

struct MalformedLattice : TopologyError {
    explicit MalformedLattice(const std::string& msg) : TopologyError("malformed lattice: " + msg) {}
};

struct NotClosed : TopologyError {
    explicit NotClosed(const std::string& msg) : TopologyError("not closed: " + msg) {}
};

struct NotConnected : TopologyError {
    explicit NotConnected(const std::string& msg) : TopologyError("not connected: " + msg) {}
};

struct NotSubcomplex : TopologyError {
    explicit NotSubcomplex(const std::string& msg) : TopologyError("not a subcomplex: " + msg) {}
};

struct NotAComplex : TopologyError {
    explicit NotAComplex(const std::string& msg) : TopologyError("not a chain complex: " + msg) {}
};

struct NotChainMap : TopologyError {
    explicit NotChainMap(const std::string& msg) : TopologyError("not a chain map: " + msg) {}
};

struct NotAHomomorphism : TopologyError {
    explicit NotAHomomorphism(const std::string& msg) : TopologyError("not a homomorphism: " + msg) {}
};

struct PresentationMismatch : TopologyError {
    explicit PresentationMismatch(const std::string& msg) : TopologyError("presentation mismatch: " + msg) {}
};

struct MatchFailure : TopologyError {
    explicit MatchFailure(const std::string& msg) : TopologyError("boundary matching failed: " + msg) {}
};

// Coset enumeration exceeded its coset bound.
struct Overflow : TopologyError {
    long long max_cosets;
    explicit Overflow(long long bound)
        : TopologyError("coset enumeration overflowed bound " + std::to_string(bound)),
          max_cosets(bound) {}
};

struct InfiniteGroup : Overflow {
    explicit InfiniteGroup(long long bound) : Overflow(bound) {}
};

struct MalformedArc : TopologyError {
    explicit MalformedArc(const std::string& msg) : TopologyError("malformed arc presentation: " + msg) {}
};

struct EmptyComplex : TopologyError {
    explicit EmptyComplex(const std::string& msg) : TopologyError("empty complex: " + msg) {}
};

struct UnassignedCube : TopologyError {
    explicit UnassignedCube(const std::string& msg) : TopologyError("unassigned cube: " + msg) {}
};

struct AssumptionViolated : TopologyError {
    explicit AssumptionViolated(const std::string& msg) : TopologyError("assumption violated: " + msg) {}
};

} // namespace cwhom

#endif
