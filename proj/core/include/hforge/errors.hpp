#pragma once

#include <stdexcept>
#include <string>

namespace hforge {

// Base of all domain errors. CLI maps subclasses to exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CyclicInput : Error {
    explicit CyclicInput(const std::string& what = "input graph contains a cycle") : Error(what) {}
};

struct BitDeletion : Error {
    explicit BitDeletion(const std::string& what = "bit vertices cannot be deleted") : Error(what) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what = "index out of range") : Error(what) {}
};

struct NonBooleanFunction : Error {
    explicit NonBooleanFunction(const std::string& what = "function must be 0/1 valued") : Error(what) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what = "enumeration budget exceeded") : Error(what) {}
};

struct InconsistentWitness : Error {
    explicit InconsistentWitness(const std::string& what = "witness is inconsistent with the graph") : Error(what) {}
};

struct CyclicSurvivor : Error {
    explicit CyclicSurvivor(const std::string& what = "surviving test set induces a cycle") : Error(what) {}
};

struct InconsistentInput : Error {
    explicit InconsistentInput(const std::string& what = "inputs are inconsistent") : Error(what) {}
};

struct PartialLabeling : Error {
    explicit PartialLabeling(const std::string& what = "labeling does not cover every vertex") : Error(what) {}
};

struct InfeasibleDegrees : Error {
    explicit InfeasibleDegrees(const std::string& what = "no regular bipartite multigraph with these degrees") : Error(what) {}
};

struct ParamError : Error {
    explicit ParamError(const std::string& what = "invalid parameter") : Error(what) {}
};

struct NotTopologicallyOrdered : Error {
    explicit NotTopologicallyOrdered(const std::string& what = "vertex ids are not topologically ordered") : Error(what) {}
};

struct BadGamma : Error {
    explicit BadGamma(const std::string& what = "gamma must satisfy 0 < gamma < 1/(10(k-1))") : Error(what) {}
};

struct ForeignInstance : Error {
    explicit ForeignInstance(const std::string& what = "instance was not produced by this reduction") : Error(what) {}
};

struct Infeasible : Error {
    explicit Infeasible(const std::string& what = "no realization meets the deadline") : Error(what) {}
};

}  // namespace hforge
