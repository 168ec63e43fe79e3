#pragma once

#include <stdexcept>
#include <string>

namespace symtau {

// Error taxonomy. `internal` errors indicate a broken invariant that the
// theory guarantees cannot happen on valid input (exit code 3 in the CLI);
// `domain` errors are bad data or bad usage (exit code 2).
enum class ErrKind { domain, internal };

class Error : public std::runtime_error {
public:
    Error(ErrKind kind, std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), kind_(kind), name_(std::move(name)) {}
    ErrKind kind() const { return kind_; }
    const std::string& name() const { return name_; }

private:
    ErrKind kind_;
    std::string name_;
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& w) : Error(ErrKind::domain, "DivisionByZero", w) {}
};
struct PoleAtPoint : Error {
    explicit PoleAtPoint(const std::string& w) : Error(ErrKind::domain, "PoleAtPoint", w) {}
};
struct ArityMismatch : Error {
    explicit ArityMismatch(const std::string& w) : Error(ErrKind::domain, "ArityMismatch", w) {}
};
// A nonzero remainder where the theory guarantees exactness is always an
// upstream bug, never a data condition.
struct InexactDivision : Error {
    explicit InexactDivision(const std::string& w) : Error(ErrKind::internal, "InexactDivision", w) {}
};
struct SingularInterpolation : Error {
    explicit SingularInterpolation(const std::string& w)
        : Error(ErrKind::internal, "SingularInterpolation", w) {}
};
struct InconsistentSystem : Error {
    explicit InconsistentSystem(const std::string& w)
        : Error(ErrKind::internal, "InconsistentSystem", w) {}
};
struct PoleAtSpecialization : Error {
    explicit PoleAtSpecialization(const std::string& w)
        : Error(ErrKind::domain, "PoleAtSpecialization", w) {}
};
struct NearSingularity : Error {
    explicit NearSingularity(const std::string& w) : Error(ErrKind::domain, "NearSingularity", w) {}
};
struct UsageError : Error {
    explicit UsageError(const std::string& w) : Error(ErrKind::domain, "UsageError", w) {}
};

} // namespace symtau
