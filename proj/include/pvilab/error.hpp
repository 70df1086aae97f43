#pragma once

#include <stdexcept>
#include <string>

namespace pvilab {

// Base class for every error this library throws on violated
// preconditions or structural mismatches.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZeroError : Error {
    explicit DivisionByZeroError(const std::string& msg) : Error(msg) {}
};

// A substitution produced an identically-zero denominator.
struct DegenerateSubstitutionError : Error {
    explicit DegenerateSubstitutionError(const std::string& msg) : Error(msg) {}
};

struct UnknownVariableError : Error {
    explicit UnknownVariableError(const std::string& msg) : Error(msg) {}
};

// A pole expected to be simple turned out to have higher multiplicity.
struct MultiplicityError : Error {
    MultiplicityError(const std::string& msg, int mult)
        : Error(msg), multiplicity(mult) {}
    int multiplicity;
};

struct IrregularPointError : Error {
    explicit IrregularPointError(const std::string& msg) : Error(msg) {}
};

// Operation preconditions not met (e.g. apparent-singularity test at a
// point whose exponent difference is not a positive integer).
struct NotApplicableError : Error {
    explicit NotApplicableError(const std::string& msg) : Error(msg) {}
};

struct StructureMismatchError : Error {
    explicit StructureMismatchError(const std::string& msg) : Error(msg) {}
};

// Cohomology rank check failed (form is not annihilated by a second-order
// operator).
struct RankError : Error {
    explicit RankError(const std::string& msg) : Error(msg) {}
};

// Parameter value lies in the finite exclusion set of a family.
struct DegenerateParameterError : Error {
    explicit DegenerateParameterError(const std::string& msg) : Error(msg) {}
};

// Numerical routine failed to converge or lost track of a root pairing.
struct NumericError : Error {
    explicit NumericError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace pvilab
