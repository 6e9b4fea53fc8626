#pragma once

#include <stdexcept>
#include <string>

namespace multirisk {

// Failure codes shared across the library. The CLI maps the exception
// class (parse / validation / simulation) to distinct exit codes.
enum class Errc {
    NonPositiveCell,
    SumNotOne,
    OverlappingGroups,
    BadGrouping,
    InconsistentKnownSums,
    ShapeMismatch,
    ZeroGroupMass,
    EmptySample,
    ZeroGroupCount,
    AllDiscarded,
    TooLarge,
    DegenerateSubmodel,
    NonMonotoneEstimate,
    ParseFailure,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

// Malformed input files or flag values.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(Errc::ParseFailure, msg) {}
};

// Structurally well-formed input that violates a model contract.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Failures that arise while estimating by simulation.
class SimulationError : public Error {
public:
    using Error::Error;
};

}  // namespace multirisk
