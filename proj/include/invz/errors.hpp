#pragma once

#include <stdexcept>
#include <string>

namespace invz {

// Error taxonomy. The three subclasses map onto the CLI exit-code contract:
// input/validation problems (exit 2), resource guards (exit 3), and failed
// internal cross-checks, which always indicate a bug in the engine itself
// (exit 4).
enum class errc {
    // input / validation
    empty_bases,
    mixed_cardinality,
    exchange_axiom_violation,
    invalid_rank,
    invalid_subset,
    not_stressed,
    infeasible_lambda,
    lambda_out_of_range,
    invalid_hyperplane_size,
    invalid_cuspidal_parameters,
    degree_exceeds_center,
    not_palindromic,
    has_loops,
    parse_error,
    validation,
    // resource guards
    ground_set_too_large,
    // internal cross-check failures
    route_mismatch,
    inconsistent_recursion,
    nonnegativity_violation,
    degree_bound_violation,
    non_integer_coefficient,
    internal_check,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::empty_bases: return "EmptyBases";
        case errc::mixed_cardinality: return "MixedCardinality";
        case errc::exchange_axiom_violation: return "ExchangeAxiomViolation";
        case errc::invalid_rank: return "InvalidRank";
        case errc::invalid_subset: return "InvalidSubset";
        case errc::not_stressed: return "NotStressed";
        case errc::infeasible_lambda: return "Infeasible";
        case errc::lambda_out_of_range: return "LambdaOutOfRange";
        case errc::invalid_hyperplane_size: return "InvalidHyperplaneSize";
        case errc::invalid_cuspidal_parameters: return "InvalidCuspidalParameters";
        case errc::degree_exceeds_center: return "DegreeExceedsCenter";
        case errc::not_palindromic: return "NotPalindromic";
        case errc::has_loops: return "HasLoops";
        case errc::parse_error: return "ParseError";
        case errc::validation: return "ValidationError";
        case errc::ground_set_too_large: return "GroundSetTooLarge";
        case errc::route_mismatch: return "RouteMismatch";
        case errc::inconsistent_recursion: return "InconsistentRecursion";
        case errc::nonnegativity_violation: return "NonnegativityViolation";
        case errc::degree_bound_violation: return "DegreeBoundViolation";
        case errc::non_integer_coefficient: return "NonIntegerCoefficient";
        case errc::internal_check: return "InternalCheck";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

// Bad input: malformed files, axiom violations, out-of-domain parameters.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Refused because the computation would not finish at desk scale.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

// A redundant internal consistency check failed. Never catch and continue;
// the computed values cannot be trusted.
class InternalCheckError : public Error {
public:
    using Error::Error;
};

[[noreturn]] inline void throw_validation(errc c, const std::string& what) {
    throw ValidationError(c, what);
}

[[noreturn]] inline void throw_resource(errc c, const std::string& what) {
    throw ResourceLimitError(c, what);
}

[[noreturn]] inline void throw_internal(errc c, const std::string& what) {
    throw InternalCheckError(c, what);
}

}  // namespace invz
