#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace germlink {

// Base error. `internal() == true` marks invariant violations (theorem-level
// bugs) as opposed to bad user input; the CLI maps them to exit code 3
// instead of 2.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what, bool internal = false)
        : std::runtime_error(what), code_(std::move(code)), internal_(internal) {}

    const std::string& code() const noexcept { return code_; }
    bool internal() const noexcept { return internal_; }

private:
    std::string code_;
    bool internal_;
};

#define GERMLINK_DEFINE_ERROR(Name, is_internal)                          \
    class Name : public Error {                                           \
    public:                                                               \
        explicit Name(const std::string& what)                            \
            : Error(#Name, what, is_internal) {}                          \
    }

// exact-core
GERMLINK_DEFINE_ERROR(NotInvertible, false);
GERMLINK_DEFINE_ERROR(DegenerateModulus, false);
GERMLINK_DEFINE_ERROR(InvalidFraction, false);

// germ
GERMLINK_DEFINE_ERROR(NotCoprime, false);
GERMLINK_DEFINE_ERROR(ParameterTooSmall, false);
GERMLINK_DEFINE_ERROR(NonIsolated, false);
GERMLINK_DEFINE_ERROR(NotPolarHomogeneous, false);

// seifert
GERMLINK_DEFINE_ERROR(EvenDelta, true);

// plumbing
GERMLINK_DEFINE_ERROR(NonIntegralCentralWeight, true);
GERMLINK_DEFINE_ERROR(ReconstructionMismatch, true);

// canonical
GERMLINK_DEFINE_ERROR(SingularMatrix, true);

// fibre
GERMLINK_DEFINE_ERROR(InvalidParams, false);
GERMLINK_DEFINE_ERROR(NonPositiveMultiplicity, true);
GERMLINK_DEFINE_ERROR(NonIntegralMultiplicity, true);
GERMLINK_DEFINE_ERROR(UnsupportedParams, false);

// cli
GERMLINK_DEFINE_ERROR(IOFailure, false);

#undef GERMLINK_DEFINE_ERROR

} // namespace germlink
