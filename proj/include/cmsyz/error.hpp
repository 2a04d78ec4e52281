#pragma once

#include <stdexcept>
#include <string>

namespace cmsyz {

// Domain errors: bad input or unmet preconditions. CLI exit code 1.
// Engine failures: two provably equivalent computations disagreed, or an
// internal consistency assertion fired. CLI exit code 2.

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg, bool engine_failure)
        : std::runtime_error(kind + ": " + msg),
          kind_(std::move(kind)),
          engine_failure_(engine_failure) {}

    const std::string& kind() const { return kind_; }
    bool engine_failure() const { return engine_failure_; }

private:
    std::string kind_;
    bool engine_failure_;
};

#define CMSYZ_DOMAIN_ERROR(NAME)                               \
    class NAME : public Error {                                \
    public:                                                    \
        explicit NAME(const std::string& msg)                  \
            : Error(#NAME, msg, false) {}                      \
    }

#define CMSYZ_ENGINE_ERROR(NAME)                               \
    class NAME : public Error {                                \
    public:                                                    \
        explicit NAME(const std::string& msg)                  \
            : Error(#NAME, msg, true) {}                       \
    }

CMSYZ_DOMAIN_ERROR(ParseError);              // malformed input file
CMSYZ_DOMAIN_ERROR(CapExceeded);             // rewriting or basis growth hit the length cap
CMSYZ_DOMAIN_ERROR(NonBinomialConsequence);  // completion left the monomial/binomial class
CMSYZ_DOMAIN_ERROR(InconclusiveIso);         // isomorphism search exhausted its budget undecided
CMSYZ_DOMAIN_ERROR(MapsNotGiven);            // witness verification called without explicit maps
CMSYZ_DOMAIN_ERROR(NotCM);                   // module fails the Ext-vanishing membership test
CMSYZ_DOMAIN_ERROR(NotBoundary);             // zigzag requested at a non-boundary arrow
CMSYZ_DOMAIN_ERROR(Ambiguous);               // successor arrow not unique in a malformed analysis
CMSYZ_DOMAIN_ERROR(NotDimerTree);            // operation requires a validated dimer tree
CMSYZ_DOMAIN_ERROR(TooSmall);                // gluing base with at most 3 vertices
CMSYZ_DOMAIN_ERROR(InvalidAction);           // involution is not a valid gluing symmetry
CMSYZ_DOMAIN_ERROR(SearchSpaceTooLarge);     // enumeration guard tripped
CMSYZ_DOMAIN_ERROR(UnknownName);             // named module/arrow/vertex not found

CMSYZ_ENGINE_ERROR(ConditionMismatch);       // equivalent reduction criteria disagreed
CMSYZ_ENGINE_ERROR(TransferMismatch);        // minimality transfer failed to agree
CMSYZ_ENGINE_ERROR(BijectionFailure);        // stable-category comparison found no bijection
CMSYZ_ENGINE_ERROR(InternalError);           // broken invariant inside the engine

#undef CMSYZ_DOMAIN_ERROR
#undef CMSYZ_ENGINE_ERROR

inline void check_internal(bool cond, const std::string& msg) {
    if (!cond) throw InternalError(msg);
}

}  // namespace cmsyz
