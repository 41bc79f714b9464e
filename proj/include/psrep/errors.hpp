#ifndef PSREP_ERRORS_HPP
#define PSREP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace psrep {

// Domain errors; the CLI maps these to exit code 1.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotInCatalog : DomainError {
    explicit NotInCatalog(const std::string& name)
        : DomainError("not in catalog: " + name) {}
};

struct InvalidParameter : DomainError {
    using DomainError::DomainError;
};

struct OmegaNotDefined : DomainError {
    explicit OmegaNotDefined(const std::string& name)
        : DomainError("Omega is not defined for " + name) {}
};

struct InvalidKType : DomainError {
    using DomainError::DomainError;
};

struct UnknownNode : DomainError {
    using DomainError::DomainError;
};

struct BoundTooSmall : DomainError {
    using DomainError::DomainError;
};

}  // namespace psrep

#endif
