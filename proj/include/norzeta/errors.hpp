#ifndef NORZETA_ERRORS_HPP
#define NORZETA_ERRORS_HPP

#include <stdexcept>

namespace norzeta {

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};
struct PoleError : DomainError {
    using DomainError::DomainError;
};
struct NonConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace norzeta

#endif
