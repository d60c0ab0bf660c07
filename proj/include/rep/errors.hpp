#pragma once

#include <stdexcept>

namespace rep {

// Domain-level failure (invalid point, non-cyclic input, bad resolution
// data, ...), as opposed to usage or parse errors.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rep
