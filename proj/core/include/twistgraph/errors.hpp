#pragma once

#include <stdexcept>

namespace twistgraph {

// Thrown when a request would exceed an enumeration guard (the factorial-scale
// backtracking kernels are capped at desk scale).
class ScaleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace twistgraph
