#pragma once

#include <stdexcept>
#include <string>

namespace smig {

/// Bad user input: configs, file formats, argument values.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical procedure failed (non-convergence, no signal, singularity).
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace smig
