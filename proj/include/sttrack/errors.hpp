#pragma once

#include <stdexcept>
#include <string>

namespace sttrack {

struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when an iterative solver exhausts its sweep budget.
struct SolverError : std::runtime_error {
    double residual;
    int sweeps;
    SolverError(const std::string& msg, double res, int sw)
        : std::runtime_error(msg), residual(res), sweeps(sw) {}
};

}  // namespace sttrack
