#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace btv {

// Shape or extent mismatch between operands.
struct DimensionError : std::invalid_argument {
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// Mathematically undefined request (e.g. std of an empty tensor).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Object used outside its lifecycle (e.g. a tape replayed twice).
struct StateError : std::logic_error {
    explicit StateError(const std::string& what) : std::logic_error(what) {}
};

// Caller violated an API precondition.
struct ContractError : std::logic_error {
    explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

// Malformed file content; `offset` is the first bad byte.
struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& what, std::size_t off)
        : std::runtime_error(what + " (offset " + std::to_string(off) + ")"), offset(off) {}
};

// Content incomplete or checksum mismatch.
struct IntegrityError : std::runtime_error {
    explicit IntegrityError(const std::string& what) : std::runtime_error(what) {}
};

// Reference-training diverged.
struct TrainingError : std::runtime_error {
    explicit TrainingError(const std::string& what) : std::runtime_error(what) {}
};

// Test-vector optimization produced a non-finite loss; `step` is the failing step.
struct OptimizationError : std::runtime_error {
    std::size_t step;
    OptimizationError(const std::string& what, std::size_t at_step)
        : std::runtime_error(what + " (step " + std::to_string(at_step) + ")"), step(at_step) {}
};

// Bad or incomplete run configuration.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace btv
