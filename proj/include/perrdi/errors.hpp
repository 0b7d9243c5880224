#pragma once

#include <stdexcept>
#include <string>

namespace perrdi {

// Precondition or contract violation: bad arguments, mismatched sizes,
// invalid configuration.
struct ContractError : std::invalid_argument {
    explicit ContractError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A partition with zero volume makes the normalized cut undefined.
struct DegeneratePartitionError : std::runtime_error {
    explicit DegeneratePartitionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Soft assignment collapsed: some class has (near-)zero probability mass.
struct CollapsedPartitionError : std::runtime_error {
    explicit CollapsedPartitionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Gradient descent produced a non-finite loss.
struct DivergenceError : std::runtime_error {
    explicit DivergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file. line is 1-based; 0 when no line applies.
struct ParseError : std::runtime_error {
    ParseError(int line_no, const std::string& msg)
        : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no) {}
    explicit ParseError(const std::string& msg) : ParseError(0, msg) {}
    int line;
};

// Netlist cleanup removed everything.
struct EmptyDesignError : std::runtime_error {
    explicit EmptyDesignError(const std::string& msg) : std::runtime_error(msg) {}
};

// Benchmark generation could not produce a usable graph.
struct GenerationError : std::runtime_error {
    explicit GenerationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Exhaustive search would exceed the enumeration bound.
struct SizeLimitError : std::runtime_error {
    explicit SizeLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

// External partitioner missing, failed, or produced unreadable output.
struct ExternalToolError : std::runtime_error {
    explicit ExternalToolError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace perrdi
