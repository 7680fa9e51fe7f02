#pragma once

#include <stdexcept>
#include <string>

namespace vwc {

/// Structural misuse of a graph: loops, duplicate edges, unknown labels.
class GraphError : public std::runtime_error {
public:
    explicit GraphError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed edge-list input; carries the offending 1-based line number
/// (0 when the problem is not tied to a specific line).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// A labeling that does not satisfy its invariants for the given graph.
class LabelingError : public std::runtime_error {
public:
    explicit LabelingError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A caller-checked precondition does not hold (e.g. a set that must be an
/// antichain is not one).
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

/// The homological oracle was asked for more vertices than its configured cap.
class OracleLimitError : public std::runtime_error {
public:
    explicit OracleLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An exhaustive search was asked to run beyond its supported size.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace vwc
