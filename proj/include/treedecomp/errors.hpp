#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace treedecomp {

// Base for all hard errors raised by the library. Outcome-like results
// (UNSAT, BudgetExhausted, Infeasible, ...) are returned as values, not
// thrown; exceptions are reserved for contract violations and bad input.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DuplicateEdgeError : Error {
    explicit DuplicateEdgeError(const std::string& msg) : Error(msg) {}
};

struct SelfLoopError : Error {
    explicit SelfLoopError(const std::string& msg) : Error(msg) {}
};

struct NotBipartiteError : Error {
    std::vector<std::string> witness_cycle;  // vertex names, closed walk
    NotBipartiteError(const std::string& msg, std::vector<std::string> cycle)
        : Error(msg), witness_cycle(std::move(cycle)) {}
};

struct TooSmallError : Error {
    explicit TooSmallError(const std::string& msg) : Error(msg) {}
};

struct UnknownVertexError : Error {
    explicit UnknownVertexError(const std::string& msg) : Error(msg) {}
};

struct UncolouredEdgeError : Error {
    explicit UncolouredEdgeError(const std::string& msg) : Error(msg) {}
};

struct NotATreeError : Error {
    explicit NotATreeError(const std::string& msg) : Error(msg) {}
};

struct RootUnknownError : Error {
    explicit RootUnknownError(const std::string& msg) : Error(msg) {}
};

struct NoLeafInTBError : Error {
    explicit NoLeafInTBError(const std::string& msg) : Error(msg) {}
};

struct UnknownTreeVertexError : Error {
    explicit UnknownTreeVertexError(const std::string& msg) : Error(msg) {}
};

struct IndexOutOfRangeError : Error {
    explicit IndexOutOfRangeError(const std::string& msg) : Error(msg) {}
};

struct ParameterOutOfRangeError : Error {
    explicit ParameterOutOfRangeError(const std::string& msg) : Error(msg) {}
};

struct DegreeTooSmallError : Error {
    explicit DegreeTooSmallError(const std::string& msg) : Error(msg) {}
};

struct ProfileMismatchError : Error {
    explicit ProfileMismatchError(const std::string& msg) : Error(msg) {}
};

struct MalformedComponentError : Error {
    explicit MalformedComponentError(const std::string& msg) : Error(msg) {}
};

struct SharedVertexMismatchError : Error {
    explicit SharedVertexMismatchError(const std::string& msg) : Error(msg) {}
};

struct EmbeddingFailedError : Error {
    explicit EmbeddingFailedError(const std::string& msg) : Error(msg) {}
};

struct FormatError : Error {
    explicit FormatError(const std::string& msg) : Error(msg) {}
};

}  // namespace treedecomp
