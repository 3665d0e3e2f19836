#pragma once

#include <stdexcept>
#include <string>

namespace khv {

/// Base class for all library errors. `kind()` is a stable machine-readable
/// tag; what() carries the human diagnostic.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct MalformedTerm : Error {
    explicit MalformedTerm(const std::string& msg) : Error("MalformedTerm", msg) {}
};

struct EdgeDegree : Error {
    explicit EdgeDegree(const std::string& msg) : Error("EdgeDegree", msg) {}
};

struct OrientationConflict : Error {
    explicit OrientationConflict(const std::string& msg) : Error("OrientationConflict", msg) {}
};

struct TooLarge : Error {
    explicit TooLarge(const std::string& msg) : Error("TooLarge", msg) {}
};

struct InexactDivision : Error {
    explicit InexactDivision(const std::string& msg) : Error("InexactDivision", msg) {}
};

struct UnknownKnot : Error {
    explicit UnknownKnot(const std::string& msg) : Error("UnknownKnot", msg) {}
};

struct EmptyPolynomial : Error {
    explicit EmptyPolynomial(const std::string& msg) : Error("EmptyPolynomial", msg) {}
};

struct CorpusFormat : Error {
    explicit CorpusFormat(const std::string& msg) : Error("CorpusFormat", msg) {}
};

}  // namespace khv
