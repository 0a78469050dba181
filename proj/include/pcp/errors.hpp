#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcp {

// Misuse of an interface: mismatched rings, wrong dimensions, bad indices.
class StructuralError : public std::logic_error {
public:
    explicit StructuralError(const std::string& what) : std::logic_error(what) {}
};

// Mathematically invalid request: division by zero, singular matrix,
// leading term of the zero polynomial.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A candidate solution failed its exact interval certificate.
class CertificationError : public std::runtime_error {
public:
    explicit CertificationError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid input text; offset points at the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace pcp
