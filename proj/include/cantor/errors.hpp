#pragma once

#include <stdexcept>
#include <string>

namespace cantor {

// Precondition on a mathematical input was violated (x outside [0,1], x~ >= eps, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// An enumeration would exceed the configured level cap.
class CapacityError : public std::length_error {
public:
    explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

}  // namespace cantor
