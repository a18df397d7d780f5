#pragma once

#include <stdexcept>
#include <string>

namespace logchern {

// Caller violated a precondition (bad arguments, mismatched rings, unparsable text).
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Mathematically undefined request (zero rank, vanishing denominator).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A closed formula produced a value that cannot be right (e.g. a non-integral rank).
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace logchern
