#pragma once

#include <stdexcept>
#include <string>

namespace morlog {

// Input violates an operation's mathematical precondition (non-unit, bad
// congruence, non-nested subgroups, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A truncated object was asked for information beyond its truncation.
class PrecisionError : public std::runtime_error {
 public:
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration would exceed the configured work bound.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// An invariant that is a theorem failed; indicates a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Two objects from different contexts (rings, groups, truncations) were mixed.
class ContextMismatch : public std::invalid_argument {
 public:
  explicit ContextMismatch(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace morlog
