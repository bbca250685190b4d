#pragma once

#include <stdexcept>
#include <string>

namespace sges {

/// A PDAG with no consistent DAG extension. Never raised for PDAGs built by
/// a valid delete operator, so seeing one means an upstream bug.
class NoExtension : public std::runtime_error {
 public:
  explicit NoExtension(const std::string& what) : std::runtime_error(what) {}
};

/// Undirected subgraph expected to be chordal is not.
class NotChordal : public std::runtime_error {
 public:
  explicit NotChordal(const std::string& what) : std::runtime_error(what) {}
};

/// Joint table would exceed the configured entry limit.
class StateSpaceTooLarge : public std::runtime_error {
 public:
  explicit StateSpaceTooLarge(const std::string& what)
      : std::runtime_error(what) {}
};

/// Brute-force routine called beyond its node-count guard.
class TooLarge : public std::runtime_error {
 public:
  explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sges
