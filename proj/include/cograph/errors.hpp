#pragma once

#include <stdexcept>
#include <string>

namespace cograph {

/// A configured size or resource limit was exceeded.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation produced a value that violates its own postcondition.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Default limits for the brute-force side of the library.
struct Limits {
  int adjacency_max = 16;  // vertices in an expanded AdjacencyGraph
  int catalog_max = 10;    // vertices in an exhaustive cograph catalog
};

}  // namespace cograph
