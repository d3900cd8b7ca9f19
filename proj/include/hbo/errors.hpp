#pragma once

#include <stdexcept>
#include <string>

namespace hbo {

/// Malformed input to an operation (bad rank, repeated index, non-permutation, ...).
class argument_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested (family, level) has no standard order or poset construction.
class unsupported_level : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An ordering that was required to be admissible is not.
class not_admissible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Packet flip requested at an element whose packet does not form chains.
class flip_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A breadth-first closure exceeded its configured node budget.
class node_limit_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hbo
