#pragma once

#include <stdexcept>
#include <string>

namespace flagcycle {

/// Malformed textual input (permutations, dimension sequences, numbers).
class parse_error : public std::invalid_argument {
 public:
  explicit parse_error(const std::string& what) : std::invalid_argument(what) {}
};

/// An operation was called outside its domain, e.g. canonical_rearrangement on
/// a permutation that fails the generalized double box contraction.
class precondition_error : public std::domain_error {
 public:
  explicit precondition_error(const std::string& what) : std::domain_error(what) {}
};

}  // namespace flagcycle
