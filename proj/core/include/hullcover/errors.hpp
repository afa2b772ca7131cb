#pragma once

#include <stdexcept>
#include <string>

namespace hullcover {

// Malformed input: bad identifiers, invalid specs, refused budgets.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A finite pigeonhole premise of a construction does not hold. The message
// names the computed threshold.
class PremiseError : public std::domain_error {
 public:
  explicit PremiseError(const std::string& what) : std::domain_error(what) {}
};

// A certificate failed on an instance that claims to be a matroid. This
// points at a broken oracle, never at bad input.
class InternalInconsistency : public std::logic_error {
 public:
  explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

}  // namespace hullcover
