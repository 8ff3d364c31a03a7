#pragma once

#include <stdexcept>

namespace qubatch {

/// Precondition or parameter violation (CLI exit code 2).
class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Resource cap exceeded (CLI exit code 3).
class cap_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Corrupted data detected, e.g. a word that is not a codeword (CLI exit code 4).
class data_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qubatch
