#pragma once

#include <stdexcept>
#include <string>

namespace hopfdy {

/// Input structure fails an algebra, Hopf or module axiom.
class InvalidStructure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element offered as an R-matrix fails one of its axioms.
class InvalidRMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested cohomological degree is outside what the code supports.
class UnsupportedDegree : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Wall-clock budget set with set_deadline() ran out.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal cross-check failed (e.g. an image escaped its cochain space).
class ConsistencyFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Process-wide deadline, in seconds from now; zero or negative clears it.
void set_deadline(double seconds);
/// Throws BudgetExceeded when the deadline has passed.
void check_deadline(const char* where);

}  // namespace hopfdy
