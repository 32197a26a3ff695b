#ifndef RPSETS_ERRORS_HPP
#define RPSETS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rpsets {

/// A parameter violates a mathematical precondition (m >= n, k = 0, n < 2 where p* is needed).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A query reaches past the limit of the sieve it was given.
class OutOfRangeError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

/// A request would exceed a configured resource cap (sieve memory, oracle width).
class CapacityError : public std::length_error {
public:
  using std::length_error::length_error;
};

/// A closed-form sum produced an impossible value; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace rpsets

#endif  // RPSETS_ERRORS_HPP
