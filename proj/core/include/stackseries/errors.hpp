#pragma once

#include <stdexcept>
#include <string>

namespace stackseries {

/// Malformed input: unparsable text, an invalid permutation, a bad machine spec.
class parse_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A request exceeding one of the desk-scale caps (enumeration, search, sequence range).
class limit_error : public std::length_error {
public:
  using std::length_error::length_error;
};

/// A state/config mismatch or a method that does not apply to the requested machine.
class config_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A move that the machine rules forbid in the given state.
class illegal_move_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace stackseries
