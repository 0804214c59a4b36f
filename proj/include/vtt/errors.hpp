#pragma once

#include <stdexcept>
#include <string>

namespace vtt {

/// Bad caller input: wrong range, not a prime, not a subgroup, ...
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The connection set contains the group identity.
class InvalidConnectionSet : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A configured resource limit (bit budget, automorphism cap) was exceeded.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed; indicates a bug, never bad input.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed graph text.
class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

}  // namespace vtt
