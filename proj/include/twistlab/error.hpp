#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twistlab {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed algebra description: bad table shape, out-of-range id, duplicate label.
class algebra_error : public error {
public:
  using error::error;
};

/// An operation name is unknown to an algebra, or two algebras disagree on signature.
class signature_error : public error {
public:
  using error::error;
};

/// Term evaluation failed (unbound variable, arity mismatch).
class evaluation_error : public error {
public:
  using error::error;
};

/// Formula text could not be parsed; `offset` is the byte offset of the offending token.
class parse_error : public error {
public:
  parse_error(const std::string& what, std::size_t offset)
    : error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

/// A construction precondition failed (factor not in the required class, bad embedding).
class construction_error : public error {
public:
  using error::error;
};

} // namespace twistlab
