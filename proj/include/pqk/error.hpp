#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pqk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// x * conj(x) vanishes, so x has no inverse.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// A Fueter term list mixes Left and Right coefficient placement.
class MixedSides : public Error {
 public:
  using Error::Error;
};

/// A Fueter term with an empty index string.
class EmptyFueterTerm : public Error {
 public:
  using Error::Error;
};

/// The structure builders require f with vanishing real part.
class NonzeroRealPart : public Error {
 public:
  using Error::Error;
};

/// (f1)^2 - (f2)^2 - (f3)^2 changes sign or vanishes on the domain.
class SignChange : public Error {
 public:
  using Error::Error;
};

/// h^2 <= 0 at a point where the structure is evaluated.
class DegeneratePoint : public Error {
 public:
  using Error::Error;
};

/// Sampled metric is not invertible.
class SingularMetric : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or file input; carries the byte offset when known.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t position = npos)
      : Error(position == npos ? what : what + " at position " + std::to_string(position)),
        position_(position) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace pqk
