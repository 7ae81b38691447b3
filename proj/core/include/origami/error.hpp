#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace origami {

/// Base class of every domain error raised by the library. The CLI maps
/// these to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  /// Stable machine-readable error name, e.g. "DegreeMismatch".
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define ORIGAMI_DEFINE_ERROR(Name)                                        \
  class Name : public Error {                                             \
   public:                                                                \
    explicit Name(const std::string& what) : Error(#Name, what) {}        \
  }

ORIGAMI_DEFINE_ERROR(DegreeMismatch);
ORIGAMI_DEFINE_ERROR(Disconnected);
ORIGAMI_DEFINE_ERROR(ValidationError);
ORIGAMI_DEFINE_ERROR(InvalidInvolution);
ORIGAMI_DEFINE_ERROR(NotUnimodular);
ORIGAMI_DEFINE_ERROR(NotClosed);
ORIGAMI_DEFINE_ERROR(Incompatible);
ORIGAMI_DEFINE_ERROR(SingularMatrix);
ORIGAMI_DEFINE_ERROR(InvalidTuple);

#undef ORIGAMI_DEFINE_ERROR

/// Malformed text input; `position()` is the 0-based character offset.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error("SyntaxError", what + " at position " + std::to_string(position)),
        detail_(what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }
  /// The message without the position suffix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t position_;
};

/// Raised when the generator action cannot renormalize a double cover. This
/// indicates a convention bug, never bad input.
class NormalizationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace origami
