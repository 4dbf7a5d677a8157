#pragma once

#include <stdexcept>
#include <string>

namespace cliffkin {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidSignature : Error { using Error::Error; };
struct InvalidBlade : Error { using Error::Error; };
struct SignatureMismatch : Error { using Error::Error; };
struct GradeError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct MissingVariable : Error { using Error::Error; };
struct NotHomogeneousQuadric : Error { using Error::Error; };
struct NotInvertibleAsVersor : Error { using Error::Error; };
struct NotInvertible : Error { using Error::Error; };
struct SubspaceNotClosed : Error { using Error::Error; };
struct NotAPinElement : Error { using Error::Error; };
struct NotASpinElement : Error { using Error::Error; };
struct NotEven : Error { using Error::Error; };
struct InvalidHalfAngle : Error { using Error::Error; };
struct NotRepresentable : Error { using Error::Error; };
struct UnknownName : Error { using Error::Error; };

}  // namespace cliffkin
