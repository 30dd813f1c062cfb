#pragma once

#include <stdexcept>
#include <string>

namespace tate {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define TATE_DEFINE_ERROR(Name)                              \
    class Name : public Error {                              \
    public:                                                  \
        explicit Name(const std::string& what) : Error(what) {} \
    }

TATE_DEFINE_ERROR(FieldMismatch);
TATE_DEFINE_ERROR(InvalidField);
TATE_DEFINE_ERROR(AmbientMismatch);
TATE_DEFINE_ERROR(NonSquare);
TATE_DEFINE_ERROR(NotContained);
TATE_DEFINE_ERROR(DivisionByZero);
TATE_DEFINE_ERROR(ZeroElement);
TATE_DEFINE_ERROR(NotInvertibleInLaurentRing);
TATE_DEFINE_ERROR(SpaceMismatch);
TATE_DEFINE_ERROR(NotNested);
TATE_DEFINE_ERROR(DegenerateChain);
TATE_DEFINE_ERROR(ChainTooLong);
TATE_DEFINE_ERROR(UnknownFace);
TATE_DEFINE_ERROR(ModeMismatch);
TATE_DEFINE_ERROR(NotMultiplicationAutomorphism);
TATE_DEFINE_ERROR(FrameMismatch);
TATE_DEFINE_ERROR(InvalidPoset);
TATE_DEFINE_ERROR(ParseError);

#undef TATE_DEFINE_ERROR

/// Raised when a truncated series is asked for a coefficient it does not know.
class InsufficientPrecision : public Error {
public:
    InsufficientPrecision(const std::string& what, int required)
        : Error(what), required_(required) {}
    /// Number of series coefficients that would have been needed.
    int required() const noexcept { return required_; }

private:
    int required_;
};

}  // namespace tate
