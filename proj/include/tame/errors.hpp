#pragma once

#include <stdexcept>
#include <string>

namespace tame {

/// Base class for all library errors. `name()` is the stable machine-readable
/// error identifier used by the CLI for exit-code mapping and diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

#define TAME_DEFINE_ERROR(ClassName)                       \
  class ClassName : public Error {                         \
   public:                                                 \
    explicit ClassName(const std::string& what)            \
        : Error(#ClassName, what) {}                       \
  }

TAME_DEFINE_ERROR(SpecMismatch);
TAME_DEFINE_ERROR(DivisionByZero);
TAME_DEFINE_ERROR(NotAnExtensionElement);
TAME_DEFINE_ERROR(ZeroPolynomial);
TAME_DEFINE_ERROR(UnsupportedBase);
TAME_DEFINE_ERROR(PrecisionExhausted);
TAME_DEFINE_ERROR(ZeroDivisor);
TAME_DEFINE_ERROR(IndistinguishableFromZero);
TAME_DEFINE_ERROR(NotOnCurve);
TAME_DEFINE_ERROR(SingularAtPoint);
TAME_DEFINE_ERROR(DegenerateSubstitution);
TAME_DEFINE_ERROR(NotAUnitAfterReduction);
TAME_DEFINE_ERROR(LengthMismatch);
TAME_DEFINE_ERROR(DepthTooShallow);
TAME_DEFINE_ERROR(SingularBranchUnhandled);
TAME_DEFINE_ERROR(RestrictionDegenerate);
TAME_DEFINE_ERROR(ParseError);

#undef TAME_DEFINE_ERROR

}  // namespace tame
