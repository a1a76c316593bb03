#pragma once

#include <stdexcept>
#include <string>

namespace brauer {

/// Base class for every error raised by the library. `kind()` names the
/// failure category; `what()` carries the violated invariant.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define BRAUER_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  };

BRAUER_DEFINE_ERROR(MalformedInput)
BRAUER_DEFINE_ERROR(ValidationError)
BRAUER_DEFINE_ERROR(DomainError)
BRAUER_DEFINE_ERROR(InternalError)
BRAUER_DEFINE_ERROR(NotStabilized)
BRAUER_DEFINE_ERROR(CompositionMismatch)
BRAUER_DEFINE_ERROR(QuiverMismatch)
BRAUER_DEFINE_ERROR(NotAComplex)
BRAUER_DEFINE_ERROR(NonUniqueHom)
BRAUER_DEFINE_ERROR(EmptyTree)
BRAUER_DEFINE_ERROR(RelationFailure)
BRAUER_DEFINE_ERROR(CertificateFailure)

#undef BRAUER_DEFINE_ERROR

}  // namespace brauer
