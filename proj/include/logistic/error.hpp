#pragma once

#include <stdexcept>
#include <string>

namespace logistic {

/// Base for every failure the library reports. `name()` is the stable error
/// identifier printed by the CLI.
class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

#define LOGISTIC_DEFINE_ERROR(Type)                                            \
  class Type : public Error {                                                  \
  public:                                                                      \
    explicit Type(const std::string& what) : Error(#Type, what) {}            \
  }

LOGISTIC_DEFINE_ERROR(InvalidArgument);
LOGISTIC_DEFINE_ERROR(ParameterOutOfDomain);
LOGISTIC_DEFINE_ERROR(DegenerateParameter);
LOGISTIC_DEFINE_ERROR(InsufficientData);
LOGISTIC_DEFINE_ERROR(NoConvergence);
LOGISTIC_DEFINE_ERROR(NotMinimalPeriod);
LOGISTIC_DEFINE_ERROR(BadBracket);
LOGISTIC_DEFINE_ERROR(DegenerateSpacing);
LOGISTIC_DEFINE_ERROR(EscapedOrbit);

#undef LOGISTIC_DEFINE_ERROR

} // namespace logistic
