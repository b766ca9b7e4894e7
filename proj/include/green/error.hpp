#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace green {

/// Whether a failure came from bad user input or from a broken internal
/// invariant. The CLI maps these to exit codes 1 and 2.
enum class Severity { validation, internal };

class Error : public std::runtime_error {
 public:
  Error(std::string name, Severity severity, const std::string& what);

  const std::string& name() const noexcept { return name_; }
  Severity severity() const noexcept { return severity_; }

 private:
  std::string name_;
  Severity severity_;
};

#define GREEN_DECLARE_ERROR(Type, sev)                                  \
  class Type : public Error {                                           \
   public:                                                              \
    explicit Type(const std::string& what) : Error(#Type, sev, what) {} \
  }

// laurent
GREEN_DECLARE_ERROR(NotDivisible, Severity::internal);
GREEN_DECLARE_ERROR(NotPolynomial, Severity::internal);
GREEN_DECLARE_ERROR(Singular, Severity::internal);
GREEN_DECLARE_ERROR(ZeroDenominator, Severity::internal);

// data files
GREEN_DECLARE_ERROR(ParseError, Severity::validation);
GREEN_DECLARE_ERROR(BoundExceeded, Severity::validation);

// coinvariants
GREEN_DECLARE_ERROR(NegativeCoefficient, Severity::internal);
GREEN_DECLARE_ERROR(InvalidOmega, Severity::internal);

// solver
GREEN_DECLARE_ERROR(SingularBlock, Severity::internal);
GREEN_DECLARE_ERROR(InconsistentSupport, Severity::internal);
GREEN_DECLARE_ERROR(NonPolynomialEntry, Severity::internal);
GREEN_DECLARE_ERROR(UnknownOrbit, Severity::validation);

#undef GREEN_DECLARE_ERROR

/// A data file failed one or more invariants; every violation is listed.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations);

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

}  // namespace green
