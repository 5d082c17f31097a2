#pragma once

#include <stdexcept>
#include <string>

namespace gasket {

// Base for every domain failure the library raises. `kind()` is a stable
// identifier used by the CLI and in reports.
class GasketError : public std::runtime_error {
 public:
  GasketError(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define GASKET_ERROR(Name)                                              \
  class Name : public GasketError {                                     \
   public:                                                              \
    explicit Name(const std::string& what) : GasketError(#Name, what) {} \
  };

GASKET_ERROR(PoleProximity)
GASKET_ERROR(PoleInDomain)
GASKET_ERROR(CollinearPoints)
GASKET_ERROR(NegativeDiscriminant)
GASKET_ERROR(RatioOutOfRange)
GASKET_ERROR(MajorantFailure)
GASKET_ERROR(BudgetExceeded)
GASKET_ERROR(TailDiverges)
GASKET_ERROR(ClosedFormNeverHolds)
GASKET_ERROR(ParseError)

#undef GASKET_ERROR

}  // namespace gasket
