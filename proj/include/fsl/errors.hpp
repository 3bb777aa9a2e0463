#pragma once

#include <stdexcept>
#include <string>

namespace fsl {

/// Root of every error the library reports.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// polyfield
class NonMonomialDenominator : public Error { using Error::Error; };
class NotDivisible : public Error {
public:
    NotDivisible(std::string component, std::string remainder)
        : Error("not divisible: component " + component + " leaves remainder " + remainder),
          component_(std::move(component)), remainder_(std::move(remainder)) {}
    const std::string& component() const { return component_; }
    const std::string& remainder() const { return remainder_; }

private:
    std::string component_;
    std::string remainder_;
};
class SingularMap : public Error { using Error::Error; };

// blowup
class UnsupportedChart : public Error { using Error::Error; };
class NotAFakeSaddle : public Error { using Error::Error; };

// asymptotics
class NotHyperbolicFakeSaddle : public Error { using Error::Error; };
class SectionInvalid : public Error { using Error::Error; };
class QuadratureNonConvergent : public Error { using Error::Error; };
class TailNotIntegrable : public Error { using Error::Error; };
class IntegrandSingularOnPath : public Error { using Error::Error; };

// flow
class StepUnderflow : public Error { using Error::Error; };
class MaxStepsExceeded : public Error { using Error::Error; };
class TransitDoesNotExist : public Error { using Error::Error; };
class ExtrapolationUnstable : public Error { using Error::Error; };
class NoReturn : public Error { using Error::Error; };
class BranchTrackingFailed : public Error { using Error::Error; };

// casebook
class UnknownCase : public Error { using Error::Error; };
class BadWindow : public Error { using Error::Error; };

}  // namespace fsl
