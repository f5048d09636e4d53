#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hopfdoubles {

enum class ErrorKind {
    SingularPairing,
    DimensionMismatch,
    FieldMismatch,
    NonInvertibleAntipode,
    BadCharacteristic,
    NotPrime,
    NotAGroup,
    MilnorCheckFailed,
    NonCommutingFactors,
    ConstraintViolated,
    RecipeMismatch,
    ParseError,
    AxiomViolation,
    UnknownSuite,
    UnknownInstance,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. The kind is stable and is what the
/// CLI maps onto exit codes; the message carries the human context.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace hopfdoubles
