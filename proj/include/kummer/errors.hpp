#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kummer {

enum class CurveErrorKind {
    ZeroPolynomial,
    CharacteristicDividesDegree,
    ReduciblePolynomial,
    WrongCharacteristic,
    DegreeViolation,
    NotSmooth,
};

/// Mathematically invalid curve input. Distinct from internal_error so the
/// CLI can map user errors to exit code 2 and bugs to exit code 1.
class CurveError : public std::runtime_error {
public:
    CurveError(CurveErrorKind kind, const std::string& message, std::uint64_t detail = 0)
        : std::runtime_error(message), kind_(kind), detail_(detail) {}

    CurveErrorKind kind() const noexcept { return kind_; }
    /// For ReduciblePolynomial: the offending prime d | n.
    std::uint64_t detail() const noexcept { return detail_; }

private:
    CurveErrorKind kind_;
    std::uint64_t detail_;
};

/// Violated internal assertion; never valid-input behavior.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& message) : std::logic_error(message) {}
};

}  // namespace kummer
