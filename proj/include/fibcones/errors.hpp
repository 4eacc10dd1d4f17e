#pragma once

#include <stdexcept>
#include <string>

namespace fibcones {

enum class ErrorKind {
    GradeMismatch,
    DuplicateName,
    NotTopGrade,
    OutOfRange,
    InvalidHN,
    RankTooSmall,
    NotUnstable,
    NotSemistable,
    DimMismatch,
    ZeroGenerator,
    NotAGenerator,
    BasisMismatch,
    MixedStabilityUnsupported,
};

const char* kind_name(ErrorKind kind);

/** Every failure raised by the library carries one of the kinds above. */
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind), detail_(what) {}

    ErrorKind kind() const noexcept { return kind_; }
    /// The message without the kind prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace fibcones
