#pragma once

#include <stdexcept>
#include <string>

namespace hullchain {

/// Base class for everything this library throws. `code()` is a stable
/// machine-readable tag; `what()` carries the human detail.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define HULLCHAIN_DEFINE_ERROR(Name)                             \
    class Name : public Error {                                  \
    public:                                                      \
        explicit Name(const std::string& detail)                 \
            : Error(#Name, detail) {}                            \
    }

HULLCHAIN_DEFINE_ERROR(EmptyInput);
HULLCHAIN_DEFINE_ERROR(DimensionError);
HULLCHAIN_DEFINE_ERROR(DegenerateHull);
HULLCHAIN_DEFINE_ERROR(EmptyClass);
HULLCHAIN_DEFINE_ERROR(EmptyPositiveClass);
HULLCHAIN_DEFINE_ERROR(InvalidBound);
HULLCHAIN_DEFINE_ERROR(ZeroWeight);
HULLCHAIN_DEFINE_ERROR(NotNested);
HULLCHAIN_DEFINE_ERROR(NotAlternating);
HULLCHAIN_DEFINE_ERROR(DomainBoundExceeded);
HULLCHAIN_DEFINE_ERROR(ParseError);
HULLCHAIN_DEFINE_ERROR(RaggedRow);
HULLCHAIN_DEFINE_ERROR(UnknownLabel);
HULLCHAIN_DEFINE_ERROR(EmptyFile);
HULLCHAIN_DEFINE_ERROR(SchemaError);
HULLCHAIN_DEFINE_ERROR(VersionError);

#undef HULLCHAIN_DEFINE_ERROR

}  // namespace hullchain
