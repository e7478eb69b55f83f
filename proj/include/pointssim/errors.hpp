#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace pointssim {

// Input/contract failure with a stable code string, surfaced verbatim in the
// CLI error JSON. Anything else escaping a command is an internal error.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define POINTSSIM_ERROR_TYPE(Name)                                        \
    class Name : public Error {                                           \
    public:                                                               \
        explicit Name(const std::string& message) : Error(#Name, message) {} \
    }

POINTSSIM_ERROR_TYPE(AspectMismatch);
POINTSSIM_ERROR_TYPE(UnreadableFile);
POINTSSIM_ERROR_TYPE(UnsupportedFormat);
POINTSSIM_ERROR_TYPE(EmptyImage);
POINTSSIM_ERROR_TYPE(WriteFailure);
POINTSSIM_ERROR_TYPE(AllForeground);
POINTSSIM_ERROR_TYPE(DimensionMismatch);
POINTSSIM_ERROR_TYPE(TooSmall);
POINTSSIM_ERROR_TYPE(DoesNotFit);
POINTSSIM_ERROR_TYPE(InvalidConfig);

#undef POINTSSIM_ERROR_TYPE

}  // namespace pointssim
