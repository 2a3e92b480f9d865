#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

namespace orchard {

enum class ErrorCode {
    input,
    not_generic,
    parity_unsupported,
    retry_exhausted,
    io,
    internal,
};

const char* error_code_name(ErrorCode code);

/// Domain error carrying a stable machine-readable code plus optional
/// structured details (e.g. the offending label subset).
class OrchardError : public std::runtime_error {
public:
    OrchardError(ErrorCode code, std::string message, nlohmann::json details = nullptr)
        : std::runtime_error(std::move(message)), code_(code), details_(std::move(details)) {}

    ErrorCode code() const { return code_; }
    const nlohmann::json& details() const { return details_; }

    nlohmann::json to_json() const;

private:
    ErrorCode code_;
    nlohmann::json details_;
};

[[noreturn]] inline void throw_internal(const std::string& what) {
    throw OrchardError(ErrorCode::internal, "internal consistency failure: " + what);
}

} // namespace orchard
