#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qrefl {

// All library failures carry a stable code string ("NotAUnit", "GradingMismatch", ...)
// so callers and tests can dispatch without parsing prose.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace qrefl
