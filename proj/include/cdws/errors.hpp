#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cdws {

// Domain error with a machine-readable code, e.g. "NotDoubleOccurrence".
// The CLI maps codes to exit status 1 and prints them on stderr.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message) {
    throw Error(std::move(code), message);
}

} // namespace cdws
