#ifndef LEGF_ERROR_HPP
#define LEGF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace legf {

// Error with a stable machine-readable code plus a human message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

}  // namespace legf

#endif
