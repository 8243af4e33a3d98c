#pragma once

#include <stdexcept>
#include <string>

namespace valsemi {

// Error categories map onto CLI exit codes: validation -> 2, budget -> 3.
enum class ErrorKind { validation, budget, internal };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail_validation(const std::string& msg) {
    throw Error(ErrorKind::validation, msg);
}
[[noreturn]] inline void fail_budget(const std::string& msg) {
    throw Error(ErrorKind::budget, msg);
}
[[noreturn]] inline void fail_internal(const std::string& msg) {
    throw Error(ErrorKind::internal, msg);
}

}  // namespace valsemi
