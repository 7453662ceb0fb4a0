#pragma once

#include <stdexcept>
#include <string>

namespace facteval {

// Error categories map 1:1 onto CLI exit codes (usage/config = 1,
// data = 2, backend = 3).
enum class ErrorKind {
    Usage = 1,
    Data = 2,
    Backend = 3,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    int exit_code() const { return static_cast<int>(kind_); }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_usage(std::string message) {
    throw Error(ErrorKind::Usage, std::move(message));
}

[[noreturn]] inline void throw_data(std::string message) {
    throw Error(ErrorKind::Data, std::move(message));
}

[[noreturn]] inline void throw_backend(std::string message) {
    throw Error(ErrorKind::Backend, std::move(message));
}

}  // namespace facteval
