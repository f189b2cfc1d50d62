#pragma once

#include <stdexcept>
#include <string>

namespace hcext {

enum class ErrorKind {
    Validation,   // malformed input or violated precondition
    Unsupported,  // no bound is proved for the requested pair
    Overflow,     // exact result does not fit in 64 bits
    Oracle,       // an independent check disagreed
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(ErrorKind::Validation, what) {}
};

struct UnsupportedError : Error {
    explicit UnsupportedError(const std::string& what) : Error(ErrorKind::Unsupported, what) {}
};

struct OverflowError : Error {
    explicit OverflowError(const std::string& what) : Error(ErrorKind::Overflow, what) {}
};

inline void require(bool cond, const std::string& what)
{
    if (!cond)
        throw ValidationError(what);
}

}  // namespace hcext
