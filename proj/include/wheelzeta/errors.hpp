#pragma once

#include <stdexcept>
#include <string>

namespace wheelzeta {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Raised by exact division when the divisor does not divide the dividend.
class DivisionError : public Error {
public:
    DivisionError(const std::string& what, std::string remainder)
        : Error(what), remainder_(std::move(remainder)) {}

    const std::string& remainder() const noexcept { return remainder_; }

private:
    std::string remainder_;
};

class SingularSeries : public Error {
public:
    using Error::Error;
};

class ResourceLimit : public Error {
public:
    using Error::Error;
};

class IllegalFire : public Error {
public:
    using Error::Error;
};

class Unsupported : public Error {
public:
    using Error::Error;
};

/// An identity that must hold by construction failed; always a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace wheelzeta
