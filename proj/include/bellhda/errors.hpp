#pragma once

#include <stdexcept>
#include <string>

namespace bellhda {

// Every error raised by the library derives from Error so callers can catch
// one type; the subclasses let the CLI map failures onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class OutOfDomain : public Error {
public:
    using Error::Error;
};

class NumericFailure : public Error {
public:
    NumericFailure(const std::string& what, double time)
        : Error(what + " at t=" + std::to_string(time)), time_(time) {}

    double time() const noexcept { return time_; }

private:
    double time_;
};

class EmptyCounts : public Error {
public:
    using Error::Error;
};

class InsufficientDwell : public Error {
public:
    InsufficientDwell(const std::string& what, int pair)
        : Error(what), pair_(pair) {}

    int pair() const noexcept { return pair_; }

private:
    int pair_;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace bellhda
