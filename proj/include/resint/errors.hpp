#pragma once

#include <stdexcept>
#include <string>

namespace resint {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad input: precondition violations, parse errors, mismatched rings.
/// The CLI maps this to exit code 2.
class input_error : public error {
public:
    explicit input_error(const std::string& msg) : error(msg) {}
};

/// A configurable resource limit was exceeded (reduction steps, saturation
/// cap, jet variable cap, search boxes). The CLI maps this to exit code 3.
class budget_error : public error {
public:
    explicit budget_error(const std::string& msg) : error(msg) {}
};

} // namespace resint
