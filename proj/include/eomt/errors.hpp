#pragma once

#include <stdexcept>
#include <string>

namespace eomt {

// invalid input values; the CLI maps this to exit code 1
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& what_arg) : std::invalid_argument(what_arg) {}
};

// breakdown inside a numeric routine; the CLI maps this to exit code 2
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

} // namespace eomt
