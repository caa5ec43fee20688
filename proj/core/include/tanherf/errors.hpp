#pragma once

#include <stdexcept>
#include <string>

namespace tanherf {

// Error taxonomy shared by all modules. Each maps to one failure kind the
// public contracts name; CLI translates them to nonzero exit codes.

class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

class argument_error : public std::invalid_argument {
public:
    explicit argument_error(const std::string& what) : std::invalid_argument(what) {}
};

class unsupported_order_error : public std::out_of_range {
public:
    explicit unsupported_order_error(const std::string& what) : std::out_of_range(what) {}
};

class accuracy_error : public std::runtime_error {
public:
    explicit accuracy_error(const std::string& what) : std::runtime_error(what) {}
};

class bracket_error : public std::runtime_error {
public:
    explicit bracket_error(const std::string& what) : std::runtime_error(what) {}
};

class fit_error : public std::runtime_error {
public:
    explicit fit_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tanherf
