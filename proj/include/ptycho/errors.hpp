#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace ptycho {

// Invalid configuration, geometry, or file contents. Maps to exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure during computation (NaN loss, divergence). Maps to exit code 2.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

void set_quiet(bool quiet);
bool quiet();

// Non-fatal diagnostic to stderr, suppressed by set_quiet(true).
void warn(const std::string& message);

} // namespace ptycho
