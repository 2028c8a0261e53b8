#pragma once

#include <stdexcept>
#include <string>

namespace fraclab {

// Configuration and precondition failures detected before any compute.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A fractal system that violates a simple-nested-fractal axiom.
class SnfError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// No consistent good labeling exists in the searched window.
class GlpError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The truncated window is too small for the requested times.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Eigensolver or quadrature failure.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace fraclab
