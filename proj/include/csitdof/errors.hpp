#pragma once

#include <stdexcept>
#include <string>

namespace csitdof {

// Malformed input: a scenario or schedule file that does not parse, or a
// structurally invalid object. The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Well-formed input that falls outside what an operation supports (an
// unsupported case, a violated precondition). The CLI maps this to exit
// code 2.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace csitdof
