#pragma once

#include <stdexcept>
#include <string>

namespace qtree {

/// Malformed or out-of-range input (bad vertex, bad size, bad file field).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Polynomial division that does not close in Z[z]. When this escapes from
/// the surgery layer it means the hypotheses of the recovery step failed.
class DivisionInexact : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Sum of two characteristic functions carrying different s-exponents.
class ExponentMismatch : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ModeUnsupported : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Two independent routes that must agree did not.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qtree
