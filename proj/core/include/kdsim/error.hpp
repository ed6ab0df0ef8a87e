#pragma once

#include <stdexcept>
#include <string>

namespace kdsim {

/// Base for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inputs that violate a precondition (bad units, empty line list, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Driving frequency too close to a resonance of the undamped oscillator.
class ResonanceError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// The integrator could not meet its tolerances (step underflow, lattice
/// widening exhausted, norm drift).
class NumericalError : public Error {
public:
    using Error::Error;
};

namespace detail {
inline void require(bool ok, const std::string& what)
{
    if (!ok) throw ValidationError(what);
}
}  // namespace detail

}  // namespace kdsim
