#pragma once

#include <stdexcept>
#include <string>

namespace zmc {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Division (or reciprocal) by a zero divisor: norm2 of the denominator is
// zero within tolerance, so no inverse exists.
struct NonInvertible : Error {
    explicit NonInvertible(const std::string& what) : Error(what) {}
};

// An operation that needs |norm2(z)| > 0 (log, polar form, argh) was handed
// a point on or too near the null cone |u| = |v|.
struct NullConeArgument : Error {
    explicit NullConeArgument(const std::string& what) : Error(what) {}
};

// Argument outside the declared domain of a function, region, or path.
struct DomainViolation : Error {
    explicit DomainViolation(const std::string& what) : Error(what) {}
};

// Two integration paths with equal endpoints disagree beyond tolerance.
struct PathDependent : Error {
    explicit PathDependent(const std::string& what) : Error(what) {}
};

// Catalog lookup for a name that is not registered.
struct UnknownEntry : Error {
    explicit UnknownEntry(const std::string& what) : Error(what) {}
};

} // namespace zmc
