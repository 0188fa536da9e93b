// Typed errors shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace logharm {

// Division or logarithm asked of a series whose constant term is (numerically) zero.
struct ZeroConstantTerm : std::domain_error {
  explicit ZeroConstantTerm(const std::string& what) : std::domain_error(what) {}
};

// A series operation requires a specific constant term (e.g. 1 for log) and got something else.
struct BadConstantTerm : std::domain_error {
  explicit BadConstantTerm(const std::string& what) : std::domain_error(what) {}
};

// An argument is outside its documented domain (weights, atoms, alpha, lambda, ...).
struct BadParameter : std::invalid_argument {
  explicit BadParameter(const std::string& what) : std::invalid_argument(what) {}
};

// A pointwise formula divides by a quantity that vanished at the evaluation point.
struct DenominatorVanishes : std::domain_error {
  explicit DenominatorVanishes(const std::string& what) : std::domain_error(what) {}
};

// h'(z) = 0 where a pre-Schwarzian/Schwarzian evaluation was requested.
struct CriticalPoint : std::domain_error {
  explicit CriticalPoint(const std::string& what) : std::domain_error(what) {}
};

// |mu(z)| >= 1: the map is not sense-preserving there, curvature formulas blow up.
struct DegenerateDilatation : std::domain_error {
  explicit DegenerateDilatation(const std::string& what) : std::domain_error(what) {}
};

// A truncated series was asked for values where its tail cannot be trusted.
struct TruncationUnreliable : std::runtime_error {
  explicit TruncationUnreliable(const std::string& what) : std::runtime_error(what) {}
};

// A certified tail estimate exceeds the tolerance the caller asked for.
struct TailTooLarge : std::runtime_error {
  explicit TailTooLarge(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem/stream failure while writing a report, table, or image.
struct IOError : std::runtime_error {
  explicit IOError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace logharm
