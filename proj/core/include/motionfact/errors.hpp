#pragma once

#include <stdexcept>
#include <string>

namespace motionfact {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A rational split/root was requested in exact mode but none exists
/// (or it would need an irrational value).
class ExactModeIrrationalSplit : public Error {
public:
    using Error::Error;
};

class ExactModeIrrationalRoot : public Error {
public:
    using Error::Error;
};

/// The polynomial takes negative values on the real line.
class NotNonNegative : public Error {
public:
    using Error::Error;
};

class ZeroPrimal : public Error {
public:
    using Error::Error;
};

class ZeroDirection : public Error {
public:
    using Error::Error;
};

class DegenerateAxis : public Error {
public:
    using Error::Error;
};

class ReducibleInput : public Error {
public:
    using Error::Error;
};

class NotMotionPolynomial : public Error {
public:
    using Error::Error;
};

class NotAFactor : public Error {
public:
    using Error::Error;
};

/// Leading coefficient of a linear remainder has no inverse; signals a
/// non-generic input to the factorization algorithm.
class NonInvertibleLeadingCoefficient : public Error {
public:
    using Error::Error;
};

/// The generic factorization algorithm failed at some stage; callers fall
/// back to the special-case operations.
class NonGeneric : public Error {
public:
    using Error::Error;
};

class MalformedTranslational : public Error {
public:
    using Error::Error;
};

class NotCircular : public Error {
public:
    using Error::Error;
};

/// A linear system that the paper-level construction relies on has no
/// solution; carries a description of the violated equations.
class NoSolution : public Error {
public:
    using Error::Error;
};

class ConstraintViolation : public Error {
public:
    using Error::Error;
};

class PoleAtParameter : public Error {
public:
    using Error::Error;
};

class VerticalInput : public Error {
public:
    using Error::Error;
};

class DegenerateP : public Error {
public:
    using Error::Error;
};

class DanglingLink : public Error {
public:
    using Error::Error;
};

class NotSameMotion : public Error {
public:
    using Error::Error;
};

class SingularParameter : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace motionfact
