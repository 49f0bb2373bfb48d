#pragma once

#include <stdexcept>
#include <string>

namespace rigiscope {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Vector or matrix shapes disagree with the geometry.
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& what) : Error(what) {}
};

/// Numeric-domain violations: out-of-range arccos/arccosh arguments,
/// sign constraints, degenerate normalizations.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// Central projection attempted at or below the equator (e.x <= tol).
class EquatorError : public DomainError {
public:
    explicit EquatorError(const std::string& what) : DomainError(what) {}
};

/// A vertex sits on (or crosses) the absolute quadric, where the
/// metric correspondence degenerates.
class AbsoluteError : public DomainError {
public:
    explicit AbsoluteError(const std::string& what) : DomainError(what) {}
};

/// Operation applied to a framework in the wrong coordinate convention.
class ConventionError : public Error {
public:
    explicit ConventionError(const std::string& what) : Error(what) {}
};

/// Framework fails structural validation (bad indices, loops, sizes).
class InvalidFrameworkError : public Error {
public:
    explicit InvalidFrameworkError(const std::string& what) : Error(what) {}
};

/// Malformed input document.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// Model string not recognized by the file format.
class UnsupportedModelError : public ParseError {
public:
    explicit UnsupportedModelError(const std::string& what) : ParseError(what) {}
};

}  // namespace rigiscope
