#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bck {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The table is not an n x n array of indices in [0, n).
class MalformedTable : public Error {
public:
    using Error::Error;
};

/// A derived operation needs the constant 1 but the algebra has no greatest element.
class UnboundedAlgebra : public Error {
public:
    UnboundedAlgebra() : Error("algebra is not bounded (no element m with x.m = 0 for all x)") {}
    using Error::Error;
};

class UnboundVariable : public Error {
public:
    explicit UnboundVariable(const std::string& name)
        : Error("no value assigned to variable '" + name + "'"), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A family or construction parameter outside its admissible range.
class RangeError : public Error {
public:
    using Error::Error;
};

class NotCommutative : public Error {
public:
    NotCommutative() : Error("algebra is not commutative") {}
};

/// Raised when a result the theory guarantees could not be produced.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace bck
