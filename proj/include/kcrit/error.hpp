#pragma once

#include <stdexcept>
#include <string>

namespace kcrit {

/// Base of everything this library throws.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph text, unknown format, bad vertex index in a file.
class InputError : public Error
{
public:
    using Error::Error;
};

/// An operation was called outside its precondition (missing edge, k < 4, invalid split...).
class PreconditionError : public Error
{
public:
    using Error::Error;
};

/// A desk-scale limit was exceeded.
class LimitError : public Error
{
public:
    using Error::Error;
};

}
