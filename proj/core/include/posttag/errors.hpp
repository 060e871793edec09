#ifndef POSTTAG_ERRORS_HPP
#define POSTTAG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace posttag {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Text that is not a word over the expected alphabet.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A word is too short for the requested step or cut. For the tag system
/// this is the halted configuration.
class WordTooShort : public Error {
public:
    using Error::Error;
};

/// The word is not a concatenation of 00 / 1101 segments.
class NotTokenizable : public Error {
public:
    using Error::Error;
};

/// A quadruplet cannot take part in a chain step.
class InvariantViolated : public Error {
public:
    using Error::Error;
};

/// Initial-block seed outside {e,v,vv}{0,1}{e,w,ww}.
class InvalidSeed : public Error {
public:
    using Error::Error;
};

/// No right-extension suffix qualifies for the block.
class NoExtension : public Error {
public:
    using Error::Error;
};

} // namespace posttag

#endif // POSTTAG_ERRORS_HPP
