#pragma once

#include <stdexcept>
#include <string>

namespace antimagic {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A request would exceed a configured resource cap. Raised before any
/// partial output is produced.
class CapacityError : public Error {
public:
    using Error::Error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The graph has no edges, so there is nothing to label.
class UnlabelableError : public Error {
public:
    using Error::Error;
};

class LabelingError : public Error {
public:
    using Error::Error;
};

class LabelLengthError : public LabelingError {
public:
    using LabelingError::LabelingError;
};

class DuplicateLabelError : public LabelingError {
public:
    using LabelingError::LabelingError;
};

class NonPrimeLabelError : public LabelingError {
public:
    using LabelingError::LabelingError;
};

/// A labeling was applied to a graph it was not built for.
class MismatchError : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

class UnsupportedFormatError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace antimagic
