#pragma once

#include <stdexcept>
#include <string>

namespace tsc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidSignalError : public Error { using Error::Error; };
class ParameterError : public Error { using Error::Error; };
class IoError : public Error { using Error::Error; };

// Wire / file format errors.
class FormatError : public Error { using Error::Error; };
class TruncationError : public FormatError { using FormatError::FormatError; };
class CorruptionError : public FormatError { using FormatError::FormatError; };
class UnsupportedChannelsError : public FormatError { using FormatError::FormatError; };

// Compression errors.
class BudgetInfeasibleError : public Error { using Error::Error; };
class NothingToCancelError : public Error { using Error::Error; };
class UnderdeterminedError : public Error { using Error::Error; };
class DegenerateSignalError : public Error { using Error::Error; };

}  // namespace tsc
