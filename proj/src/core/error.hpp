#ifndef EVACWATCH_CORE_ERROR_HPP
#define EVACWATCH_CORE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace evacwatch {

// Error categories map 1:1 onto CLI exit codes and C API status values.
enum class ErrorKind {
  Usage = 1,  // bad flags, malformed option values
  Input = 2,  // unreadable/ill-formed input data
  Stats = 3,  // statistical failure (rank deficiency, degenerate window, ...)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct UsageError : Error {
  explicit UsageError(std::string msg) : Error(ErrorKind::Usage, std::move(msg)) {}
};

struct InputError : Error {
  explicit InputError(std::string msg) : Error(ErrorKind::Input, std::move(msg)) {}
};

struct StatsError : Error {
  explicit StatsError(std::string msg) : Error(ErrorKind::Stats, std::move(msg)) {}
};

}  // namespace evacwatch

#endif
