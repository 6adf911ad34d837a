#ifndef COXETER_ERRORS_HPP_
#define COXETER_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coxeter {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph document, unknown generator name, bad word text.
class InputError : public Error {
 public:
  using Error::Error;
};

// Operation called outside its domain (e.g. longest element of an infinite
// component).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A resource cap was hit; the question is undecided rather than answered.
class UndecidedError : public Error {
 public:
  UndecidedError(std::string cap_name, std::size_t limit, const std::string& what)
      : Error(what), cap_name_(std::move(cap_name)), limit_(limit) {}

  const std::string& cap_name() const noexcept { return cap_name_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::string cap_name_;
  std::size_t limit_;
};

// A mathematical invariant the library relies on was observed to fail.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace coxeter

#endif  // COXETER_ERRORS_HPP_
