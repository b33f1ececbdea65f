#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace topdiff {

// Root of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments: unknown labels, mismatched ground sets, a == b, ...
class input_error : public error {
 public:
  using error::error;
};

// A relation does not belong to the class an operation requires.
class validation_error : public error {
 public:
  using error::error;
};

// The strict part of a relation contains a cycle. `cycle()` lists the
// element indices z1, ..., zk with z1 > ... > zk > z1.
class cycle_error : public validation_error {
 public:
  cycle_error(const std::string& what, std::vector<std::size_t> cycle)
      : validation_error(what), cycle_(std::move(cycle)) {}

  const std::vector<std::size_t>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<std::size_t> cycle_;
};

// An edit was requested on a pair it does not apply to.
class precondition_error : public error {
 public:
  using error::error;
};

// The request exceeds an enumeration or exponential-time bound.
class capacity_error : public error {
 public:
  using error::error;
};

}  // namespace topdiff
