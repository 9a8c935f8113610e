#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lorder {

enum class ErrorKind {
  InvalidSign,
  BadPath,
  RootNotAddressable,
  EmptyOperand,
  Syntax,
  BadJson,
  NotApplicable,
  ResourceLimit,
  BoundExceeded,
  NotDiscrete,
  FiniteInput,
  NotIndecomposable,
  Unbounded,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidSignError : public Error {
 public:
  InvalidSignError(std::vector<std::size_t> path, const std::string& what)
      : Error(ErrorKind::InvalidSign, what), path_(std::move(path)) {}
  const std::vector<std::size_t>& path() const noexcept { return path_; }

 private:
  std::vector<std::size_t> path_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected,
              const std::string& what)
      : Error(ErrorKind::Syntax, what),
        offset_(offset),
        expected_(std::move(expected)) {}
  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept {
    return expected_;
  }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace lorder
